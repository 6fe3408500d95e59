#pragma once

#include <vector>

#include "vslab/gf.hpp"

namespace vslab {

using Matrix = std::vector<std::vector<Elem>>;

std::size_t rank(const Field& f, Matrix m);

struct SolveInfo {
  std::size_t rank = 0;
  bool consistent = false;
};

/// Rank of A and whether A x = rhs has a solution.
SolveInfo solve_info(const Field& f, const Matrix& a, const std::vector<Elem>& rhs);

}  // namespace vslab
