#include "vslab/linalg.hpp"

#include "vslab/error.hpp"

namespace vslab {

std::size_t rank(const Field& f, Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].v == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Elem inv = f.inv(m[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].v == 0) continue;
      const Elem factor = f.mul(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    ++r;
  }
  return r;
}

SolveInfo solve_info(const Field& f, const Matrix& a, const std::vector<Elem>& rhs) {
  if (a.size() != rhs.size()) throw Error(Errc::length_mismatch, "right-hand side length");
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  SolveInfo info;
  info.rank = rank(f, a);
  info.consistent = rank(f, aug) == info.rank;
  return info;
}

}  // namespace vslab
