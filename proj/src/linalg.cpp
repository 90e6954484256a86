#include "linalg.hpp"

namespace qweyl::linalg {

namespace {

// Reduces [a | rhs] to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::vector<Scalar>* rhs, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pick = row;
    while (pick < a.size() && a[pick][col].is_zero()) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[row], a[pick]);
    if (rhs) std::swap((*rhs)[row], (*rhs)[pick]);
    const Scalar inv = a[row][col].inv();
    for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
    if (rhs) (*rhs)[row] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Scalar factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
      if (rhs) (*rhs)[r] -= factor * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> rhs, const FieldSpec& field,
                                         std::size_t cols) {
  auto pivots = rref(a, &rhs, cols);
  for (std::size_t r = pivots.size(); r < a.size(); ++r) {
    if (!rhs[r].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> z(cols, Scalar::zero(field));
  for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = rhs[r];
  return z;
}

std::vector<std::vector<Scalar>> nullspace(Matrix a, const FieldSpec& field, std::size_t cols) {
  auto pivots = rref(a, nullptr, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(field));
    v[free] = Scalar::one(field);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qweyl::linalg
