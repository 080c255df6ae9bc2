#include "henselab/linalg.hpp"

#include <stdexcept>

namespace henselab {

RatFunc determinant(const Matrix& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  Matrix a = m;
  RatFunc det(Rat(1));
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return RatFunc();
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    RatFunc inv = a[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      RatFunc factor = a[r][col] * inv;
      for (size_t c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[col][c];
    }
  }
  return det;
}

std::optional<std::vector<RatFunc>> solve_linear(Matrix m, std::vector<RatFunc> rhs) {
  size_t n = m.size();
  if (rhs.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("solve_linear: matrix not square");
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    RatFunc inv = m[col][col].inverse();
    for (size_t c = col; c < n; ++c) m[col][c] = m[col][c] * inv;
    rhs[col] = rhs[col] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      RatFunc factor = m[r][col];
      for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
      rhs[r] = rhs[r] - factor * rhs[col];
    }
  }
  return rhs;
}

std::optional<std::vector<RatFunc>> left_kernel_vector(const Matrix& m) {
  size_t rows = m.size();
  if (rows == 0) return std::nullopt;
  size_t cols = m[0].size();
  // eliminate rows while tracking the row operations in an identity block
  Matrix a = m;
  Matrix track(rows, std::vector<RatFunc>(rows));
  for (size_t i = 0; i < rows; ++i) track[i][i] = RatFunc(Rat(1));

  size_t rank_row = 0;
  for (size_t col = 0; col < cols && rank_row < rows; ++col) {
    size_t pivot = rank_row;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank_row]);
    std::swap(track[pivot], track[rank_row]);
    RatFunc inv = a[rank_row][col].inverse();
    for (size_t r = rank_row + 1; r < rows; ++r) {
      if (a[r][col].is_zero()) continue;
      RatFunc factor = a[r][col] * inv;
      for (size_t c = 0; c < cols; ++c) a[r][c] = a[r][c] - factor * a[rank_row][c];
      for (size_t c = 0; c < rows; ++c)
        track[r][c] = track[r][c] - factor * track[rank_row][c];
    }
    ++rank_row;
  }
  for (size_t r = rank_row; r < rows; ++r) {
    bool zero_row = true;
    for (size_t c = 0; c < cols; ++c)
      if (!a[r][c].is_zero()) zero_row = false;
    if (zero_row) return track[r];
  }
  return std::nullopt;
}

}  // namespace henselab
