#include "chambrier/linalg.hpp"

#include <cassert>

namespace chambrier {

Mat identity(size_t n) {
  Mat m(n, zeros(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t rows = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
  Mat r(rows, zeros(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

RatVec mat_vec(const Mat& a, const RatVec& x) {
  RatVec r(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = vec_dot(a[i], x);
  return r;
}

RatVec form_mul(const RatVec& row, const Mat& a) {
  size_t cols = a.empty() ? 0 : a[0].size();
  RatVec r(cols, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (row[i] == 0) continue;
    for (size_t j = 0; j < cols; ++j) r[j] += row[i] * a[i][j];
  }
  return r;
}

Mat transpose(const Mat& a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Mat r(cols, RatVec(rows));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) r[j][i] = a[i][j];
  return r;
}

bool mat_eq(const Mat& a, const Mat& b) { return a == b; }

std::vector<size_t> rref(Mat& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  size_t cols = a[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < a.size(); ++col) {
    size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    Rat inv = a[row][col];
    for (size_t j = 0; j < cols; ++j) a[row][j] /= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return pivots;
}

size_t rank_of(Mat a) { return rref(a).size(); }

Mat kernel_basis(const Mat& a, size_t ncols) {
  Mat m = a;
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  Mat basis;
  for (size_t col = 0; col < ncols; ++col) {
    if (is_pivot[col]) continue;
    RatVec v = zeros(ncols);
    v[col] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][col];
    basis.push_back(v);
  }
  return basis;
}

std::optional<RatVec> solve_linear(Mat a, RatVec b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<size_t> pivots = rref(a);
  // A pivot in the appended column means an inconsistent row 0 = 1.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x = zeros(cols);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  size_t n = a.size();
  if (n == 0) return Mat{};
  Mat m = a;
  for (size_t i = 0; i < n; ++i) {
    RatVec e = zeros(n);
    e[i] = 1;
    m[i].insert(m[i].end(), e.begin(), e.end());
  }
  std::vector<size_t> pivots = rref(m);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Mat inv(n);
  for (size_t i = 0; i < n; ++i) inv[i] = RatVec(m[i].begin() + n, m[i].end());
  return inv;
}

Mat row_space_basis(Mat a) {
  rref(a);
  for (RatVec& row : a) row = to_rat(primitive_unsigned(row));
  return a;
}

RatVec reduce_mod_rows(RatVec v, const Mat& rref_basis, const std::vector<size_t>& pivots) {
  assert(rref_basis.size() == pivots.size());
  for (size_t i = 0; i < rref_basis.size(); ++i) {
    Rat c = v[pivots[i]] / rref_basis[i][pivots[i]];
    if (c == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rref_basis[i][j];
  }
  return v;
}

}  // namespace chambrier
