#pragma once

#include <optional>

#include "chambrier/rat.hpp"

namespace chambrier {

// Row-major dense rational matrix. Rows may be covectors or vectors depending
// on context; operations below follow the usual column-vector convention.
using Mat = std::vector<RatVec>;

Mat identity(size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
RatVec mat_vec(const Mat& a, const RatVec& x);
// Covector composed with a matrix: row * a.
RatVec form_mul(const RatVec& row, const Mat& a);
Mat transpose(const Mat& a);
bool mat_eq(const Mat& a, const Mat& b);

// In-place reduced row echelon form. Returns pivot column indices in order.
// Zero rows are removed.
std::vector<size_t> rref(Mat& a);

size_t rank_of(Mat a);

// Rows form a basis of { x : a x = 0 }.
Mat kernel_basis(const Mat& a, size_t ncols);

// One solution of a x = b, if any.
std::optional<RatVec> solve_linear(Mat a, RatVec b);

std::optional<Mat> inverse(const Mat& a);

// Canonical basis of the row space: RREF rows, each scaled primitive integer.
Mat row_space_basis(Mat a);

// Reduces the covector modulo the row space of basis (which must be in RREF
// form): subtracts multiples of basis rows to zero out the pivot coordinates.
RatVec reduce_mod_rows(RatVec v, const Mat& rref_basis, const std::vector<size_t>& pivots);

}  // namespace chambrier
