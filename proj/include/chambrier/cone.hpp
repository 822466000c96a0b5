#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chambrier/feasible.hpp"
#include "chambrier/linalg.hpp"
#include "chambrier/rat.hpp"

namespace chambrier {

// A relatively open polyhedral cone {x : eq*x = 0, gt*x > 0} in canonical
// minimal form:
//   - eq rows are the reduced row echelon basis of the equality span,
//     primitive with positive leading entry, ordered by pivot column;
//   - gt rows are reduced modulo the equality span, primitive, deduplicated,
//     and irredundant (each defines a facet of the closure), sorted;
// so equal cones always produce identical rows and the same id.
struct Cone {
  size_t n = 0;
  std::vector<IntVec> eq;
  std::vector<IntVec> gt;
  size_t span_dim = 0;
  RatVec witness;  // a point with eq*w = 0 and gt*w > 0
  std::uint64_t id = 0;

  // Cached rational copy of eq in echelon form, for reductions.
  Mat eq_rref;
  std::vector<size_t> eq_pivots;
};

struct EmptyConeError : std::runtime_error {
  explicit EmptyConeError(const std::string& what) : std::runtime_error(what) {}
};

Cone canonicalize_cone(size_t n, const std::vector<RatVec>& eqs,
                       const std::vector<RatVec>& gts);

// Image of the cone under x -> m*x. Rows pick up m_inv on the right.
Cone transform_cone(const Cone& c, const Mat& m, const Mat& m_inv);

// Sign of the linear form on the cone: '0' when it vanishes identically,
// '+' or '-' when it keeps a strict sign, 'm' when it changes sign.
char sign_on_cone(const Cone& c, const RatVec& form);

bool cone_contains(const Cone& c, const RatVec& x);          // relative interior
bool cone_closure_contains(const Cone& c, const RatVec& x);

// Set inclusion of relatively open cones: a inside b, resp. inside the
// closure of b.
bool cone_within(const Cone& a, const Cone& b);
bool cone_within_closure(const Cone& a, const Cone& b);

// Deterministic serialization of the canonical rows; id is its 64-bit
// FNV-1a hash.
std::string cone_key(const Cone& c);
std::uint64_t fnv1a(const std::string& s);

}  // namespace chambrier
