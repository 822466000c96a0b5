#pragma once

#include <optional>

#include "chambrier/linalg.hpp"

namespace chambrier {

// Affine constraint system over n variables. Every row has length n + 1 and
// reads a[0]x[0] + ... + a[n-1]x[n-1] + a[n] (= 0 | > 0 | >= 0). Homogeneous
// systems simply carry a zero constant term.
struct LinSys {
  size_t n = 0;

  Mat eq;
  Mat gt;
  Mat ge;

  explicit LinSys(size_t nvars = 0) : n(nvars) {}

  // Helpers taking a covector of length n; the constant defaults to 0.
  void add_eq(const RatVec& a, const Rat& c = Rat(0));
  void add_gt(const RatVec& a, const Rat& c = Rat(0));
  void add_ge(const RatVec& a, const Rat& c = Rat(0));
};

// Exact Fourier-Motzkin with back-substitution. Returns a rational solution
// when the system is feasible. Strictness is tracked through eliminations, so
// relatively open sets are handled exactly.
std::optional<RatVec> lin_witness(const LinSys& sys);
bool lin_feasible(const LinSys& sys);

// Does every solution of sys satisfy a.x + c >= 0 (strict=false) or > 0
// (strict=true)? Vacuously true when sys is infeasible.
bool lin_implies(const LinSys& sys, const RatVec& a, const Rat& c, bool strict);

// Exact image of the solution set under forgetting the given variables:
// the result, over the remaining variables in their original order, is
// satisfied by y exactly when some completion of y satisfies sys.
// Strictness is preserved through the eliminations.
LinSys project_out(const LinSys& sys, const std::vector<size_t>& vars);

}  // namespace chambrier
