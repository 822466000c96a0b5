#include "chambrier/cone.hpp"

#include <algorithm>
#include <set>

namespace chambrier {

namespace {

LinSys cone_system(const Cone& c) {
  LinSys sys(c.n);
  for (const IntVec& r : c.eq) sys.add_eq(to_rat(r));
  for (const IntVec& r : c.gt) sys.add_gt(to_rat(r));
  return sys;
}

}  // namespace

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cone_key(const Cone& c) {
  std::string out = std::to_string(c.n);
  out += "|e";
  for (const IntVec& r : c.eq) {
    for (const Int& x : r) {
      out += x.str();
      out += ',';
    }
    out += ';';
  }
  out += "|g";
  for (const IntVec& r : c.gt) {
    for (const Int& x : r) {
      out += x.str();
      out += ',';
    }
    out += ';';
  }
  return out;
}

Cone canonicalize_cone(size_t n, const std::vector<RatVec>& eqs,
                       const std::vector<RatVec>& gts) {
  LinSys sys(n);
  for (const RatVec& r : eqs) sys.add_eq(r);
  for (const RatVec& r : gts) sys.add_gt(r);
  auto w = lin_witness(sys);
  if (!w.has_value()) throw EmptyConeError("cone has no relative interior point");

  Cone c;
  c.n = n;
  c.witness = *w;

  Mat eq_mat;
  for (const RatVec& r : eqs)
    if (!vec_is_zero(r)) eq_mat.push_back(r);
  std::vector<size_t> pivots = rref(eq_mat);
  c.eq_rref = eq_mat;
  c.eq_pivots = pivots;
  for (const RatVec& r : eq_mat) c.eq.push_back(primitive_unsigned(r));
  c.span_dim = n - c.eq.size();

  std::set<IntVec> strict_set;
  for (const RatVec& r : gts) {
    RatVec red = reduce_mod_rows(r, c.eq_rref, c.eq_pivots);
    if (vec_is_zero(red))
      throw std::logic_error("strict row vanishes on a nonempty cone span");
    strict_set.insert(primitive_signed(red));
  }
  std::vector<IntVec> rows(strict_set.begin(), strict_set.end());

  // Drop rows implied (weakly) by the rest; survivors are the facet forms.
  for (size_t i = 0; i < rows.size();) {
    LinSys test(n);
    for (const IntVec& e : c.eq) test.add_eq(to_rat(e));
    for (size_t j = 0; j < rows.size(); ++j)
      if (j != i) test.add_ge(to_rat(rows[j]));
    if (lin_implies(test, to_rat(rows[i]), Rat(0), false)) {
      rows.erase(rows.begin() + i);
    } else {
      ++i;
    }
  }
  c.gt = rows;
  c.id = fnv1a(cone_key(c));
  return c;
}

Cone transform_cone(const Cone& c, const Mat&, const Mat& m_inv) {
  std::vector<RatVec> eqs, gts;
  for (const IntVec& r : c.eq) eqs.push_back(form_mul(to_rat(r), m_inv));
  for (const IntVec& r : c.gt) gts.push_back(form_mul(to_rat(r), m_inv));
  return canonicalize_cone(c.n, eqs, gts);
}

char sign_on_cone(const Cone& c, const RatVec& form) {
  RatVec red = reduce_mod_rows(form, c.eq_rref, c.eq_pivots);
  if (vec_is_zero(red)) return '0';
  LinSys base = cone_system(c);
  LinSys pos = base;
  pos.add_gt(form);
  LinSys neg = base;
  neg.add_gt(vec_scale(Rat(-1), form));
  bool can_pos = lin_feasible(pos);
  bool can_neg = lin_feasible(neg);
  if (can_pos && can_neg) return 'm';
  if (can_pos) return '+';
  if (can_neg) return '-';
  throw std::logic_error("nonvanishing form with no sign on an open cone");
}

bool cone_contains(const Cone& c, const RatVec& x) {
  for (const IntVec& r : c.eq)
    if (vec_dot(to_rat(r), x) != 0) return false;
  for (const IntVec& r : c.gt)
    if (vec_dot(to_rat(r), x) <= 0) return false;
  return true;
}

bool cone_closure_contains(const Cone& c, const RatVec& x) {
  for (const IntVec& r : c.eq)
    if (vec_dot(to_rat(r), x) != 0) return false;
  for (const IntVec& r : c.gt)
    if (vec_dot(to_rat(r), x) < 0) return false;
  return true;
}

bool cone_within(const Cone& a, const Cone& b) {
  if (a.n != b.n) return false;
  for (const IntVec& r : b.eq)
    if (sign_on_cone(a, to_rat(r)) != '0') return false;
  for (const IntVec& r : b.gt)
    if (sign_on_cone(a, to_rat(r)) != '+') return false;
  return true;
}

bool cone_within_closure(const Cone& a, const Cone& b) {
  if (a.n != b.n) return false;
  for (const IntVec& r : b.eq)
    if (sign_on_cone(a, to_rat(r)) != '0') return false;
  for (const IntVec& r : b.gt) {
    char s = sign_on_cone(a, to_rat(r));
    if (s != '+' && s != '0') return false;
  }
  return true;
}

}  // namespace chambrier
