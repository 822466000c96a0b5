#include "chambrier/apartment.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace chambrier {

namespace {

std::string hex_id(std::uint64_t id) {
  std::ostringstream os;
  os << std::hex << id;
  return os.str();
}

}  // namespace

Apartment::Apartment(const RootSystem& rs, const WeylGroup& g, Fan fan)
    : rs_(rs), g_(g), fan_(std::move(fan)) {
  // Vertices are only determined up to the lineality space of the direction
  // cone, so a cone containing a line has no well defined classes.
  for (const Cone& c : fan_.cones) {
    Mat rows;
    for (const IntVec& r : c.eq) rows.push_back(to_rat(r));
    for (const IntVec& r : c.gt) rows.push_back(to_rat(r));
    if (rank_of(rows) != fan_.n)
      throw HypothesisViolation("fan cone contains a line",
                                fan_.label + " cone " + hex_id(c.id));
  }
  facades_.reserve(fan_.cones.size());
  cores_.reserve(fan_.cones.size());
  for (size_t i = 0; i < fan_.cones.size(); ++i) {
    facades_.push_back(build_facade(rs_, g_, fan_, i));
    cores_.push_back(compute_core(rs_, g_, fan_, i));
  }
}

const Facade& Apartment::facade(std::uint64_t direction) const {
  return facades_[fan_.index_of(direction)];
}

const Cone& Apartment::core(std::uint64_t direction) const {
  return cores_[fan_.index_of(direction)].core;
}

ApartmentPoint Apartment::classify(const AffineCone& f) const {
  const Facade& fc = facades_[fan_.index_of(f.direction)];
  return {f.direction, facade_coords(fc, f.vertex)};
}

AffineCone Apartment::representative(const ApartmentPoint& p) const {
  const Facade& fc = facades_[fan_.index_of(p.direction)];
  if (p.coords.size() != fc.dim)
    throw std::invalid_argument("coordinate count does not match the facade");
  RatVec v = zeros(fan_.n);
  for (size_t j = 0; j < fc.dim; ++j)
    v = vec_add(v, vec_scale(p.coords[j], fc.q_basis[j]));
  return {std::move(v), p.direction};
}

ApartmentPoint Apartment::ray_limit(const RatVec& x, const RatVec& v) const {
  if (vec_is_zero(v)) throw ZeroDirection();
  auto gi = cone_index_containing(fan_, v);
  if (!gi)
    throw HypothesisViolation("ray direction lies in no fan cone", fan_.label);
  return classify(AffineCone{x, fan_.cones[*gi].id});
}

// Decide whether some representative b + f of p fits inside base + ball.
//
// Shifting the vertex by any element of f shrinks the affine cone, so the
// predicate is monotone along f, and because f is relatively open every
// admissible vertex can be pushed onto the one-parameter ray lift + t u0 with
// u0 a fixed core direction of f. The search over t is resolved exactly: with
// m the least distance from the ray to the closure of the base cone (in the
// invariant metric), containment holds for large t when m < r, fails for all
// t when m > r, and on the boundary m = r the answer is read off the optimal
// residual. The least squares problem is solved by enumerating the faces of
// its feasible region, so everything stays rational; the stabilization
// threshold is the optimal ray parameter produced by that enumeration.
bool Apartment::in_neighborhood(const ApartmentPoint& p,
                                const Neighborhood& nb) const {
  if (!(nb.radius > Rat(0)))
    throw std::invalid_argument("neighborhood radius must be positive");
  size_t fi = fan_.index_of(p.direction);
  size_t gi = fan_.index_of(nb.base.direction);
  const Cone& fc = fan_.cones[fi];
  const Cone& gc = fan_.cones[gi];
  size_t n = fan_.n;

  // The ball is bounded, so the recession cone of base + ball is the closure
  // of the base direction; it must absorb every direction of f.
  if (fi != gi) {
    const auto& fs = fan_.faces[gi];
    if (std::find(fs.begin(), fs.end(), fc.id) == fs.end()) return false;
  }

  RatVec w0 = vec_sub(representative(p).vertex, nb.base.vertex);
  const RatVec& u0 = cores_[fi].core.witness;  // zero for the origin cone

  Mat eq_rows;  // closure equalities of the base cone, p-space covectors
  for (const IntVec& r : gc.eq) eq_rows.push_back(to_rat(r));
  Mat ge_rows;  // facet rows of the closure
  for (const IntVec& r : gc.gt) ge_rows.push_back(to_rat(r));

  // Variables z = (t, p). The residual w0 + t u0 - p is affine in z; its
  // squared gram norm is minimized over t >= 0, p in the closed base cone.
  size_t nvars = n + 1;
  auto residual_of = [&](const RatVec& z) {
    RatVec r = w0;
    r = vec_add(r, vec_scale(z[0], u0));
    for (size_t i = 0; i < n; ++i) r[i] -= z[1 + i];
    return r;
  };
  auto zrow = [&](const RatVec& prow) {
    RatVec r(nvars, Rat(0));
    for (size_t i = 0; i < n; ++i) r[1 + i] = prow[i];
    return r;
  };

  size_t nineq = ge_rows.size() + 1;  // facet rows plus the bound t >= 0
  bool have_best = false;
  Rat best_val;
  LinSys best_sys(0);

  // The minimizer lies in the relative interior of some face of the feasible
  // region, and on the affine hull of that face the normal equations find
  // the same optimal residual. Enumerate the faces by their active sets;
  // each candidate slice is kept only when it meets the feasible region,
  // which is an exact linear feasibility question.
  for (size_t mask = 0; mask < (size_t{1} << nineq); ++mask) {
    Mat active;
    for (const RatVec& e : eq_rows) active.push_back(zrow(e));
    for (size_t j = 0; j < ge_rows.size(); ++j)
      if (mask & (size_t{1} << j)) active.push_back(zrow(ge_rows[j]));
    if (mask & (size_t{1} << ge_rows.size())) {
      RatVec tr(nvars, Rat(0));
      tr[0] = Rat(1);
      active.push_back(std::move(tr));
    }

    Mat basis = kernel_basis(active, nvars);
    Mat dirs;  // residual movement per basis vector
    for (const RatVec& b : basis) {
      RatVec d = vec_scale(b[0], u0);
      for (size_t i = 0; i < n; ++i) d[i] -= b[1 + i];
      dirs.push_back(std::move(d));
    }
    Mat normal(dirs.size(), RatVec(dirs.size(), Rat(0)));
    RatVec rhs(dirs.size(), Rat(0));
    for (size_t a = 0; a < dirs.size(); ++a) {
      for (size_t b = 0; b <= a; ++b) {
        normal[a][b] = rs_.inner(dirs[a], dirs[b]);
        normal[b][a] = normal[a][b];
      }
      rhs[a] = -rs_.inner(w0, dirs[a]);
    }
    auto y = solve_linear(normal, rhs);
    if (!y) continue;  // normal equations of a least squares are consistent
    RatVec z(nvars, Rat(0));
    for (size_t a = 0; a < basis.size(); ++a)
      z = vec_add(z, vec_scale((*y)[a], basis[a]));
    RatVec nu = residual_of(z);
    Rat val = rs_.inner(nu, nu);
    if (have_best && !(val < best_val)) continue;

    // The candidate slice: points of the face's affine hull realizing this
    // residual. Feasibility is checked against the full constraint set.
    LinSys sys(nvars);
    for (const RatVec& row : active) {
      RatVec r = row;
      r.push_back(Rat(0));
      sys.eq.push_back(std::move(r));
    }
    for (size_t i = 0; i < n; ++i) {
      RatVec r(nvars + 1, Rat(0));
      r[0] = u0[i];
      r[1 + i] = Rat(-1);
      r[nvars] = w0[i] - nu[i];
      sys.eq.push_back(std::move(r));
    }
    {
      RatVec r(nvars + 1, Rat(0));
      r[0] = Rat(1);
      sys.ge.push_back(std::move(r));
    }
    for (const RatVec& row : ge_rows) {
      RatVec r = zrow(row);
      r.push_back(Rat(0));
      sys.ge.push_back(std::move(r));
    }
    if (!lin_feasible(sys)) continue;
    have_best = true;
    best_val = val;
    best_sys = sys;
  }
  if (!have_best)
    throw std::logic_error("distance minimization found no feasible face");

  Rat r2 = nb.radius * nb.radius;
  if (best_val < r2) return true;
  if (best_val > r2) return false;

  // Exact tangency. Far along the ray the nearest point of the closure moves
  // in lockstep, its active facet rows are those vanishing on all of f, and
  // every representative sits at distance exactly r unless the residual
  // admits an improving direction inside the closure. So: if no facet row
  // through the optimal point vanishes on f, the nearest point is relatively
  // interior and the closed ball just reaches it; otherwise containment
  // holds exactly when the residual can still be shortened, a Farkas
  // question about the active rows and the equality span.
  auto zstar = lin_witness(best_sys);
  if (!zstar) throw std::logic_error("feasible slice lost its witness");
  RatVec pstar((*zstar).begin() + 1, (*zstar).end());
  RatVec nu = residual_of(*zstar);

  std::vector<RatVec> s_plus;
  for (size_t j = 0; j < ge_rows.size(); ++j) {
    if (!(vec_dot(ge_rows[j], pstar) == Rat(0))) continue;
    if (sign_on_cone(fc, ge_rows[j]) == '0') s_plus.push_back(ge_rows[j]);
  }
  if (s_plus.empty()) return true;

  // Improving direction d: annihilated by the equality rows, weakly inside
  // the active facets, with positive gram pairing against the residual. None
  // exists exactly when gram*nu is a nonnegative combination of the negated
  // active rows plus an arbitrary combination of the equality rows.
  RatVec gnu = mat_vec(rs_.gram, nu);
  size_t nl = s_plus.size(), nm = eq_rows.size();
  LinSys farkas(nl + nm);
  for (size_t i = 0; i < n; ++i) {
    RatVec row(nl + nm + 1, Rat(0));
    for (size_t a = 0; a < nl; ++a) row[a] = -s_plus[a][i];
    for (size_t b = 0; b < nm; ++b) row[nl + b] = eq_rows[b][i];
    row[nl + nm] = -gnu[i];
    farkas.eq.push_back(std::move(row));
  }
  for (size_t a = 0; a < nl; ++a) {
    RatVec row(nl + nm + 1, Rat(0));
    row[a] = Rat(1);
    farkas.ge.push_back(std::move(row));
  }
  return !lin_feasible(farkas);
}

ApartmentPoint Apartment::extended_action(const AffineMap& w,
                                          const ApartmentPoint& p) const {
  auto mi = inverse(w.m);
  if (!mi) throw std::invalid_argument("affine map has singular linear part");
  if (!g_.index.count(w.m))
    throw std::invalid_argument("linear part lies outside the group");
  size_t ci = fan_.index_of(p.direction);
  Cone img = transform_cone(fan_.cones[ci], w.m, *mi);
  if (!fan_.by_id.count(img.id))
    throw HypothesisViolation("cone orbit leaves the fan",
                              fan_.label + " cone " + hex_id(img.id));
  RatVec v = vec_add(mat_vec(w.m, representative(p).vertex), w.shift);
  return classify(AffineCone{std::move(v), img.id});
}

}  // namespace chambrier
