#include "chambrier/core_facade.hpp"

#include <algorithm>
#include <set>

namespace chambrier {

namespace {

std::vector<RatVec> cone_eq_rows(const Cone& c) {
  std::vector<RatVec> rows;
  for (const IntVec& r : c.eq) rows.push_back(to_rat(r));
  return rows;
}

std::vector<RatVec> cone_gt_rows(const Cone& c) {
  std::vector<RatVec> rows;
  for (const IntVec& r : c.gt) rows.push_back(to_rat(r));
  return rows;
}

// Rows of m - id, the linear conditions cutting out Fix(m).
void append_fix_rows(const Mat& m, std::vector<RatVec>* eqs) {
  for (size_t i = 0; i < m.size(); ++i) {
    RatVec row = m[i];
    row[i] -= 1;
    if (!vec_is_zero(row)) eqs->push_back(std::move(row));
  }
}

bool fixes_rows_pointwise(const Mat& m, const Mat& rows) {
  for (const RatVec& v : rows)
    if (mat_vec(m, v) != v) return false;
  return true;
}

}  // namespace

std::vector<size_t> cone_stabilizer(const std::vector<Mat>& group,
                                    const Fan& fan, size_t ci) {
  const Cone& f = fan.cones[ci];
  std::vector<size_t> stab;
  for (size_t gi = 0; gi < group.size(); ++gi) {
    auto m_inv = inverse(group[gi]);
    if (!m_inv) throw std::logic_error("singular matrix in a symmetry group");
    if (transform_cone(f, group[gi], *m_inv).id == f.id) stab.push_back(gi);
  }
  return stab;
}

Cone core_by_fixator(const std::vector<Mat>& group, const Fan& fan, size_t ci) {
  const Cone& f = fan.cones[ci];
  std::vector<RatVec> eqs = cone_eq_rows(f);
  for (size_t gi : cone_stabilizer(group, fan, ci)) append_fix_rows(group[gi], &eqs);
  return canonicalize_cone(f.n, eqs, cone_gt_rows(f));
}

Cone core_by_walls(const std::vector<RatVec>& wall_forms, const Fan& fan,
                   size_t ci) {
  const Cone& f = fan.cones[ci];
  std::vector<RatVec> eqs = cone_eq_rows(f);
  for (const RatVec& w : wall_forms) {
    char s = sign_on_cone(f, w);
    if (s == '0' || s == 'm') eqs.push_back(w);
  }
  return canonicalize_cone(f.n, eqs, cone_gt_rows(f));
}

CoreData compute_core(const RootSystem& rs, const WeylGroup& g, const Fan& fan,
                      size_t ci) {
  const Cone& f = fan.cones[ci];
  CoreData out;
  out.cone_index = ci;

  std::vector<RatVec> fix_eqs = cone_eq_rows(f);
  for (size_t wi = 0; wi < g.size(); ++wi) {
    const WeylElement& w = g.elements[wi];
    Cone image = transform_cone(f, w.m, w.m_inv);
    if (!fan.by_id.count(image.id))
      throw HypothesisViolation("cone orbit leaves the fan",
                                fan.label + " cone " + std::to_string(ci) +
                                    " moved by element " + std::to_string(wi));
    if (image.id == f.id) {
      out.stab.push_back(wi);
      append_fix_rows(w.m, &fix_eqs);
    }
  }
  Cone by_fix = canonicalize_cone(f.n, fix_eqs, cone_gt_rows(f));

  std::vector<RatVec> wall_eqs = cone_eq_rows(f);
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    char s = sign_on_cone(f, rs.positive_roots[r]);
    if (s == '0' || s == 'm') {
      out.wall_roots.push_back(r);
      wall_eqs.push_back(rs.positive_roots[r]);
    }
  }
  Cone by_wall = canonicalize_cone(f.n, wall_eqs, cone_gt_rows(f));

  if (by_fix.id != by_wall.id)
    throw std::logic_error("core routes disagree on cone " + std::to_string(ci));
  out.core = by_fix;

  for (const RatVec& root : rs.positive_roots) {
    char s = sign_on_cone(out.core, root);
    if (s == 'm') throw std::logic_error("core crosses a root wall");
    out.facet_signs.push_back(s);
  }

  for (size_t r : out.wall_roots)
    out.stab_gens.push_back(reflection_element(rs, g, r));
  if (subgroup_closure(g, out.stab_gens) != out.stab)
    throw std::logic_error("stabilizer is not the wall reflection group");

  // The setwise stabilizer of the cone is the pointwise fixator of its core.
  Mat core_span = kernel_basis(cone_eq_rows(out.core), f.n);
  for (size_t wi = 0; wi < g.size(); ++wi) {
    bool fixes = fixes_rows_pointwise(g.elements[wi].m, core_span);
    bool stabilizes = std::binary_search(out.stab.begin(), out.stab.end(), wi);
    if (fixes != stabilizes)
      throw std::logic_error("stabilizer differs from the core fixator");
  }
  return out;
}

Facade build_facade(const RootSystem& rs, const WeylGroup& g, const Fan& fan,
                    size_t ci) {
  const Cone& f = fan.cones[ci];
  const size_t n = f.n;
  Facade fc;
  fc.cone_index = ci;
  fc.n = n;

  fc.v_basis = kernel_basis(cone_eq_rows(f), n);
  for (RatVec& r : fc.v_basis) r = to_rat(primitive_signed(r));
  Mat pairing_rows;  // row v becomes the form gram(v, .)
  for (const RatVec& v : fc.v_basis) pairing_rows.push_back(mat_vec(rs.gram, v));
  fc.q_basis = kernel_basis(pairing_rows, n);
  for (RatVec& r : fc.q_basis) r = to_rat(primitive_signed(r));
  fc.dim = fc.q_basis.size();
  if (fc.dim + fc.v_basis.size() != n)
    throw std::logic_error("degenerate pairing in the facade splitting");

  if (fc.v_basis.empty()) {
    fc.projector = identity(n);
  } else {
    Mat bv = transpose(fc.v_basis);
    Mat small = mat_mul(pairing_rows, bv);
    auto small_inv = inverse(small);
    if (!small_inv) throw std::logic_error("span gram is singular");
    Mat corr = mat_mul(bv, mat_mul(*small_inv, pairing_rows));
    fc.projector = identity(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) fc.projector[i][j] -= corr[i][j];
  }
  fc.quotient_gram =
      mat_mul(mat_mul(fc.q_basis, rs.gram), transpose(fc.q_basis));

  for (size_t r = 0; r < rs.positive_roots.size(); ++r)
    if (sign_on_cone(f, rs.positive_roots[r]) == '0') fc.wall_roots.push_back(r);

  for (size_t wi = 0; wi < g.size(); ++wi) {
    const WeylElement& w = g.elements[wi];
    if (transform_cone(f, w.m, w.m_inv).id == f.id) fc.stab.push_back(wi);
  }

  for (size_t wi : fc.stab) {
    const Mat& m = g.elements[wi].m;
    if (!reflection_root(rs, m).has_value()) continue;
    bool fixes_v = fixes_rows_pointwise(m, fc.v_basis);
    bool fixes_q = fixes_rows_pointwise(m, fc.q_basis);
    if (fixes_v == fixes_q)
      throw std::logic_error("stabilizer reflection not split by the facade");
    if (fixes_q)
      fc.refl_type1.push_back(wi);
    else
      fc.refl_type2.push_back(wi);
  }

  Mat bq = transpose(fc.q_basis);
  std::set<Mat> restricted;
  for (size_t wi : fc.stab) {
    const Mat& m = g.elements[wi].m;
    Mat r(fc.dim, RatVec(fc.dim));
    for (size_t j = 0; j < fc.dim; ++j) {
      auto coords = solve_linear(bq, mat_vec(m, fc.q_basis[j]));
      if (!coords)
        throw std::logic_error("stabilizer does not preserve the complement");
      for (size_t i = 0; i < fc.dim; ++i) r[i][j] = (*coords)[i];
    }
    restricted.insert(std::move(r));
  }
  fc.group.assign(restricted.begin(), restricted.end());

  // Transfers only after the span data is final.
  for (size_t r : fc.wall_roots)
    fc.wall_forms.push_back(transfer_form(fc, rs.positive_roots[r]));

  Mat vanishing;
  for (size_t r : fc.wall_roots) vanishing.push_back(rs.positive_roots[r]);
  fc.essential = rank_of(vanishing) == fc.dim;
  return fc;
}

RatVec facade_coords(const Facade& fc, const RatVec& x) {
  auto coords = solve_linear(transpose(fc.q_basis), mat_vec(fc.projector, x));
  if (!coords) throw std::logic_error("projection left the quotient basis span");
  return *coords;
}

RatVec transfer_form(const Facade& fc, const RatVec& form) {
  for (const RatVec& v : fc.v_basis)
    if (vec_dot(form, v) != 0)
      throw std::logic_error("form does not vanish on the cone span");
  RatVec out(fc.dim);
  for (size_t j = 0; j < fc.dim; ++j) out[j] = vec_dot(form, fc.q_basis[j]);
  return out;
}

std::vector<size_t> bordering_cones(const Fan& fan, size_t ci) {
  const std::uint64_t id = fan.cones[ci].id;
  std::vector<size_t> out;
  for (size_t gi = 0; gi < fan.cones.size(); ++gi) {
    if (gi == ci ||
        std::find(fan.faces[gi].begin(), fan.faces[gi].end(), id) !=
            fan.faces[gi].end())
      out.push_back(gi);
  }
  return out;
}

FacadeFan build_facade_fan(const RootSystem& rs, const WeylGroup& g,
                           const Fan& fan, size_t ci) {
  FacadeFan out;
  out.facade = build_facade(rs, g, fan, ci);
  const Facade& fc = out.facade;
  const Cone& f = fan.cones[ci];

  std::vector<Cone> qcones;
  std::set<std::uint64_t> ids;
  for (size_t gi : bordering_cones(fan, ci)) {
    const Cone& cg = fan.cones[gi];
    std::vector<RatVec> eqs, gts;
    for (const IntVec& r : cg.eq) eqs.push_back(transfer_form(fc, to_rat(r)));
    for (const IntVec& r : cg.gt) {
      RatVec row = to_rat(r);
      char s = sign_on_cone(f, row);
      if (s == '0')
        gts.push_back(transfer_form(fc, row));
      else if (s != '+')
        throw std::logic_error("bordering cone has a negative constraint");
    }
    Cone q = canonicalize_cone(fc.dim, eqs, gts);
    if (!ids.insert(q.id).second)
      throw std::logic_error("two bordering cones share a facade image");
    out.chi.emplace_back(gi, q.id);
    qcones.push_back(std::move(q));
  }
  out.fan = assemble_fan(fan.label, fan.J, fc.dim, std::move(qcones));
  return out;
}

LinSys star_system(size_t n, const std::vector<RatVec>& forms, const Cone& c) {
  LinSys sys(n);
  for (const RatVec& form : forms) {
    char s = sign_on_cone(c, form);
    if (s == '+')
      sys.add_ge(form);
    else if (s == '-')
      sys.add_ge(vec_scale(Rat(-1), form));
  }
  return sys;
}

}  // namespace chambrier
