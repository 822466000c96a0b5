#include "chambrier/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chambrier {

namespace {

std::string id_hex(std::uint64_t id) {
  std::ostringstream out;
  out << std::hex << id;
  return out.str();
}

}  // namespace

std::vector<SignFace> arrangement_faces(size_t n, const std::vector<RatVec>& forms) {
  std::vector<SignFace> done;
  struct Partial {
    std::vector<char> signs;
    RatVec witness;
  };
  std::vector<Partial> frontier = {{{}, zeros(n)}};
  for (size_t k = 0; k < forms.size(); ++k) {
    std::vector<Partial> next;
    for (const Partial& p : frontier) {
      Rat at = vec_dot(forms[k], p.witness);
      char free_branch = at == 0 ? '0' : (at > 0 ? '+' : '-');
      for (char s : {'0', '+', '-'}) {
        if (s == free_branch) {
          Partial q = p;
          q.signs.push_back(s);
          next.push_back(std::move(q));
          continue;
        }
        LinSys sys(n);
        for (size_t i = 0; i < k; ++i) {
          if (p.signs[i] == '0')
            sys.add_eq(forms[i]);
          else
            sys.add_gt(p.signs[i] == '+' ? forms[i] : vec_scale(Rat(-1), forms[i]));
        }
        if (s == '0')
          sys.add_eq(forms[k]);
        else
          sys.add_gt(s == '+' ? forms[k] : vec_scale(Rat(-1), forms[k]));
        auto w = lin_witness(sys);
        if (!w.has_value()) continue;
        Partial q;
        q.signs = p.signs;
        q.signs.push_back(s);
        q.witness = *w;
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  for (Partial& p : frontier) {
    Mat zero_rows;
    for (size_t i = 0; i < forms.size(); ++i)
      if (p.signs[i] == '0') zero_rows.push_back(forms[i]);
    SignFace f;
    f.signs = std::move(p.signs);
    f.witness = std::move(p.witness);
    f.dim = n - rank_of(zero_rows);
    done.push_back(std::move(f));
  }
  return done;
}

size_t Fan::index_of(std::uint64_t id) const {
  auto it = by_id.find(id);
  if (it == by_id.end()) throw std::invalid_argument("cone id not in fan");
  return it->second;
}

namespace {

// Shared exact machinery: the common-refinement arrangement of every
// constraint row of every cone, with each row resolved to a source line and
// an orientation. Signs on a stratum then decide membership and closure
// questions by table lookup.
struct RowRef {
  size_t src = 0;
  int orient = 1;
  bool operator==(const RowRef&) const = default;
};

struct Analysis {
  std::vector<RatVec> source;  // primitive, first nonzero positive
  std::vector<SignFace> strata;
  std::vector<std::vector<RowRef>> eq_refs;  // per cone
  std::vector<std::vector<RowRef>> gt_refs;
  std::vector<std::vector<size_t>> member_strata;  // per cone
  std::vector<std::vector<size_t>> cones_of;       // per stratum
};

char expected_sign(const RowRef& r, char have) {
  if (have == '0') return '0';
  if (r.orient > 0) return have;
  return have == '+' ? '-' : '+';
}

// Sign of the referenced row on the stratum.
char row_sign(const RowRef& r, const SignFace& s) {
  return expected_sign(r, s.signs[r.src]);
}

bool stratum_in_cone(const Analysis& a, size_t si, size_t ci) {
  const SignFace& s = a.strata[si];
  for (const RowRef& r : a.eq_refs[ci])
    if (row_sign(r, s) != '0') return false;
  for (const RowRef& r : a.gt_refs[ci])
    if (row_sign(r, s) != '+') return false;
  return true;
}

bool stratum_in_closure(const Analysis& a, size_t si, size_t ci) {
  const SignFace& s = a.strata[si];
  for (const RowRef& r : a.eq_refs[ci])
    if (row_sign(r, s) != '0') return false;
  for (const RowRef& r : a.gt_refs[ci])
    if (row_sign(r, s) == '-') return false;
  return true;
}

bool stratum_in_span(const Analysis& a, size_t si, size_t ci) {
  const SignFace& s = a.strata[si];
  for (const RowRef& r : a.eq_refs[ci])
    if (row_sign(r, s) != '0') return false;
  return true;
}

Analysis analyze(const Fan& fan) {
  Analysis a;
  std::map<IntVec, size_t> src_index;
  auto resolve = [&](const IntVec& row) {
    IntVec rep = primitive_unsigned(to_rat(row));
    auto [it, fresh] = src_index.try_emplace(rep, a.source.size());
    if (fresh) a.source.push_back(to_rat(rep));
    int orient = (row == rep) ? 1 : -1;
    return RowRef{it->second, orient};
  };
  a.eq_refs.resize(fan.cones.size());
  a.gt_refs.resize(fan.cones.size());
  for (size_t ci = 0; ci < fan.cones.size(); ++ci) {
    for (const IntVec& r : fan.cones[ci].eq) a.eq_refs[ci].push_back(resolve(r));
    for (const IntVec& r : fan.cones[ci].gt) a.gt_refs[ci].push_back(resolve(r));
  }
  a.strata = arrangement_faces(fan.n, a.source);
  a.member_strata.resize(fan.cones.size());
  a.cones_of.resize(a.strata.size());
  for (size_t si = 0; si < a.strata.size(); ++si)
    for (size_t ci = 0; ci < fan.cones.size(); ++ci)
      if (stratum_in_cone(a, si, ci)) {
        a.member_strata[ci].push_back(si);
        a.cones_of[si].push_back(ci);
      }
  return a;
}

// g lies inside the closure of f exactly when all of g's strata do.
bool cone_in_closure(const Analysis& a, size_t gi, size_t fi) {
  for (size_t si : a.member_strata[gi])
    if (!stratum_in_closure(a, si, fi)) return false;
  return !a.member_strata[gi].empty();
}

std::string point_str(const RatVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

Fan assemble_fan(std::string label, std::vector<size_t> J, size_t n,
                 std::vector<Cone> cones) {
  Fan fan;
  fan.label = std::move(label);
  fan.J = std::move(J);
  fan.n = n;
  std::sort(cones.begin(), cones.end(),
            [](const Cone& a, const Cone& b) { return a.id < b.id; });
  fan.cones = std::move(cones);
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    if (fan.by_id.count(fan.cones[i].id))
      throw std::logic_error("duplicate cone id in fan");
    fan.by_id[fan.cones[i].id] = i;
  }
  Analysis a = analyze(fan);
  fan.faces.resize(fan.cones.size());
  for (size_t fi = 0; fi < fan.cones.size(); ++fi)
    for (size_t gi = 0; gi < fan.cones.size(); ++gi)
      if (gi != fi && cone_in_closure(a, gi, fi))
        fan.faces[fi].push_back(fan.cones[gi].id);
  return fan;
}

Fan weyl_fan(const RootSystem& rs, const WeylGroup&) {
  std::vector<RatVec> forms;
  for (const RatVec& r : rs.positive_roots) forms.push_back(r);
  std::vector<SignFace> strata = arrangement_faces(rs.rank, forms);
  std::vector<Cone> cones;
  for (const SignFace& s : strata) {
    std::vector<RatVec> eqs, gts;
    for (size_t i = 0; i < forms.size(); ++i) {
      if (s.signs[i] == '0')
        eqs.push_back(forms[i]);
      else
        gts.push_back(s.signs[i] == '+' ? forms[i] : vec_scale(Rat(-1), forms[i]));
    }
    cones.push_back(canonicalize_cone(rs.rank, eqs, gts));
  }
  return assemble_fan(rs.label, {}, rs.rank, std::move(cones));
}

Cone facet_cone(const RootSystem& rs, const std::vector<size_t>& I) {
  std::vector<RatVec> eqs, gts;
  std::set<size_t> in(I.begin(), I.end());
  for (size_t j = 0; j < rs.rank; ++j) {
    if (in.count(j))
      eqs.push_back(rs.simple_roots[j]);
    else
      gts.push_back(rs.simple_roots[j]);
  }
  return canonicalize_cone(rs.rank, eqs, gts);
}

std::vector<std::vector<size_t>> admissible_types(const RootSystem& rs,
                                                  const std::vector<size_t>& J) {
  std::set<size_t> jset(J.begin(), J.end());
  std::vector<std::vector<size_t>> out;
  for (size_t mask = 0; mask < (size_t(1) << rs.rank); ++mask) {
    std::vector<size_t> I;
    for (size_t j = 0; j < rs.rank; ++j)
      if (mask & (size_t(1) << j)) I.push_back(j);
    bool ok = true;
    for (const auto& comp : diagram_components(rs, I)) {
      bool inside = true;
      for (size_t c : comp) inside = inside && jset.count(c);
      if (inside) ok = false;
    }
    if (ok) out.push_back(I);
  }
  return out;
}

Fan build_FJ(const RootSystem& rs, const WeylGroup& g, const std::vector<size_t>& J) {
  std::set<size_t> jset(J.begin(), J.end());
  std::vector<Cone> cones;
  std::map<std::uint64_t, size_t> seen;
  std::vector<FanOrigin> origins;
  for (const std::vector<size_t>& I : admissible_types(rs, J)) {
    std::vector<size_t> L;
    for (size_t l : J) {
      bool orth = true;
      for (size_t i : I) orth = orth && rs.cartan[l][i] == 0;
      if (orth && !std::count(I.begin(), I.end(), l)) L.push_back(l);
    }
    std::vector<size_t> gen;
    for (size_t l : L) gen.push_back(g.index_of(rs.simple_reflections[l]));
    std::vector<size_t> wl = subgroup_closure(g, gen);
    std::set<size_t> il(I.begin(), I.end());
    for (size_t l : L) il.insert(l);
    std::vector<RatVec> eqs, gts;
    for (size_t i : I) eqs.push_back(rs.simple_roots[i]);
    for (size_t k = 0; k < rs.rank; ++k) {
      if (il.count(k)) continue;
      for (size_t wi : wl)
        gts.push_back(form_mul(rs.simple_roots[k], g.elements[wi].m_inv));
    }
    Cone base = canonicalize_cone(rs.rank, eqs, gts);
    origins.push_back({I, L, base.id});
    for (const WeylElement& w : g.elements) {
      Cone img = transform_cone(base, w.m, w.m_inv);
      if (seen.try_emplace(img.id, cones.size()).second) cones.push_back(std::move(img));
    }
  }
  Fan fan = assemble_fan(rs.label, J, rs.rank, std::move(cones));
  fan.origins = std::move(origins);
  return fan;
}

std::optional<size_t> cone_index_containing(const Fan& fan, const RatVec& x) {
  for (size_t i = 0; i < fan.cones.size(); ++i)
    if (cone_contains(fan.cones[i], x)) return i;
  return std::nullopt;
}

bool HypothesisReport::all() const {
  for (int i = 1; i <= 7; ++i)
    if (!pass[i]) return false;
  return true;
}

bool HypothesisReport::all_except_h3() const {
  for (int i = 1; i <= 7; ++i)
    if (i != 3 && !pass[i]) return false;
  return true;
}

HypothesisReport check_hypotheses(const Fan& fan, const std::vector<Mat>& generators) {
  HypothesisReport rep;
  Analysis a = analyze(fan);

  // H1: every stratum of the refinement lies in exactly one cone.
  for (size_t si = 0; si < a.strata.size() && rep.pass[1]; ++si) {
    if (a.cones_of[si].size() != 1) {
      rep.pass[1] = false;
      rep.witness[1] = "point " + point_str(a.strata[si].witness) + " lies in " +
                       std::to_string(a.cones_of[si].size()) + " cones";
    }
  }

  // H2 and H4 are structural for this representation: the fan is a finite
  // list of cones, each given by its canonical linear system.
  if (fan.cones.empty()) {
    rep.pass[2] = false;
    rep.witness[2] = "fan has no cones";
  }

  // H3: the origin is a cone of its own.
  bool has_origin = false;
  for (const Cone& c : fan.cones) has_origin = has_origin || c.span_dim == 0;
  if (!has_origin) {
    rep.pass[3] = false;
    rep.witness[3] = "no zero-dimensional cone";
  }

  // H5: the boundary of each cone is a union of fan cones.
  for (size_t fi = 0; fi < fan.cones.size() && rep.pass[5]; ++fi) {
    for (size_t si = 0; si < a.strata.size() && rep.pass[5]; ++si) {
      if (!stratum_in_closure(a, si, fi) || stratum_in_cone(a, si, fi)) continue;
      for (size_t gi : a.cones_of[si]) {
        if (!cone_in_closure(a, gi, fi)) {
          rep.pass[5] = false;
          rep.witness[5] = "cone " + id_hex(fan.cones[gi].id) +
                           " meets the boundary of " + id_hex(fan.cones[fi].id) +
                           " without lying in its closure";
        }
      }
      if (a.cones_of[si].empty()) {
        rep.pass[5] = false;
        rep.witness[5] =
            "boundary point " + point_str(a.strata[si].witness) + " in no cone";
      }
    }
  }

  // H6: a face spans exactly its slice of the closure, in closure form:
  // cl(f) = Vect(f) ∩ cl(g) whenever f is a face of g.
  for (size_t gi = 0; gi < fan.cones.size() && rep.pass[6]; ++gi) {
    for (size_t fi = 0; fi < fan.cones.size() && rep.pass[6]; ++fi) {
      if (fi == gi || !cone_in_closure(a, fi, gi)) continue;
      for (size_t si = 0; si < a.strata.size(); ++si) {
        if (!stratum_in_span(a, si, fi) || !stratum_in_closure(a, si, gi)) continue;
        if (!stratum_in_closure(a, si, fi)) {
          rep.pass[6] = false;
          rep.witness[6] = "point " + point_str(a.strata[si].witness) +
                           " lies in span(" + id_hex(fan.cones[fi].id) +
                           ") ∩ cl(" + id_hex(fan.cones[gi].id) +
                           ") but not in cl of the face";
          break;
        }
      }
    }
  }

  // H7: group stability.
  for (size_t k = 0; k < generators.size() && rep.pass[7]; ++k) {
    Mat inv = *inverse(generators[k]);
    for (const Cone& c : fan.cones) {
      Cone img = transform_cone(c, generators[k], inv);
      if (!fan.by_id.count(img.id)) {
        rep.pass[7] = false;
        rep.witness[7] = "image of cone " + id_hex(c.id) + " under generator " +
                         std::to_string(k) + " is not a fan cone";
        break;
      }
    }
  }
  return rep;
}

}  // namespace chambrier
