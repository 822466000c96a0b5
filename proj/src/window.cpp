#include "chambrier/window.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "chambrier/feasible.hpp"

namespace chambrier {

namespace {

size_t to_size(const Int& x) {
  if (x < 0) throw std::logic_error("negative count");
  return x.convert_to<size_t>();
}

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

AffineMapQ affine_identity(size_t n) { return {identity(n), zeros(n)}; }

AffineMapQ affine_compose(const AffineMapQ& f, const AffineMapQ& g) {
  return {mat_mul(f.m, g.m), vec_add(mat_vec(f.m, g.t), f.t)};
}

AffineMapQ affine_inverse(const AffineMapQ& f) {
  auto mi = inverse(f.m);
  if (!mi) throw std::logic_error("affine map not invertible");
  return {*mi, vec_scale(Rat(-1), mat_vec(*mi, f.t))};
}

RatVec affine_apply(const AffineMapQ& f, const RatVec& x) {
  return vec_add(mat_vec(f.m, x), f.t);
}

bool affine_equal(const AffineMapQ& a, const AffineMapQ& b) {
  return mat_eq(a.m, b.m) && a.t == b.t;
}

bool AffineFacet::operator<(const AffineFacet& o) const {
  if (kind != o.kind) return kind < o.kind;
  return value < o.value;
}

AlcoveWindow::AlcoveWindow(const RootSystem& rs, size_t radius)
    : rs_(rs),
      group_(enumerate_weyl(rs_)),
      vfan_(weyl_fan(rs_, group_)),
      radius_(radius) {
  const size_t n = rs_.rank;

  // Interior point of the base alcove 0 < alpha < 1 for all positive roots.
  {
    LinSys sys(n);
    for (const RatVec& a : rs_.positive_roots) {
      sys.add_gt(a, Rat(0));
      sys.add_gt(vec_scale(Rat(-1), a), Rat(1));
    }
    auto w = lin_witness(sys);
    if (!w) throw std::logic_error("base alcove empty");
    x0_ = *w;
  }

  // Generators: the reflections in the walls of the base alcove. One per
  // simple root at level zero, then one per diagram component through the
  // component's highest root at level one.
  for (size_t j = 0; j < n; ++j) {
    gens_.push_back({rs_.simple_reflections[j], zeros(n)});
    gen_walls_.emplace_back(j, Int(0));
  }
  std::vector<size_t> all(n);
  for (size_t j = 0; j < n; ++j) all[j] = j;
  for (const auto& comp : diagram_components(rs_, all)) {
    size_t best = kOutside;
    Rat best_height(0);
    for (size_t r = 0; r < rs_.positive_roots.size(); ++r) {
      auto coeff = solve_linear(rs_.cartan, rs_.positive_roots[r]);
      if (!coeff) throw std::logic_error("root outside simple-root span");
      bool inside = true;
      Rat height(0);
      for (size_t j = 0; j < n; ++j) {
        if ((*coeff)[j] == 0) continue;
        height += (*coeff)[j];
        if (std::find(comp.begin(), comp.end(), j) == comp.end()) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      if (best == kOutside || height > best_height) {
        best = r;
        best_height = height;
      }
    }
    if (best == kOutside) throw std::logic_error("component without roots");
    const RatVec& form = rs_.positive_roots[best];
    RatVec cr = rs_.coroot(form);
    Mat m = identity(n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) m[r][c] -= cr[r] * form[c];
    gens_.push_back({m, cr});
    gen_walls_.emplace_back(best, Int(1));
  }

  build_alcoves();
  build_facets();
}

IntVec AlcoveWindow::floors_of(const AffineMapQ& map) const {
  RatVec p = affine_apply(map, x0_);
  IntVec out;
  out.reserve(rs_.positive_roots.size());
  for (const RatVec& form : rs_.positive_roots)
    out.push_back(floor_rat(vec_dot(form, p)));
  return out;
}

void AlcoveWindow::build_alcoves() {
  const size_t nroots = rs_.positive_roots.size();
  Alcove base;
  base.floors = IntVec(nroots, Int(0));
  base.map = affine_identity(rs_.rank);
  base.dist = 0;
  alcoves_.push_back(base);
  alcove_index_[base.floors] = 0;

  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t a = queue.front();
    queue.pop_front();
    if (alcoves_[a].dist == radius_) continue;
    for (size_t g = 0; g < gens_.size(); ++g) {
      AffineMapQ nm = affine_compose(alcoves_[a].map, gens_[g]);
      IntVec fl = floors_of(nm);
      if (alcove_index_.count(fl)) continue;
      Alcove next;
      next.floors = fl;
      next.map = nm;
      next.dist = alcoves_[a].dist + 1;
      alcove_index_[fl] = alcoves_.size();
      alcoves_.push_back(std::move(next));
      queue.push_back(alcoves_.size() - 1);
    }
  }

  // Link neighbors symmetrically and name the panel wall crossed: exactly
  // one root floor moves, by one.
  bound_ = Int(1);
  for (size_t a = 0; a < alcoves_.size(); ++a) {
    Alcove& al = alcoves_[a];
    al.nbr.assign(gens_.size(), kOutside);
    al.nbr_floors.resize(gens_.size());
    al.walls.resize(gens_.size());
    for (size_t g = 0; g < gens_.size(); ++g) {
      AffineMapQ nm = affine_compose(al.map, gens_[g]);
      IntVec fl = floors_of(nm);
      size_t changed = kOutside;
      for (size_t i = 0; i < fl.size(); ++i) {
        if (fl[i] == al.floors[i]) continue;
        if (changed != kOutside || int_abs(fl[i] - al.floors[i]) != 1)
          throw std::logic_error("panel crossing moved two floors");
        changed = i;
      }
      if (changed == kOutside)
        throw std::logic_error("panel crossing moved no floor");
      al.walls[g] = {changed, std::max(fl[changed], al.floors[changed])};
      auto it = alcove_index_.find(fl);
      if (it != alcove_index_.end()) {
        al.nbr[g] = it->second;
        if (!affine_equal(nm, alcoves_[it->second].map))
          throw std::logic_error("two maps reach one alcove");
      }
      al.nbr_floors[g] = std::move(fl);
    }
    for (const Int& f : al.floors)
      bound_ = std::max(bound_, std::max(int_abs(f), int_abs(f + 1)));
  }
}

AffineFacet AlcoveWindow::encode_point(const RatVec& x) const {
  AffineFacet enc;
  for (const RatVec& form : rs_.positive_roots) {
    Rat val = vec_dot(form, x);
    if (rat_den(val) == 1) {
      enc.kind.push_back('0');
      enc.value.push_back(rat_num(val));
    } else {
      enc.kind.push_back('o');
      enc.value.push_back(floor_rat(val));
    }
  }
  return enc;
}

void AlcoveWindow::build_facets() {
  const size_t n = rs_.rank;
  const size_t ngen = gens_.size();
  for (size_t a = 0; a < alcoves_.size(); ++a) {
    Alcove& al = alcoves_[a];
    for (size_t mask = 0; mask < (size_t(1) << ngen); ++mask) {
      LinSys sys(n);
      for (size_t g = 0; g < ngen; ++g) {
        auto [i, k] = al.walls[g];
        const RatVec& form = rs_.positive_roots[i];
        if (mask & (size_t(1) << g)) {
          sys.add_eq(form, Rat(-k));
        } else if (al.floors[i] >= k) {
          sys.add_gt(form, Rat(-k));
        } else {
          sys.add_gt(vec_scale(Rat(-1), form), Rat(k));
        }
      }
      auto w = lin_witness(sys);
      if (!w) continue;
      AffineFacet enc = encode_point(*w);
      auto it = facet_index_.find(enc);
      size_t id;
      if (it == facet_index_.end()) {
        id = facets_.size();
        facet_index_[enc] = id;
        Mat level_forms;
        for (size_t i = 0; i < enc.kind.size(); ++i)
          if (enc.kind[i] == '0') level_forms.push_back(rs_.positive_roots[i]);
        facet_dims_.push_back(n - rank_of(level_forms));
        facet_points_.push_back(*w);
        facets_.push_back(std::move(enc));
        facet_alcoves_.emplace_back();
      } else {
        id = it->second;
      }
      facet_alcoves_[id].push_back(a);
      al.face_ids.push_back(id);
    }
  }

  // A facet keeps its whole chamber set inside the window unless some
  // off-window alcove next to an incident one touches it. Stars are
  // panel-connected, so checking these outside neighbors sees every escape.
  star_ok_.assign(facets_.size(), 1);
  for (const Alcove& al : alcoves_) {
    for (size_t g = 0; g < gens_.size(); ++g) {
      if (al.nbr[g] != kOutside) continue;
      for (size_t f : al.face_ids)
        if (floors_in_closure(facets_[f], al.nbr_floors[g])) star_ok_[f] = 0;
    }
  }
}

bool AlcoveWindow::floors_in_closure(const AffineFacet& enc,
                                     const IntVec& floors) const {
  for (size_t i = 0; i < enc.kind.size(); ++i) {
    if (enc.kind[i] == '0') {
      if (floors[i] != enc.value[i] && floors[i] != enc.value[i] - 1)
        return false;
    } else {
      if (floors[i] != enc.value[i]) return false;
    }
  }
  return true;
}

void AlcoveWindow::check_alcove(size_t i) const {
  if (i >= alcoves_.size()) throw std::invalid_argument("no such alcove");
}

void AlcoveWindow::check_facet(size_t f) const {
  if (f >= facets_.size()) throw std::invalid_argument("no such facet");
}

std::optional<size_t> AlcoveWindow::find_alcove(const IntVec& floors) const {
  auto it = alcove_index_.find(floors);
  if (it == alcove_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> AlcoveWindow::find_facet(const AffineFacet& enc) const {
  auto it = facet_index_.find(enc);
  if (it == facet_index_.end()) return std::nullopt;
  return it->second;
}

size_t AlcoveWindow::facet_of_point(const RatVec& x) const {
  auto id = find_facet(encode_point(x));
  if (!id) throw WindowExhausted("point outside the window");
  return *id;
}

bool AlcoveWindow::facet_in_alcove_closure(size_t f, size_t alcove) const {
  check_facet(f);
  check_alcove(alcove);
  return floors_in_closure(facets_[f], alcoves_[alcove].floors);
}

bool AlcoveWindow::facet_within(size_t inner, size_t outer) const {
  check_facet(inner);
  check_facet(outer);
  const AffineFacet& in = facets_[inner];
  const AffineFacet& out = facets_[outer];
  for (size_t i = 0; i < in.kind.size(); ++i) {
    if (out.kind[i] == '0') {
      if (in.kind[i] != '0' || in.value[i] != out.value[i]) return false;
    } else if (in.kind[i] == '0') {
      if (in.value[i] != out.value[i] && in.value[i] != out.value[i] + 1)
        return false;
    } else {
      if (in.value[i] != out.value[i]) return false;
    }
  }
  return true;
}

char AlcoveWindow::sign(size_t alcove, size_t root, const Int& k) const {
  check_alcove(alcove);
  if (root >= rs_.positive_roots.size())
    throw std::invalid_argument("no such root");
  return alcoves_[alcove].floors[root] >= k ? '+' : '-';
}

size_t AlcoveWindow::separation(size_t a, size_t b) const {
  check_alcove(a);
  check_alcove(b);
  Int s(0);
  const IntVec& fa = alcoves_[a].floors;
  const IntVec& fb = alcoves_[b].floors;
  for (size_t i = 0; i < fa.size(); ++i) s += int_abs(fa[i] - fb[i]);
  return to_size(s);
}

bool AlcoveWindow::gallery_dfs(size_t cur, size_t d, std::optional<size_t> star,
                               std::vector<char>& dead,
                               std::vector<size_t>& letters) const {
  if (cur == d) return true;
  const Alcove& al = alcoves_[cur];
  const IntVec& fd = alcoves_[d].floors;
  for (size_t g = 0; g < gens_.size(); ++g) {
    auto [i, k] = al.walls[g];
    if ((al.floors[i] >= k) == (fd[i] >= k)) continue;  // not separating
    size_t nb = al.nbr[g];
    if (nb == kOutside || dead[nb]) continue;
    if (star && !facet_in_alcove_closure(*star, nb)) continue;
    letters.push_back(g);
    if (gallery_dfs(nb, d, star, dead, letters)) return true;
    letters.pop_back();
  }
  dead[cur] = 1;
  return false;
}

GalleryWord AlcoveWindow::minimal_gallery(size_t c, size_t d) const {
  check_alcove(c);
  check_alcove(d);
  std::vector<char> dead(alcoves_.size(), 0);
  GalleryWord w;
  if (!gallery_dfs(c, d, std::nullopt, dead, w.letters))
    throw WindowExhausted("every minimal gallery leaves the window");
  return w;
}

GalleryWord AlcoveWindow::star_gallery(size_t c, size_t d, size_t star) const {
  std::vector<char> dead(alcoves_.size(), 0);
  GalleryWord w;
  if (!gallery_dfs(c, d, star, dead, w.letters))
    throw WindowExhausted("every minimal gallery in the star leaves the window");
  return w;
}

std::vector<size_t> AlcoveWindow::gallery_alcoves(size_t start,
                                                  const GalleryWord& w) const {
  check_alcove(start);
  std::vector<size_t> out{start};
  for (size_t g : w.letters) {
    if (g >= gens_.size()) throw std::invalid_argument("no such generator");
    size_t nb = alcoves_[out.back()].nbr[g];
    if (nb == kOutside) throw WindowExhausted("gallery leaves the window");
    out.push_back(nb);
  }
  return out;
}

AffineMapQ AlcoveWindow::delta(size_t c, size_t d) const {
  check_alcove(c);
  check_alcove(d);
  return affine_compose(affine_inverse(alcoves_[c].map), alcoves_[d].map);
}

AffineMapQ AlcoveWindow::word_product(const GalleryWord& w) const {
  AffineMapQ acc = affine_identity(rs_.rank);
  for (size_t g : w.letters) {
    if (g >= gens_.size()) throw std::invalid_argument("no such generator");
    acc = affine_compose(acc, gens_[g]);
  }
  return acc;
}

std::vector<size_t> AlcoveWindow::enclos(const std::vector<size_t>& E) const {
  if (E.empty()) throw std::invalid_argument("enclos of nothing");
  for (size_t e : E) check_alcove(e);
  const size_t nroots = rs_.positive_roots.size();
  IntVec lo = alcoves_[E[0]].floors;
  IntVec hi = lo;
  for (size_t e : E) {
    const IntVec& fl = alcoves_[e].floors;
    for (size_t i = 0; i < nroots; ++i) {
      lo[i] = std::min(lo[i], fl[i]);
      hi[i] = std::max(hi[i], fl[i]);
    }
  }
  auto in_box = [&](const IntVec& fl) {
    for (size_t i = 0; i < nroots; ++i)
      if (fl[i] < lo[i] || fl[i] > hi[i]) return false;
    return true;
  };
  std::vector<size_t> out;
  for (size_t a = 0; a < alcoves_.size(); ++a)
    if (in_box(alcoves_[a].floors)) out.push_back(a);
  // The box of the full complex is gallery-connected, so if any part of it
  // lies off-window, some member alcove has an off-window neighbor in it.
  for (size_t a : out) {
    const Alcove& al = alcoves_[a];
    for (size_t g = 0; g < gens_.size(); ++g)
      if (al.nbr[g] == kOutside && in_box(al.nbr_floors[g]))
        throw WindowExhausted("hull leaves the window");
  }
  return out;
}

size_t AlcoveWindow::proj(size_t c, size_t d) const {
  check_facet(c);
  check_facet(d);
  if (!star_ok_[c] || !star_ok_[d])
    throw WindowExhausted("facet star leaves the window");
  size_t best_a = kOutside, best_b = kOutside;
  size_t best_sep = 0;
  for (size_t a : facet_alcoves_[d]) {
    for (size_t b : facet_alcoves_[c]) {
      size_t s = separation(a, b);
      if (best_a == kOutside || s < best_sep) {
        best_sep = s;
        best_a = a;
        best_b = b;
      }
    }
  }
  // Existence of an in-window minimal gallery from the d side to the c side
  // is part of the contract; its final chamber is best_b.
  minimal_gallery(best_a, best_b);
  const AffineFacet& ec = facets_[c];
  const AffineFacet& ed = facets_[d];
  std::vector<std::pair<size_t, Int>> common;
  for (size_t i = 0; i < ec.kind.size(); ++i)
    if (ec.kind[i] == '0' && ed.kind[i] == '0' && ec.value[i] == ed.value[i])
      common.emplace_back(i, ec.value[i]);
  size_t best_f = kOutside;
  for (size_t f : alcoves_[best_b].face_ids) {
    const AffineFacet& ef = facets_[f];
    bool ok = true;
    for (auto& [i, k] : common) {
      if (ef.kind[i] != '0' || ef.value[i] != k) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (best_f == kOutside || facet_dims_[f] > facet_dims_[best_f]) {
      best_f = f;
    } else if (facet_dims_[f] == facet_dims_[best_f] && f != best_f) {
      throw std::logic_error("projection face not unique");
    }
  }
  if (best_f == kOutside) throw std::logic_error("projection face missing");
  if (!facet_within(c, best_f))
    throw std::logic_error("projection does not extend the base facet");
  return best_f;
}

Chimney AlcoveWindow::chimney(size_t base_facet,
                              std::uint64_t direction_id) const {
  check_facet(base_facet);
  if (!vfan_.by_id.count(direction_id))
    throw std::invalid_argument("no such direction cone");
  const Cone& dir = vfan_.cone(direction_id);
  // Extremes of each root over the closed base facet sit at its vertices,
  // all of which are faces of any incident alcove.
  size_t a0 = facet_alcoves_[base_facet].front();
  std::vector<size_t> verts;
  for (size_t f : alcoves_[a0].face_ids)
    if (facet_dims_[f] == 0 && facet_within(f, base_facet)) verts.push_back(f);
  if (verts.empty()) throw std::logic_error("facet closure without vertices");
  Chimney ch;
  ch.base = base_facet;
  ch.direction = direction_id;
  const size_t nroots = rs_.positive_roots.size();
  ch.lo.resize(nroots);
  ch.hi.resize(nroots);
  for (size_t i = 0; i < nroots; ++i) {
    const RatVec& form = rs_.positive_roots[i];
    char s = sign_on_cone(dir, form);
    if (s == 'm') throw std::logic_error("direction cone crosses a wall");
    Rat mn = vec_dot(form, facet_points_[verts[0]]);
    Rat mx = mn;
    for (size_t v : verts) {
      Rat val = vec_dot(form, facet_points_[v]);
      mn = std::min(mn, val);
      mx = std::max(mx, val);
    }
    if (s == '+' || s == '0') ch.lo[i] = floor_rat(mn);
    if (s == '-' || s == '0') ch.hi[i] = -floor_rat(-mx);
  }
  return ch;
}

bool AlcoveWindow::chimney_contains(const Chimney& ch, const RatVec& x) const {
  for (size_t i = 0; i < rs_.positive_roots.size(); ++i) {
    Rat val = vec_dot(rs_.positive_roots[i], x);
    if (ch.lo[i] && val < Rat(*ch.lo[i])) return false;
    if (ch.hi[i] && val > Rat(*ch.hi[i])) return false;
  }
  return true;
}

std::uint64_t AlcoveWindow::chimney_direction(const Chimney& ch) const {
  std::vector<char> pattern;
  for (size_t i = 0; i < rs_.positive_roots.size(); ++i) {
    if (ch.lo[i] && ch.hi[i])
      pattern.push_back('0');
    else if (ch.lo[i])
      pattern.push_back('+');
    else if (ch.hi[i])
      pattern.push_back('-');
    else
      throw std::logic_error("chimney misses a root bound");
  }
  std::uint64_t found = 0;
  bool any = false;
  for (const Cone& cone : vfan_.cones) {
    bool ok = true;
    for (size_t i = 0; i < pattern.size() && ok; ++i)
      ok = sign_on_cone(cone, rs_.positive_roots[i]) == pattern[i];
    if (!ok) continue;
    if (any) throw std::logic_error("two direction cones match one chimney");
    any = true;
    found = cone.id;
  }
  if (!any) throw std::logic_error("no direction cone matches the chimney");
  return found;
}

std::pair<RatVec, RatVec> AlcoveWindow::characteristic_ray(
    const Chimney& ch) const {
  check_facet(ch.base);
  if (!vfan_.by_id.count(ch.direction))
    throw std::invalid_argument("no such direction cone");
  return {facet_points_[ch.base], vfan_.cone(ch.direction).witness};
}

bool AlcoveWindow::closure_meets_ray(size_t alcove, const RatVec& s,
                                     const RatVec& v) const {
  check_alcove(alcove);
  Rat lo(0);
  std::optional<Rat> hi;
  const IntVec& floors = alcoves_[alcove].floors;
  for (size_t i = 0; i < rs_.positive_roots.size(); ++i) {
    const RatVec& form = rs_.positive_roots[i];
    Rat val = vec_dot(form, s);
    Rat av = vec_dot(form, v);
    Rat wlo(floors[i]), whi = Rat(floors[i]) + 1;
    if (av == 0) {
      if (val < wlo || val > whi) return false;
    } else if (av > 0) {
      lo = std::max(lo, Rat((wlo - val) / av));
      Rat h = (whi - val) / av;
      if (!hi || h < *hi) hi = h;
    } else {
      lo = std::max(lo, Rat((whi - val) / av));
      Rat h = (wlo - val) / av;
      if (!hi || h < *hi) hi = h;
    }
  }
  return !hi || lo <= *hi;
}

Gallery AlcoveWindow::gallery_along_ray(size_t c0, const RatVec& s,
                                        const RatVec& v,
                                        size_t segments) const {
  check_alcove(c0);
  if (vec_is_zero(v)) throw std::invalid_argument("zero ray direction");
  size_t fs = facet_of_point(s);
  if (!facet_in_alcove_closure(fs, c0))
    throw std::invalid_argument("ray origin not on the starting chamber");

  // Walls containing the whole ray cage it: the gallery must stay on c0's
  // side of each.
  const size_t nroots = rs_.positive_roots.size();
  struct CageWall {
    size_t root;
    Int level;
    bool ge;
  };
  std::vector<CageWall> cage;
  for (size_t i = 0; i < nroots; ++i) {
    if (vec_dot(rs_.positive_roots[i], v) != 0) continue;
    Rat val = vec_dot(rs_.positive_roots[i], s);
    if (rat_den(val) != 1) continue;
    Int k = rat_num(val);
    cage.push_back({i, k, alcoves_[c0].floors[i] >= k});
  }
  auto in_cage = [&](size_t a) {
    for (const CageWall& w : cage) {
      bool side = alcoves_[a].floors[w.root] >= w.level;
      if (side != w.ge) return false;
    }
    return true;
  };

  // Parameters where the ray crosses a wall, in increasing order.
  auto next_crossing = [&](const Rat& t) {
    std::optional<Rat> best;
    for (size_t i = 0; i < nroots; ++i) {
      Rat av = vec_dot(rs_.positive_roots[i], v);
      if (av == 0) continue;
      Rat v0 = vec_dot(rs_.positive_roots[i], s);
      Rat val = v0 + t * av;
      Int k = av > 0 ? floor_rat(val) + 1 : -floor_rat(-val) - 1;
      Rat tn = (Rat(k) - v0) / av;
      if (!best || tn < *best) best = tn;
    }
    if (!best) throw std::logic_error("ray crosses no wall");
    return *best;
  };

  std::vector<size_t> seq{c0};
  std::vector<size_t> letters;
  size_t cur = c0;
  Rat t(0);
  for (size_t k = 0; k < segments; ++k) {
    Rat tn = next_crossing(t);
    RatVec mid = vec_add(s, vec_scale((t + tn) / 2, v));
    size_t fmid = facet_of_point(mid);
    size_t target = kOutside;
    for (size_t a : facet_alcoves_[fmid]) {
      if (!in_cage(a)) continue;
      if (target != kOutside)
        throw std::logic_error("ray segment chamber not unique");
      target = a;
    }
    if (target == kOutside)
      throw WindowExhausted("ray segment chamber outside the window");
    if (target != cur) {
      size_t junction = k == 0 ? fs : facet_of_point(vec_add(s, vec_scale(t, v)));
      GalleryWord w = star_gallery(cur, target, junction);
      std::vector<size_t> step = gallery_alcoves(cur, w);
      seq.insert(seq.end(), step.begin() + 1, step.end());
      letters.insert(letters.end(), w.letters.begin(), w.letters.end());
      cur = target;
    }
    t = tn;
  }

  // Tense: no wall is crossed twice.
  std::set<std::pair<size_t, Int>> crossed;
  for (size_t j = 0; j + 1 < seq.size(); ++j) {
    const auto& wall = alcoves_[seq[j]].walls[letters[j]];
    if (!crossed.insert(wall).second)
      throw std::logic_error("gallery crossed a wall twice");
  }
  // Every chamber's closure meets the ray.
  for (size_t a : seq)
    if (!closure_meets_ray(a, s, v))
      throw std::logic_error("gallery chamber misses the ray");

  return {std::move(seq), {std::move(letters)}};
}

}  // namespace chambrier
