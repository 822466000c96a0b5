#include "chambrier/building.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chambrier {

void TreeBoundary::check_cone(const BuildingCone& F) const {
  if (F.model != ModelKind::tree) throw ModelMismatch();
  if (F.origin >= t_->n_vertices())
    throw std::invalid_argument("cone apex outside the tree");
  if (F.end == TreeBuilding::kNone) return;
  t_->ray(F.origin, F.end);
}

void TreeBoundary::check_point(const TreePoint& x) const {
  switch (x.kind) {
    case TreePoint::vertex:
      if (x.id >= t_->n_vertices())
        throw std::invalid_argument("vertex outside the tree");
      return;
    case TreePoint::chamber:
      if (x.id >= t_->n_edges())
        throw std::invalid_argument("chamber outside the tree");
      return;
    case TreePoint::end:
      if (x.id >= t_->n_vertices() || !t_->vertex(x.id).boundary)
        throw std::invalid_argument("end must be a boundary vertex");
      return;
  }
  throw std::invalid_argument("unknown point kind");
}

BuildingCone TreeBoundary::cone(size_t origin, size_t end) const {
  t_->ray(origin, end);
  BuildingCone F;
  F.model = ModelKind::tree;
  F.origin = origin;
  F.end = end;
  return F;
}

BuildingCone TreeBoundary::point_cone(size_t v) const {
  if (v >= t_->n_vertices())
    throw std::invalid_argument("cone apex outside the tree");
  BuildingCone F;
  F.model = ModelKind::tree;
  F.origin = v;
  F.end = TreeBuilding::kNone;
  return F;
}

std::vector<size_t> TreeBoundary::cone_vertices(const BuildingCone& F) const {
  check_cone(F);
  if (F.end == TreeBuilding::kNone) return {F.origin};
  return t_->vertex_path(F.origin, F.end);
}

bool TreeBoundary::cone_contains(const BuildingCone& F, const TreePoint& x) const {
  check_cone(F);
  check_point(x);
  if (x.kind == TreePoint::end)
    throw std::invalid_argument("cone membership is an interior notion");
  const std::vector<size_t> path = cone_vertices(F);
  if (x.kind == TreePoint::vertex)
    return std::find(path.begin(), path.end(), x.id) != path.end();
  const auto [a, b] = t_->edge(x.id);
  for (size_t j = 0; j + 1 < path.size(); ++j) {
    const size_t u = path[j], v = path[j + 1];
    if ((u == a && v == b) || (u == b && v == a)) return true;
  }
  return false;
}

bool TreeBoundary::parallel(const BuildingCone& F, const BuildingCone& G) const {
  check_cone(F);
  check_cone(G);
  return F.end == G.end;
}

bool TreeBoundary::cone_equiv(const BuildingCone& F, const BuildingCone& G) const {
  if (!parallel(F, G)) return false;
  std::vector<size_t> pf = cone_vertices(F);
  std::vector<size_t> pg = cone_vertices(G);
  std::sort(pf.begin(), pf.end());
  std::sort(pg.begin(), pg.end());
  std::vector<size_t> meet;
  std::set_intersection(pf.begin(), pf.end(), pg.begin(), pg.end(),
                        std::back_inserter(meet));
  return !meet.empty();
}

bool TreeBoundary::shadow_contains(const BuildingCone& F, size_t v) const {
  check_cone(F);
  if (v >= t_->n_vertices())
    throw std::invalid_argument("vertex outside the tree");
  if (v == F.origin) return true;
  if (F.end == TreeBuilding::kNone) return false;
  // Behind the apex toward the end: v and the end share the component of
  // the tree minus the apex, i.e. the path from v to the end avoids it.
  const std::vector<size_t> path = t_->vertex_path(v, F.end);
  return std::find(path.begin(), path.end(), F.origin) == path.end();
}

bool TreeBoundary::in_neighborhood(const TreePoint& x, const BuildingCone& F,
                                   size_t r) const {
  check_cone(F);
  check_point(x);
  switch (x.kind) {
    case TreePoint::vertex:
      return shadow_contains(F, x.id) ||
             t_->vertex_distance(x.id, F.origin) <= r;
    case TreePoint::chamber: {
      const auto [a, b] = t_->edge(x.id);
      if (shadow_contains(F, a) && shadow_contains(F, b)) return true;
      const size_t da = t_->vertex_distance(a, F.origin);
      const size_t db = t_->vertex_distance(b, F.origin);
      return std::max(da, db) <= r;
    }
    case TreePoint::end:
      // A representative is a deep subray toward x; the ball is finite, so
      // only the shadow can swallow a whole tail. The class at the apex's
      // own rim vertex stands for rays running out just below it, on the
      // far side of the apex, so the apex vertex itself never qualifies.
      if (F.end == TreeBuilding::kNone) return false;
      return x.id != F.origin && shadow_contains(F, x.id);
  }
  return false;
}

TreePoint TreeBoundary::retract(const TreeApartment& A, size_t c,
                                const TreePoint& x) const {
  check_point(x);
  const size_t ic = t_->apartment_position(A, c);
  if (ic == TreeBuilding::kNone)
    throw std::invalid_argument("center must be a chamber of the apartment");
  if (x.kind == TreePoint::chamber)
    return {TreePoint::chamber, t_->retract(A, c, x.id)};

  // Attach vertex: the apartment vertex nearest to x. The geodesic from x
  // to any apartment vertex enters the apartment there, so it is unique.
  size_t iw = 0;
  size_t best = t_->vertex_distance(x.id, A.verts[0]);
  for (size_t j = 1; j < A.verts.size(); ++j) {
    const size_t d = t_->vertex_distance(x.id, A.verts[j]);
    if (d < best) {
      best = d;
      iw = j;
    }
  }

  if (x.kind == TreePoint::vertex) {
    if (best == 0) return x;
    // Fold the branch at the attach vertex away from the center.
    if (ic >= iw) {
      if (best > iw)
        throw WindowExhausted("apartment ends before the image");
      return {TreePoint::vertex, A.verts[iw - best]};
    }
    if (iw + best >= A.verts.size())
      throw WindowExhausted("apartment ends before the image");
    return {TreePoint::vertex, A.verts[iw + best]};
  }

  // End: already an end of A stays put, otherwise the class folds onto the
  // end of A on the far side of the attach vertex from the center.
  if (x.id == A.b1 || x.id == A.b2) return x;
  return {TreePoint::end, ic >= iw ? A.b1 : A.b2};
}

size_t TreeBoundary::facade_class_count(const BuildingCone& F) const {
  check_cone(F);
  if (F.end == TreeBuilding::kNone)
    throw std::invalid_argument("facade of the trivial direction is the building");
  std::vector<BuildingCone> reps;
  for (size_t v = 0; v < t_->n_vertices(); ++v) {
    if (v == F.end) continue;
    const BuildingCone G = cone(v, F.end);
    bool seen = false;
    for (const BuildingCone& R : reps)
      if (cone_equiv(R, G)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(G);
  }
  return reps.size();
}

void ThinBoundary::check_cone(const BuildingCone& F) const {
  if (F.model != ModelKind::thin) throw ModelMismatch();
  ap_->fan().index_of(F.affine.direction);
  if (F.affine.vertex.size() != ap_->fan().n)
    throw std::invalid_argument("cone vertex has the wrong dimension");
}

BuildingCone ThinBoundary::cone(const AffineCone& f) const {
  BuildingCone F;
  F.model = ModelKind::thin;
  F.affine = f;
  check_cone(F);
  return F;
}

bool ThinBoundary::cone_equiv(const BuildingCone& F, const BuildingCone& G) const {
  check_cone(F);
  check_cone(G);
  return ap_->classify(F.affine) == ap_->classify(G.affine);
}

bool ThinBoundary::in_neighborhood(const ApartmentPoint& x, const BuildingCone& F,
                                   const Rat& r) const {
  check_cone(F);
  return ap_->in_neighborhood(x, Neighborhood{F.affine, r});
}

const Facade& ThinBoundary::facade_of(const BuildingCone& F) const {
  check_cone(F);
  return ap_->facade(F.affine.direction);
}

BoundaryFacadeSet bordered_set(const RootSystem& rs, const WeylGroup& g,
                               const Fan& fan, size_t ci) {
  BoundaryFacadeSet out;
  out.base_index = ci;
  out.facade = build_facade_fan(rs, g, fan, ci);
  for (const auto& [amb, qid] : out.facade.chi) {
    out.members.push_back(amb);
    out.images.push_back(qid);
  }

  if (out.members != bordering_cones(fan, ci))
    throw std::logic_error("facade pairing misses a bordered cone");
  if (out.images.size() != out.facade.fan.cones.size())
    throw std::logic_error("facade pairing is not onto");
  const std::set<std::uint64_t> distinct(out.images.begin(), out.images.end());
  if (distinct.size() != out.images.size())
    throw std::logic_error("facade pairing is not injective");

  for (size_t i = 0; i < out.members.size(); ++i)
    for (size_t j = 0; j < out.members.size(); ++j) {
      if (i == j) continue;
      const bool amb = cone_within_closure(fan.cones[out.members[i]],
                                           fan.cones[out.members[j]]);
      const bool img = cone_within_closure(out.facade.fan.cone(out.images[i]),
                                           out.facade.fan.cone(out.images[j]));
      if (amb != img)
        throw std::logic_error("facade pairing breaks the face order");
    }

  for (size_t i = 0; i < out.members.size(); ++i)
    if (out.members[i] == ci &&
        out.facade.fan.cone(out.images[i]).span_dim != 0)
      throw std::logic_error("base cone missed the origin stratum");
  return out;
}

}  // namespace chambrier
