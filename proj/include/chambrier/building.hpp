#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chambrier/apartment.hpp"
#include "chambrier/core_facade.hpp"
#include "chambrier/tree.hpp"

namespace chambrier {

// Comparing cones that live in different ambient models.
struct ModelMismatch : std::invalid_argument {
  ModelMismatch() : std::invalid_argument("cones live in different models") {}
};

enum class ModelKind { tree, thin };

// A cone of the bordered building, identified by its core. On the tree the
// core is a geodesic ray (apex vertex toward an end) or a single vertex; in
// the thin model the cone is an affine cone of the lone apartment and is its
// own core bearer.
struct BuildingCone {
  ModelKind model = ModelKind::tree;
  size_t origin = 0;                  // tree: apex vertex
  size_t end = TreeBuilding::kNone;   // tree: end, kNone for a point cone
  AffineCone affine;                  // thin
};

// A point of the bordered tree: an interior simplex or an end class.
struct TreePoint {
  enum Kind { vertex, chamber, end };
  Kind kind = vertex;
  size_t id = 0;
  bool operator==(const TreePoint&) const = default;
};

// The bordered tree: interior simplices plus one class per end. Cones are
// geodesic rays; two rays fall in the same boundary class exactly when they
// are parallel and meet, which window ends make decidable. Rank one leaves
// every ray equal to its own core (no vector symmetry fixes a half line), so
// the cone's point set is the ray itself; the fattened sets behind an apex
// are what spread into the branches.
class TreeBoundary {
 public:
  explicit TreeBoundary(const TreeBuilding& t) : t_(&t) {}
  const TreeBuilding& tree() const { return *t_; }

  // Ray cone from an apex toward an end; validates like TreeBuilding::ray.
  BuildingCone cone(size_t origin, size_t end) const;
  // The singleton cone at a vertex.
  BuildingCone point_cone(size_t v) const;

  // Vertices of the cone itself: the geodesic from apex to end, or the
  // singleton. Every apartment through the whole core slices out exactly
  // this path, so the union over them adds nothing.
  std::vector<size_t> cone_vertices(const BuildingCone& F) const;
  // Interior simplex inside the cone; end inputs are rejected.
  bool cone_contains(const BuildingCone& F, const TreePoint& x) const;

  // Same end (point cones: never parallel to a ray, points compare equal
  // only to themselves through cone_equiv).
  bool parallel(const BuildingCone& F, const BuildingCone& G) const;
  // Same boundary class: parallel with nonempty intersection, computed
  // literally on the vertex paths.
  bool cone_equiv(const BuildingCone& F, const BuildingCone& G) const;

  std::vector<size_t> ends() const { return t_->boundary_vertices(); }

  // Apex-side membership for a vertex: in the component of the tree minus
  // the apex that contains the ray, the apex included.
  bool shadow_contains(const BuildingCone& F, size_t v) const;

  // Does some representative of x sit inside the shadow behind the apex
  // fattened by the radius-r ball around it? These sets shrink to the end
  // class as the apex recedes and r shrinks. For a point cone the shadow
  // degenerates to the apex and only the ball remains.
  //
  // The base of a ray is properly its initial closed edge, the smallest
  // piece whose pointwise fixator still pins down the whole ray; the apex
  // vertex alone admits a flip. We store the apex and recover the edge
  // from the end, so the fattened set is the union of the slices
  // [-r, forward) over the apartments through that first edge, which is
  // exactly the shadow plus the ball.
  bool in_neighborhood(const TreePoint& x, const BuildingCone& F,
                       size_t r) const;

  // The retraction onto A centered at its chamber c, extended to the ends:
  // an end off the apartment folds onto the end of A away from the center,
  // seen from the vertex where its ray attaches to A. Interior simplices
  // fold like TreeBuilding::retract and may run off the window.
  TreePoint retract(const TreeApartment& A, size_t c, const TreePoint& x) const;

  // Number of boundary classes among window rays parallel to F: the facade
  // of an end cone collapses to a single point.
  size_t facade_class_count(const BuildingCone& F) const;

 private:
  const TreeBuilding* t_;

  void check_cone(const BuildingCone& F) const;
  void check_point(const TreePoint& x) const;
};

// Thin model: the building is one apartment, so classes, neighborhoods and
// facades delegate to the apartment compactification.
class ThinBoundary {
 public:
  explicit ThinBoundary(const Apartment& ap) : ap_(&ap) {}
  const Apartment& apartment() const { return *ap_; }

  // An affine cone is its own building cone: the model has one apartment
  // and the identity is the only isomorphism fixing the core.
  BuildingCone cone(const AffineCone& f) const;

  bool cone_equiv(const BuildingCone& F, const BuildingCone& G) const;
  bool in_neighborhood(const ApartmentPoint& x, const BuildingCone& F,
                       const Rat& r) const;
  const Facade& facade_of(const BuildingCone& F) const;

 private:
  const Apartment* ap_;

  void check_cone(const BuildingCone& F) const;
};

// The boundary facade attached to a fan cone: every cone the base borders,
// paired with its image in the facade fan. Construction verifies that the
// pairing is a bijection, that it preserves the face order in both
// directions, and that the base itself lands on the origin stratum.
struct BoundaryFacadeSet {
  size_t base_index = 0;
  std::vector<size_t> members;        // ambient cone indices, base included
  FacadeFan facade;
  std::vector<std::uint64_t> images;  // facade fan cone id per member
};

BoundaryFacadeSet bordered_set(const RootSystem& rs, const WeylGroup& g,
                               const Fan& fan, size_t ci);

}  // namespace chambrier
