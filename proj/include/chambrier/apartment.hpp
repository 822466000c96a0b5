#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chambrier/cone.hpp"
#include "chambrier/core_facade.hpp"
#include "chambrier/fan.hpp"
#include "chambrier/root_system.hpp"
#include "chambrier/weyl.hpp"

namespace chambrier {

// Affine cone: a vertex plus a direction cone taken from a fixed fan.
struct AffineCone {
  RatVec vertex;
  std::uint64_t direction = 0;
};

// Point of the compactified apartment. Interior points have the origin cone
// as direction and their own coordinates; boundary points carry exact
// coordinates in the facade of their direction cone. Two affine cones with
// the same direction represent the same point exactly when their vertices
// agree in the facade, so equality is componentwise.
struct ApartmentPoint {
  std::uint64_t direction = 0;
  RatVec coords;
  bool operator==(const ApartmentPoint&) const = default;
};

// Closed gram-ball of the given radius around an affine cone.
struct Neighborhood {
  AffineCone base;
  Rat radius;  // positive
};

// Affine symmetry x -> m x + shift whose linear part lies in the Weyl group.
struct AffineMap {
  Mat m;
  RatVec shift;
};

struct ZeroDirection : std::invalid_argument {
  ZeroDirection() : std::invalid_argument("ray direction must be nonzero") {}
};

// The compactified apartment of a pointed, group-stable fan. Facades and
// cores of every direction cone are precomputed, so all operations are pure
// and the object is safe to share between threads.
class Apartment {
 public:
  // Requires a fan satisfying the structural hypotheses; additionally every
  // cone must be pointed (contain no affine line), otherwise vertices of
  // affine cones are not well defined and construction fails loudly.
  Apartment(const RootSystem& rs, const WeylGroup& g, Fan fan);

  const RootSystem& root_system() const { return rs_; }
  const WeylGroup& group() const { return g_; }
  const Fan& fan() const { return fan_; }
  const Facade& facade(std::uint64_t direction) const;
  const Cone& core(std::uint64_t direction) const;

  // The class of an affine cone: its facade projection.
  ApartmentPoint classify(const AffineCone& f) const;

  // Canonical representative: the unique vertex inside the gram-orthogonal
  // complement of the direction span.
  AffineCone representative(const ApartmentPoint& p) const;

  // Limit of x + t v as t grows: the class of x shifted by the cone
  // containing v. Forms vanishing on that cone are constant along the ray
  // and forms positive on it diverge, which is exactly the convergence
  // criterion for boundary points.
  ApartmentPoint ray_limit(const RatVec& x, const RatVec& v) const;

  // Does some representative of p lie inside base + ball? Decided exactly.
  bool in_neighborhood(const ApartmentPoint& p, const Neighborhood& nb) const;

  // The unique continuous extension of the affine map to the boundary:
  // [f] -> [w(f)].
  ApartmentPoint extended_action(const AffineMap& w, const ApartmentPoint& p) const;

 private:
  RootSystem rs_;
  WeylGroup g_;
  Fan fan_;
  std::vector<Facade> facades_;
  std::vector<CoreData> cores_;
};

}  // namespace chambrier
