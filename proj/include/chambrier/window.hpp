#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chambrier/fan.hpp"
#include "chambrier/root_system.hpp"
#include "chambrier/weyl.hpp"

namespace chambrier {

// A computation needed a part of the affine complex that lies outside the
// finite window. Thrown instead of ever returning a silently truncated
// answer.
struct WindowExhausted : std::runtime_error {
  explicit WindowExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

// Affine map x -> m x + t on coroot coordinates.
struct AffineMapQ {
  Mat m;
  RatVec t;
};

AffineMapQ affine_identity(size_t n);
// compose(f, g)(x) = f(g(x)).
AffineMapQ affine_compose(const AffineMapQ& f, const AffineMapQ& g);
AffineMapQ affine_inverse(const AffineMapQ& f);
RatVec affine_apply(const AffineMapQ& f, const RatVec& x);
bool affine_equal(const AffineMapQ& a, const AffineMapQ& b);

// Panel types crossed by a chamber path, in crossing order.
struct GalleryWord {
  std::vector<size_t> letters;
  bool operator==(const GalleryWord&) const = default;
};

// A relatively open face of the affine wall arrangement, encoded against the
// positive roots: kind[i] is '0' when root i is constant at the integer
// level value[i] on the face, 'o' when it ranges inside the open strip
// (value[i], value[i] + 1). The face is exactly the solution set of these
// constraints, so the encoding is canonical.
struct AffineFacet {
  std::vector<char> kind;
  IntVec value;
  bool operator==(const AffineFacet&) const = default;
  bool operator<(const AffineFacet& o) const;
};

// One alcove of the window. floors[i] is the integer part of positive root i
// anywhere on the open alcove; the floor vector determines the alcove.
struct Alcove {
  IntVec floors;
  AffineMapQ map;    // takes the base alcove here
  size_t dist = 0;   // gallery distance from the base alcove
  // Per generator: adjacent alcove (kOutside when off-window), its floor
  // vector either way, and the panel wall crossed, as (root, level).
  std::vector<size_t> nbr;
  std::vector<IntVec> nbr_floors;
  std::vector<std::pair<size_t, Int>> walls;
  // Window facet ids of every face of the closed alcove, itself included.
  std::vector<size_t> face_ids;
};

// Closure of (base facet + direction cone), cut out by one integer bound per
// positive root and side: lo/hi absent when the direction cone makes the
// root unbounded on that side.
struct Chimney {
  size_t base = 0;
  std::uint64_t direction = 0;
  std::vector<std::optional<Int>> lo;
  std::vector<std::optional<Int>> hi;
};

struct Gallery {
  std::vector<size_t> alcoves;
  GalleryWord word;
};

// Finite ball of alcoves around the base alcove of an affine Coxeter
// complex, with the face lattice of the induced wall arrangement. Generators
// are the reflections in the walls of the base alcove: one per simple root,
// then one per diagram component through its highest root at level one.
// Alcove ids are breadth-first discovery order, facet ids first-discovery
// order; both are deterministic for a given (label, radius).
class AlcoveWindow {
 public:
  static constexpr size_t kOutside = static_cast<size_t>(-1);

  AlcoveWindow(const RootSystem& rs, size_t radius);

  const RootSystem& root_system() const { return rs_; }
  const WeylGroup& group() const { return group_; }
  // Fan of Weyl chambers and their faces at the origin; chimney directions
  // are cones of this fan.
  const Fan& direction_fan() const { return vfan_; }
  size_t radius() const { return radius_; }

  size_t size() const { return alcoves_.size(); }
  const Alcove& alcove(size_t i) const { return alcoves_.at(i); }
  std::optional<size_t> find_alcove(const IntVec& floors) const;
  // Interior point of the base alcove used to track floors.
  const RatVec& base_point() const { return x0_; }

  size_t n_generators() const { return gens_.size(); }
  const AffineMapQ& generator(size_t g) const { return gens_.at(g); }
  // Wall of the base alcove fixed by generator g, as (root, level).
  const std::pair<size_t, Int>& generator_wall(size_t g) const {
    return gen_walls_.at(g);
  }

  // Every floor seen in the window lies strictly inside [-bound, bound).
  Int bound() const { return bound_; }
  // Side of the wall {root = k} the open alcove lies on: '+' or '-'.
  char sign(size_t alcove, size_t root, const Int& k) const;

  size_t n_facets() const { return facets_.size(); }
  const AffineFacet& facet(size_t f) const { return facets_.at(f); }
  size_t facet_dim(size_t f) const { return facet_dims_.at(f); }
  const RatVec& facet_point(size_t f) const { return facet_points_.at(f); }
  // Window alcoves whose closure contains the facet, ascending.
  const std::vector<size_t>& facet_alcoves(size_t f) const {
    return facet_alcoves_.at(f);
  }
  // False when some alcove outside the window also touches the facet; ops
  // that need the facet's whole chamber set refuse to run then.
  bool facet_star_complete(size_t f) const { return star_ok_.at(f); }
  std::optional<size_t> find_facet(const AffineFacet& enc) const;
  size_t facet_of_point(const RatVec& x) const;
  bool facet_in_alcove_closure(size_t f, size_t alcove) const;
  // inner lies in the closure of outer.
  bool facet_within(size_t inner, size_t outer) const;

  // Number of walls separating the two alcoves; equals the gallery distance
  // in the full complex.
  size_t separation(size_t a, size_t b) const;

  // Lexicographically smallest minimal gallery from c to d that stays inside
  // the window, as the word of panel types crossed. Throws WindowExhausted
  // when every minimal gallery leaves the window.
  GalleryWord minimal_gallery(size_t c, size_t d) const;
  std::vector<size_t> gallery_alcoves(size_t start, const GalleryWord& w) const;
  // Chamber-valued distance: the map taking c to d, i.e. map_c^{-1} o map_d.
  AffineMapQ delta(size_t c, size_t d) const;
  AffineMapQ word_product(const GalleryWord& w) const;

  // Smallest set of alcoves containing E that is an intersection of closed
  // half complexes; concretely the floor-vector box spanned by E. Throws
  // WindowExhausted when the box is not wholly inside the window.
  std::vector<size_t> enclos(const std::vector<size_t>& E) const;

  // Projection of facet d onto facet c: the unique maximal face of the final
  // chamber of a minimal gallery from (a chamber containing d) to (a chamber
  // containing c) that lies on every wall containing both c and d.
  size_t proj(size_t c, size_t d) const;

  Chimney chimney(size_t base_facet, std::uint64_t direction_id) const;
  bool chimney_contains(const Chimney& ch, const RatVec& x) const;
  // Recovers the direction cone from the bound pattern alone.
  std::uint64_t chimney_direction(const Chimney& ch) const;
  // A point of the base facet and a direction interior to the direction
  // cone; the ray stays inside the chimney.
  std::pair<RatVec, RatVec> characteristic_ray(const Chimney& ch) const;

  // Tense gallery from c0 covering the first `segments` arrangement segments
  // of the ray s + t v, t >= 0. s must lie in the closure of c0 and v must
  // be nonzero. Every chamber's closure meets the ray and no wall is crossed
  // twice; both are checked.
  Gallery gallery_along_ray(size_t c0, const RatVec& s, const RatVec& v,
                            size_t segments) const;
  bool closure_meets_ray(size_t alcove, const RatVec& s, const RatVec& v) const;

 private:
  RootSystem rs_;
  WeylGroup group_;
  Fan vfan_;
  size_t radius_ = 0;
  RatVec x0_;
  std::vector<AffineMapQ> gens_;
  std::vector<std::pair<size_t, Int>> gen_walls_;
  std::vector<Alcove> alcoves_;
  std::map<IntVec, size_t> alcove_index_;
  Int bound_;
  std::vector<AffineFacet> facets_;
  std::vector<size_t> facet_dims_;
  std::vector<RatVec> facet_points_;
  std::vector<std::vector<size_t>> facet_alcoves_;
  std::vector<char> star_ok_;
  std::map<AffineFacet, size_t> facet_index_;

  IntVec floors_of(const AffineMapQ& map) const;
  AffineFacet encode_point(const RatVec& x) const;
  void build_alcoves();
  void build_facets();
  void check_alcove(size_t i) const;
  void check_facet(size_t f) const;
  bool floors_in_closure(const AffineFacet& enc, const IntVec& floors) const;
  // Depth-first search for the lexicographically smallest in-window minimal
  // gallery; when star is given, every chamber must keep that facet in its
  // closure.
  bool gallery_dfs(size_t cur, size_t d, std::optional<size_t> star,
                   std::vector<char>& dead, std::vector<size_t>& letters) const;
  GalleryWord star_gallery(size_t c, size_t d, size_t star) const;
};

}  // namespace chambrier
