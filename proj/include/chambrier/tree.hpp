#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chambrier/window.hpp"

namespace chambrier {

// One vertex of the truncated tree. Panels are vertices, chambers are edges.
struct TreeVertex {
  int type = 0;       // 0 or 1; adjacent vertices differ
  size_t parent = 0;  // kNone for vertex 0
  size_t depth = 0;   // distance to the nearer base edge endpoint
  bool boundary = false;
  std::vector<size_t> nbrs;  // ascending
};

// Geodesic path between two boundary vertices: the window part of an
// apartment. edges[j] joins verts[j] and verts[j + 1].
struct TreeApartment {
  size_t b1 = 0;
  size_t b2 = 0;
  std::vector<size_t> verts;
  std::vector<size_t> edges;
};

// Geodesic from a vertex toward a boundary vertex, standing for the ray to
// the end behind that boundary vertex.
struct TreeRay {
  size_t origin = 0;
  size_t boundary = 0;
};

// Ball of radius `radius` in the tree where every panel lies in q + 1
// chambers: the rank-one thick affine building. Vertex ids are level order,
// so the tree of radius R is an id-for-id prefix of the tree of radius
// R + 1; assertions about ends can be replayed one radius up.
class TreeBuilding {
 public:
  static constexpr size_t kNone = static_cast<size_t>(-1);

  TreeBuilding(size_t q, size_t radius);

  size_t q() const { return q_; }
  size_t radius() const { return radius_; }
  size_t n_vertices() const { return verts_.size(); }
  size_t n_edges() const { return verts_.size() - 1; }
  const TreeVertex& vertex(size_t v) const;
  // Endpoints of a chamber, ascending. Chamber 0 is the base edge (0, 1);
  // chamber e >= 1 joins vertex e + 1 to its parent.
  std::pair<size_t, size_t> edge(size_t e) const;
  size_t base_chamber() const { return 0; }
  std::vector<size_t> boundary_vertices() const;

  size_t edge_between(size_t a, size_t b) const;  // kNone when not adjacent
  std::vector<size_t> panel_chambers(size_t v) const;

  size_t vertex_distance(size_t a, size_t b) const;
  std::vector<size_t> vertex_path(size_t a, size_t b) const;
  size_t chamber_distance(size_t e, size_t f) const;
  // The chambers of the unique minimal gallery from e to f.
  std::vector<size_t> chamber_geodesic(size_t e, size_t f) const;

  TreeApartment apartment(size_t b1, size_t b2) const;
  // Index of the chamber in the apartment's edge list, kNone when absent.
  size_t apartment_position(const TreeApartment& A, size_t e) const;

  // Retraction onto A centered at its chamber c: folds the tree onto the
  // apartment so that distances to c are preserved. Throws WindowExhausted
  // when the image falls off the truncated apartment.
  size_t retract(const TreeApartment& A, size_t c, size_t x) const;

  TreeRay ray(size_t origin, size_t boundary) const;

  struct CommonApartment {
    std::vector<size_t> sub1;  // subray of the first ray, origin side first
    std::vector<size_t> sub2;
    TreeApartment apt;
  };
  // Subrays of the two rays that lie in one common apartment, with that
  // apartment. Rays toward the same end share a cofinal subray; rays toward
  // different ends donate subrays to the geodesic joining the ends.
  CommonApartment rays_common_apartment(const TreeRay& r1,
                                        const TreeRay& r2) const;

  // Whether the two rays point to the same end. Window ends are boundary
  // vertices; stability under enlarging the radius is checked by rebuilding.
  bool parallel(const TreeRay& r1, const TreeRay& r2) const;

  std::string serialize() const;
  std::string to_dot() const;

 private:
  size_t q_ = 0;
  size_t radius_ = 0;
  std::vector<TreeVertex> verts_;

  void check_vertex(size_t v) const;
  void check_edge(size_t e) const;
};

}  // namespace chambrier
