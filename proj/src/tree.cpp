#include "chambrier/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace chambrier {

TreeBuilding::TreeBuilding(size_t q, size_t radius) : q_(q), radius_(radius) {
  if (q < 1) throw std::invalid_argument("thickness must be at least one");
  verts_.push_back({0, kNone, 0, radius == 0, {1}});
  verts_.push_back({1, 0, 0, radius == 0, {0}});
  std::deque<size_t> queue{0, 1};
  while (!queue.empty()) {
    size_t v = queue.front();
    queue.pop_front();
    if (verts_[v].depth == radius_) continue;
    for (size_t j = 0; j < q_; ++j) {
      size_t w = verts_.size();
      verts_.push_back({1 - verts_[v].type, v, verts_[v].depth + 1,
                        verts_[v].depth + 1 == radius_, {v}});
      verts_[v].nbrs.push_back(w);
      queue.push_back(w);
    }
  }
}

void TreeBuilding::check_vertex(size_t v) const {
  if (v >= verts_.size()) throw std::invalid_argument("no such vertex");
}

void TreeBuilding::check_edge(size_t e) const {
  if (e + 1 >= verts_.size()) throw std::invalid_argument("no such chamber");
}

const TreeVertex& TreeBuilding::vertex(size_t v) const {
  check_vertex(v);
  return verts_[v];
}

std::pair<size_t, size_t> TreeBuilding::edge(size_t e) const {
  check_edge(e);
  if (e == 0) return {0, 1};
  return {verts_[e + 1].parent, e + 1};
}

std::vector<size_t> TreeBuilding::boundary_vertices() const {
  std::vector<size_t> out;
  for (size_t v = 0; v < verts_.size(); ++v)
    if (verts_[v].boundary) out.push_back(v);
  return out;
}

size_t TreeBuilding::edge_between(size_t a, size_t b) const {
  check_vertex(a);
  check_vertex(b);
  if (a > b) std::swap(a, b);
  if (a == 0 && b == 1) return 0;
  if (b >= 2 && verts_[b].parent == a) return b - 1;
  return kNone;
}

std::vector<size_t> TreeBuilding::panel_chambers(size_t v) const {
  check_vertex(v);
  std::vector<size_t> out;
  for (size_t u : verts_[v].nbrs) out.push_back(edge_between(v, u));
  return out;
}

std::vector<size_t> TreeBuilding::vertex_path(size_t a, size_t b) const {
  check_vertex(a);
  check_vertex(b);
  std::vector<size_t> pa{a}, pb{b};
  while (pa.back() != pb.back()) {
    size_t x = pa.back(), y = pb.back();
    if (verts_[x].depth > verts_[y].depth) {
      pa.push_back(verts_[x].parent);
    } else if (verts_[y].depth > verts_[x].depth) {
      pb.push_back(verts_[y].parent);
    } else if (verts_[x].depth > 0) {
      pa.push_back(verts_[x].parent);
      pb.push_back(verts_[y].parent);
    } else if (x == 1) {
      pa.push_back(0);
    } else {
      pb.push_back(0);
    }
  }
  for (size_t j = pb.size() - 1; j-- > 0;) pa.push_back(pb[j]);
  return pa;
}

size_t TreeBuilding::vertex_distance(size_t a, size_t b) const {
  return vertex_path(a, b).size() - 1;
}

size_t TreeBuilding::chamber_distance(size_t e, size_t f) const {
  check_edge(e);
  check_edge(f);
  if (e == f) return 0;
  auto [a, b] = edge(e);
  auto [c, d] = edge(f);
  size_t best = vertex_distance(a, c);
  best = std::min(best, vertex_distance(a, d));
  best = std::min(best, vertex_distance(b, c));
  best = std::min(best, vertex_distance(b, d));
  return best + 1;
}

std::vector<size_t> TreeBuilding::chamber_geodesic(size_t e, size_t f) const {
  check_edge(e);
  check_edge(f);
  if (e == f) return {e};
  auto [a, b] = edge(e);
  auto [c, d] = edge(f);
  size_t p = a, r = c, best = kNone;
  for (size_t pe : {a, b}) {
    for (size_t rf : {c, d}) {
      size_t dv = vertex_distance(pe, rf);
      if (best == kNone || dv < best) {
        best = dv;
        p = pe;
        r = rf;
      }
    }
  }
  std::vector<size_t> path = vertex_path(p, r);
  std::vector<size_t> out{e};
  for (size_t j = 0; j + 1 < path.size(); ++j)
    out.push_back(edge_between(path[j], path[j + 1]));
  out.push_back(f);
  return out;
}

TreeApartment TreeBuilding::apartment(size_t b1, size_t b2) const {
  check_vertex(b1);
  check_vertex(b2);
  if (!verts_[b1].boundary || !verts_[b2].boundary)
    throw std::invalid_argument("apartment ends must be boundary vertices");
  if (b1 == b2) throw std::invalid_argument("apartment ends must differ");
  TreeApartment A;
  A.b1 = b1;
  A.b2 = b2;
  A.verts = vertex_path(b1, b2);
  for (size_t j = 0; j + 1 < A.verts.size(); ++j)
    A.edges.push_back(edge_between(A.verts[j], A.verts[j + 1]));
  return A;
}

size_t TreeBuilding::apartment_position(const TreeApartment& A,
                                        size_t e) const {
  for (size_t j = 0; j < A.edges.size(); ++j)
    if (A.edges[j] == e) return j;
  return kNone;
}

size_t TreeBuilding::retract(const TreeApartment& A, size_t c,
                             size_t x) const {
  check_edge(c);
  check_edge(x);
  size_t ic = apartment_position(A, c);
  if (ic == kNone)
    throw std::invalid_argument("retraction center not in the apartment");
  if (apartment_position(A, x) != kNone) return x;
  size_t d = chamber_distance(c, x);
  // The geodesic from c to x leaves through exactly one endpoint of c; the
  // bipartite types force the two endpoint distances to differ.
  auto [xa, xb] = edge(x);
  size_t ea = A.verts[ic], eb = A.verts[ic + 1];
  size_t da = std::min(vertex_distance(ea, xa), vertex_distance(ea, xb));
  size_t db = std::min(vertex_distance(eb, xa), vertex_distance(eb, xb));
  if (da == db) throw std::logic_error("chamber equidistant from a panel pair");
  if (da < db) {
    if (d > ic) throw WindowExhausted("apartment ends before the image");
    return A.edges[ic - d];
  }
  if (ic + d >= A.edges.size())
    throw WindowExhausted("apartment ends before the image");
  return A.edges[ic + d];
}

TreeRay TreeBuilding::ray(size_t origin, size_t boundary) const {
  check_vertex(origin);
  check_vertex(boundary);
  if (!verts_[boundary].boundary)
    throw std::invalid_argument("ray must aim at a boundary vertex");
  if (origin == boundary)
    throw std::invalid_argument("ray needs a nonzero length");
  return {origin, boundary};
}

TreeBuilding::CommonApartment TreeBuilding::rays_common_apartment(
    const TreeRay& r1, const TreeRay& r2) const {
  ray(r1.origin, r1.boundary);
  ray(r2.origin, r2.boundary);
  std::vector<size_t> p1 = vertex_path(r1.origin, r1.boundary);
  std::vector<size_t> p2 = vertex_path(r2.origin, r2.boundary);
  CommonApartment out;
  if (r1.boundary == r2.boundary) {
    // Cofinal common part: the longest shared suffix. It holds at least the
    // boundary vertex and its parent, since the window end has degree one.
    size_t j = 0;
    while (j < p1.size() && j < p2.size() &&
           p1[p1.size() - 1 - j] == p2[p2.size() - 1 - j])
      ++j;
    std::vector<size_t> sub(p1.end() - j, p1.end());
    out.sub1 = sub;
    out.sub2 = sub;
    size_t m = sub.front();
    if (verts_[m].boundary) {
      out.apt = apartment(m, r1.boundary);
    } else {
      // Extend backwards away from the end, always through the smallest
      // unused neighbor; a non-backtracking walk in a tree ends on the
      // boundary.
      std::vector<size_t> back;
      size_t prev = sub[1], cur = m;
      while (!verts_[cur].boundary) {
        size_t next = kNone;
        for (size_t u : verts_[cur].nbrs)
          if (u != prev) {
            next = u;
            break;
          }
        if (next == kNone) throw std::logic_error("interior vertex of degree one");
        back.push_back(next);
        prev = cur;
        cur = next;
      }
      out.apt = apartment(cur, r1.boundary);
    }
  } else {
    out.apt = apartment(r1.boundary, r2.boundary);
    std::set<size_t> on(out.apt.verts.begin(), out.apt.verts.end());
    auto suffix_on = [&](const std::vector<size_t>& p) {
      size_t j = 0;
      while (j < p.size() && on.count(p[p.size() - 1 - j])) ++j;
      return std::vector<size_t>(p.end() - j, p.end());
    };
    out.sub1 = suffix_on(p1);
    out.sub2 = suffix_on(p2);
  }
  return out;
}

bool TreeBuilding::parallel(const TreeRay& r1, const TreeRay& r2) const {
  ray(r1.origin, r1.boundary);
  ray(r2.origin, r2.boundary);
  return r1.boundary == r2.boundary;
}

std::string TreeBuilding::serialize() const {
  std::ostringstream os;
  os << "tree q=" << q_ << " radius=" << radius_ << " vertices="
     << n_vertices() << " edges=" << n_edges() << "\n";
  for (size_t v = 0; v < verts_.size(); ++v) {
    os << "v " << v << " type=" << verts_[v].type << " depth="
       << verts_[v].depth << " boundary=" << (verts_[v].boundary ? 1 : 0)
       << " nbrs=";
    for (size_t j = 0; j < verts_[v].nbrs.size(); ++j) {
      if (j) os << ",";
      os << verts_[v].nbrs[j];
    }
    os << "\n";
  }
  return os.str();
}

std::string TreeBuilding::to_dot() const {
  std::ostringstream os;
  os << "graph tree {\n";
  for (size_t v = 0; v < verts_.size(); ++v) {
    os << "  v" << v << " [label=\"" << v << ":" << verts_[v].type << "\"";
    if (verts_[v].boundary) os << " shape=box";
    os << "];\n";
  }
  for (size_t e = 0; e < n_edges(); ++e) {
    auto [a, b] = edge(e);
    os << "  v" << a << " -- v" << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace chambrier
