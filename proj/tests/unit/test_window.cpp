#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "chambrier/window.hpp"

using namespace chambrier;

namespace {

RatVec rv(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

IntVec iv(std::initializer_list<int> xs) {
  IntVec v;
  for (int x : xs) v.push_back(Int(x));
  return v;
}

// Shortest in-window path length over the adjacency graph, by plain
// breadth-first search; independent of floor arithmetic.
size_t bfs_distance(const AlcoveWindow& win, size_t a, size_t b) {
  std::vector<size_t> dist(win.size(), AlcoveWindow::kOutside);
  std::deque<size_t> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    if (cur == b) return dist[cur];
    for (size_t nb : win.alcove(cur).nbr) {
      if (nb == AlcoveWindow::kOutside || dist[nb] != AlcoveWindow::kOutside)
        continue;
      dist[nb] = dist[cur] + 1;
      queue.push_back(nb);
    }
  }
  return AlcoveWindow::kOutside;
}

// Every minimal word from c to d that stays in the window, by depth-first
// search over separating panels. Sets saw_outside when some minimal
// continuation was cut off by the window.
void all_minimal_words(const AlcoveWindow& win, size_t cur, size_t d,
                       std::vector<size_t>& prefix,
                       std::vector<std::vector<size_t>>& out,
                       bool& saw_outside) {
  if (cur == d) {
    out.push_back(prefix);
    return;
  }
  const Alcove& al = win.alcove(cur);
  const IntVec& fd = win.alcove(d).floors;
  for (size_t g = 0; g < win.n_generators(); ++g) {
    auto [i, k] = al.walls[g];
    if ((al.floors[i] >= k) == (fd[i] >= k)) continue;
    if (al.nbr[g] == AlcoveWindow::kOutside) {
      saw_outside = true;
      continue;
    }
    prefix.push_back(g);
    all_minimal_words(win, al.nbr[g], d, prefix, out, saw_outside);
    prefix.pop_back();
  }
}

// Hull of E as the intersection of every closed half complex {sign * root
// >= level} that contains E, scanning all levels the window can see.
std::vector<size_t> half_space_hull(const AlcoveWindow& win,
                                    const std::vector<size_t>& E) {
  const RootSystem& rs = win.root_system();
  Int K = win.bound() + 2;
  std::vector<char> keep(win.size(), 1);
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
    for (int sgn : {+1, -1}) {
      for (Int k = -K; k <= K; ++k) {
        // {sgn * root_i >= k} holds on an open alcove with floor f exactly
        // when sgn = + and f >= k, or sgn = - and -(f + 1) >= k.
        auto inside = [&](size_t a) {
          const Int& f = win.alcove(a).floors[i];
          return sgn > 0 ? f >= k : -(f + 1) >= k;
        };
        bool contains = true;
        for (size_t e : E) contains = contains && inside(e);
        if (!contains) continue;
        for (size_t a = 0; a < win.size(); ++a)
          if (!inside(a)) keep[a] = 0;
      }
    }
  }
  std::vector<size_t> out;
  for (size_t a = 0; a < win.size(); ++a)
    if (keep[a]) out.push_back(a);
  return out;
}

// Hull of E as the fixpoint of adding every chamber through which some
// minimal gallery between two members passes. A chamber z lies on such a
// gallery exactly when the separations add up.
std::vector<size_t> gallery_hull(const AlcoveWindow& win,
                                 const std::vector<size_t>& E) {
  std::set<size_t> hull(E.begin(), E.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<size_t> cur(hull.begin(), hull.end());
    for (size_t a : cur) {
      for (size_t b : cur) {
        for (size_t z = 0; z < win.size(); ++z) {
          if (hull.count(z)) continue;
          if (win.separation(a, z) + win.separation(z, b) ==
              win.separation(a, b)) {
            hull.insert(z);
            grew = true;
          }
        }
      }
    }
  }
  return {hull.begin(), hull.end()};
}

// Projection of facet d onto facet c by its gate description: among the
// chambers around c, those nearest to the chambers around d all share one
// maximal face over c, and that face is the projection.
size_t proj_oracle(const AlcoveWindow& win, size_t c, size_t d) {
  const auto& stc = win.facet_alcoves(c);
  const auto& std_ = win.facet_alcoves(d);
  size_t best = AlcoveWindow::kOutside;
  std::vector<size_t> nearest;
  for (size_t x : stc) {
    size_t dist = AlcoveWindow::kOutside;
    for (size_t y : std_) dist = std::min(dist, win.separation(x, y));
    if (best == AlcoveWindow::kOutside || dist < best) {
      best = dist;
      nearest.assign(1, x);
    } else if (dist == best) {
      nearest.push_back(x);
    }
  }
  size_t out = AlcoveWindow::kOutside;
  for (size_t f : win.alcove(nearest[0]).face_ids) {
    if (!win.facet_within(c, f)) continue;
    bool shared = true;
    for (size_t x : nearest) shared = shared && win.facet_in_alcove_closure(f, x);
    if (!shared) continue;
    if (out == AlcoveWindow::kOutside ||
        win.facet_dim(f) > win.facet_dim(out))
      out = f;
  }
  REQUIRE(out != AlcoveWindow::kOutside);
  return out;
}

// Integer bound data of one closed half complex {sgn * root >= k}.
struct HalfSpace {
  size_t root;
  int sgn;
  Int k;
};

// All half complexes containing facet + direction cone, found by refuting
// feasibility of a point of the closure on the wrong side.
std::vector<HalfSpace> containing_half_spaces(const AlcoveWindow& win,
                                              size_t base,
                                              const Cone& dir, const Int& K) {
  const RootSystem& rs = win.root_system();
  const size_t n = rs.rank;
  std::vector<HalfSpace> out;
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
    const RatVec& form = rs.positive_roots[i];
    for (int sgn : {+1, -1}) {
      for (Int k = -K; k <= K; ++k) {
        // Violation point: p in the closed star of the base facet's own
        // closure, v in the closed cone, with sgn*form(p + v) < k.
        LinSys sys(2 * n);
        size_t a0 = win.facet_alcoves(base).front();
        const AffineFacet& enc = win.facet(base);
        for (size_t j = 0; j < rs.positive_roots.size(); ++j) {
          RatVec row(2 * n, Rat(0));
          for (size_t t = 0; t < n; ++t) row[t] = rs.positive_roots[j][t];
          if (enc.kind[j] == '0') {
            sys.add_eq(row, Rat(-enc.value[j]));
          } else {
            sys.add_ge(row, Rat(-enc.value[j]));
            sys.add_ge(vec_scale(Rat(-1), row), Rat(enc.value[j] + 1));
          }
        }
        (void)a0;
        for (const IntVec& eq : dir.eq) {
          RatVec row(2 * n, Rat(0));
          for (size_t t = 0; t < n; ++t) row[n + t] = Rat(eq[t]);
          sys.add_eq(row, Rat(0));
        }
        for (const IntVec& gt : dir.gt) {
          RatVec row(2 * n, Rat(0));
          for (size_t t = 0; t < n; ++t) row[n + t] = Rat(gt[t]);
          sys.add_ge(row, Rat(0));
        }
        RatVec bad(2 * n, Rat(0));
        for (size_t t = 0; t < n; ++t) {
          bad[t] = Rat(-sgn) * form[t];
          bad[n + t] = Rat(-sgn) * form[t];
        }
        sys.add_gt(bad, Rat(k));
        if (!lin_feasible(sys)) out.push_back({i, sgn, k});
      }
    }
  }
  return out;
}

bool oracle_chimney_contains(const AlcoveWindow& win,
                             const std::vector<HalfSpace>& cuts,
                             const RatVec& x) {
  for (const HalfSpace& h : cuts) {
    Rat val = vec_dot(win.root_system().positive_roots[h.root], x);
    if (Rat(h.sgn) * val < Rat(h.k)) return false;
  }
  return true;
}

// Closed alcove meets the ray, decided by raw feasibility over (x, t).
bool oracle_meets_ray(const AlcoveWindow& win, size_t a, const RatVec& s,
                      const RatVec& v) {
  const RootSystem& rs = win.root_system();
  const size_t n = rs.rank;
  LinSys sys(n + 1);
  const IntVec& fl = win.alcove(a).floors;
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
    RatVec row(n + 1, Rat(0));
    for (size_t t = 0; t < n; ++t) row[t] = rs.positive_roots[i][t];
    sys.add_ge(row, Rat(-fl[i]));
    sys.add_ge(vec_scale(Rat(-1), row), Rat(fl[i] + 1));
  }
  for (size_t j = 0; j < n; ++j) {
    RatVec row(n + 1, Rat(0));
    row[j] = Rat(1);
    row[n] = -v[j];
    sys.add_eq(row, -s[j]);
  }
  RatVec tpos(n + 1, Rat(0));
  tpos[n] = Rat(1);
  sys.add_ge(tpos, Rat(0));
  return lin_feasible(sys);
}

std::uint64_t cone_with_signs(const AlcoveWindow& win,
                              const std::vector<char>& pattern) {
  for (const Cone& c : win.direction_fan().cones) {
    bool ok = true;
    for (size_t i = 0; i < pattern.size() && ok; ++i)
      ok = sign_on_cone(c, win.root_system().positive_roots[i]) == pattern[i];
    if (ok) return c.id;
  }
  REQUIRE(false);
  return 0;
}

}  // namespace

TEST_CASE("window structure and adjacency") {
  struct Probe {
    const char* label;
    size_t radius;
  };
  for (Probe p : {Probe{"A1", 4}, Probe{"A2", 3}, Probe{"B2", 2},
                  Probe{"A1xA1", 3}, Probe{"G2", 2}, Probe{"A1xA2", 2}}) {
    AlcoveWindow win(build_root_system(p.label), p.radius);
    CAPTURE(p.label);
    const Alcove& base = win.alcove(0);
    CHECK(base.dist == 0);
    for (const Int& f : base.floors) CHECK(f == 0);
    for (size_t a = 0; a < win.size(); ++a) {
      const Alcove& al = win.alcove(a);
      CHECK(al.dist == win.separation(0, a));
      CHECK(al.dist <= p.radius);
      CHECK(win.find_alcove(al.floors) == a);
      std::set<std::pair<size_t, Int>> walls;
      for (size_t g = 0; g < win.n_generators(); ++g) {
        // Each panel moves exactly one root floor by one.
        size_t moved = 0;
        for (size_t i = 0; i < al.floors.size(); ++i) {
          if (al.nbr_floors[g][i] == al.floors[i]) continue;
          ++moved;
          CHECK(al.walls[g].first == i);
        }
        CHECK(moved == 1);
        CHECK(walls.insert(al.walls[g]).second);
        size_t nb = al.nbr[g];
        if (nb != AlcoveWindow::kOutside) {
          CHECK(win.alcove(nb).nbr[g] == a);
          CHECK(win.alcove(nb).floors == al.nbr_floors[g]);
          CHECK(win.separation(a, nb) == 1);
        }
        auto [i, k] = al.walls[g];
        CHECK(win.sign(a, i, k) == (al.floors[i] >= k ? '+' : '-'));
        CHECK(k <= win.bound());
        CHECK(-win.bound() <= k);
      }
    }
  }
}

TEST_CASE("window sizes against floor counting") {
  // Alcoves of the rank two triangle complex correspond to floor triples
  // (f1, f2, f3) with f3 in {f1 + f2, f1 + f2 + 1}.
  for (size_t radius : {1u, 2u, 3u}) {
    AlcoveWindow win(build_root_system("A2"), radius);
    size_t expect = 0;
    int R = int(radius);
    for (int f1 = -R; f1 <= R; ++f1)
      for (int f2 = -R; f2 <= R; ++f2)
        for (int f3 = f1 + f2; f3 <= f1 + f2 + 1; ++f3)
          if (std::abs(f1) + std::abs(f2) + std::abs(f3) <= R) ++expect;
    CHECK(win.size() == expect);
  }
  // The product of two segments tiles by unit squares.
  AlcoveWindow sq(build_root_system("A1xA1"), 3);
  size_t expect = 0;
  for (int f1 = -3; f1 <= 3; ++f1)
    for (int f2 = -3; f2 <= 3; ++f2)
      if (std::abs(f1) + std::abs(f2) <= 3) ++expect;
  CHECK(sq.size() == expect);
  AlcoveWindow line(build_root_system("A1"), 4);
  CHECK(line.size() == 9);
}

TEST_CASE("window generators carry the base walls") {
  AlcoveWindow a2(build_root_system("A2"), 1);
  CHECK(a2.n_generators() == 3);
  CHECK(a2.generator_wall(0) == std::pair<size_t, Int>{0, Int(0)});
  CHECK(a2.generator_wall(1) == std::pair<size_t, Int>{1, Int(0)});
  // The affine generator reflects through the highest root at level one.
  auto [hi, level] = a2.generator_wall(2);
  CHECK(level == 1);
  CHECK(a2.root_system().positive_roots[hi] == rv({1, 1}));
  // Generators are involutions.
  for (size_t g = 0; g < a2.n_generators(); ++g) {
    AffineMapQ sq = affine_compose(a2.generator(g), a2.generator(g));
    CHECK(affine_equal(sq, affine_identity(2)));
  }
  // One affine generator per diagram component.
  AlcoveWindow mix(build_root_system("A1xA2"), 1);
  CHECK(mix.n_generators() == 5);
  CHECK(mix.generator_wall(3).second == 1);
  CHECK(mix.generator_wall(4).second == 1);
  AlcoveWindow g2(build_root_system("G2"), 1);
  CHECK(g2.n_generators() == 3);
  // The level one wall belongs to the root of greatest height.
  auto height = [&](const RatVec& form) {
    auto c = solve_linear(g2.root_system().cartan, form);
    REQUIRE(c);
    Rat h(0);
    for (const Rat& x : *c) h += x;
    return h;
  };
  Rat hroot = height(g2.root_system().positive_roots[g2.generator_wall(2).first]);
  for (const RatVec& form : g2.root_system().positive_roots)
    CHECK(height(form) <= hroot);
}

TEST_CASE("window construction is deterministic") {
  AlcoveWindow a(build_root_system("B2"), 2);
  AlcoveWindow b(build_root_system("B2"), 2);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(a.alcove(i).floors == b.alcove(i).floors);
  REQUIRE(a.n_facets() == b.n_facets());
  for (size_t f = 0; f < a.n_facets(); ++f) {
    CHECK(a.facet(f) == b.facet(f));
    CHECK(a.facet_alcoves(f) == b.facet_alcoves(f));
  }
}

TEST_CASE("facet table lists every face once") {
  AlcoveWindow win(build_root_system("A2"), 2);
  for (size_t a = 0; a < win.size(); ++a) {
    // A triangle has itself, three edges and three vertices.
    CHECK(win.alcove(a).face_ids.size() == 7);
    std::set<size_t> uniq(win.alcove(a).face_ids.begin(),
                          win.alcove(a).face_ids.end());
    CHECK(uniq.size() == 7);
    for (size_t f : win.alcove(a).face_ids)
      CHECK(win.facet_in_alcove_closure(f, a));
  }
  for (size_t f = 0; f < win.n_facets(); ++f) {
    CHECK(win.facet_of_point(win.facet_point(f)) == f);
    CHECK(win.facet_within(f, f));
    const auto& inc = win.facet_alcoves(f);
    CHECK(std::is_sorted(inc.begin(), inc.end()));
    for (size_t a = 0; a < win.size(); ++a) {
      bool listed = std::count(inc.begin(), inc.end(), a) > 0;
      CHECK(listed == win.facet_in_alcove_closure(f, a));
    }
    size_t zeros = 0;
    for (char k : win.facet(f).kind) zeros += k == '0';
    // Codimension is realized by the level walls.
    CHECK(win.facet_dim(f) + zeros >= win.root_system().rank);
  }
  AlcoveWindow sq(build_root_system("A1xA1"), 1);
  for (size_t a = 0; a < sq.size(); ++a)
    CHECK(sq.alcove(a).face_ids.size() == 9);
}

TEST_CASE("minimal galleries are minimal and multiply to the distance") {
  for (const char* label : {"A2", "B2"}) {
    AlcoveWindow win(build_root_system(label), label[0] == 'A' ? 3u : 2u);
    CAPTURE(label);
    for (size_t c = 0; c < win.size(); ++c) {
      for (size_t d = 0; d < win.size(); ++d) {
        size_t graph = bfs_distance(win, c, d);
        size_t sep = win.separation(c, d);
        if (graph == sep) {
          GalleryWord w = win.minimal_gallery(c, d);
          CHECK(w.letters.size() == sep);
          std::vector<size_t> seq = win.gallery_alcoves(c, w);
          CHECK(seq.front() == c);
          CHECK(seq.back() == d);
          for (size_t j = 0; j + 1 < seq.size(); ++j)
            CHECK(win.separation(seq[j + 1], d) == win.separation(seq[j], d) - 1);
          CHECK(affine_equal(win.word_product(w), win.delta(c, d)));
        } else {
          CHECK_THROWS_AS(win.minimal_gallery(c, d), WindowExhausted);
        }
      }
    }
  }
}

TEST_CASE("minimal galleries pick the first word") {
  AlcoveWindow win(build_root_system("A2"), 3);
  size_t probed = 0;
  for (size_t c = 0; c < win.size(); ++c) {
    for (size_t d = 0; d < win.size(); ++d) {
      std::vector<std::vector<size_t>> words;
      std::vector<size_t> prefix;
      bool saw_outside = false;
      all_minimal_words(win, c, d, prefix, words, saw_outside);
      if (saw_outside || words.empty()) continue;
      ++probed;
      GalleryWord w = win.minimal_gallery(c, d);
      CHECK(w.letters == *std::min_element(words.begin(), words.end()));
    }
  }
  CHECK(probed > 100);
}

TEST_CASE("gallery corner cases") {
  AlcoveWindow line(build_root_system("A1"), 4);
  size_t base = 0;
  CHECK(line.minimal_gallery(base, base).letters.empty());
  // Adjacent chambers differ by the letter that links them.
  for (size_t g = 0; g < line.n_generators(); ++g) {
    size_t nb = line.alcove(base).nbr[g];
    REQUIRE(nb != AlcoveWindow::kOutside);
    CHECK(line.minimal_gallery(base, nb).letters == std::vector<size_t>{g});
  }
  // Three steps up the line alternate the two letters.
  auto three = line.find_alcove(iv({3}));
  REQUIRE(three);
  CHECK(line.minimal_gallery(base, *three).letters ==
        std::vector<size_t>{1, 0, 1});
  AlcoveWindow a2(build_root_system("A2"), 2);
  for (size_t g = 0; g < a2.n_generators(); ++g) {
    size_t nb = a2.alcove(0).nbr[g];
    CHECK(a2.minimal_gallery(0, nb).letters == std::vector<size_t>{g});
  }
}

TEST_CASE("enclos agrees with both hull descriptions") {
  AlcoveWindow line(build_root_system("A1"), 4);
  for (size_t a = 0; a < line.size(); ++a) {
    for (size_t b = 0; b < line.size(); ++b) {
      std::vector<size_t> E{a, b};
      std::vector<size_t> got = line.enclos(E);
      CHECK(got == half_space_hull(line, E));
      CHECK(got == gallery_hull(line, E));
    }
  }
  AlcoveWindow a2(build_root_system("A2"), 3);
  size_t hulls = 0;
  for (size_t a = 0; a < a2.size(); ++a) {
    for (size_t b = a; b < a2.size(); ++b) {
      std::vector<size_t> E{a, b};
      std::vector<size_t> got;
      try {
        got = a2.enclos(E);
      } catch (const WindowExhausted&) {
        continue;
      }
      ++hulls;
      CHECK(got == half_space_hull(a2, E));
      CHECK(got == gallery_hull(a2, E));
      // Idempotent and contains its input.
      CHECK(a2.enclos(got) == got);
      for (size_t e : E) CHECK(std::count(got.begin(), got.end(), e) == 1);
    }
  }
  CHECK(hulls > 50);
}

TEST_CASE("enclos around a vertex and trivial inputs") {
  AlcoveWindow win(build_root_system("A2"), 3);
  CHECK(win.enclos({5}) == std::vector<size_t>{5});
  size_t nb = win.alcove(0).nbr[0];
  std::vector<size_t> pair = win.enclos({0, nb});
  std::sort(pair.begin(), pair.end());
  CHECK(pair == std::vector<size_t>({0, nb}));
  // The base chamber and its antipode through the origin hull to the six
  // chambers around the vertex.
  auto anti = win.find_alcove(iv({-1, -1, -1}));
  REQUIRE(anti);
  CHECK(win.separation(0, *anti) == 3);
  std::vector<size_t> around = win.enclos({0, *anti});
  CHECK(around.size() == 6);
  size_t origin = win.facet_of_point(rv({0, 0}));
  for (size_t a : around) CHECK(win.facet_in_alcove_closure(origin, a));
  // Monotone in the input.
  std::vector<size_t> bigger = win.enclos({0, *anti, nb});
  for (size_t a : around)
    CHECK(std::count(bigger.begin(), bigger.end(), a) == 1);
}

TEST_CASE("enclos refuses to truncate") {
  // The hull of these two holds a third chamber one step farther out, so
  // the radius three window must refuse while radius four answers.
  AlcoveWindow tight(build_root_system("A2"), 3);
  auto left = tight.find_alcove(iv({1, 0, 2}));
  auto right = tight.find_alcove(iv({0, 1, 2}));
  REQUIRE(left);
  REQUIRE(right);
  CHECK_THROWS_AS(tight.enclos({*left, *right}), WindowExhausted);
  AlcoveWindow wide(build_root_system("A2"), 4);
  auto wl = wide.find_alcove(iv({1, 0, 2}));
  auto wr = wide.find_alcove(iv({0, 1, 2}));
  auto far = wide.find_alcove(iv({1, 1, 2}));
  REQUIRE(far);
  std::vector<size_t> hull = wide.enclos({*wl, *wr});
  CHECK(hull.size() == 3);
  CHECK(std::count(hull.begin(), hull.end(), *far) == 1);
}

TEST_CASE("projection agrees with the gate description") {
  for (const char* label : {"A1", "A2"}) {
    AlcoveWindow win(build_root_system(label), 3);
    CAPTURE(label);
    size_t probed = 0;
    for (size_t c = 0; c < win.n_facets(); ++c) {
      for (size_t d = 0; d < win.n_facets(); ++d) {
        if (!win.facet_star_complete(c) || !win.facet_star_complete(d))
          continue;
        size_t got;
        try {
          got = win.proj(c, d);
        } catch (const WindowExhausted&) {
          continue;
        }
        ++probed;
        CHECK(got == proj_oracle(win, c, d));
        CHECK(win.facet_dim(got) >= win.facet_dim(d));
        CHECK(win.facet_within(c, got));
      }
    }
    CHECK(probed > 20);
  }
}

TEST_CASE("projection corner cases") {
  AlcoveWindow win(build_root_system("A2"), 3);
  // Onto itself.
  size_t origin = win.facet_of_point(rv({0, 0}));
  CHECK(win.proj(origin, origin) == origin);
  // A chamber already over the base facet projects to itself.
  size_t cham = win.alcove(0).face_ids[0];
  CHECK(win.facet_dim(cham) == 2);
  CHECK(win.proj(origin, cham) == cham);
  // Projecting a far chamber onto a vertex gives the nearest chamber of its
  // star.
  auto far = win.find_alcove(iv({1, 0, 1}));
  REQUIRE(far);
  size_t fcham = win.alcove(*far).face_ids[0];
  size_t got = win.proj(origin, fcham);
  CHECK(win.facet_dim(got) == 2);
  const auto& st = win.facet_alcoves(origin);
  size_t best = AlcoveWindow::kOutside;
  for (size_t x : st) best = std::min(best, win.separation(x, *far));
  for (size_t x : st)
    if (win.separation(x, *far) == best)
      CHECK(win.alcove(x).face_ids[0] == got);
  // A star cut by the window boundary refuses to project.
  AlcoveWindow tight(build_root_system("A2"), 2);
  size_t o1 = tight.facet_of_point(rv({1, 0}));
  CHECK_FALSE(tight.facet_star_complete(o1));
  CHECK_THROWS_AS(tight.proj(o1, tight.alcove(0).face_ids[0]),
                  WindowExhausted);
}

TEST_CASE("star completeness tracks the window boundary") {
  AlcoveWindow tight(build_root_system("A2"), 1);
  AlcoveWindow mid(build_root_system("A2"), 2);
  AlcoveWindow wide(build_root_system("A2"), 3);
  size_t ot = tight.facet_of_point(rv({0, 0}));
  size_t om = mid.facet_of_point(rv({0, 0}));
  size_t ow = wide.facet_of_point(rv({0, 0}));
  CHECK_FALSE(tight.facet_star_complete(ot));
  // Five of the six chambers around the origin sit within two wall
  // crossings of the base; the opposite one needs three.
  CHECK_FALSE(mid.facet_star_complete(om));
  CHECK(mid.facet_alcoves(om).size() == 5);
  CHECK(wide.facet_star_complete(ow));
  CHECK(wide.facet_alcoves(ow).size() == 6);
  // A chamber facet's star is the chamber itself.
  CHECK(tight.facet_star_complete(tight.alcove(0).face_ids[0]));
}

TEST_CASE("chimneys are the tightest half complex intersections") {
  AlcoveWindow win(build_root_system("A2"), 3);
  size_t origin = win.facet_of_point(rv({0, 0}));
  std::uint64_t chamber_dir = cone_with_signs(win, {'+', '+', '+'});
  std::uint64_t wall_dir = cone_with_signs(win, {'0', '+', '+'});
  std::uint64_t zero_dir = cone_with_signs(win, {'0', '0', '0'});

  Chimney vc = win.chimney(origin, chamber_dir);
  for (size_t i = 0; i < 3; ++i) {
    REQUIRE(vc.lo[i]);
    CHECK(*vc.lo[i] == 0);
    CHECK_FALSE(vc.hi[i]);
  }
  CHECK(win.chimney_direction(vc) == chamber_dir);

  Chimney bc = win.chimney(win.alcove(0).face_ids[0], wall_dir);
  REQUIRE(bc.lo[0]);
  REQUIRE(bc.hi[0]);
  CHECK(*bc.lo[0] == 0);
  CHECK(*bc.hi[0] == 1);
  CHECK_FALSE(bc.hi[1]);
  CHECK_FALSE(bc.hi[2]);
  CHECK(win.chimney_direction(bc) == wall_dir);

  // Membership matches the full list of containing half complexes on a
  // rational grid.
  for (auto [facet, dir] :
       {std::pair<size_t, std::uint64_t>{origin, chamber_dir},
        {win.alcove(0).face_ids[0], wall_dir},
        {origin, wall_dir}}) {
    Chimney ch = win.chimney(facet, dir);
    auto cuts = containing_half_spaces(win, facet, win.direction_fan().cone(dir),
                                       win.bound() + 2);
    size_t points = 0;
    for (int i = -6; i <= 8; i += 2) {
      for (int j = -6; j <= 8; ++j) {
        RatVec x{Rat(i) / 4, Rat(j) / 3};
        ++points;
        CHECK(win.chimney_contains(ch, x) ==
              oracle_chimney_contains(win, cuts, x));
      }
    }
    CHECK(points >= 100);
    CHECK(win.chimney_direction(ch) == dir);
    auto [s, v] = win.characteristic_ray(ch);
    CHECK(win.chimney_contains(ch, s));
    CHECK(win.chimney_contains(ch, vec_add(s, v)));
    CHECK(win.chimney_contains(ch, vec_add(s, vec_scale(Rat(7, 2), v))));
  }

  // Zero direction gives the closed facet back.
  Chimney cl = win.chimney(win.alcove(0).face_ids[0], zero_dir);
  for (size_t f : win.alcove(0).face_ids)
    CHECK(win.chimney_contains(cl, win.facet_point(f)));
  auto outside = win.find_alcove(iv({1, 0, 1}));
  REQUIRE(outside);
  RatVec far = win.facet_point(win.alcove(*outside).face_ids[0]);
  CHECK_FALSE(win.chimney_contains(cl, far));

  // A facet whose closure sits inside the chimney spans a sub chimney.
  Chimney base_ch = win.chimney(origin, chamber_dir);
  size_t shifted = 0;
  for (size_t f = 0; f < win.n_facets(); ++f) {
    bool inside = true;
    size_t a0 = win.facet_alcoves(f).front();
    for (size_t vf : win.alcove(a0).face_ids)
      if (win.facet_dim(vf) == 0 && win.facet_within(vf, f))
        inside = inside && win.chimney_contains(base_ch, win.facet_point(vf));
    if (!inside) continue;
    ++shifted;
    Chimney sub = win.chimney(f, chamber_dir);
    for (size_t i = 0; i < 3; ++i) {
      REQUIRE(sub.lo[i]);
      CHECK(*sub.lo[i] >= *base_ch.lo[i]);
    }
  }
  CHECK(shifted > 3);
}

TEST_CASE("half line chimney") {
  AlcoveWindow line(build_root_system("A1"), 3);
  size_t zero = line.facet_of_point(rv({0}));
  Chimney up = line.chimney(zero, cone_with_signs(line, {'+'}));
  REQUIRE(up.lo[0]);
  CHECK(*up.lo[0] == 0);
  CHECK_FALSE(up.hi[0]);
  CHECK(line.chimney_contains(up, rv({2})));
  CHECK_FALSE(line.chimney_contains(up, RatVec{Rat(-1, 2)}));
}

TEST_CASE("galleries along rays stay tense") {
  AlcoveWindow line(build_root_system("A1"), 4);
  AlcoveWindow a2(build_root_system("A2"), 4);
  struct RayCase {
    const AlcoveWindow& win;
    size_t c0;
    RatVec s;
    RatVec v;
    size_t segments;
    Gallery got;
  };
  auto two = line.find_alcove(iv({2}));
  REQUIRE(two);
  std::vector<RayCase> cases;
  // Straight ray up the line from a chamber interior point.
  cases.push_back({line, 0, RatVec{Rat(1, 4)}, rv({1}), 4, {}});
  // Ray starting on the near wall of its chamber and pointing away: the
  // gallery must first step down into the first segment's chamber.
  cases.push_back({line, *two, rv({1}), rv({-1}), 3, {}});
  // Ray hugging the first root's wall from the origin.
  cases.push_back({a2, 0, rv({0, 0}), rv({1, 2}), 3, {}});
  // Generic ray through chamber interiors.
  cases.push_back({a2, 0, a2.base_point(), rv({1, 1}), 3, {}});
  for (RayCase& rc : cases)
    rc.got = rc.win.gallery_along_ray(rc.c0, rc.s, rc.v, rc.segments);

  REQUIRE(cases[0].got.alcoves.size() == 4);
  for (size_t j = 0; j < 4; ++j)
    CHECK(line.alcove(cases[0].got.alcoves[j]).floors == IntVec{Int(j)});
  REQUIRE(cases[1].got.alcoves.size() == 4);
  for (size_t j = 0; j < 4; ++j)
    CHECK(line.alcove(cases[1].got.alcoves[j]).floors ==
          IntVec{Int(2) - Int(j)});
  CHECK(cases[2].got.alcoves.front() == 0);
  CHECK(a2.alcove(cases[2].got.alcoves.back()).floors == iv({0, 2, 2}));
  CHECK(cases[3].got.alcoves.front() == 0);

  for (const RayCase& rc : cases) {
    // No wall crossed twice, and every chamber meets the ray by the
    // independent feasibility route.
    std::set<std::pair<size_t, Int>> crossed;
    for (size_t j = 0; j + 1 < rc.got.alcoves.size(); ++j) {
      size_t at = rc.got.alcoves[j];
      size_t letter = rc.got.word.letters[j];
      CHECK(crossed.insert(rc.win.alcove(at).walls[letter]).second);
      CHECK(rc.win.alcove(at).nbr[letter] == rc.got.alcoves[j + 1]);
    }
    for (size_t a : rc.got.alcoves) {
      CHECK(rc.win.closure_meets_ray(a, rc.s, rc.v));
      CHECK(oracle_meets_ray(rc.win, a, rc.s, rc.v));
    }
  }
  // Segment count zero keeps just the starting chamber.
  CHECK(a2.gallery_along_ray(0, a2.base_point(), rv({1, 1}), 0).alcoves ==
        std::vector<size_t>{0});
}

TEST_CASE("ray galleries validate their input and their window") {
  AlcoveWindow line(build_root_system("A1"), 2);
  CHECK_THROWS_AS(line.gallery_along_ray(0, RatVec{Rat(1, 2)}, rv({1}), 5),
                  WindowExhausted);
  // An in-window origin off the starting chamber's closure is rejected.
  CHECK_THROWS_AS(line.gallery_along_ray(0, rv({1}), rv({1}), 1),
                  std::invalid_argument);
  // An origin beyond every stored closure cannot even be located.
  CHECK_THROWS_AS(line.gallery_along_ray(0, rv({2}), rv({1}), 1),
                  WindowExhausted);
  CHECK_THROWS_AS(line.gallery_along_ray(0, RatVec{Rat(1, 2)}, rv({0}), 1),
                  std::invalid_argument);
}
