#include "chambrier/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace chambrier {

namespace {

Mat cartan_for(const std::string& label) {
  auto R = [](std::initializer_list<std::initializer_list<int>> rows) {
    Mat m;
    for (auto& r : rows) {
      RatVec v;
      for (int x : r) v.push_back(Rat(x));
      m.push_back(v);
    }
    return m;
  };
  if (label == "A1") return R({{2}});
  if (label == "A2") return R({{2, -1}, {-1, 2}});
  if (label == "A3") return R({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  // cartan[i][j] is the value of root j on coroot i; B2 has a long first root.
  if (label == "B2") return R({{2, -1}, {-2, 2}});
  if (label == "C2") return R({{2, -2}, {-1, 2}});
  if (label == "G2") return R({{2, -3}, {-1, 2}});
  if (label == "A1xA1") return R({{2, 0}, {0, 2}});
  if (label == "A1xA2") return R({{2, 0, 0}, {0, 2, -1}, {0, -1, 2}});
  throw std::invalid_argument("unknown root system label: " + label);
}

// Diagonal symmetrizer making c_i * cartan[j][i] symmetric; the gram matrix
// G[i][j] = c_i * cartan[j][i] is then the invariant product on coroots.
std::vector<Rat> symmetrizer(const Mat& cartan) {
  size_t n = cartan.size();
  std::vector<Rat> c(n, Rat(0));
  for (size_t start = 0; start < n; ++start) {
    if (c[start] != 0) continue;
    c[start] = 1;
    std::vector<size_t> stack = {start};
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0 || c[j] != 0) continue;
        // symmetry: c_j * cartan[i][j] = c_i * cartan[j][i]
        c[j] = c[i] * cartan[j][i] / cartan[i][j];
        stack.push_back(j);
      }
    }
  }
  // Scale to integers with overall gcd 1.
  Int l = 1;
  for (const Rat& x : c) l = boost::multiprecision::lcm(l, rat_den(x));
  Int g = 0;
  for (Rat& x : c) {
    x *= l;
    g = boost::multiprecision::gcd(g, rat_num(x));
  }
  if (g > 1)
    for (Rat& x : c) x /= g;
  return c;
}

}  // namespace

Rat RootSystem::inner(const RatVec& x, const RatVec& y) const {
  return vec_dot(x, mat_vec(gram, y));
}

RatVec RootSystem::dual_vector(const RatVec& form) const {
  auto inv = inverse(gram);
  return mat_vec(*inv, form);
}

RatVec RootSystem::coroot(const RatVec& root_form) const {
  RatVec v = dual_vector(root_form);
  Rat norm = vec_dot(root_form, v);
  return vec_scale(Rat(2) / norm, v);
}

Rat RootSystem::pairing(const RatVec& root_form, const RatVec& coroot_of) const {
  return vec_dot(root_form, coroot(coroot_of));
}

const std::vector<std::string>& known_labels() {
  static const std::vector<std::string> labels = {"A1",    "A2", "A3",    "B2",
                                                  "C2",    "G2", "A1xA1", "A1xA2"};
  return labels;
}

RatVec act(const Mat& w, const RatVec& x) { return mat_vec(w, x); }

RatVec act_form(const Mat& w_inv, const RatVec& form) { return form_mul(form, w_inv); }

RootSystem build_root_system(const std::string& label) {
  RootSystem rs;
  rs.label = label;
  rs.cartan = cartan_for(label);
  rs.rank = rs.cartan.size();
  const size_t n = rs.rank;

  std::vector<Rat> c = symmetrizer(rs.cartan);
  rs.gram = Mat(n, zeros(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) rs.gram[i][j] = c[i] * rs.cartan[j][i];

  for (size_t j = 0; j < n; ++j) {
    RatVec form(n);
    for (size_t i = 0; i < n; ++i) form[i] = rs.cartan[i][j];
    rs.simple_roots.push_back(form);
  }

  for (size_t j = 0; j < n; ++j) {
    Mat s = identity(n);
    for (size_t k = 0; k < n; ++k) s[j][k] -= rs.simple_roots[j][k];
    rs.simple_reflections.push_back(s);
  }

  // Orbit closure of the simple roots under the simple reflections.
  std::set<RatVec> all(rs.simple_roots.begin(), rs.simple_roots.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RatVec> current(all.begin(), all.end());
    for (const RatVec& r : current)
      for (const Mat& s : rs.simple_reflections) {
        RatVec img = form_mul(r, s);
        if (all.insert(img).second) grew = true;
      }
  }

  // A root is positive when its coordinates in the simple-root basis are
  // nonnegative.
  Mat simple_mat(n);  // rows are simple forms; solve lambda^T rows = form
  for (size_t i = 0; i < n; ++i) simple_mat[i] = rs.simple_roots[i];
  Mat cols = transpose(simple_mat);
  for (const RatVec& r : all) {
    auto lambda = solve_linear(cols, r);
    if (!lambda.has_value()) throw std::logic_error("root outside simple span");
    bool nonneg = true;
    for (const Rat& x : *lambda) nonneg = nonneg && x >= 0;
    if (nonneg) rs.positive_roots.push_back(r);
  }
  // Deterministic order: simple roots first, the rest sorted.
  std::vector<RatVec> rest;
  for (const RatVec& r : rs.positive_roots) {
    bool simple = false;
    for (const RatVec& s : rs.simple_roots) simple = simple || (s == r);
    if (!simple) rest.push_back(r);
  }
  std::sort(rest.begin(), rest.end());
  rs.positive_roots = rs.simple_roots;
  rs.positive_roots.insert(rs.positive_roots.end(), rest.begin(), rest.end());

  static const char* names[] = {"s", "t", "u", "v"};
  for (size_t i = 0; i < n; ++i) rs.generator_names.push_back(names[i]);
  return rs;
}

std::vector<std::vector<size_t>> diagram_components(const RootSystem& rs,
                                                    const std::vector<size_t>& subset) {
  std::set<size_t> todo(subset.begin(), subset.end());
  std::vector<std::vector<size_t>> comps;
  while (!todo.empty()) {
    std::vector<size_t> comp;
    std::vector<size_t> stack = {*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      for (auto it = todo.begin(); it != todo.end();) {
        if (rs.cartan[i][*it] != 0) {
          stack.push_back(*it);
          it = todo.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool root_index(const RootSystem& rs, const RatVec& form, size_t* index, int* sign) {
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
    if (rs.positive_roots[i] == form) {
      if (index) *index = i;
      if (sign) *sign = 1;
      return true;
    }
    if (vec_scale(Rat(-1), rs.positive_roots[i]) == form) {
      if (index) *index = i;
      if (sign) *sign = -1;
      return true;
    }
  }
  return false;
}

}  // namespace chambrier
