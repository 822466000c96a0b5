#include "chambrier/weyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace chambrier {

size_t WeylGroup::index_of(const Mat& m) const {
  auto it = index.find(m);
  if (it == index.end()) throw std::invalid_argument("matrix is not a group element");
  return it->second;
}

size_t WeylGroup::mul(size_t a, size_t b) const {
  return index_of(mat_mul(elements[a].m, elements[b].m));
}

size_t WeylGroup::inv(size_t a) const { return index_of(elements[a].m_inv); }

size_t weyl_length(const RootSystem& rs, const Mat& m) {
  Mat m_inv = *inverse(m);
  size_t count = 0;
  for (const RatVec& r : rs.positive_roots) {
    RatVec img = act_form(m_inv, r);
    int sign = 0;
    size_t idx = 0;
    if (!root_index(rs, img, &idx, &sign)) throw std::logic_error("image is not a root");
    if (sign < 0) ++count;
  }
  return count;
}

WeylGroup enumerate_weyl(const RootSystem& rs) {
  WeylGroup g;
  const size_t n = rs.rank;
  Mat id = identity(n);
  g.elements.push_back({id, id, {}});
  g.index[id] = 0;
  std::deque<size_t> queue = {0};
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    for (size_t j = 0; j < n; ++j) {
      Mat m = mat_mul(g.elements[cur].m, rs.simple_reflections[j]);
      if (g.index.count(m)) continue;
      Mat m_inv = mat_mul(rs.simple_reflections[j], g.elements[cur].m_inv);
      g.index[m] = g.elements.size();
      g.elements.push_back({m, m_inv, {}});
      queue.push_back(g.elements.size() - 1);
    }
  }

  // Canonical words: peel the smallest left descent. j is a left descent of w
  // exactly when w^{-1} maps alpha_j to a negative root, i.e. alpha_j
  // composed with m is negative.
  std::vector<size_t> lengths(g.size());
  std::vector<size_t> order(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    lengths[i] = weyl_length(rs, g.elements[i].m);
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return lengths[a] < lengths[b]; });
  for (size_t idx : order) {
    if (lengths[idx] == 0) continue;
    bool found = false;
    for (size_t j = 0; j < n && !found; ++j) {
      RatVec img = form_mul(rs.simple_roots[j], g.elements[idx].m);
      int sign = 0;
      size_t ri = 0;
      if (!root_index(rs, img, &ri, &sign)) throw std::logic_error("image is not a root");
      if (sign < 0) {
        size_t rest = g.index_of(mat_mul(rs.simple_reflections[j], g.elements[idx].m));
        if (lengths[rest] + 1 != lengths[idx])
          throw std::logic_error("descent did not shorten the word");
        g.elements[idx].word = g.elements[rest].word;
        g.elements[idx].word.insert(g.elements[idx].word.begin(), j);
        found = true;
      }
    }
    if (!found) throw std::logic_error("nontrivial element with no left descent");
  }
  return g;
}

std::vector<size_t> subgroup_closure(const WeylGroup& group,
                                     const std::vector<size_t>& generators) {
  std::set<size_t> members = {0};
  std::deque<size_t> queue = {0};
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    for (size_t gen : generators) {
      size_t next = group.mul(cur, gen);
      if (members.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<size_t>(members.begin(), members.end());
}

std::optional<size_t> reflection_root(const RootSystem& rs, const Mat& m) {
  const size_t n = rs.rank;
  Mat diff = m;
  for (size_t i = 0; i < n; ++i) diff[i][i] -= 1;
  if (rank_of(diff) != 1) return std::nullopt;
  // The moved line is the (-1)-eigenspace; its gram dual covector is the wall
  // form.
  Mat sum = m;
  for (size_t i = 0; i < n; ++i) sum[i][i] += 1;
  Mat kb = kernel_basis(sum, n);
  if (kb.size() != 1) return std::nullopt;
  // Root covectors need not be primitive, so match the wall direction up to
  // scale.
  RatVec form = to_rat(primitive_signed(mat_vec(rs.gram, kb[0])));
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
    const RatVec& r = rs.positive_roots[i];
    size_t k = 0;
    while (k < form.size() && form[k] == 0) ++k;
    if (k == form.size() || r[k] == 0) continue;
    Rat lambda = r[k] / form[k];
    if (r == vec_scale(lambda, form)) return i;
  }
  return std::nullopt;
}

size_t reflection_element(const RootSystem& rs, const WeylGroup& group,
                          size_t root_index) {
  const RatVec& form = rs.positive_roots[root_index];
  RatVec cov = rs.coroot(form);
  Mat m = identity(rs.rank);
  for (size_t i = 0; i < rs.rank; ++i)
    for (size_t j = 0; j < rs.rank; ++j) m[i][j] -= cov[i] * form[j];
  return group.index_of(m);
}

}  // namespace chambrier
