#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chambrier/root_system.hpp"

namespace chambrier {

// One group element. The matrix acts on coordinates (coroot basis), the word
// is the canonical reduced expression obtained by repeatedly stripping the
// smallest left descent.
struct WeylElement {
  Mat m;
  Mat m_inv;
  std::vector<size_t> word;
};

struct WeylGroup {
  std::vector<WeylElement> elements;  // breadth-first order, identity first
  std::map<Mat, size_t> index;

  size_t size() const { return elements.size(); }
  size_t index_of(const Mat& m) const;  // throws if the matrix is not in the group
  size_t mul(size_t a, size_t b) const;
  size_t inv(size_t a) const;
};

WeylGroup enumerate_weyl(const RootSystem& rs);

// Number of positive roots sent to negative ones; equals the reduced word
// length.
size_t weyl_length(const RootSystem& rs, const Mat& m);

// Indices (into group.elements) of the subgroup generated by the given
// elements, sorted.
std::vector<size_t> subgroup_closure(const WeylGroup& group,
                                     const std::vector<size_t>& generators);

// A reflection fixes a hyperplane; its wall covector is determined up to
// sign. Returns the positive root index when m is a reflection in a root
// wall, std::nullopt otherwise.
std::optional<size_t> reflection_root(const RootSystem& rs, const Mat& m);

// Group index of the reflection in the wall of the given positive root.
size_t reflection_element(const RootSystem& rs, const WeylGroup& group,
                          size_t root_index);

}  // namespace chambrier
