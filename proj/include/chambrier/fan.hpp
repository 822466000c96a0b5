#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chambrier/cone.hpp"
#include "chambrier/root_system.hpp"
#include "chambrier/weyl.hpp"

namespace chambrier {

// One nonempty sign stratum of a hyperplane arrangement: the set of points
// realizing exactly these signs against the form list.
struct SignFace {
  std::vector<char> signs;  // '0', '+', '-'; one per form
  RatVec witness;
  size_t dim = 0;
};

// All nonempty strata, by depth-first extension over the forms in order.
// Exact: every returned face carries a rational witness realizing its signs,
// and no nonempty sign vector is missed.
std::vector<SignFace> arrangement_faces(size_t n, const std::vector<RatVec>& forms);

// Provenance of a fan cone built from a base facet: facet type I, the
// orthogonal generator set L = J ∩ I^perp used to fold chambers together.
struct FanOrigin {
  std::vector<size_t> I;
  std::vector<size_t> L;
  std::uint64_t cone_id = 0;
};

struct Fan {
  std::string label;
  std::vector<size_t> J;  // generator subset the fan was built from, if any
  size_t n = 0;
  std::vector<Cone> cones;  // sorted by id
  std::map<std::uint64_t, size_t> by_id;
  // faces[i]: ids of the fan cones contained in the boundary of cones[i].
  std::vector<std::vector<std::uint64_t>> faces;
  std::vector<FanOrigin> origins;  // nonempty only for orbit-built fans

  size_t index_of(std::uint64_t id) const;
  const Cone& cone(std::uint64_t id) const { return cones[index_of(id)]; }
};

// Appends canonical cones, sorts by id, fills by_id and the face lists.
Fan assemble_fan(std::string label, std::vector<size_t> J, size_t n,
                 std::vector<Cone> cones);

// The decomposition into Weyl facets: sign strata of the wall arrangement.
Fan weyl_fan(const RootSystem& rs, const WeylGroup& g);

// The facet of the closed base chamber with the given type: walls in I,
// strict positivity on the rest.
Cone facet_cone(const RootSystem& rs, const std::vector<size_t>& I);

// Types I whose diagram components all stick out of J.
std::vector<std::vector<size_t>> admissible_types(const RootSystem& rs,
                                                  const std::vector<size_t>& J);

// Coarsening of the Weyl fan given by gluing chambers across walls of type
// J: orbit of the folded base facets under the full group.
Fan build_FJ(const RootSystem& rs, const WeylGroup& g, const std::vector<size_t>& J);

std::optional<size_t> cone_index_containing(const Fan& fan, const RatVec& x);

// A structural hypothesis needed by a construction does not hold; witness
// pins down a concrete offending point or cone.
struct HypothesisViolation : std::runtime_error {
  std::string witness;
  HypothesisViolation(const std::string& what, std::string wit)
      : std::runtime_error(what), witness(std::move(wit)) {}
};

struct HypothesisReport {
  // Index 1..7 used; entry 0 ignored.
  std::array<bool, 8> pass;
  std::array<std::string, 8> witness;

  HypothesisReport() {
    pass.fill(true);
    witness.fill("");
  }
  bool all() const;
  bool all_except_h3() const;
};

// Exhaustive verification against the common-refinement arrangement of every
// constraint row of every cone; group stability is checked against the given
// generator matrices. Failures are reported with witnesses, never thrown.
HypothesisReport check_hypotheses(const Fan& fan, const std::vector<Mat>& generators);

}  // namespace chambrier
