#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chambrier/cone.hpp"
#include "chambrier/fan.hpp"
#include "chambrier/root_system.hpp"
#include "chambrier/weyl.hpp"

namespace chambrier {

// Indices into group of the elements mapping the cone onto itself.
std::vector<size_t> cone_stabilizer(const std::vector<Mat>& group,
                                    const Fan& fan, size_t ci);

// Core of a fan cone: its points fixed by the whole setwise stabilizer.
Cone core_by_fixator(const std::vector<Mat>& group, const Fan& fan, size_t ci);

// The same locus from the arrangement side: cut the cone with every wall of
// the family that meets it (vanishes somewhere on it).
Cone core_by_walls(const std::vector<RatVec>& wall_forms, const Fan& fan,
                   size_t ci);

struct CoreData {
  size_t cone_index = 0;
  Cone core;
  std::vector<size_t> stab;        // group indices with w(cone) = cone, sorted
  std::vector<size_t> wall_roots;  // positive roots whose wall meets the cone
  std::vector<size_t> stab_gens;   // reflections in those walls, group indices
  std::vector<char> facet_signs;   // sign per positive root on the core
};

// Core of a cone of a Weyl-stable fan, computed independently from the
// stabilizer and from the walls; the routes must agree. Checked on the way:
// the core meets no wall transversally (it lies in a single Weyl facet), the
// stabilizer is generated by the reflections in the walls meeting the cone,
// and it equals the pointwise fixator of the core. A cone whose orbit leaves
// the fan raises HypothesisViolation.
CoreData compute_core(const RootSystem& rs, const WeylGroup& g, const Fan& fan,
                      size_t ci);

// A facade: the quotient of the ambient space by the linear span V of a fan
// cone, realized as the gram-orthogonal complement of V.
struct Facade {
  size_t cone_index = 0;
  size_t n = 0;       // ambient dimension
  size_t dim = 0;     // quotient dimension
  Mat v_basis;        // rows span V
  Mat q_basis;        // rows span the orthogonal complement; quotient basis
  Mat projector;      // orthogonal projection of the ambient space onto it
  Mat quotient_gram;  // scalar product in q_basis coordinates
  std::vector<size_t> wall_roots;  // positive roots vanishing on V
  std::vector<RatVec> wall_forms;  // their transfers, quotient covectors
  std::vector<size_t> stab;        // group indices with w(cone) = cone
  // Reflections of the stabilizer split by which factor they touch: type 1
  // moves V and fixes the complement pointwise, type 2 the other way around.
  std::vector<size_t> refl_type1;
  std::vector<size_t> refl_type2;
  std::vector<Mat> group;  // stabilizer restricted to the quotient, dedup'd
  bool essential = false;  // the quotient walls only fix the origin
};

Facade build_facade(const RootSystem& rs, const WeylGroup& g, const Fan& fan,
                    size_t ci);

// Coordinates in q_basis of the orthogonal projection of x.
RatVec facade_coords(const Facade& fc, const RatVec& x);

// Quotient covector of an ambient form vanishing on V.
RatVec transfer_form(const Facade& fc, const RatVec& form);

// Ambient cones whose closure contains the given cone, that cone included.
std::vector<size_t> bordering_cones(const Fan& fan, size_t ci);

// The fan induced on a facade: images of the cones bordering the base cone,
// described by transferring their vanishing constraint rows.
struct FacadeFan {
  Facade facade;
  Fan fan;  // lives in quotient coordinates
  // One entry per bordering ambient cone: (ambient index, quotient cone id).
  std::vector<std::pair<size_t, std::uint64_t>> chi;
};

FacadeFan build_facade_fan(const RootSystem& rs, const WeylGroup& g,
                           const Fan& fan, size_t ci);

// Closed star of a relatively open cone in the arrangement of the given
// forms: points weakly on the positive side of every form (taken with both
// signs) that is strictly positive on the whole cone.
LinSys star_system(size_t n, const std::vector<RatVec>& forms, const Cone& c);

}  // namespace chambrier
