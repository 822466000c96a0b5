#pragma once

#include <string>

#include "chambrier/linalg.hpp"

namespace chambrier {

// Crystallographic root system of rank <= 4 in simple-coroot coordinates:
// a point x stands for sum x_i alpha_i^vee. Roots are covectors; the simple
// root alpha_j evaluates on x via column j of the Cartan matrix.
struct RootSystem {
  std::string label;
  size_t rank = 0;

  // cartan[i][j] = value of simple root j on simple coroot i. Diagonal 2.
  Mat cartan;
  // Invariant inner product on coordinates: integer, symmetric, positive
  // definite, fixed by every simple reflection.
  Mat gram;

  std::vector<RatVec> simple_roots;      // covectors, = columns of cartan
  std::vector<Mat> simple_reflections;   // matrices acting on coordinates
  std::vector<RatVec> positive_roots;    // covectors; the simple ones first

  // Generator names in order: s, t, u, v.
  std::vector<std::string> generator_names;

  Rat inner(const RatVec& x, const RatVec& y) const;  // gram product of points
  // Value of root (covector) on the coroot of another root: 2 (b,a)/(a,a)
  // computed through gram duals; integer for crystallographic data.
  Rat pairing(const RatVec& root_form, const RatVec& coroot_of) const;
  // Gram-dual vector of a covector: the v with gram(v, .) = form.
  RatVec dual_vector(const RatVec& form) const;
  // Coroot vector of a root covector.
  RatVec coroot(const RatVec& root_form) const;
};

// Labels: A1, A2, A3, B2, C2, G2, A1xA1, A1xA2.
RootSystem build_root_system(const std::string& label);
const std::vector<std::string>& known_labels();

RatVec act(const Mat& w, const RatVec& x);
// Form transported by w: (act_form(w, f))(act(w, x)) = f(x).
RatVec act_form(const Mat& w_inv, const RatVec& form);

// Index of v in the positive/negative root list; 'sign' tells which.
// Returns false when v is not a root.
bool root_index(const RootSystem& rs, const RatVec& form, size_t* index, int* sign);

// Connected components of the Coxeter diagram restricted to the given
// generator subset. Each component is sorted; components are ordered by
// their smallest member.
std::vector<std::vector<size_t>> diagram_components(const RootSystem& rs,
                                                    const std::vector<size_t>& subset);

}  // namespace chambrier
