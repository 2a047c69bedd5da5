// Genus-k surface group as the side-pairing group of a regular hyperbolic
// 4k-gon, holonomy representations as pairs of 2x2 factors, modules over
// the group, twisted cocycles, first-cohomology bases from the linearized
// relator, and deformation of representations with Newton projection back
// to the relator variety.
#pragma once

#include <complex>
#include <vector>

#include "adslab/core_geometry.hpp"
#include "adslab/linalg.hpp"
#include "adslab/tolerances.hpp"

namespace adslab {

// Letters are signed generator indices: +j is the j-th generator (1-based),
// -j its inverse.  Generator order: a1, b1, a2, b2, ...
using Word = std::vector<int>;

// Dense index for a letter: a1, a1^-1, b1, b1^-1, ... in a fixed order.
int letter_rank(int letter);
// All 4k letters in the canonical breadth-first order.
std::vector<int> letter_order(int k);

Word inverse_word(const Word& w);
Word reduce_word(Word w);
Word concat_words(const Word& u, const Word& v);

struct SurfaceGroup {
  int k = 0;
  std::vector<Mat2> gens;              // 2k generators in SL(2,R)
  std::vector<Mat3> ad;                // per letter_rank: chart SO(2,1) action
  std::vector<std::complex<double>> vertices;  // 4k-gon vertices (upper half plane)
  double relator_defect = 0.0;         // |relator - id|, construction check

  const Mat2& gen_of_letter(int letter, Mat2& scratch) const = delete;
  Mat2 letter_matrix(int letter) const;       // SL(2,R) value of one letter
  const Mat3& letter_ad(int letter) const;    // chart action of one letter
  Mat2 evaluate_sl2(const Word& w) const;     // left-to-right product
  Mat3 evaluate_ad(const Word& w) const;
};

// Build the Fuchsian side-pairing group of the regular 4k-gon whose vertex
// angles sum to 2 pi (circumradius arccosh(cot^2(pi / 4k))).
SurfaceGroup build_surface_group(int k);

// The single defining relator [a1,b1]...[ak,bk] as a word.
Word relator_word(int k);

// -- holonomy representations ---------------------------------------------

// A representation by pairs (left, right) of 2x2 factors acting on the
// quadric through X -> A X B^{-1}.  Fuchsian representations are diagonal.
struct Rep {
  int k = 0;
  std::vector<Mat2> left;   // 2k entries
  std::vector<Mat2> right;

  static Rep diagonal(const SurfaceGroup& G);
  std::pair<Mat2, Mat2> letter_pair(int letter) const;
  std::pair<Mat2, Mat2> evaluate(const Word& w) const;
  Mat4 evaluate_mat4(const Word& w) const;
  // Max deviation of the relator pair from the identity.
  double relator_defect() const;
  bool is_diagonal(double tol = 1e-12) const;
};

// -- modules and cocycles --------------------------------------------------

enum class ModuleKind {
  AdjointFuchsian,   // sl(2,R), dim 3, adjoint action of the diagonal
  MinkVectors,       // R^{2,1}, dim 3, same matrices through the chart iso
  AdjointPair,       // sl2 + sl2, dim 6, adjoint of (left, right)
  FlatKilling,       // so(2,1) + R^{2,1}, dim 6, flat-space Killing algebra
};

struct PiModule {
  ModuleKind kind;
  int k = 0;
  int dim = 0;
  std::vector<MatX> act;  // indexed by letter_rank, 4k entries

  const MatX& letter_act(int letter) const { return act[letter_rank(letter)]; }
};

PiModule make_module(ModuleKind kind, const SurfaceGroup& G);
PiModule make_module_pair(const Rep& rep);  // AdjointPair at a given rep

// A cocycle is its tuple of generator values.
using Cocycle = std::vector<VecX>;

// Evaluate a cocycle on a word: tau(uv) = tau(u) + u . tau(v) and
// tau(x^{-1}) = -x^{-1} . tau(x).
VecX cocycle_eval(const Word& w, const Cocycle& tau, const PiModule& mod);

// Coboundary of a module element: gamma -> gamma . x - x.
Cocycle coboundary(const VecX& x, const PiModule& mod);

// Matrix of the linearized relator map (generator tuples -> module),
// dim x (2k dim); its kernel is the cocycle space Z^1.
MatX relator_linearization(const PiModule& mod);

struct CohomologyBasis {
  MatX z1;          // (2k dim) x z1_dim, orthonormal columns
  MatX b1;          // (2k dim) x b1_dim, orthonormal columns
  int z1_dim = 0;
  int b1_dim = 0;
  int h1_dim = 0;
  double z1_gap = 0.0;  // smallest kept / largest dropped singular value
  double b1_gap = 0.0;
};

// Z^1 from the SVD kernel of the linearized relator, B^1 from the span of
// coboundaries.  Throws RankAmbiguous on straddling singular values.
CohomologyBasis z1_basis(const PiModule& mod, double rank_rel = 1e-8,
                         double rank_band = 10.0);

// Unpack one Z^1-coordinate column into a cocycle (generator tuple).
Cocycle cocycle_from_column(const MatX& z1, int col, int k, int dim);
Cocycle cocycle_from_vector(const VecX& v, int k, int dim);

// -- deformation -----------------------------------------------------------

// Multiply generators by exp(step * direction) on the left (per factor) and
// project back onto the relator variety by minimum-norm Newton steps on the
// pair relator defect.  Throws NewtonDivergence if the defect does not drop
// below `tol.newton` within 50 iterations.
Rep deform_rep(const Rep& base, const Cocycle& direction, double step,
               const Tolerances& tol = Tolerances{});

// Residual of the best approximation of `deformed` by a conjugation of
// `base`:  min over kappa of |deformed - exp(kappa) base exp(-kappa)|,
// linearized at base; used to recognize trivial deformation directions.
double conjugation_fit_residual(const Rep& base, const Rep& deformed);

// -- equivariant identification R^{2,1} ~ sl(2,R) --------------------------

// The chart isomorphism x -> x1 E1 + x2 E2 + x3 E3 intertwines the SO(2,1)
// action on chart vectors with the adjoint action (exactly, by construction
// of the ad3 matrices).
Mat2 cross_product_iso(const Vec3& x);
Vec3 cross_product_iso_inv(const Mat2& xi);

}  // namespace adslab
