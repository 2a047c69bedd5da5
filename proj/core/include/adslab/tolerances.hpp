// Central tolerance policy.  Every threshold used by more than one routine
// lives here so experiments can pin and report them coherently.
#pragma once

namespace adslab {

struct Tolerances {
  // Algebraic residual gate (certificates, fits, identities).
  double alg = 1e-8;
  // Finite-difference cross-check gate.
  double fd = 1e-6;
  // Relative rank cut for SVD-based dimension counts.
  double rank_rel = 1e-8;
  // A rank decision is ambiguous if a singular value lies within this
  // factor of the cut on either side.
  double rank_band = 10.0;
  // Relative chart-denominator guard for orbit generation.
  double chart_exit = 1e-12;
  // Relative coplanarity band for merging hull triangles into faces.
  double merge_rel = 1e-9;
  // Relative tolerance for matching a translated point against the orbit.
  double quotient_match = 1e-6;
  // Guard around the singular locus of the radial rescaling map.
  double singular_radius = 1e-8;
  // Guard for id +/- j b invertibility.
  double operator_det = 1e-8;
  // Newton projection convergence gate.
  double newton = 1e-9;
};

}  // namespace adslab
