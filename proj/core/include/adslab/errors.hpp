// Error taxonomy for the geometric laboratory.  Every failure mode that a
// caller can meaningfully react to gets its own exception type; all derive
// from Error so coarse handling stays possible.
#pragma once

#include <stdexcept>
#include <string>

namespace adslab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A vector expected to be timelike for the ambient quadratic form is not.
struct NonTimelikeVector : Error {
  using Error::Error;
};

// Two points are causally related (or coincide in the degenerate sense),
// so no spacelike distance exists between them.
struct CausallyRelated : Error {
  using Error::Error;
};

// A point expected inside the timelike cone around the base point is not.
struct OutsideCone : Error {
  using Error::Error;
};

// The radial rescaling map hits its singular locus (chart radius^2 ~ 1).
struct SingularRadius : Error {
  using Error::Error;
};

// A least-squares fit used for a certificate is too ill-conditioned to trust.
struct IllConditionedFit : Error {
  using Error::Error;
};

// An operation requiring a diagonal (Fuchsian) holonomy got a pair whose
// left and right factors differ.
struct NotFuchsian : Error {
  using Error::Error;
};

// Newton projection back to the relator variety failed to converge.
struct NewtonDivergence : Error {
  using Error::Error;
};

// A numerical rank decision has singular values straddling the cut within
// a factor of ten, so the dimension count is not trustworthy.
struct RankAmbiguous : Error {
  RankAmbiguous(const std::string& msg, double sv_below, double sv_above)
      : Error(msg), sv_below(sv_below), sv_above(sv_above) {}
  double sv_below;
  double sv_above;
};

// An orbit point left the projective chart (denominator underflow).
struct ChartExit : Error {
  using Error::Error;
};

// The hull's facial structure could not be resolved unambiguously
// (coplanarity merge band, quotient label mismatch, ...).
struct DegenerateHull : Error {
  using Error::Error;
};

// A marked point that must be a vertex of the boundary hull is not.
struct NonVertexMarkedPoint : Error {
  using Error::Error;
};

// A triangle in the induced cone metric violates the triangle inequality.
struct TriangleInequalityViolation : Error {
  using Error::Error;
};

// An induced metric expected positive definite (spacelike surface) is not.
struct NonSpacelike : Error {
  using Error::Error;
};

// An operator of the form id +/- j b is too close to singular.
struct DegenerateOperator : Error {
  using Error::Error;
};

// Malformed configuration input (CLI / experiment runner).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace adslab
