// Ambient models: the signature-(2,2) quadric with its 2x2 matrix model,
// the affine chart with Minkowski form diag(1,1,-1), isometry actions in
// both pictures, Killing fields, and spacelike distances.
#pragma once

#include "adslab/errors.hpp"
#include "adslab/linalg.hpp"

namespace adslab {

// Quadratic form x1 y1 + x2 y2 - x3 y3 - x4 y4 on R^4.
double form22(const Vec4& x, const Vec4& y);

// Minkowski form a1 b1 + a2 b2 - a3 b3 on the chart R^3.
double mink3(const Vec3& a, const Vec3& b);

// diag(1, 1, -1).
const Mat3& J3();

// diag(1, 1, -1, -1).
const Mat4& J4();

// Normalize a raw timelike vector onto the quadric sheet: rescale to form
// value -1 and orient so the fourth coordinate is positive.  Throws
// NonTimelikeVector when the form value is not negative.
Vec4 ads_point(const Vec4& raw);

// 2x2 matrix model X(x) = [[x4+x1, x2-x3], [x2+x3, x4-x1]]; det X = -form.
Mat2 matrix_model(const Vec4& x);
Vec4 from_matrix_model(const Mat2& X);

struct ChartPoint {
  Vec3 y = Vec3::Zero();
  bool defined = false;  // false when |x4| is below the chart guard
};

// Affine chart x -> (x1, x2, x3) / x4; flagged undefined near x4 = 0.
ChartPoint chart_of(const Vec4& x, double x4_guard = 1e-12);

// Inverse chart: lift y with mink3(y, y) < 1 back to the quadric.
Vec4 lift_of(const Vec3& y);

// Spacelike distance on the quadric: cosh d = -form22(p, q) after
// normalization.  Throws CausallyRelated when the form value is > -1.
double ads_distance(const Vec4& p, const Vec4& q);

// Chart version (lifts both points).
double ads_distance_chart(const Vec3& y, const Vec3& z);

// Flat Minkowski distance between spacelike-separated chart points.
// Throws CausallyRelated for non-spacelike, non-equal pairs.
double mink_distance(const Vec3& a, const Vec3& b);

// -- isometries ------------------------------------------------------------

// Inverse of a determinant-one 2x2 matrix (adjugate).
Mat2 sl2_inverse(const Mat2& A);

// Linear action of the pair (A, B) on R^4 through X -> A X B^{-1}.
Mat4 mat4_of_pair(const Mat2& A, const Mat2& B);

// Derivative of the pair action: X -> xiL X - X xiR, as a 4x4 matrix.
Mat4 lie4_of_pair(const Mat2& xiL, const Mat2& xiR);

// The diagonal pair (A, A) fixes the chart origin and acts linearly on the
// chart; this returns that 3x3 matrix (an element of SO(2,1)).
Mat3 ad3_of(const Mat2& A);

// Projective action of a 4x4 isometry on the chart.  Throws ChartExit when
// the image denominator is below chart_exit_tol relative to the image.
Vec3 apply_chart_isometry(const Mat4& g, const Vec3& y,
                          double chart_exit_tol = 1e-12);

// Derivative of the projective chart action at y (3x3).
Mat3 chart_isometry_jacobian(const Mat4& g, const Vec3& y);

// Killing field of a quadric Lie-algebra element, expressed in the chart:
// a polynomial vector field of degree two.
Vec3 ads_killing_field(const Mat4& xi4, const Vec3& y);

// -- Lie algebra bases and exponentials ------------------------------------

// Trace-free 2x2 basis: E1 = [[1,0],[0,-1]], E2 = [[0,1],[1,0]],
// E3 = [[0,-1],[1,0]].
const Mat2& sl2_basis(int i);

Mat2 sl2_of(const Vec3& c);   // c1 E1 + c2 E2 + c3 E3
Vec3 sl2_coords(const Mat2& xi);

// Closed-form exponential / logarithm on the trace-free 2x2 algebra.  The
// logarithm works projectively: a negative-trace input is negated first.
Mat2 exp_sl2(const Mat2& xi);
Mat2 log_psl2(const Mat2& g);

// Chart generators of the linear so(2,1) action, matched to the sl2 basis:
// ad3 of exp(s E_i) has derivative dad3(i) at s = 0.
const Mat3& dad3(int i);

// Flat Killing field on the chart: rotation part in the dad3 basis plus a
// translation, packed as (c1, c2, c3, t1, t2, t3).
Vec3 mink_killing_field(const Vec6& coeffs, const Vec3& y);

// Killing field of the pair algebra element (xiL, xiR), in the chart.
Vec3 ads_killing_field_pair(const Mat2& xiL, const Mat2& xiR, const Vec3& y);

// -- cone coordinates ------------------------------------------------------

struct ConeCoords {
  bool in_cone = false;  // p - o timelike for the chart Minkowski form
  double r = 0.0;        // |mink3(p-o, p-o)|^(1/2)
};

ConeCoords cone_coords(const Vec3& p, const Vec3& o = Vec3::Zero());

// Point on the equidistant sheet at (hyperbolic) polar coordinates (r, th):
// t * (sinh r cos th, sinh r sin th, sign * cosh r).
Vec3 equidistant_sheet_point(double t, double r, double theta, int sign);

}  // namespace adslab
