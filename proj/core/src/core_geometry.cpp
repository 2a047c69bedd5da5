#include "adslab/core_geometry.hpp"

#include <cmath>

namespace adslab {

double form22(const Vec4& x, const Vec4& y) {
  return x(0) * y(0) + x(1) * y(1) - x(2) * y(2) - x(3) * y(3);
}

double mink3(const Vec3& a, const Vec3& b) {
  return a(0) * b(0) + a(1) * b(1) - a(2) * b(2);
}

const Mat3& J3() {
  static const Mat3 j = Vec3(1.0, 1.0, -1.0).asDiagonal();
  return j;
}

const Mat4& J4() {
  static const Mat4 j = Vec4(1.0, 1.0, -1.0, -1.0).asDiagonal();
  return j;
}

Vec4 ads_point(const Vec4& raw) {
  const double f = form22(raw, raw);
  if (!(f < 0.0)) {
    throw NonTimelikeVector("cannot normalize: form value " +
                            std::to_string(f) + " is not negative");
  }
  Vec4 x = raw / std::sqrt(-f);
  if (x(3) < 0.0) x = -x;
  return x;
}

Mat2 matrix_model(const Vec4& x) {
  Mat2 X;
  X << x(3) + x(0), x(1) - x(2), x(1) + x(2), x(3) - x(0);
  return X;
}

Vec4 from_matrix_model(const Mat2& X) {
  return Vec4(0.5 * (X(0, 0) - X(1, 1)), 0.5 * (X(0, 1) + X(1, 0)),
              0.5 * (X(1, 0) - X(0, 1)), 0.5 * (X(0, 0) + X(1, 1)));
}

ChartPoint chart_of(const Vec4& x, double x4_guard) {
  ChartPoint out;
  out.defined = std::abs(x(3)) >= x4_guard;
  if (out.defined) out.y = x.head<3>() / x(3);
  return out;
}

Vec4 lift_of(const Vec3& y) {
  const double q = mink3(y, y);
  if (!(q < 1.0)) {
    throw NonTimelikeVector("chart point outside region of timelike lifts: "
                            "mink norm^2 = " +
                            std::to_string(q));
  }
  const double s = 1.0 / std::sqrt(1.0 - q);
  return Vec4(s * y(0), s * y(1), s * y(2), s);
}

double ads_distance(const Vec4& p, const Vec4& q) {
  const double f = form22(ads_point(p), ads_point(q));
  if (f > -1.0) {
    throw CausallyRelated("no spacelike geodesic: form value " +
                          std::to_string(f) + " lies in (-1, oo)");
  }
  // Guard the arccosh argument against rounding slightly below 1.
  const double c = std::max(-f, 1.0);
  return std::acosh(c);
}

double ads_distance_chart(const Vec3& y, const Vec3& z) {
  return ads_distance(lift_of(y), lift_of(z));
}

double mink_distance(const Vec3& a, const Vec3& b) {
  const Vec3 d = a - b;
  if (d.isZero(0.0)) return 0.0;
  const double f = mink3(d, d);
  if (!(f > 0.0)) {
    throw CausallyRelated("difference vector is not spacelike: mink norm^2 = " +
                          std::to_string(f));
  }
  return std::sqrt(f);
}

Mat2 sl2_inverse(const Mat2& A) {
  Mat2 inv;
  inv << A(1, 1), -A(0, 1), -A(1, 0), A(0, 0);
  const double det = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
  return inv / det;
}

Mat4 mat4_of_pair(const Mat2& A, const Mat2& B) {
  const Mat2 Binv = sl2_inverse(B);
  Mat4 M;
  for (int j = 0; j < 4; ++j) {
    Vec4 e = Vec4::Zero();
    e(j) = 1.0;
    M.col(j) = from_matrix_model(A * matrix_model(e) * Binv);
  }
  return M;
}

Mat4 lie4_of_pair(const Mat2& xiL, const Mat2& xiR) {
  Mat4 M;
  for (int j = 0; j < 4; ++j) {
    Vec4 e = Vec4::Zero();
    e(j) = 1.0;
    const Mat2 X = matrix_model(e);
    M.col(j) = from_matrix_model(xiL * X - X * xiR);
  }
  return M;
}

Mat3 ad3_of(const Mat2& A) {
  return mat4_of_pair(A, A).topLeftCorner<3, 3>();
}

Vec3 apply_chart_isometry(const Mat4& g, const Vec3& y, double chart_exit_tol) {
  const Vec4 z = g * Vec4(y(0), y(1), y(2), 1.0);
  if (std::abs(z(3)) < chart_exit_tol * z.norm()) {
    throw ChartExit("chart denominator " + std::to_string(z(3)) +
                    " below guard for image of norm " + std::to_string(z.norm()));
  }
  return z.head<3>() / z(3);
}

Mat3 chart_isometry_jacobian(const Mat4& g, const Vec3& y) {
  const Vec4 z = g * Vec4(y(0), y(1), y(2), 1.0);
  const Vec3 img = z.head<3>() / z(3);
  Mat3 J;
  for (int j = 0; j < 3; ++j) {
    J.col(j) = (g.col(j).head<3>() - img * g(3, j)) / z(3);
  }
  return J;
}

Vec3 ads_killing_field(const Mat4& xi4, const Vec3& y) {
  const Vec4 w = xi4 * Vec4(y(0), y(1), y(2), 1.0);
  return w.head<3>() - y * w(3);
}

const Mat2& sl2_basis(int i) {
  static const Mat2 basis[3] = {(Mat2() << 1, 0, 0, -1).finished(),
                                (Mat2() << 0, 1, 1, 0).finished(),
                                (Mat2() << 0, -1, 1, 0).finished()};
  return basis[i];
}

Mat2 sl2_of(const Vec3& c) {
  return c(0) * sl2_basis(0) + c(1) * sl2_basis(1) + c(2) * sl2_basis(2);
}

Vec3 sl2_coords(const Mat2& xi) {
  return Vec3(0.5 * (xi(0, 0) - xi(1, 1)), 0.5 * (xi(0, 1) + xi(1, 0)),
              0.5 * (xi(1, 0) - xi(0, 1)));
}

Mat2 exp_sl2(const Mat2& xi) {
  // xi^2 = s2 * id with s2 = c1^2 + c2^2 - c3^2, so the series closes.
  const Vec3 c = sl2_coords(xi);
  const double s2 = c(0) * c(0) + c(1) * c(1) - c(2) * c(2);
  double ch, shs;  // cosh(s), sinh(s)/s (with s = sqrt(s2), possibly imaginary)
  if (s2 > 1e-24) {
    const double s = std::sqrt(s2);
    ch = std::cosh(s);
    shs = std::sinh(s) / s;
  } else if (s2 < -1e-24) {
    const double s = std::sqrt(-s2);
    ch = std::cos(s);
    shs = std::sin(s) / s;
  } else {
    ch = 1.0 + 0.5 * s2;
    shs = 1.0 + s2 / 6.0;
  }
  return ch * Mat2::Identity() + shs * xi;
}

Mat2 log_psl2(const Mat2& g) {
  Mat2 m = g;
  if (m.trace() < 0.0) m = -m;
  const double half_tr = 0.5 * m.trace();
  Mat2 xi = m - half_tr * Mat2::Identity();  // trace-free part, = shs * X
  double scale;  // s / sinh(s) where cosh(s) = half_tr
  if (half_tr > 1.0 + 1e-12) {
    const double s = std::acosh(half_tr);
    scale = s / std::sinh(s);
  } else if (half_tr < 1.0 - 1e-12) {
    const double clamped = std::max(half_tr, -1.0);
    const double s = std::acos(clamped);
    const double sn = std::sin(s);
    scale = sn > 1e-15 ? s / sn : 1.0;
  } else {
    scale = 1.0;
  }
  return scale * xi;
}

const Mat3& dad3(int i) {
  static const Mat3 basis[3] = {
      (Mat3() << 0, 0, 0, 0, 0, -2, 0, -2, 0).finished(),
      (Mat3() << 0, 0, 2, 0, 0, 0, 2, 0, 0).finished(),
      (Mat3() << 0, -2, 0, 2, 0, 0, 0, 0, 0).finished()};
  return basis[i];
}

Vec3 mink_killing_field(const Vec6& coeffs, const Vec3& y) {
  const Mat3 rot =
      coeffs(0) * dad3(0) + coeffs(1) * dad3(1) + coeffs(2) * dad3(2);
  return rot * y + coeffs.tail<3>();
}

Vec3 ads_killing_field_pair(const Mat2& xiL, const Mat2& xiR, const Vec3& y) {
  return ads_killing_field(lie4_of_pair(xiL, xiR), y);
}

ConeCoords cone_coords(const Vec3& p, const Vec3& o) {
  const Vec3 d = p - o;
  const double q = mink3(d, d);
  ConeCoords out;
  out.in_cone = q < 0.0;
  out.r = std::sqrt(std::abs(q));
  return out;
}

Vec3 equidistant_sheet_point(double t, double r, double theta, int sign) {
  return Vec3(t * std::sinh(r) * std::cos(theta),
              t * std::sinh(r) * std::sin(theta),
              sign * t * std::cosh(r));
}

}  // namespace adslab
