// Shared dense-linear-algebra helpers: type aliases, SVD-based kernel and
// rank decisions with an explicit ambiguity band, least squares, and a
// deterministic random source for seeded experiments.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <string>

#include "adslab/errors.hpp"

namespace adslab {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using VecX = Eigen::VectorXd;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using MatX = Eigen::MatrixXd;

struct KernelResult {
  int rank = 0;
  int kernel_dim = 0;
  MatX kernel;          // columns span the numerical kernel
  VecX singular_values; // descending
  // Ratio (smallest kept) / (largest dropped); +inf if nothing dropped.
  double gap = 0.0;
};

// Numerical kernel of M at relative cut tol_rel * sv_max.  Throws
// RankAmbiguous if a singular value lies within a factor `band` of the cut.
inline KernelResult kernel_of(const MatX& M, double tol_rel = 1e-8,
                              double band = 10.0) {
  Eigen::JacobiSVD<MatX> svd(M, Eigen::ComputeFullV);
  const VecX sv = svd.singularValues();
  const int ncols = static_cast<int>(M.cols());
  const double cut = tol_rel * (sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut / band && sv(i) < cut * band) {
      throw RankAmbiguous("singular value " + std::to_string(sv(i)) +
                              " straddles rank cut " + std::to_string(cut),
                          sv(i), cut);
    }
  }
  KernelResult out;
  out.rank = rank;
  out.kernel_dim = ncols - rank;
  out.kernel = svd.matrixV().rightCols(out.kernel_dim);
  out.singular_values = sv;
  if (rank < sv.size() && rank > 0) {
    out.gap = sv(rank - 1) / sv(rank);
  } else if (rank == 0 && sv.size() > 0) {
    out.gap = 0.0;
  } else {
    out.gap = std::numeric_limits<double>::infinity();
  }
  return out;
}

// Minimum-norm least-squares solution of M x = b.
inline VecX lstsq(const MatX& M, const VecX& b) {
  return M.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
}

// Orthonormal basis of the null space of M (rows = constraints).
inline MatX nullspace_of(const MatX& M, double tol_rel = 1e-10) {
  Eigen::JacobiSVD<MatX> svd(M, Eigen::ComputeFullV);
  const VecX sv = svd.singularValues();
  const double cut = tol_rel * (sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }
  return svd.matrixV().rightCols(M.cols() - rank);
}

// Deterministic pseudo-random source.  Wraps a fixed 64-bit generator and
// derives uniforms/normals without implementation-defined distributions, so
// a given seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next_u64() {
    // splitmix64: tiny, full-period, reproducible.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller (deterministic, no cached spare).
  double normal() {
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  VecX normal_vector(int n) {
    VecX v(n);
    for (int i = 0; i < n; ++i) v(i) = normal();
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace adslab
