#include "adslab/surface_group.hpp"

#include <cmath>

namespace adslab {
namespace {

using cplx = std::complex<double>;

Mat2 rot2(double phi) {
  Mat2 m;
  m << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
  return m;
}

Mat2 boost2(double l) {
  Mat2 m;
  m << std::exp(0.5 * l), 0.0, 0.0, std::exp(-0.5 * l);
  return m;
}

cplx moebius(const Mat2& m, cplx z) {
  return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

cplx cayley(cplx z) { return (z - cplx(0, 1)) / (z + cplx(0, 1)); }

cplx cayley_inv(cplx w) { return cplx(0, 1) * (1.0 + w) / (1.0 - w); }

// Isometry taking the upper-half-plane base point i to the point with disk
// coordinate w.
Mat2 place(cplx w) {
  const double rho = std::abs(w);
  const double theta = std::arg(w);
  return rot2(0.5 * theta) * boost2(2.0 * std::atanh(rho));
}

// Unique orientation-preserving isometry with A -> C and B -> D (the two
// segments must have equal length).
Mat2 pair_map(cplx A, cplx B, cplx C, cplx D) {
  const Mat2 NA = place(cayley(A));
  const Mat2 NC = place(cayley(C));
  const cplx u = cayley(moebius(sl2_inverse(NA), B));
  const cplx v = cayley(moebius(sl2_inverse(NC), D));
  if (std::abs(std::abs(u) - std::abs(v)) > 1e-12) {
    throw Error("side-pairing: segment lengths differ");
  }
  const double psi = 0.5 * (std::arg(v) - std::arg(u));
  const Mat2 g = NC * rot2(psi) * sl2_inverse(NA);
  if (std::abs(moebius(g, A) - C) > 1e-9 || std::abs(moebius(g, B) - D) > 1e-9) {
    throw Error("side-pairing: endpoint check failed");
  }
  return g;
}

}  // namespace

int letter_rank(int letter) {
  return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
}

std::vector<int> letter_order(int k) {
  std::vector<int> out;
  out.reserve(4 * k);
  for (int j = 1; j <= 2 * k; ++j) {
    out.push_back(j);
    out.push_back(-j);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word reduce_word(Word w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word concat_words(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return reduce_word(std::move(w));
}

Mat2 SurfaceGroup::letter_matrix(int letter) const {
  const Mat2& g = gens[std::abs(letter) - 1];
  return letter > 0 ? g : sl2_inverse(g);
}

const Mat3& SurfaceGroup::letter_ad(int letter) const {
  return ad[letter_rank(letter)];
}

Mat2 SurfaceGroup::evaluate_sl2(const Word& w) const {
  Mat2 m = Mat2::Identity();
  for (int l : w) m = m * letter_matrix(l);
  return m;
}

Mat3 SurfaceGroup::evaluate_ad(const Word& w) const {
  Mat3 m = Mat3::Identity();
  for (int l : w) m = m * letter_ad(l);
  return m;
}

SurfaceGroup build_surface_group(int k) {
  if (k < 2) throw ConfigError("genus must be at least 2");
  const int N = 4 * k;
  const double Rv = std::acosh(1.0 / std::pow(std::tan(M_PI / N), 2));
  const double rho = std::tanh(0.5 * Rv);
  SurfaceGroup G;
  G.k = k;
  G.vertices.resize(N);
  for (int j = 0; j < N; ++j) {
    const double phi = 2.0 * M_PI * j / N;
    G.vertices[j] = cayley_inv(rho * cplx(std::cos(phi), std::sin(phi)));
  }
  const auto& V = G.vertices;
  for (int i = 0; i < k; ++i) {
    // a_i glues side 4i+2 reversed onto side 4i; b_i glues 4i+1 reversed
    // onto 4i+3 (stored as the map from side 4i+1).
    int p = 4 * i, q = 4 * i + 2;
    G.gens.push_back(
        pair_map(V[q], V[(q + 1) % N], V[(p + 1) % N], V[p]));
    p = 4 * i + 1, q = 4 * i + 3;
    G.gens.push_back(
        pair_map(V[p], V[(p + 1) % N], V[(q + 1) % N], V[q]));
  }
  Mat2 rel = Mat2::Identity();
  for (int l : relator_word(k)) rel = rel * G.letter_matrix(l);
  G.relator_defect = (rel - Mat2::Identity()).cwiseAbs().maxCoeff();
  G.ad.resize(4 * k);
  for (int l : letter_order(k)) {
    G.ad[letter_rank(l)] = ad3_of(G.letter_matrix(l));
  }
  return G;
}

Word relator_word(int k) {
  Word w;
  for (int i = 0; i < k; ++i) {
    const int a = 2 * i + 1, b = 2 * i + 2;
    w.insert(w.end(), {a, b, -a, -b});
  }
  return w;
}

Rep Rep::diagonal(const SurfaceGroup& G) {
  Rep r;
  r.k = G.k;
  r.left = G.gens;
  r.right = G.gens;
  return r;
}

std::pair<Mat2, Mat2> Rep::letter_pair(int letter) const {
  const int j = std::abs(letter) - 1;
  if (letter > 0) return {left[j], right[j]};
  return {sl2_inverse(left[j]), sl2_inverse(right[j])};
}

std::pair<Mat2, Mat2> Rep::evaluate(const Word& w) const {
  Mat2 L = Mat2::Identity(), R = Mat2::Identity();
  for (int l : w) {
    const auto [a, b] = letter_pair(l);
    L = L * a;
    R = R * b;
  }
  return {L, R};
}

Mat4 Rep::evaluate_mat4(const Word& w) const {
  const auto [L, R] = evaluate(w);
  return mat4_of_pair(L, R);
}

double Rep::relator_defect() const {
  const auto [L, R] = evaluate(relator_word(k));
  const double dl =
      std::min((L - Mat2::Identity()).cwiseAbs().maxCoeff(),
               (L + Mat2::Identity()).cwiseAbs().maxCoeff());
  const double dr =
      std::min((R - Mat2::Identity()).cwiseAbs().maxCoeff(),
               (R + Mat2::Identity()).cwiseAbs().maxCoeff());
  return std::max(dl, dr);
}

bool Rep::is_diagonal(double tol) const {
  for (int j = 0; j < 2 * k; ++j) {
    if ((left[j] - right[j]).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

PiModule make_module(ModuleKind kind, const SurfaceGroup& G) {
  PiModule mod;
  mod.kind = kind;
  mod.k = G.k;
  mod.act.resize(4 * G.k);
  switch (kind) {
    case ModuleKind::AdjointFuchsian:
    case ModuleKind::MinkVectors:
      // The chart identification makes both actions literally the ad3
      // matrices of the letters.
      mod.dim = 3;
      for (int l : letter_order(G.k)) {
        mod.act[letter_rank(l)] = G.letter_ad(l);
      }
      break;
    case ModuleKind::AdjointPair: {
      mod.dim = 6;
      for (int l : letter_order(G.k)) {
        MatX m = MatX::Zero(6, 6);
        m.topLeftCorner(3, 3) = G.letter_ad(l);
        m.bottomRightCorner(3, 3) = G.letter_ad(l);
        mod.act[letter_rank(l)] = m;
      }
      break;
    }
    case ModuleKind::FlatKilling: {
      // Rotation part in the dad3 basis and translation part both transform
      // by the letter's chart matrix (the linear part is Fuchsian and the
      // translation cocycle vanishes at the base point).
      mod.dim = 6;
      for (int l : letter_order(G.k)) {
        MatX m = MatX::Zero(6, 6);
        m.topLeftCorner(3, 3) = G.letter_ad(l);
        m.bottomRightCorner(3, 3) = G.letter_ad(l);
        mod.act[letter_rank(l)] = m;
      }
      break;
    }
  }
  return mod;
}

PiModule make_module_pair(const Rep& rep) {
  PiModule mod;
  mod.kind = ModuleKind::AdjointPair;
  mod.k = rep.k;
  mod.dim = 6;
  mod.act.resize(4 * rep.k);
  for (int l : letter_order(rep.k)) {
    const auto [a, b] = rep.letter_pair(l);
    MatX m = MatX::Zero(6, 6);
    m.topLeftCorner(3, 3) = ad3_of(a);
    m.bottomRightCorner(3, 3) = ad3_of(b);
    mod.act[letter_rank(l)] = m;
  }
  return mod;
}

VecX cocycle_eval(const Word& w, const Cocycle& tau, const PiModule& mod) {
  VecX val = VecX::Zero(mod.dim);
  MatX prefix = MatX::Identity(mod.dim, mod.dim);
  for (int l : w) {
    VecX t;
    if (l > 0) {
      t = tau[l - 1];
    } else {
      t = -(mod.letter_act(l) * tau[-l - 1]);
    }
    val += prefix * t;
    prefix = prefix * mod.letter_act(l);
  }
  return val;
}

Cocycle coboundary(const VecX& x, const PiModule& mod) {
  Cocycle tau(2 * mod.k);
  for (int j = 0; j < 2 * mod.k; ++j) {
    tau[j] = mod.letter_act(j + 1) * x - x;
  }
  return tau;
}

MatX relator_linearization(const PiModule& mod) {
  const Word w = relator_word(mod.k);
  const int dim = mod.dim;
  MatX L(dim, 2 * mod.k * dim);
  Cocycle tau(2 * mod.k, VecX::Zero(dim));
  for (int j = 0; j < 2 * mod.k; ++j) {
    for (int c = 0; c < dim; ++c) {
      tau[j] = VecX::Zero(dim);
      tau[j](c) = 1.0;
      L.col(j * dim + c) = cocycle_eval(w, tau, mod);
    }
    tau[j] = VecX::Zero(dim);
  }
  return L;
}

CohomologyBasis z1_basis(const PiModule& mod, double rank_rel,
                         double rank_band) {
  CohomologyBasis out;
  const MatX L = relator_linearization(mod);
  const KernelResult kr = kernel_of(L, rank_rel, rank_band);
  out.z1 = kr.kernel;
  out.z1_dim = kr.kernel_dim;
  out.z1_gap = kr.gap;

  MatX B(2 * mod.k * mod.dim, mod.dim);
  for (int c = 0; c < mod.dim; ++c) {
    VecX x = VecX::Zero(mod.dim);
    x(c) = 1.0;
    const Cocycle tau = coboundary(x, mod);
    for (int j = 0; j < 2 * mod.k; ++j) {
      B.block(j * mod.dim, c, mod.dim, 1) = tau[j];
    }
  }
  Eigen::JacobiSVD<MatX> svd(B, Eigen::ComputeThinU);
  const VecX sv = svd.singularValues();
  const double cut = 1e-10 * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }
  out.b1 = svd.matrixU().leftCols(rank);
  out.b1_dim = rank;
  out.b1_gap = rank < sv.size()
                   ? sv(rank - 1) / std::max(sv(rank), 1e-300)
                   : std::numeric_limits<double>::infinity();
  out.h1_dim = out.z1_dim - out.b1_dim;
  return out;
}

Cocycle cocycle_from_column(const MatX& z1, int col, int k, int dim) {
  Cocycle tau(2 * k);
  for (int j = 0; j < 2 * k; ++j) {
    tau[j] = z1.block(j * dim, col, dim, 1);
  }
  return tau;
}

Cocycle cocycle_from_vector(const VecX& v, int k, int dim) {
  Cocycle tau(2 * k);
  for (int j = 0; j < 2 * k; ++j) {
    tau[j] = v.segment(j * dim, dim);
  }
  return tau;
}

Rep deform_rep(const Rep& base, const Cocycle& direction, double step,
               const Tolerances& tol) {
  Rep cur = base;
  for (int j = 0; j < 2 * base.k; ++j) {
    if (direction[j].size() != 6) {
      throw ConfigError("deformation directions must be pair-algebra valued");
    }
    cur.left[j] =
        exp_sl2(step * sl2_of(direction[j].head<3>())) * base.left[j];
    cur.right[j] =
        exp_sl2(step * sl2_of(direction[j].tail<3>())) * base.right[j];
  }
  const Word rel = relator_word(base.k);
  for (int it = 0; it < 50; ++it) {
    const auto [RL, RR] = cur.evaluate(rel);
    Vec6 r;
    r.head<3>() = sl2_coords(log_psl2(RL));
    r.tail<3>() = sl2_coords(log_psl2(RR));
    if (r.norm() < tol.newton) return cur;
    const MatX J = relator_linearization(make_module_pair(cur));
    const VecX delta = lstsq(J, -r);
    for (int j = 0; j < 2 * base.k; ++j) {
      cur.left[j] =
          exp_sl2(sl2_of(delta.segment<3>(6 * j))) * cur.left[j];
      cur.right[j] =
          exp_sl2(sl2_of(delta.segment<3>(6 * j + 3))) * cur.right[j];
    }
  }
  throw NewtonDivergence("relator projection did not reach " +
                         std::to_string(tol.newton) + " in 50 iterations");
}

double conjugation_fit_residual(const Rep& base, const Rep& deformed) {
  // Linear model: deformed_j ~ base_j + kappa base_j - base_j kappa,
  // separately in the left and right factors; one kappa pair fits all.
  const int m = 2 * base.k;
  MatX A(8 * m, 6);
  VecX b(8 * m);
  A.setZero();
  for (int j = 0; j < m; ++j) {
    for (int c = 0; c < 3; ++c) {
      const Mat2 E = sl2_basis(c);
      const Mat2 dl = E * base.left[j] - base.left[j] * E;
      const Mat2 dr = E * base.right[j] - base.right[j] * E;
      for (int e = 0; e < 4; ++e) {
        A(8 * j + e, c) = dl(e / 2, e % 2);
        A(8 * j + 4 + e, 3 + c) = dr(e / 2, e % 2);
      }
    }
    const Mat2 DL = deformed.left[j] - base.left[j];
    const Mat2 DR = deformed.right[j] - base.right[j];
    for (int e = 0; e < 4; ++e) {
      b(8 * j + e) = DL(e / 2, e % 2);
      b(8 * j + 4 + e) = DR(e / 2, e % 2);
    }
  }
  const VecX x = lstsq(A, b);
  return (A * x - b).norm();
}

Mat2 cross_product_iso(const Vec3& x) { return sl2_of(x); }

Vec3 cross_product_iso_inv(const Mat2& xi) { return sl2_coords(xi); }

}  // namespace adslab
