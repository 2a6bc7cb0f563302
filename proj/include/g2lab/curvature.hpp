#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2lab/g2.hpp"

namespace g2lab {

template <typename Scalar>
using PairMatrix = Eigen::Matrix<Scalar, 21, 21>;

/// Dense 7⁴ component array T[i][j][k][l].
template <typename Scalar>
struct Tensor4 {
  std::vector<Scalar> v = std::vector<Scalar>(2401, Scalar(0));
  Scalar& operator()(int i, int j, int k, int l) { return v[((i * 7 + j) * 7 + k) * 7 + l]; }
  const Scalar& operator()(int i, int j, int k, int l) const { return v[((i * 7 + j) * 7 + k) * 7 + l]; }
  Scalar norm2() const {
    Scalar s(0);
    for (const auto& x : v) s += x * x;
    return s;
  }
  double max_abs() const {
    Scalar best(0);
    for (const auto& x : v) {
      const Scalar a = abs_value<Scalar>(x);
      if (a > best) best = a;
    }
    return to_double(best);
  }
};

/// Position of the pair (i,j), i<j, in the lexicographic Λ² basis.
inline int pair_index(int i, int j) { return basis_position((1u << i) | (1u << j)); }

/// Element of S²(Λ²) stored as a symmetric 21×21 matrix over the pair basis.
template <typename Scalar>
struct CurvatureTensor {
  PairMatrix<Scalar> pairs = PairMatrix<Scalar>::Zero();

  CurvatureTensor& operator+=(const CurvatureTensor& o) {
    pairs += o.pairs;
    return *this;
  }
  CurvatureTensor& operator-=(const CurvatureTensor& o) {
    pairs -= o.pairs;
    return *this;
  }
  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) { return a += b; }
  friend CurvatureTensor operator-(CurvatureTensor a, const CurvatureTensor& b) { return a -= b; }
  friend CurvatureTensor operator*(const Scalar& s, CurvatureTensor a) {
    a.pairs *= s;
    return a;
  }

  /// R(e_i, e_j, e_k, e_l) for 0-based indices.
  Scalar operator()(int i, int j, int k, int l) const {
    if (i == j || k == l) return Scalar(0);
    Scalar v = pairs(pair_index(std::min(i, j), std::max(i, j)), pair_index(std::min(k, l), std::max(k, l)));
    if ((i > j) != (k > l)) v = -v;
    return v;
  }
};

template <typename Scalar>
Tensor4<Scalar> to_full(const CurvatureTensor<Scalar>& r) {
  Tensor4<Scalar> t;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = 0; l < 7; ++l) t(i, j, k, l) = r(i, j, k, l);
  return t;
}

/// Reads the i<j, k<l components of a full array.
template <typename Scalar>
CurvatureTensor<Scalar> from_full(const Tensor4<Scalar>& t) {
  CurvatureTensor<Scalar> r;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = k + 1; l < 7; ++l) r.pairs(pair_index(i, j), pair_index(k, l)) = t(i, j, k, l);
  return r;
}

/// (bT)_{ijkl} = T_{ijkl} + T_{jkil} + T_{kijl}.
template <typename Scalar>
Tensor4<Scalar> bianchi_b(const Tensor4<Scalar>& t) {
  Tensor4<Scalar> b;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = 0; l < 7; ++l) b(i, j, k, l) = t(i, j, k, l) + t(j, k, i, l) + t(k, i, j, l);
  return b;
}

template <typename Scalar>
Tensor4<Scalar> bianchi_b(const CurvatureTensor<Scalar>& r) {
  return bianchi_b(to_full(r));
}

template <typename Scalar>
double bianchi_residual(const CurvatureTensor<Scalar>& r) {
  return bianchi_b(r).max_abs();
}

/// Tensor norm² Σ_{ijkl} R_{ijkl}².
template <typename Scalar>
Scalar norm2(const CurvatureTensor<Scalar>& r) {
  return Scalar(4) * r.pairs.squaredNorm();
}

template <typename Scalar>
Scalar inner(const CurvatureTensor<Scalar>& a, const CurvatureTensor<Scalar>& b) {
  return Scalar(4) * a.pairs.cwiseProduct(b.pairs).sum();
}

/// c^g(r)(u,v) = r(u, e_i, e_i, v).
template <typename Scalar>
Matrix7<Scalar> ricci(const CurvatureTensor<Scalar>& r) {
  Matrix7<Scalar> ric = Matrix7<Scalar>::Zero();
  for (int u = 0; u < 7; ++u)
    for (int v = 0; v < 7; ++v)
      for (int i = 0; i < 7; ++i) ric(u, v) += r(u, i, i, v);
  return ric;
}

template <typename Scalar>
Scalar scalar_curvature(const CurvatureTensor<Scalar>& r) {
  return ricci(r).trace();
}

/// c^φ(r)(u,v) = 4 r(u⌟φ, v⌟φ) = Σ φ_{uij} R_{ijkl} φ_{vkl}.
template <typename Scalar>
Matrix7<Scalar> phi_ricci(const CurvatureTensor<Scalar>& r) {
  const Form<Scalar> phi = standard_phi<Scalar>();
  Eigen::Matrix<Scalar, 21, 7> a;
  for (int u = 0; u < 7; ++u) a.col(u) = interior(u, phi).coeffs;
  return Matrix7<Scalar>(a.transpose() * r.pairs * a) * Scalar(4);
}

/// Kulkarni–Nomizu product r_g(h)_{xyzw} = h_yz g_xw − h_xz g_yw + h_xw g_yz − h_yw g_xz.
template <typename Scalar>
CurvatureTensor<Scalar> kn_product(const Matrix7<Scalar>& h) {
  CurvatureTensor<Scalar> r;
  auto g = [](int a, int b) { return a == b ? Scalar(1) : Scalar(0); };
  for (int x = 0; x < 7; ++x)
    for (int y = x + 1; y < 7; ++y)
      for (int z = 0; z < 7; ++z)
        for (int w = z + 1; w < 7; ++w)
          r.pairs(pair_index(x, y), pair_index(z, w)) =
              h(y, z) * g(x, w) - h(x, z) * g(y, w) + h(x, w) * g(y, z) - h(y, w) * g(x, z);
  return r;
}

/// r_φ(h) = X − ⅓ b(X) with X_{ijkl} = h_pq φ_{pij} φ_{qkl}.
template <typename Scalar>
CurvatureTensor<Scalar> phi_product(const Matrix7<Scalar>& h) {
  const Form<Scalar> phi = standard_phi<Scalar>();
  Eigen::Matrix<Scalar, 21, 7> a;
  for (int p = 0; p < 7; ++p) a.col(p) = interior(p, phi).coeffs;
  CurvatureTensor<Scalar> x;
  x.pairs = a * h * a.transpose();
  const Tensor4<Scalar> full = to_full(x);
  const Tensor4<Scalar> b = bianchi_b(full);
  Tensor4<Scalar> out;
  for (std::size_t n = 0; n < out.v.size(); ++n) out.v[n] = full.v[n] - b.v[n] / Scalar(3);
  return from_full(out);
}

/// Ric₀^k = k₁ Ric₀^g + k₂ Ric₀^φ.
template <typename Scalar>
Matrix7<Scalar> generalized_ricci(const CurvatureTensor<Scalar>& r, const Scalar& k1, const Scalar& k2) {
  return Matrix7<Scalar>(traceless_part<Scalar>(ricci(r)) * k1 + traceless_part<Scalar>(phi_ricci(r)) * k2);
}

/// Ric^W = (4Ric₀^g − 5Ric₀^φ)/20.
template <typename Scalar>
Matrix7<Scalar> ric_W(const CurvatureTensor<Scalar>& r) {
  return Matrix7<Scalar>(generalized_ricci(r, Scalar(4), Scalar(-5)) / Scalar(20));
}

template <typename Scalar>
struct CurvatureDecomposition {
  CurvatureTensor<Scalar> W77;
  CurvatureTensor<Scalar> W64;
  CurvatureTensor<Scalar> W27;
  CurvatureTensor<Scalar> ricci_block;
  CurvatureTensor<Scalar> scalar_block;
  Matrix7<Scalar> ric0;
  Matrix7<Scalar> ric_w;
  Scalar scalar;

  CurvatureTensor<Scalar> sum() const { return W77 + W64 + W27 + ricci_block + scalar_block; }
};

/// Five-block G₂ decomposition of an algebraic curvature tensor; rejects non-Bianchi input.
template <typename Scalar>
CurvatureDecomposition<Scalar> decompose(const CurvatureTensor<Scalar>& r, double bianchi_tol = 1e-10) {
  const double res = bianchi_residual(r);
  if (res > bianchi_tol)
    throw std::domain_error("decompose: first Bianchi identity fails with residual " + std::to_string(res));
  CurvatureDecomposition<Scalar> d;
  const Matrix7<Scalar> id = Matrix7<Scalar>::Identity();
  const Matrix7<Scalar> ric = ricci(r);
  d.scalar = ric.trace();
  d.ric0 = traceless_part<Scalar>(ric);
  d.ric_w = ric_W(r);
  d.scalar_block = (d.scalar / Scalar(84)) * kn_product<Scalar>(id);
  d.ricci_block = (Scalar(1) / Scalar(5)) * kn_product<Scalar>(d.ric0);
  d.W27 = (Scalar(3) / Scalar(112)) * (kn_product<Scalar>(d.ric_w) - Scalar(5) * phi_product<Scalar>(d.ric_w));
  const PairMatrix<Scalar> x = (r - d.scalar_block - d.ricci_block - d.W27).pairs;
  const PairMatrix<Scalar> q7 = projector_matrix<Scalar>({2, 7});
  const PairMatrix<Scalar> q14 = projector_matrix<Scalar>({2, 14});
  d.W64.pairs = q7 * x * q14 + q14 * x * q7;
  d.W77.pairs = q14 * x * q14;
  return d;
}

/// ‖R‖² − (‖W₇₇‖² + ‖W₆₄‖² + 15/28‖Ric^W‖² + 4/5‖Ric₀‖² + s²/21).
template <typename Scalar>
Scalar norm_identity_defect(const CurvatureTensor<Scalar>& r, const CurvatureDecomposition<Scalar>& d) {
  return norm2(r) - (norm2(d.W77) + norm2(d.W64) + Scalar(15) / Scalar(28) * d.ric_w.squaredNorm() +
                     Scalar(4) / Scalar(5) * d.ric0.squaredNorm() + d.scalar * d.scalar / Scalar(21));
}

/// Random algebraic curvature tensor: a random symmetric pair matrix projected onto ker b.
inline CurvatureTensor<double> random_algebraic_curvature(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  CurvatureTensor<double> r;
  for (int a = 0; a < 21; ++a)
    for (int b = a; b < 21; ++b) r.pairs(a, b) = r.pairs(b, a) = dist(gen);
  const Tensor4<double> full = to_full(r);
  const Tensor4<double> b = bianchi_b(full);
  Tensor4<double> out;
  for (std::size_t n = 0; n < out.v.size(); ++n) out.v[n] = full.v[n] - b.v[n] / 3.0;
  return from_full(out);
}

/// Dimension of ker b inside S²(Λ²), from the numerical rank of b.
inline int bianchi_kernel_dimension() {
  Eigen::MatrixXd m(2401, 231);
  int col = 0;
  for (int a = 0; a < 21; ++a)
    for (int b = a; b < 21; ++b) {
      CurvatureTensor<double> r;
      r.pairs(a, b) = r.pairs(b, a) = 1.0;
      m.col(col++) = Eigen::Map<const Eigen::VectorXd>(bianchi_b(r).v.data(), 2401);
    }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return 231 - static_cast<int>(lu.rank());
}

/// Nearly parallel curvature: W + τ₀²/32 r_g(g).
template <typename Scalar>
CurvatureTensor<Scalar> nearly_parallel_curvature(const CurvatureTensor<Scalar>& w77, const Scalar& tau0) {
  return w77 + (tau0 * tau0 / Scalar(32)) * kn_product<Scalar>(Matrix7<Scalar>::Identity());
}

}  // namespace g2lab
