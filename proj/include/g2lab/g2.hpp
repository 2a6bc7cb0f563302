#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "g2lab/exterior.hpp"

namespace g2lab {

/// Irreducible G₂ summand Λ^r_d of the exterior algebra.
struct IrredLabel {
  int degree;
  int dim;
  bool operator<(const IrredLabel& o) const { return std::pair(degree, dim) < std::pair(o.degree, o.dim); }
  bool operator==(const IrredLabel& o) const { return degree == o.degree && dim == o.dim; }
};

inline bool is_valid(IrredLabel l) {
  switch (l.degree) {
    case 0:
    case 7: return l.dim == 1;
    case 1:
    case 6: return l.dim == 7;
    case 2:
    case 5: return l.dim == 7 || l.dim == 14;
    case 3:
    case 4: return l.dim == 1 || l.dim == 7 || l.dim == 27;
    default: return false;
  }
}

/// The labels occurring in a given degree.
inline std::vector<IrredLabel> labels_of_degree(int r) {
  std::vector<IrredLabel> out;
  for (int d : {1, 7, 14, 27})
    if (is_valid({r, d})) out.push_back({r, d});
  return out;
}

namespace detail {

template <typename Scalar>
Form<Scalar> project_low(const Form<Scalar>& a, int dim) {
  const Form<Scalar> phi = standard_phi<Scalar>();
  if (a.degree == 2) {
    const Form<Scalar> t = hodge(wedge(a, phi));
    if (dim == 7) return (a + t) / Scalar(3);
    return (Scalar(2) * a - t) / Scalar(3);
  }
  // degree 3
  const Form<Scalar> p1 = (hodge(wedge(standard_phi_dual<Scalar>(), a))[0] / Scalar(7)) * phi;
  const Form<Scalar> p7 = hodge(wedge(hodge(wedge(phi, a)), phi)) / Scalar(4);
  if (dim == 1) return p1;
  if (dim == 7) return p7;
  return a - p1 - p7;
}

}  // namespace detail

/// Orthogonal projection onto Λ^r_d.
template <typename Scalar>
Form<Scalar> project(const Form<Scalar>& a, IrredLabel label) {
  if (!is_valid(label)) throw std::invalid_argument("project: invalid (degree, dim) pair");
  if (a.degree != label.degree) throw std::invalid_argument("project: degree mismatch");
  const int r = a.degree;
  if (r <= 1 || r >= 6) return a;
  if (r <= 3) return detail::project_low(a, label.dim);
  return hodge(detail::project_low(hodge(a), label.dim));
}

template <typename Scalar>
Form<Scalar> project(const Form<Scalar>& a, int dim) {
  return project(a, IrredLabel{a.degree, dim});
}

/// Matrix of project(·, label) in the sorted monomial basis; built once per label.
template <typename Scalar>
const MatrixX<Scalar>& projector_matrix(IrredLabel label) {
  static const std::map<IrredLabel, MatrixX<Scalar>> cache = [] {
    std::map<IrredLabel, MatrixX<Scalar>> m;
    for (int r = 0; r <= kDim; ++r)
      for (IrredLabel l : labels_of_degree(r)) {
        const int n = binomial(kDim, r);
        MatrixX<Scalar> P(n, n);
        for (int j = 0; j < n; ++j) {
          Form<Scalar> e(r);
          e[j] = Scalar(1);
          P.col(j) = project(e, l).coeffs;
        }
        m.emplace(l, std::move(P));
      }
    return m;
  }();
  if (!is_valid(label)) throw std::invalid_argument("projector_matrix: invalid (degree, dim) pair");
  return cache.at(label);
}

/// λ₃(h) = Σ h_ij e^i ∧ i_{e_j}φ.
template <typename Scalar>
Form<Scalar> lambda3(const Matrix7<Scalar>& h) {
  const Form<Scalar> phi = standard_phi<Scalar>();
  Form<Scalar> r(3);
  for (int j = 0; j < kDim; ++j) {
    Vector7<Scalar> col = h.col(j);
    if (col.isZero()) continue;
    r += wedge(one_form<Scalar>(col), interior(j, phi));
  }
  return r;
}

/// σ(a)(u,v) = ⟨i_uφ, i_v a⟩ in the form inner product.
template <typename Scalar>
Matrix7<Scalar> sigma_contract(const Form<Scalar>& a) {
  if (a.degree != 3) throw std::invalid_argument("sigma_contract: expected a 3-form");
  const Form<Scalar> phi = standard_phi<Scalar>();
  Matrix7<Scalar> s;
  for (int u = 0; u < kDim; ++u) {
    const Form<Scalar> iu = interior(u, phi);
    for (int v = 0; v < kDim; ++v) s(u, v) = inner(iu, interior(v, a));
  }
  return s;
}

/// σ(λ₃(h)) = kSigmaLambda3 · h for traceless symmetric h.
inline constexpr int kSigmaLambda3 = 2;

template <typename Scalar>
Matrix7<Scalar> traceless_part(const Matrix7<Scalar>& h) {
  return h - Matrix7<Scalar>::Identity() * Scalar(h.trace() / Scalar(kDim));
}

template <typename Scalar>
Matrix7<Scalar> symmetric_part(const Matrix7<Scalar>& h) {
  return (h + h.transpose()) / Scalar(2);
}

/// Inverse of λ₃ on Λ³₂₇; rejects inputs with a Λ³₁ or Λ³₇ part above tol.
template <typename Scalar>
Matrix7<Scalar> sym2_from_27(const Form<Scalar>& a, const Scalar& tol = Scalar(0)) {
  if (a.degree != 3) throw std::invalid_argument("sym2_from_27: expected a 3-form");
  const Form<Scalar> off = a - project(a, 27);
  if (max_abs(off) > to_double(tol))
    throw std::domain_error("sym2_from_27: input has a Lambda^3_1 + Lambda^3_7 part of size " +
                            std::to_string(max_abs(off)));
  return traceless_part<Scalar>(symmetric_part<Scalar>(sigma_contract(a))) / Scalar(kSigmaLambda3);
}

/// (α ⌟ β)(X) = ⟨α, i_X β⟩ for deg β = deg α + 1.
template <typename Scalar>
Form<Scalar> contract(const Form<Scalar>& alpha, const Form<Scalar>& beta) {
  if (beta.degree != alpha.degree + 1) throw std::invalid_argument("contract: degree mismatch");
  Form<Scalar> r(1);
  for (int c = 0; c < kDim; ++c) r[c] = inner(alpha, interior(c, beta));
  return r;
}

/// [α ⊙ β] = Σ_k i_{e_k}α ∧ i_{e_k}β.
template <typename Scalar>
Form<Scalar> odot_bracket(const Form<Scalar>& alpha, const Form<Scalar>& beta) {
  Form<Scalar> r(alpha.degree + beta.degree - 2);
  for (int k = 0; k < kDim; ++k) r += wedge(interior(k, alpha), interior(k, beta));
  return r;
}

/// [β²]^A = Σ_k *(i_{e_k}β ∧ i_{e_k}β).
template <typename Scalar>
Form<Scalar> quad_A(const Form<Scalar>& beta) {
  if (beta.degree != 3) throw std::invalid_argument("quad_A: expected a 3-form");
  Form<Scalar> r(3);
  for (int k = 0; k < kDim; ++k) {
    const Form<Scalar> b = interior(k, beta);
    r += hodge(wedge(b, b));
  }
  return r;
}

/// [β²]^B = Σ_k ((i_{e_k}φ) ⌟ β) ∧ i_{e_k}β.
template <typename Scalar>
Form<Scalar> quad_B(const Form<Scalar>& beta) {
  if (beta.degree != 3) throw std::invalid_argument("quad_B: expected a 3-form");
  const Form<Scalar> phi = standard_phi<Scalar>();
  Form<Scalar> r(3);
  for (int k = 0; k < kDim; ++k) r += wedge(contract(interior(k, phi), beta), interior(k, beta));
  return r;
}

/// [β²]^C = [β²]^A − 2[β²]^B.
template <typename Scalar>
Form<Scalar> quad_C(const Form<Scalar>& beta) {
  return quad_A(beta) - Scalar(2) * quad_B(beta);
}

/// Element of V* ⊗ Λ²: row t holds the 2-form paired with e^t.
template <typename Scalar>
struct MixedTensor {
  Eigen::Matrix<Scalar, 7, 21> slots = Eigen::Matrix<Scalar, 7, 21>::Zero();

  Form<Scalar> slot(int t) const { return Form<Scalar>(2, VectorX<Scalar>(slots.row(t).transpose())); }
  void set_slot(int t, const Form<Scalar>& a) { slots.row(t) = a.coeffs.transpose(); }

  MixedTensor& operator+=(const MixedTensor& o) {
    slots += o.slots;
    return *this;
  }
  MixedTensor& operator-=(const MixedTensor& o) {
    slots -= o.slots;
    return *this;
  }
  friend MixedTensor operator+(MixedTensor a, const MixedTensor& b) { return a += b; }
  friend MixedTensor operator-(MixedTensor a, const MixedTensor& b) { return a -= b; }
  friend MixedTensor operator*(const Scalar& s, MixedTensor a) {
    a.slots *= s;
    return a;
  }
};

/// Tensor inner product (each 2-form slot counted with its full antisymmetric components).
template <typename Scalar>
Scalar tensor_inner(const MixedTensor<Scalar>& a, const MixedTensor<Scalar>& b) {
  return Scalar(2) * a.slots.cwiseProduct(b.slots).sum();
}

template <typename Scalar>
Scalar tensor_norm2(const MixedTensor<Scalar>& a) {
  return tensor_inner(a, a);
}

/// ∧₃(γ) = Σ_t e^t ∧ γ_t.
template <typename Scalar>
Form<Scalar> wedge3(const MixedTensor<Scalar>& g) {
  Form<Scalar> r(3);
  for (int t = 0; t < kDim; ++t) r += wedge(basis_one_form<Scalar>(t), g.slot(t));
  return r;
}

/// Inclusion Λ³ → V* ⊗ Λ², β ↦ Σ_t e^t ⊗ i_{e_t}β (the adjoint of ∧₃).
template <typename Scalar>
MixedTensor<Scalar> include3(const Form<Scalar>& beta) {
  MixedTensor<Scalar> g;
  for (int t = 0; t < kDim; ++t) g.set_slot(t, interior(t, beta));
  return g;
}

/// Orthogonal projection V* ⊗ Λ² → V* ⊗ Λ²₁₄.
template <typename Scalar>
MixedTensor<Scalar> project14(const MixedTensor<Scalar>& g) {
  MixedTensor<Scalar> r;
  for (int t = 0; t < kDim; ++t) r.set_slot(t, project(g.slot(t), 14));
  return r;
}

template <typename Scalar>
struct V14Split {
  MixedTensor<Scalar> part64;
  MixedTensor<Scalar> part27;
  MixedTensor<Scalar> part7;
};

/// Splits γ ∈ V* ⊗ Λ²₁₄ into its V₆₄, V₂₇ and V₇ components.
template <typename Scalar>
V14Split<Scalar> split_v14(const MixedTensor<Scalar>& gamma) {
  const Form<Scalar> w = wedge3(gamma);
  V14Split<Scalar> s;
  s.part27 = (Scalar(3) / Scalar(7)) * project14(include3(project(w, 27)));
  s.part7 = project14(include3(project(w, 7)));
  s.part64 = gamma - s.part27 - s.part7;
  return s;
}

/// γ′ = e⁷ ⊗ (e¹² − e³⁴).
template <typename Scalar>
MixedTensor<Scalar> gamma_prime() {
  MixedTensor<Scalar> g;
  g.set_slot(6, monomial<Scalar>({1, 2}) - monomial<Scalar>({3, 4}));
  return g;
}

/// γ″ = π(i(∧₃γ′)) − γ′.
template <typename Scalar>
MixedTensor<Scalar> gamma_double_prime() {
  const MixedTensor<Scalar> gp = gamma_prime<Scalar>();
  return project14(include3(wedge3(gp))) - gp;
}

}  // namespace g2lab
