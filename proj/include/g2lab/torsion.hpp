#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2lab/g2.hpp"

namespace g2lab {

/// Torsion forms of a G₂ structure: dφ = τ₀*φ + 3τ₁∧φ + *τ₃, d*φ = 4τ₁∧*φ + τ₂∧φ.
template <typename Scalar>
struct TorsionComponents {
  Scalar tau0 = Scalar(0);
  Form<Scalar> tau1 = Form<Scalar>(1);
  Form<Scalar> tau2 = Form<Scalar>(2);
  Form<Scalar> tau3 = Form<Scalar>(3);
};

template <typename Scalar>
struct StructureDifferentials {
  Form<Scalar> dphi = Form<Scalar>(4);
  Form<Scalar> dstarphi = Form<Scalar>(5);
};

/// Largest component of the off-submodule parts of τ₂ and τ₃.
template <typename Scalar>
double submodule_defect(const TorsionComponents<Scalar>& t) {
  return std::max(max_abs(t.tau2 - project(t.tau2, 14)), max_abs(t.tau3 - project(t.tau3, 27)));
}

/// dφ and d*φ assembled from the torsion forms.
template <typename Scalar>
StructureDifferentials<Scalar> recompose(const TorsionComponents<Scalar>& t, double tol = 0.0) {
  const double defect = submodule_defect(t);
  if (defect > tol)
    throw std::domain_error("recompose: torsion forms leave their submodules (defect " + std::to_string(defect) + ")");
  const Form<Scalar> phi = standard_phi<Scalar>();
  const Form<Scalar> psi = standard_phi_dual<Scalar>();
  StructureDifferentials<Scalar> s;
  s.dphi = t.tau0 * psi + Scalar(3) * wedge(t.tau1, phi) + hodge(t.tau3);
  s.dstarphi = Scalar(4) * wedge(t.tau1, psi) + wedge(t.tau2, phi);
  return s;
}

/// Torsion forms from dφ and d*φ in an adapted frame; rejects data outside the image of recompose.
template <typename Scalar>
TorsionComponents<Scalar> extract_torsion(const Form<Scalar>& phi, const Form<Scalar>& dphi,
                                          const Form<Scalar>& dstarphi, double tol = 0.0) {
  if (phi.degree != 3 || dphi.degree != 4 || dstarphi.degree != 5)
    throw std::invalid_argument("extract_torsion: expected degrees 3, 4, 5");
  const Form<Scalar> std_phi = standard_phi<Scalar>();
  if (max_abs(phi - std_phi) > tol) throw std::domain_error("extract_torsion: frame is not adapted to phi");
  const Form<Scalar> psi = standard_phi_dual<Scalar>();
  TorsionComponents<Scalar> t;
  t.tau0 = inner(dphi, psi) / Scalar(7);
  const Form<Scalar> rest = dphi - t.tau0 * psi;
  t.tau1 = hodge(wedge(std_phi, hodge(rest))) / Scalar(12);
  t.tau3 = hodge(rest - Scalar(3) * wedge(t.tau1, std_phi));
  const double res3 = max_abs(t.tau3 - project(t.tau3, 27));
  if (res3 > tol)
    throw std::domain_error("extract_torsion: dphi has no torsion preimage (residual " + std::to_string(res3) + ")");
  t.tau2 = -hodge(dstarphi - Scalar(4) * wedge(t.tau1, psi));
  const double res2 = max_abs(t.tau2 - project(t.tau2, 14));
  if (res2 > tol)
    throw std::domain_error("extract_torsion: d*phi is inconsistent with dphi (residual " + std::to_string(res2) +
                            ")");
  return t;
}

/// Fernández–Gray classes present: 1 ↔ τ₀, 2 ↔ τ₂, 3 ↔ τ₃, 4 ↔ τ₁.
template <typename Scalar>
std::set<int> fg_type(const TorsionComponents<Scalar>& t, double eps = 1e-9) {
  const StructureDifferentials<Scalar> s = recompose(t, 1e300);
  const double scale = std::max(1.0, std::sqrt(to_double(Scalar(norm2(s.dphi) + norm2(s.dstarphi)))));
  const double cut = eps * scale;
  std::set<int> out;
  if (std::abs(to_double(t.tau0)) > cut) out.insert(1);
  if (std::sqrt(to_double(norm2(t.tau2))) > cut) out.insert(2);
  if (std::sqrt(to_double(norm2(t.tau3))) > cut) out.insert(3);
  if (std::sqrt(to_double(norm2(t.tau1))) > cut) out.insert(4);
  return out;
}

inline std::string type_label(const std::set<int>& classes) {
  std::string s = "{";
  for (int c : classes) {
    if (s.size() > 1) s += ",";
    s += std::to_string(c);
  }
  return s + "}";
}

/// Intrinsic torsion ξ_{ijk} and its 2-tensor form ξ̄_{ij} = ξ_{ipq}φ_{pqj}.
template <typename Scalar>
struct IntrinsicTorsion {
  Matrix7<Scalar> xi_bar = Matrix7<Scalar>::Zero();
  std::array<Matrix7<Scalar>, 7> xi{};
};

template <typename Scalar>
Matrix7<Scalar> skew_matrix(const Form<Scalar>& a) {
  Matrix7<Scalar> m = Matrix7<Scalar>::Zero();
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      m(i, j) = a[basis_position((1u << i) | (1u << j))];
      m(j, i) = -m(i, j);
    }
  return m;
}

template <typename Scalar>
Form<Scalar> two_form_of(const Matrix7<Scalar>& m) {
  Form<Scalar> a(2);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) a[basis_position((1u << i) | (1u << j))] = (m(i, j) - m(j, i)) / Scalar(2);
  return a;
}

/// ξ_i as the skew matrix (1/6) ξ̄_{ip} φ_{p··}.
template <typename Scalar>
std::array<Matrix7<Scalar>, 7> xi_from_bar(const Matrix7<Scalar>& xi_bar) {
  const Form<Scalar> phi = standard_phi<Scalar>();
  std::array<Matrix7<Scalar>, 7> phi_rows;
  for (int p = 0; p < 7; ++p) phi_rows[p] = skew_matrix(interior(p, phi));
  std::array<Matrix7<Scalar>, 7> xi;
  for (int i = 0; i < 7; ++i) {
    xi[i] = Matrix7<Scalar>::Zero();
    for (int p = 0; p < 7; ++p)
      if (xi_bar(i, p) != Scalar(0)) xi[i] += phi_rows[p] * Scalar(xi_bar(i, p) / Scalar(6));
  }
  return xi;
}

/// *(τ₁ ∧ *φ), the 2-form in Λ²₇ attached to τ₁.
template <typename Scalar>
Form<Scalar> vector_dual(const Form<Scalar>& tau1) {
  return hodge(wedge(tau1, standard_phi_dual<Scalar>()));
}

template <typename Scalar>
IntrinsicTorsion<Scalar> intrinsic_from_torsion(const TorsionComponents<Scalar>& t) {
  IntrinsicTorsion<Scalar> x;
  const Form<Scalar> skew = t.tau2 + Scalar(2) * vector_dual(t.tau1);
  x.xi_bar = Matrix7<Scalar>::Identity() * Scalar(-t.tau0 / Scalar(2)) + skew_matrix(skew) + sigma_contract(t.tau3);
  x.xi = xi_from_bar(x.xi_bar);
  return x;
}

/// Re-projects ξ̄ onto the torsion forms.
template <typename Scalar>
TorsionComponents<Scalar> torsion_from_intrinsic(const Matrix7<Scalar>& xi_bar) {
  TorsionComponents<Scalar> t;
  t.tau0 = Scalar(-2) * xi_bar.trace() / Scalar(7);
  const Form<Scalar> skew = two_form_of(xi_bar);
  t.tau2 = project(skew, 14);
  t.tau1 = hodge(wedge(standard_phi_dual<Scalar>(), project(skew, 7))) / Scalar(6);
  t.tau3 = lambda3<Scalar>(traceless_part<Scalar>(symmetric_part<Scalar>(xi_bar))) / Scalar(2);
  return t;
}

/// s = 21/8 τ₀² + 12δτ₁ + 30|τ₁|² − ½|τ₂|² − ½|τ₃|².
template <typename Scalar>
Scalar scalar_from_torsion(const TorsionComponents<Scalar>& t, const Scalar& delta_tau1) {
  return Scalar(21) / Scalar(8) * t.tau0 * t.tau0 + Scalar(12) * delta_tau1 + Scalar(30) * norm2(t.tau1) -
         norm2(t.tau2) / Scalar(2) - norm2(t.tau3) / Scalar(2);
}

/// Quadratic identities of a 2-form in Λ²₁₄ (form norms throughout).
template <typename Scalar>
std::vector<NamedResidual> closed_identities(const Form<Scalar>& tau, double tol = 0.0) {
  if (tau.degree != 2 || max_abs(tau - project(tau, 14)) > tol)
    throw std::domain_error("closed_identities: expected a 2-form in Lambda^2_14");
  const Form<Scalar> tt = wedge(tau, tau);
  const Scalar n2 = norm2(tau);
  const Form<Scalar> tt27 = project(tt, 27);
  return {{"*(tau^tau^phi) = -|tau|^2",
           std::abs(to_double(Scalar(top_coefficient(wedge(tt, standard_phi<Scalar>())) + n2)))},
          {"|tau^tau|^2 = |tau|^4", std::abs(to_double(Scalar(norm2(tt) - n2 * n2)))},
          {"|(tau^tau)_27|^2 = 6/7 |tau|^4", std::abs(to_double(Scalar(norm2(tt27) - Scalar(6) / Scalar(7) * n2 * n2)))}};
}

/// Torsion forms after the conformal change φ ↦ e^{3f}φ, expressed in the original coframe.
template <typename Scalar>
TorsionComponents<Scalar> conformal_transform(const TorsionComponents<Scalar>& t, const Scalar& f0,
                                              const Form<Scalar>& df) {
  const Scalar ef = exp_value(f0);
  TorsionComponents<Scalar> out;
  out.tau0 = t.tau0 / ef;
  out.tau1 = t.tau1 + df;
  out.tau2 = ef * t.tau2;
  out.tau3 = (ef * ef) * t.tau3;
  return out;
}

/// Torsion forms together with the exterior derivatives that enter the Ricci formula.
template <typename Scalar>
struct TorsionJet {
  TorsionComponents<Scalar> torsion;
  Form<Scalar> d_vector_dual = Form<Scalar>(3);  ///< d*(τ₁∧*φ)
  Form<Scalar> d_tau2 = Form<Scalar>(3);
  Form<Scalar> d_tau3 = Form<Scalar>(4);
};

/// Same data with canonical-connection exterior derivatives d^∇̄.
template <typename Scalar>
struct CanonicalTorsionJet {
  TorsionComponents<Scalar> torsion;
  Form<Scalar> d_vector_dual = Form<Scalar>(3);
  Form<Scalar> d_tau2 = Form<Scalar>(3);
  Form<Scalar> d_tau3 = Form<Scalar>(4);
};

/// p³₂₇ of the torsion expression for λ₃(k₁Ric₀^g + k₂Ric₀^φ) in terms of exterior derivatives.
template <typename Scalar>
Form<Scalar> ricci_rhs_exterior(const TorsionJet<Scalar>& j, const Scalar& k1, const Scalar& k2) {
  const auto& t = j.torsion;
  const Form<Scalar> x = vector_dual(t.tau1);
  const Scalar half = Scalar(1) / Scalar(2);
  Form<Scalar> r = -(Scalar(5) * k1 + Scalar(4) * k2) * j.d_vector_dual;
  r += Scalar(2) * (Scalar(5) * k1 + Scalar(4) * k2) * wedge(t.tau1, x);
  r -= (k1 - Scalar(4) * k2) * j.d_tau2;
  r += half * (k1 + Scalar(2) * k2) * hodge(wedge(t.tau2, t.tau2));
  r += (k1 + Scalar(4) * k2) * hodge(j.d_tau3);
  r += k2 * quad_A(t.tau3);
  r += half * k1 * quad_B(t.tau3);
  r -= half * (k1 - Scalar(4) * k2) * t.tau0 * t.tau3;
  r += (k1 - Scalar(4) * k2) * wedge(t.tau1, t.tau2);
  r += (Scalar(3) * k1 - Scalar(4) * k2) * hodge(wedge(t.tau1, t.tau3));
  r += Scalar(2) * k2 * odot_bracket(t.tau2, t.tau3);
  return project(r, 27);
}

/// p³₂₇ of the same expression written with canonical-connection derivatives.
template <typename Scalar>
Form<Scalar> ricci_rhs_canonical(const CanonicalTorsionJet<Scalar>& j, const Scalar& k1, const Scalar& k2) {
  const auto& t = j.torsion;
  const Form<Scalar> x = vector_dual(t.tau1);
  const Scalar c54 = Scalar(5) * k1 + Scalar(4) * k2;
  const Scalar c14 = k1 - Scalar(4) * k2;
  const Scalar c12 = k1 - Scalar(2) * k2;
  Form<Scalar> r = -c54 * j.d_vector_dual;
  r -= Scalar(2) / Scalar(3) * c54 * wedge(t.tau1, x);
  r -= c14 * j.d_tau2;
  r += (k1 + Scalar(5) * k2) / Scalar(3) * hodge(wedge(t.tau2, t.tau2));
  r += (k1 + Scalar(4) * k2) * hodge(j.d_tau3);
  r -= c12 / Scalar(6) * quad_C(t.tau3);
  r -= Scalar(2) / Scalar(3) * c12 * t.tau0 * t.tau3;
  r -= Scalar(4) / Scalar(3) * (k1 + Scalar(2) * k2) * wedge(t.tau1, t.tau2);
  r += Scalar(2) / Scalar(3) * c14 * hodge(wedge(t.tau1, t.tau3));
  r += (k1 + Scalar(8) * k2) / Scalar(6) * odot_bracket(t.tau2, t.tau3);
  return project(r, 27);
}

/// Defects of the three identities converting exterior derivatives of τ into canonical ones.
template <typename Scalar>
std::array<Form<Scalar>, 3> derivative_conversion_defects(const TorsionJet<Scalar>& e,
                                                          const CanonicalTorsionJet<Scalar>& c) {
  const auto& t = e.torsion;
  const Form<Scalar> phi = standard_phi<Scalar>();
  const Form<Scalar> psi = standard_phi_dual<Scalar>();
  const Form<Scalar> x = vector_dual(t.tau1);
  const Scalar sixth = Scalar(1) / Scalar(6);
  const Form<Scalar> t12 = wedge(t.tau1, t.tau2);
  const Form<Scalar> t13 = wedge(t.tau1, t.tau3);

  Form<Scalar> p1 = c.d_vector_dual + Scalar(1) / Scalar(2) * hodge(t.tau0 * wedge(t.tau1, phi)) +
                    Scalar(8) / Scalar(3) * wedge(t.tau1, x) - Scalar(2) * norm2(t.tau1) * phi +
                    Scalar(1) / Scalar(3) * t12 - Scalar(4) / Scalar(3) * project(t12, 7) +
                    Scalar(2) / Scalar(3) * hodge(t13) - Scalar(4) / Scalar(3) * project(hodge(t13), 7);
  Form<Scalar> p2 = c.d_tau2 + Scalar(2) / Scalar(3) * t12 - Scalar(8) / Scalar(3) * project(t12, 7) +
                    sixth * hodge(wedge(t.tau2, t.tau2)) + sixth * norm2(t.tau2) * phi -
                    sixth * odot_bracket(t.tau2, t.tau3) + sixth * hodge(wedge(contract(t.tau2, t.tau3), phi));
  Form<Scalar> p3 = c.d_tau3 - sixth * hodge(t.tau0 * t.tau3) + t13 - Scalar(8) / Scalar(3) * project(t13, 7) -
                    sixth * wedge(contract(t.tau2, t.tau3), phi) - sixth * hodge(quad_A(t.tau3)) -
                    sixth * hodge(quad_B(t.tau3)) + sixth * norm2(t.tau3) * psi;
  return {e.d_vector_dual - p1, e.d_tau2 - p2, e.d_tau3 - p3};
}

/// Jet after φ ↦ e^{3f}φ, in the new orthonormal coframe e^f e^i.
///
/// f0, df are the value and differential of f at the point; hessian_term is d*(df∧*φ) there.
template <typename Scalar>
TorsionJet<Scalar> conformal_transform_jet(const TorsionJet<Scalar>& j, const Scalar& f0, const Form<Scalar>& df,
                                           const Form<Scalar>& hessian_term) {
  const Scalar e1 = Scalar(1) / exp_value(f0);
  const Scalar e2 = e1 * e1;
  const auto& t = j.torsion;
  const Form<Scalar> shifted = t.tau1 + df;
  TorsionJet<Scalar> out;
  out.torsion.tau0 = e1 * t.tau0;
  out.torsion.tau1 = e1 * shifted;
  out.torsion.tau2 = e1 * t.tau2;
  out.torsion.tau3 = e1 * t.tau3;
  out.d_vector_dual = e2 * (wedge(df, vector_dual(shifted)) + j.d_vector_dual + hessian_term);
  out.d_tau2 = e2 * (wedge(df, t.tau2) + j.d_tau2);
  out.d_tau3 = e2 * (Scalar(2) * wedge(df, t.tau3) + j.d_tau3);
  return out;
}

}  // namespace g2lab
