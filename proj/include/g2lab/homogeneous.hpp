#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2lab/curvature.hpp"
#include "g2lab/torsion.hpp"

namespace g2lab {

/// One term coeff·e^{ij} of de^k, with 1-based indices.
template <typename Scalar>
struct CoframeTerm {
  int k;
  int i;
  int j;
  Scalar coeff;
};

/// Structure constants [e_i, e_j] = c[k](i,j) e_k, so that de^k = −Σ_{i<j} c[k](i,j) e^{ij}.
template <typename Scalar>
struct LieAlgebraSpec {
  std::string name;
  std::array<Matrix7<Scalar>, 7> c;

  LieAlgebraSpec() { c.fill(Matrix7<Scalar>::Zero()); }

  static LieAlgebraSpec from_terms(const std::vector<CoframeTerm<Scalar>>& terms, std::string name = {}) {
    LieAlgebraSpec s;
    s.name = std::move(name);
    for (const auto& t : terms) {
      if (t.k < 1 || t.k > 7 || t.i < 1 || t.i > 7 || t.j < 1 || t.j > 7)
        throw std::invalid_argument("coframe term index out of range 1..7");
      if (t.i == t.j) throw std::invalid_argument("coframe term e^{ii} is zero");
      s.c[t.k - 1](t.i - 1, t.j - 1) -= t.coeff;
      s.c[t.k - 1](t.j - 1, t.i - 1) += t.coeff;
    }
    return s;
  }

  /// The coframe terms de^k = Σ coeff e^{ij} with i<j.
  std::vector<CoframeTerm<Scalar>> to_terms() const {
    std::vector<CoframeTerm<Scalar>> out;
    for (int k = 0; k < 7; ++k)
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
          if (c[k](i, j) != Scalar(0)) out.push_back({k + 1, i + 1, j + 1, Scalar(-c[k](i, j))});
    return out;
  }

  template <typename Other>
  LieAlgebraSpec<Other> cast() const {
    LieAlgebraSpec<Other> s;
    s.name = name;
    for (int k = 0; k < 7; ++k) s.c[k] = c[k].template cast<Other>();
    return s;
  }
};

/// Γ[i](j,k) = g(∇_{e_i} e_j, e_k); each Γ[i] is a 7×7 matrix.
template <typename Scalar>
using Connection = std::array<Matrix7<Scalar>, 7>;

/// de^k as a 2-form.
template <typename Scalar>
Form<Scalar> d_basis_one_form(const LieAlgebraSpec<Scalar>& s, int k) {
  Form<Scalar> r(2);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) r[basis_position((1u << i) | (1u << j))] = -s.c[k](i, j);
  return r;
}

/// Exterior derivative of a left-invariant form.
template <typename Scalar>
Form<Scalar> invariant_d(const LieAlgebraSpec<Scalar>& s, const Form<Scalar>& a) {
  Form<Scalar> r(a.degree + 1);
  if (a.degree >= 7) return Form<Scalar>(7);
  std::array<Form<Scalar>, 7> de;
  for (int k = 0; k < 7; ++k) de[k] = d_basis_one_form(s, k);
  for (Eigen::Index n = 0; n < a.size(); ++n) {
    if (a[n] == Scalar(0)) continue;
    const unsigned mask = basis_mask(a.degree, static_cast<int>(n));
    int p = 0;
    for (int i = 0; i < 7; ++i) {
      if (!(mask & (1u << i))) continue;
      Form<Scalar> rest(a.degree - 1);
      rest[basis_position(mask & ~(1u << i))] = (p % 2 == 0) ? a[n] : Scalar(-a[n]);
      r += wedge(de[i], rest);
      ++p;
    }
  }
  return r;
}

/// Matrix of d on invariant k-forms in the sorted monomial bases.
template <typename Scalar>
MatrixX<Scalar> d_matrix(const LieAlgebraSpec<Scalar>& s, int k) {
  if (k < 0 || k > 6) throw std::invalid_argument("d_matrix: degree must lie in 0..6");
  MatrixX<Scalar> m(binomial(7, k + 1), binomial(7, k));
  for (int n = 0; n < binomial(7, k); ++n) {
    Form<Scalar> e(k);
    e[n] = Scalar(1);
    m.col(n) = invariant_d(s, e).coeffs;
  }
  return m;
}

/// Codifferential δ = (−1)^k *d* on k-forms.
template <typename Scalar>
Form<Scalar> invariant_delta(const LieAlgebraSpec<Scalar>& s, const Form<Scalar>& a) {
  if (a.degree == 0) return Form<Scalar>(0);
  const Form<Scalar> r = hodge(invariant_d(s, hodge(a)));
  return a.degree % 2 == 0 ? r : Form<Scalar>(-r);
}

/// Transpose of d acting on the invariant complex; equals δ exactly when the algebra is unimodular.
template <typename Scalar>
Form<Scalar> invariant_d_adjoint(const LieAlgebraSpec<Scalar>& s, const Form<Scalar>& a) {
  if (a.degree == 0) return Form<Scalar>(0);
  return Form<Scalar>(a.degree - 1, VectorX<Scalar>(d_matrix(s, a.degree - 1).transpose() * a.coeffs));
}

/// Largest |d(de^k)|; zero iff the Jacobi identity holds.
template <typename Scalar>
double jacobi_defect(const LieAlgebraSpec<Scalar>& s) {
  double worst = 0;
  for (int k = 0; k < 7; ++k) worst = std::max(worst, max_abs(invariant_d(s, d_basis_one_form(s, k))));
  return worst;
}

/// Largest |d∘d| over all degrees.
template <typename Scalar>
double d_squared_defect(const LieAlgebraSpec<Scalar>& s) {
  double worst = 0;
  for (int k = 0; k + 2 <= 7; ++k) worst = std::max(worst, max_abs(MatrixX<Scalar>(d_matrix(s, k + 1) * d_matrix(s, k))));
  return worst;
}

/// tr ad over the basis; zero vector iff the algebra is unimodular.
template <typename Scalar>
Vector7<Scalar> modular_form(const LieAlgebraSpec<Scalar>& s) {
  Vector7<Scalar> v = Vector7<Scalar>::Zero();
  for (int j = 0; j < 7; ++j)
    for (int i = 0; i < 7; ++i) v[j] += s.c[i](j, i);
  return v;
}

/// Levi-Civita connection of the left-invariant metric with orthonormal basis e_i; rejects non-Lie data.
template <typename Scalar>
Connection<Scalar> levi_civita(const LieAlgebraSpec<Scalar>& s, double tol = 0.0) {
  const double jac = jacobi_defect(s);
  if (jac > tol) throw std::domain_error("levi_civita: Jacobi identity fails (defect " + std::to_string(jac) + ")");
  // C(i,j,k) = g([e_i,e_j], e_k) = c[k](i,j).
  auto C = [&](int i, int j, int k) { return s.c[k](i, j); };
  Connection<Scalar> g;
  for (int i = 0; i < 7; ++i) {
    g[i] = Matrix7<Scalar>::Zero();
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) g[i](j, k) = (C(i, j, k) - C(j, k, i) + C(k, i, j)) / Scalar(2);
  }
  return g;
}

/// Largest |Γ_ijk + Γ_ikj|.
template <typename Scalar>
double metric_defect(const Connection<Scalar>& g) {
  double worst = 0;
  for (int i = 0; i < 7; ++i) worst = std::max(worst, max_abs(Matrix7<Scalar>(g[i] + g[i].transpose())));
  return worst;
}

/// Largest |Γ_ijk − Γ_jik − c[k](i,j)|.
template <typename Scalar>
double torsion_free_defect(const LieAlgebraSpec<Scalar>& s, const Connection<Scalar>& g) {
  double worst = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        worst = std::max(worst, std::abs(to_double(Scalar(g[i](j, k) - g[j](i, k) - s.c[k](i, j)))));
  return worst;
}

/// R(e_i,e_j,e_k,e_l) = g(∇_i∇_j e_k − ∇_j∇_i e_k − ∇_{[e_i,e_j]} e_k, e_l) as a full array.
template <typename Scalar>
Tensor4<Scalar> riemann_full(const LieAlgebraSpec<Scalar>& s, const Connection<Scalar>& g) {
  Tensor4<Scalar> r;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      // (∇_i∇_j − ∇_j∇_i − ∇_{[e_i,e_j]}) as a matrix acting on row index k, giving column l.
      Matrix7<Scalar> m = g[j] * g[i] - g[i] * g[j];
      for (int q = 0; q < 7; ++q)
        if (s.c[q](i, j) != Scalar(0)) m -= g[q] * s.c[q](i, j);
      for (int k = 0; k < 7; ++k)
        for (int l = 0; l < 7; ++l) r(i, j, k, l) = m(k, l);
    }
  return r;
}

template <typename Scalar>
CurvatureTensor<Scalar> riemann(const LieAlgebraSpec<Scalar>& s, const Connection<Scalar>& g) {
  return from_full(riemann_full(s, g));
}

/// Derivation action of A ∈ so(7): −Σ_{a,k} A_{ak} e^a ∧ i_{e_k}α.
template <typename Scalar>
Form<Scalar> act(const Matrix7<Scalar>& A, const Form<Scalar>& alpha) {
  Form<Scalar> r(alpha.degree);
  if (alpha.degree == 0) return r;
  for (int k = 0; k < 7; ++k) {
    if (A.col(k).isZero()) continue;
    const Form<Scalar> ik = interior(k, alpha);
    if (max_abs(ik) == 0.0) continue;
    r -= wedge(one_form<Scalar>(Vector7<Scalar>(A.col(k))), ik);
  }
  return r;
}

/// ∇_{e_i}α for every i.
template <typename Scalar>
std::array<Form<Scalar>, 7> covariant_derivative(const Connection<Scalar>& g, const Form<Scalar>& alpha) {
  std::array<Form<Scalar>, 7> out;
  for (int i = 0; i < 7; ++i) out[i] = act(g[i], alpha);
  return out;
}

/// Σ e^i ∧ ∇_{e_i}α; for Levi-Civita this is d, for the canonical connection d^∇̄.
template <typename Scalar>
Form<Scalar> alternation(const Connection<Scalar>& g, const Form<Scalar>& alpha) {
  const auto nab = covariant_derivative(g, alpha);
  Form<Scalar> r(alpha.degree + 1);
  for (int i = 0; i < 7; ++i) r += wedge(basis_one_form<Scalar>(i), nab[i]);
  return r;
}

template <typename Scalar>
struct CanonicalConnection {
  IntrinsicTorsion<Scalar> xi;
  Connection<Scalar> nabla_bar;
  double fit_residual = 0;  ///< part of ∇^gφ outside g₂⊥·φ
};

/// ξ from ∇^gφ = Σ_m v_{im} A_m·φ with A_m = φ_{m··}, and ∇̄ = ∇^g − ξ.
template <typename Scalar>
CanonicalConnection<Scalar> canonical_connection(const Connection<Scalar>& lc, double tol = 0.0) {
  const Form<Scalar> phi = standard_phi<Scalar>();
  std::array<Matrix7<Scalar>, 7> gens;
  std::array<Form<Scalar>, 7> images;
  std::array<Scalar, 7> image_norm2;
  for (int m = 0; m < 7; ++m) {
    gens[m] = skew_matrix(interior(m, phi));
    images[m] = act(gens[m], phi);
    image_norm2[m] = norm2(images[m]);
  }
  CanonicalConnection<Scalar> cc;
  Matrix7<Scalar> v = Matrix7<Scalar>::Zero();
  const auto nab = covariant_derivative(lc, phi);
  for (int i = 0; i < 7; ++i) {
    Form<Scalar> rest = nab[i];
    for (int m = 0; m < 7; ++m) {
      v(i, m) = inner(nab[i], images[m]) / image_norm2[m];
      rest -= v(i, m) * images[m];
    }
    cc.fit_residual = std::max(cc.fit_residual, max_abs(rest));
  }
  if (cc.fit_residual > tol)
    throw std::domain_error("canonical_connection: nabla phi leaves g2-perp . phi (residual " +
                            std::to_string(cc.fit_residual) + ")");
  cc.xi.xi_bar = Scalar(6) * v;
  cc.xi.xi = xi_from_bar(cc.xi.xi_bar);
  for (int i = 0; i < 7; ++i) cc.nabla_bar[i] = lc[i] - cc.xi.xi[i];
  return cc;
}

/// ∇̄β packed as Σ_t e^t ⊗ ∇̄_{e_t}β.
template <typename Scalar>
MixedTensor<Scalar> nabla_bar_two_form(const Connection<Scalar>& nb, const Form<Scalar>& beta) {
  if (beta.degree != 2) throw std::invalid_argument("nabla_bar_two_form: expected a 2-form");
  MixedTensor<Scalar> m;
  const auto nab = covariant_derivative(nb, beta);
  for (int t = 0; t < 7; ++t) m.set_slot(t, nab[t]);
  return m;
}

/// Generalized Ricci tensor and both torsion expressions for one (k₁, k₂).
template <typename Scalar>
struct RicciComparison {
  Scalar k1;
  Scalar k2;
  Form<Scalar> lhs;           ///< λ₃(Ric₀^k)
  Form<Scalar> rhs_exterior;  ///< expression through d
  Form<Scalar> rhs_canonical; ///< expression through d^∇̄
};

struct CheckResult {
  std::string name;
  double residual;
  bool pass;
};

template <typename Scalar>
struct AnalysisReport {
  std::string name;
  TorsionComponents<Scalar> torsion;
  std::set<int> type;
  CanonicalConnection<Scalar> canonical;
  CurvatureTensor<Scalar> curvature;
  CurvatureDecomposition<Scalar> decomposition;
  std::vector<RicciComparison<Scalar>> ricci;
  bool unimodular = false;
  bool closed = false;
  bool epr = false;  ///< ‖Ric₀‖² = 4/21 s² (closed case only)
  std::optional<V14Split<Scalar>> torsion_derivative;  ///< split of ∇̄τ (closed case only)
  Scalar cubic_term = Scalar(0);                          ///< *d(τ∧τ∧τ) (closed case only)
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

template <typename Scalar>
double abs_d(const Scalar& x) {
  return std::abs(to_double(x));
}

/// Full antisymmetric array of a 3-form as a flat 7³ vector.
template <typename Scalar>
std::vector<Scalar> full3(const Form<Scalar>& a) {
  return to_antisym(a).data;
}

}  // namespace detail

/// End-to-end verification of the curvature–torsion identities on a left-invariant G₂ structure.
///
/// The coframe must be adapted: phi has to equal the standard 3-form.
template <typename Scalar>
AnalysisReport<Scalar> analyze(const LieAlgebraSpec<Scalar>& spec, const Form<Scalar>& phi, double tol = 1e-9,
                               double eps = 1e-9) {
  const Form<Scalar> std_phi = standard_phi<Scalar>();
  if (phi.degree != 3 || max_abs(phi - std_phi) > tol)
    throw std::invalid_argument("analyze: phi must be the standard 3-form in the given coframe");
  const Form<Scalar> psi = standard_phi_dual<Scalar>();
  AnalysisReport<Scalar> rep;
  rep.name = spec.name;
  auto check = [&](std::string name, double residual, double scale = 1.0) {
    rep.checks.push_back({std::move(name), residual, residual <= tol * std::max(1.0, scale)});
  };

  check("Jacobi identity", jacobi_defect(spec));
  check("d^2 = 0", d_squared_defect(spec));
  rep.unimodular = modular_form(spec).isZero();
  if (rep.unimodular) {
    double adj = 0;
    for (int k = 1; k <= 7; ++k)
      for (int n = 0; n < binomial(7, k); ++n) {
        Form<Scalar> e(k);
        e[n] = Scalar(1);
        adj = std::max(adj, max_abs(invariant_delta(spec, e) - invariant_d_adjoint(spec, e)));
      }
    check("codifferential equals adjoint of d (unimodular)", adj);
  }

  const Connection<Scalar> lc = levi_civita(spec, tol);
  check("Levi-Civita metric compatibility", metric_defect(lc));
  check("Levi-Civita torsion-free", torsion_free_defect(spec, lc));

  const Tensor4<Scalar> rfull = riemann_full(spec, lc);
  rep.curvature = from_full(rfull);
  double pair_sym = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = 0; l < 7; ++l)
          pair_sym = std::max({pair_sym, detail::abs_d(Scalar(rfull(i, j, k, l) - rfull(k, l, i, j))),
                               detail::abs_d(Scalar(rfull(i, j, k, l) + rfull(j, i, k, l)))});
  const double curv_scale = std::max(1.0, rfull.max_abs());
  check("curvature pair symmetry", pair_sym, curv_scale);
  check("first Bianchi identity", bianchi_residual(rep.curvature), curv_scale);
  rep.decomposition = decompose(rep.curvature, tol * curv_scale);
  check("curvature norm splitting", detail::abs_d(norm_identity_defect(rep.curvature, rep.decomposition)),
        curv_scale * curv_scale);

  const Form<Scalar> dphi = invariant_d(spec, std_phi);
  const Form<Scalar> dpsi = invariant_d(spec, psi);
  rep.torsion = extract_torsion(std_phi, dphi, dpsi, tol * std::max(1.0, max_abs(dphi) + max_abs(dpsi)));
  rep.type = fg_type(rep.torsion, eps);
  const auto& t = rep.torsion;

  rep.canonical = canonical_connection(lc, tol);
  const auto& nb = rep.canonical.nabla_bar;
  check("intrinsic torsion: direct route matches torsion forms",
        max_abs(Matrix7<Scalar>(rep.canonical.xi.xi_bar - intrinsic_from_torsion(t).xi_bar)));
  double nb_phi = 0;
  for (const auto& f : covariant_derivative(nb, std_phi)) nb_phi = std::max(nb_phi, max_abs(f));
  check("canonical connection preserves phi", nb_phi);
  check("canonical connection preserves g", metric_defect(nb));
  check("Levi-Civita alternation equals d on phi", max_abs(alternation(lc, std_phi) - dphi));

  const Form<Scalar> x = vector_dual(t.tau1);
  TorsionJet<Scalar> jet{t, invariant_d(spec, x), invariant_d(spec, t.tau2), invariant_d(spec, t.tau3)};
  CanonicalTorsionJet<Scalar> cjet{t, alternation(nb, x), alternation(nb, t.tau2), alternation(nb, t.tau3)};
  const std::array<std::pair<int, int>, 3> ks{{{1, 0}, {0, 1}, {4, -5}}};
  for (auto [a, b] : ks) {
    RicciComparison<Scalar> rc{Scalar(a), Scalar(b), {}, {}, {}};
    rc.lhs = lambda3<Scalar>(generalized_ricci(rep.curvature, rc.k1, rc.k2));
    rc.rhs_exterior = ricci_rhs_exterior(jet, rc.k1, rc.k2);
    rc.rhs_canonical = ricci_rhs_canonical(cjet, rc.k1, rc.k2);
    const std::string k = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    check("Ricci from torsion via d, k=" + k, max_abs(rc.lhs - rc.rhs_exterior), curv_scale);
    check("Ricci from torsion via canonical d, k=" + k, max_abs(rc.lhs - rc.rhs_canonical), curv_scale);
    rep.ricci.push_back(std::move(rc));
  }
  const auto conv = derivative_conversion_defects(jet, cjet);
  check("d vs canonical d on *(tau1^*phi)", max_abs(conv[0]), curv_scale);
  check("d vs canonical d on tau2", max_abs(conv[1]), curv_scale);
  check("d vs canonical d on tau3", max_abs(conv[2]), curv_scale);

  const Scalar delta_tau1 = invariant_delta(spec, t.tau1)[0];
  check("scalar curvature from torsion",
        detail::abs_d(Scalar(rep.decomposition.scalar - scalar_from_torsion(t, delta_tau1))), curv_scale);

  rep.closed = max_abs(dphi) <= tol;
  if (!rep.closed) return rep;

  // Closed structures: τ = τ₂ and d*φ = τ∧φ.
  const Form<Scalar>& tau = t.tau2;
  const Scalar n2t = norm2(tau);
  check("closed: codifferential of phi equals tau", max_abs(invariant_delta(spec, std_phi) - tau));
  for (const auto& r : closed_identities(tau, tol)) check("closed: " + r.name, r.residual, to_double(n2t * n2t));
  check("closed: scalar curvature = -|tau|^2/2",
        detail::abs_d(Scalar(rep.decomposition.scalar + n2t / Scalar(2))), curv_scale);
  const Scalar ric0_2 = rep.decomposition.ric0.squaredNorm();
  const Scalar s = rep.decomposition.scalar;
  rep.epr = detail::abs_d(Scalar(ric0_2 - Scalar(4) / Scalar(21) * s * s)) <= tol * curv_scale * curv_scale;

  const auto& xi = rep.canonical.xi.xi;
  double cyc = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) cyc = std::max(cyc, detail::abs_d(Scalar(xi[i](j, k) + xi[j](k, i) + xi[k](i, j))));
  check("closed: cyclic intrinsic torsion", cyc);

  const MixedTensor<Scalar> nbt = nabla_bar_two_form(nb, tau);
  rep.torsion_derivative = split_v14(project14(nbt));
  const auto& sp = *rep.torsion_derivative;
  check("closed: nabla_bar tau lies in V*(x)Lambda^2_14", max_abs(nbt.slots - project14(nbt).slots),
        curv_scale);
  check("closed: 7-part of nabla_bar tau vanishes", max_abs(sp.part7.slots), curv_scale);

  const Form<Scalar> dtau = invariant_d(spec, tau);
  const Form<Scalar> dbar = cjet.d_tau2;
  const Form<Scalar> tt = hodge(wedge(tau, tau));
  check("closed: canonical derivative of tau",
        max_abs(dbar - (dtau - tt / Scalar(6) - (n2t / Scalar(6)) * std_phi)), curv_scale);
  rep.cubic_term = hodge(invariant_d(spec, wedge(wedge(tau, tau), tau)))[0];
  const double sq = curv_scale * curv_scale;
  check("closed: cubic pairing via d", detail::abs_d(Scalar(rep.cubic_term / Scalar(3) - inner(dtau, tt))), sq);
  check("closed: cubic pairing via canonical d",
        detail::abs_d(Scalar(rep.cubic_term / Scalar(3) - inner(dbar, project(tt, 27)))), sq);
  check("closed: W64 norm from nabla_bar tau",
        detail::abs_d(Scalar(norm2(rep.decomposition.W64) - tensor_norm2(sp.part64) / Scalar(3))), sq);

  for (const auto& rc : rep.ricci) {
    const Scalar c14 = rc.k1 - Scalar(4) * rc.k2;
    const Scalar c15 = rc.k1 + Scalar(5) * rc.k2;
    const Form<Scalar> pred = -c14 * dbar + c15 / Scalar(3) * project(tt, 27);
    const std::string k = "(" + std::to_string(static_cast<int>(to_double(rc.k1))) + "," +
                          std::to_string(static_cast<int>(to_double(rc.k2))) + ")";
    check("closed: Ricci via canonical derivative, k=" + k, max_abs(rc.lhs - pred), curv_scale);
    const Matrix7<Scalar> ricci_k = generalized_ricci(rep.curvature, rc.k1, rc.k2);
    const Scalar norm_pred = c14 * c14 / Scalar(2) * norm2(dbar) + c15 * c15 / Scalar(21) * n2t * n2t -
                             c15 * c14 / Scalar(3) * inner(dbar, project(tt, 27));
    check("closed: Ricci norm, k=" + k, detail::abs_d(Scalar(ricci_k.squaredNorm() - norm_pred)), sq);
  }

  // Contraction R_{ijab}φ_{abt} against torsion data, as full arrays.
  const AntisymArray<Scalar> phi_a = to_antisym(std_phi);
  const AntisymArray<Scalar> tau_a = to_antisym(tau);
  const AntisymArray<Scalar> dbar_a = to_antisym(dbar);
  std::array<AntisymArray<Scalar>, 7> nbt_a;
  for (int q = 0; q < 7; ++q) nbt_a[q] = to_antisym(nbt.slot(q));
  Scalar lhs_norm(0);
  double contraction = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int q = 0; q < 7; ++q) {
        Scalar lhs(0);
        for (int a = 0; a < 7; ++a)
          for (int b = 0; b < 7; ++b) lhs += rfull(i, j, a, b) * phi_a({a, b, q});
        Scalar quad(0);
        for (int p = 0; p < 7; ++p)
          for (int r = 0; r < 7; ++r)
            quad += tau_a({p, r}) * tau_a({p, q}) * phi_a({r, i, j}) - tau_a({i, p}) * tau_a({j, r}) * phi_a({p, r, q});
        const Scalar rhs = dbar_a({i, j, q}) - nbt_a[q]({i, j}) + quad / Scalar(6);
        contraction = std::max(contraction, detail::abs_d(Scalar(lhs - rhs)));
        lhs_norm += lhs * lhs;
      }
  check("closed: curvature contracted with phi", contraction, curv_scale);
  const Scalar norm_pred = Scalar(3) * norm2(rep.decomposition.W64) + Scalar(40) / Scalar(7) * ric0_2 -
                           Scalar(13) / Scalar(147) * s * s + Scalar(34) / Scalar(63) * rep.cubic_term;
  check("closed: norm of curvature contracted with phi", detail::abs_d(Scalar(lhs_norm - norm_pred)), sq);
  return rep;
}

/// Built-in example names.
std::vector<std::string> builtin_names();

/// Built-in left-invariant example with exact structure constants; throws std::out_of_range if unknown.
LieAlgebraSpec<Rational> builtin_example(const std::string& name);

/// The rank-one solvable algebra ℝ ⋉_A ℝ⁶: de^i = −Σ_j A_ij e^j ∧ e⁷.
template <typename Scalar>
LieAlgebraSpec<Scalar> solvable_extension(const Eigen::Matrix<Scalar, 6, 6>& a, std::string name = {}) {
  std::vector<CoframeTerm<Scalar>> terms;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (a(i, j) != Scalar(0)) terms.push_back({i + 1, j + 1, 7, Scalar(-a(i, j))});
  return LieAlgebraSpec<Scalar>::from_terms(terms, std::move(name));
}

/// Spec in the rotated orthonormal basis f_a = O_{ai} e_i.
template <typename Scalar>
LieAlgebraSpec<Scalar> rotate(const LieAlgebraSpec<Scalar>& s, const Matrix7<Scalar>& o) {
  LieAlgebraSpec<Scalar> r;
  r.name = s.name;
  for (int m = 0; m < 7; ++m) {
    Matrix7<Scalar> acc = Matrix7<Scalar>::Zero();
    for (int k = 0; k < 7; ++k) acc += o(m, k) * s.c[k];
    r.c[m] = o * acc * o.transpose();
  }
  return r;
}

}  // namespace g2lab
