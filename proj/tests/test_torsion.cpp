#include "doctest.h"
#include "g2lab/torsion.hpp"
#include "test_util.hpp"

using namespace g2lab;
using namespace g2test;

namespace {

TorsionComponents<double> random_torsion() {
  TorsionComponents<double> t;
  t.tau0 = normal();
  t.tau1 = random_form(1);
  t.tau2 = project(random_form(2), 14);
  t.tau3 = project(random_form(3), 27);
  return t;
}

double distance(const TorsionComponents<double>& a, const TorsionComponents<double>& b) {
  return std::max({std::abs(a.tau0 - b.tau0), max_abs(a.tau1 - b.tau1), max_abs(a.tau2 - b.tau2),
                   max_abs(a.tau3 - b.tau3)});
}

TorsionJet<double> random_jet() {
  TorsionJet<double> j;
  j.torsion = random_torsion();
  j.d_vector_dual = random_form(3);
  j.d_tau2 = random_form(3);
  j.d_tau3 = random_form(4);
  return j;
}

}  // namespace

TEST_CASE("extract and recompose on fixed inputs") {
  const Form<Rational> phi = standard_phi<Rational>();
  const Form<Rational> psi = standard_phi_dual<Rational>();
  auto t = extract_torsion(phi, Form<Rational>(4), Form<Rational>(5));
  CHECK(t.tau0 == 0);
  CHECK(max_abs(t.tau1) + max_abs(t.tau2) + max_abs(t.tau3) == 0.0);

  t = extract_torsion(phi, Rational(4) * psi, Form<Rational>(5));
  CHECK(t.tau0 == 4);
  CHECK(max_abs(t.tau1) + max_abs(t.tau2) + max_abs(t.tau3) == 0.0);

  TorsionComponents<Rational> u;
  u.tau0 = 1;
  auto s = recompose(u);
  CHECK(max_abs(s.dphi - psi) == 0.0);
  CHECK(max_abs(s.dstarphi) == 0.0);

  TorsionComponents<Rational> v;
  v.tau1 = monomial<Rational>({7});
  s = recompose(v);
  CHECK(max_abs(s.dphi - Rational(3) * wedge(v.tau1, phi)) == 0.0);
  CHECK(max_abs(s.dstarphi - Rational(4) * wedge(v.tau1, psi)) == 0.0);

  v.tau2 = monomial<Rational>({1, 2});
  CHECK_THROWS_AS(recompose(v), std::domain_error);
}

TEST_CASE("extract inverts recompose") {
  const Form<double> phi = standard_phi<double>();
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_torsion();
    const auto s = recompose(t, 1e-12);
    const auto back = extract_torsion(phi, s.dphi, s.dstarphi, 1e-10);
    CHECK(distance(t, back) < 1e-10);
    const auto again = recompose(back, 1e-10);
    CHECK(max_abs(again.dphi - s.dphi) < 1e-10);
    CHECK(max_abs(again.dstarphi - s.dstarphi) < 1e-10);
    CHECK(max_abs(project(s.dphi, 1) - t.tau0 * standard_phi_dual<double>()) < 1e-10);
    CHECK(max_abs(project(s.dphi, 7) - 3.0 * wedge(t.tau1, phi)) < 1e-10);
    CHECK(max_abs(project(s.dphi, 27) - hodge(t.tau3)) < 1e-10);
  }
  for (int seed = 0; seed < 3; ++seed) {
    TorsionComponents<Rational> t;
    t.tau0 = Rational(seed - 1, 3);
    t.tau1 = monomial<Rational>({seed + 1}) - monomial<Rational>({7}, Rational(2));
    t.tau2 = project(monomial<Rational>({1, 2 + seed}), 14);
    t.tau3 = lambda3<Rational>(integer_traceless(seed));
    const auto s = recompose(t);
    const auto back = extract_torsion(standard_phi<Rational>(), s.dphi, s.dstarphi);
    CHECK(back.tau0 == t.tau0);
    CHECK(max_abs(back.tau1 - t.tau1) == 0.0);
    CHECK(max_abs(back.tau2 - t.tau2) == 0.0);
    CHECK(max_abs(back.tau3 - t.tau3) == 0.0);
  }
}

TEST_CASE("extract rejects inconsistent data") {
  const Form<double> phi = standard_phi<double>();
  CHECK_THROWS_AS(extract_torsion(phi, random_form(4), Form<double>(5), 1e-10), std::domain_error);
  const auto s = recompose(random_torsion(), 1e-12);
  CHECK_THROWS_AS(extract_torsion(phi, s.dphi, random_form(5), 1e-10), std::domain_error);
  CHECK_THROWS_AS(extract_torsion(standard_phi_dual<double>(), s.dphi, s.dstarphi), std::invalid_argument);
  CHECK_THROWS_AS(extract_torsion(2.0 * phi, s.dphi, s.dstarphi, 1e-10), std::domain_error);
}

TEST_CASE("type classification") {
  TorsionComponents<double> t;
  CHECK(fg_type(t).empty());
  t.tau0 = 4;
  CHECK(fg_type(t) == std::set<int>{1});
  TorsionComponents<double> u;
  u.tau1 = monomial<double>({7});
  CHECK(fg_type(u) == std::set<int>{4});
  CHECK(type_label(fg_type(random_torsion())) == "{1,2,3,4}");
  u.tau1 = monomial<double>({7}, 1e-12);
  CHECK(fg_type(u).empty());
  CHECK(fg_type(u, 0.0) == std::set<int>{4});
  CHECK(type_label({}) == "{}");
}

TEST_CASE("intrinsic torsion") {
  TorsionComponents<Rational> t;
  t.tau0 = 3;
  auto x = intrinsic_from_torsion(t);
  CHECK(max_abs(Matrix7<Rational>(x.xi_bar + Rational(3, 2) * Matrix7<Rational>::Identity())) == 0.0);
  CHECK(max_abs(intrinsic_from_torsion(TorsionComponents<Rational>{}).xi_bar) == 0.0);

  const Form<double> phi = standard_phi<double>();
  const auto phi_arr = to_antisym(phi);
  for (int trial = 0; trial < 10; ++trial) {
    const auto tt = random_torsion();
    const auto xi = intrinsic_from_torsion(tt);
    CHECK(distance(torsion_from_intrinsic(xi.xi_bar), tt) < 1e-10);
    // ξ̄_ij = ξ_ipq φ_pqj and ξ_i ∈ g₂⊥.
    double defect = 0;
    for (int i = 0; i < 7; ++i) {
      CHECK(max_abs(Matrix7<double>(xi.xi[i] + xi.xi[i].transpose())) < 1e-12);
      CHECK(max_abs(project(two_form_of(xi.xi[i]), 14)) < 1e-12);
      for (int j = 0; j < 7; ++j) {
        double s = 0;
        for (int p = 0; p < 7; ++p)
          for (int q = 0; q < 7; ++q) s += xi.xi[i](p, q) * phi_arr({p, q, j});
        defect = std::max(defect, std::abs(s - xi.xi_bar(i, j)));
      }
    }
    CHECK(defect < 1e-12);
  }

  TorsionComponents<double> closed;
  closed.tau2 = project(random_form(2), 14);
  const auto xc = intrinsic_from_torsion(closed);
  double cyc = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) cyc = std::max(cyc, std::abs(xc.xi[i](j, k) + xc.xi[j](k, i) + xc.xi[k](i, j)));
  CHECK(cyc < 1e-12);
}

TEST_CASE("scalar curvature from torsion") {
  TorsionComponents<Rational> t;
  t.tau0 = 4;
  CHECK(scalar_from_torsion(t, Rational(0)) == 42);
  CHECK(scalar_from_torsion(TorsionComponents<Rational>{}, Rational(0)) == 0);
  TorsionComponents<Rational> c;
  c.tau2 = monomial<Rational>({1, 2}) - monomial<Rational>({3, 4});
  CHECK(scalar_from_torsion(c, Rational(0)) == -1);
  TorsionComponents<Rational> v;
  v.tau1 = monomial<Rational>({7});
  CHECK(scalar_from_torsion(v, Rational(2)) == 54);
}

TEST_CASE("closed-structure quadratic identities") {
  const Form<Rational> tau = monomial<Rational>({1, 2}) - monomial<Rational>({3, 4});
  CHECK(top_coefficient(wedge(wedge(tau, tau), standard_phi<Rational>())) == -2);
  for (const auto& r : closed_identities(tau)) CHECK_MESSAGE(r.residual == 0.0, r.name);
  for (const auto& r : closed_identities(Form<double>(2))) CHECK(r.residual == 0.0);
  for (int trial = 0; trial < 10; ++trial)
    for (const auto& r : closed_identities(project(random_form(2), 14), 1e-12))
      CHECK_MESSAGE(r.residual < 1e-10, r.name);
  CHECK_THROWS_AS(closed_identities(standard_omega<Rational>()), std::domain_error);
}

TEST_CASE("conformal rescaling of torsion") {
  const auto t = random_torsion();
  CHECK(distance(conformal_transform(t, 0.0, Form<double>(1)), t) == 0.0);
  TorsionComponents<double> n;
  n.tau0 = 4;
  const auto m = conformal_transform(n, 0.5, Form<double>(1));
  CHECK(m.tau0 == doctest::Approx(4 * std::exp(-0.5)));
  CHECK(fg_type(m) == std::set<int>{1});
  const Form<double> df = random_form(1);
  const auto p = conformal_transform(TorsionComponents<double>{}, 0.3, df);
  CHECK(max_abs(p.tau1 - df) == 0.0);
  CHECK(fg_type(p) == std::set<int>{4});
  // Only class 4 can appear or disappear.
  for (int trial = 0; trial < 10; ++trial) {
    auto a = fg_type(t);
    auto b = fg_type(conformal_transform(t, normal(), random_form(1)));
    a.erase(4);
    b.erase(4);
    CHECK(a == b);
  }
}

TEST_CASE("conformal structure forms match the rescaled torsion") {
  // φ̃ = e^{3f}φ: dφ̃ = e^{3f}(3df∧φ + dφ), d*̃φ̃ = e^{4f}(4df∧*φ + d*φ), with *̃ = e^{(7−2k)f}* on k-forms.
  const Form<double> phi = standard_phi<double>();
  const Form<double> psi = standard_phi_dual<double>();
  const auto t = random_torsion();
  const double f0 = 0.7;
  const Form<double> df = random_form(1);
  const auto s = recompose(t, 1e-12);
  const auto c = conformal_transform(t, f0, df);
  const Form<double> dphi = std::exp(3 * f0) * (3.0 * wedge(df, phi) + s.dphi);
  const Form<double> dstar = std::exp(4 * f0) * (4.0 * wedge(df, psi) + s.dstarphi);
  const Form<double> pred_dphi = c.tau0 * std::exp(4 * f0) * psi + 3.0 * std::exp(3 * f0) * wedge(c.tau1, phi) +
                                 std::exp(f0) * hodge(c.tau3);
  const Form<double> pred_dstar =
      4.0 * std::exp(4 * f0) * wedge(c.tau1, psi) + std::exp(3 * f0) * wedge(c.tau2, phi);
  CHECK(max_abs(dphi - pred_dphi) < 1e-10);
  CHECK(max_abs(dstar - pred_dstar) < 1e-10);
}

TEST_CASE("Weyl-type Ricci expression is conformally covariant") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto j = random_jet();
    const double f0 = normal();
    const Form<double> df = random_form(1);
    const auto jt = conformal_transform_jet(j, f0, df, random_form(3));
    const Form<double> before = ricci_rhs_exterior(j, 4.0, -5.0);
    const Form<double> after = ricci_rhs_exterior(jt, 4.0, -5.0);
    CHECK(max_abs(after - std::exp(-2 * f0) * before) < 1e-10 * std::max(1.0, max_abs(before)));
  }
  // The metric Ricci tensor alone is not covariant.
  const auto j = random_jet();
  const auto jt = conformal_transform_jet(j, 0.4, random_form(1), random_form(3));
  CHECK(max_abs(ricci_rhs_exterior(jt, 1.0, 0.0) - std::exp(-0.8) * ricci_rhs_exterior(j, 1.0, 0.0)) > 1e-3);
}

TEST_CASE("Ricci expressions land in the 27 summand") {
  const auto j = random_jet();
  const Form<double> r = ricci_rhs_exterior(j, 1.0, 2.0);
  CHECK(r.degree == 3);
  CHECK(max_abs(r - project(r, 27)) < 1e-12);
  CanonicalTorsionJet<double> c{j.torsion, j.d_vector_dual, j.d_tau2, j.d_tau3};
  const Form<double> q = ricci_rhs_canonical(c, 1.0, 2.0);
  CHECK(max_abs(q - project(q, 27)) < 1e-12);
}
