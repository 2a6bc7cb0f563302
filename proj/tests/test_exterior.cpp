#include "doctest.h"
#include "test_util.hpp"

using namespace g2lab;
using namespace g2test;

TEST_CASE("wedge of basis one-forms") {
  const Form<double> r = wedge(monomial<double>({1}), monomial<double>({2}));
  CHECK(r.degree == 2);
  CHECK(r.coeff({1, 2}) == 1.0);
  CHECK(r.coeff({2, 1}) == -1.0);
}

TEST_CASE("omega cubed is six times e123456") {
  const Form<Rational> w = standard_omega<Rational>();
  const Form<Rational> w3 = wedge(wedge(w, w), w);
  CHECK(w3.coeff({1, 2, 3, 4, 5, 6}) == Rational(6));
  CHECK(norm2(w3) == Rational(36));
}

TEST_CASE("wedge is graded anticommutative") {
  for (int p = 0; p <= 7; ++p)
    for (int q = 0; p + q <= 7; ++q) {
      const Form<double> a = random_form(p), b = random_form(q);
      const double s = ((p * q) % 2) ? -1.0 : 1.0;
      CHECK(max_abs(wedge(a, b) - s * wedge(b, a)) < 1e-12);
    }
  CHECK_THROWS_AS(wedge(random_form(4), random_form(4)), std::invalid_argument);
}

TEST_CASE("hodge star values and involution") {
  CHECK(hodge(monomial<Rational>({1, 2, 7})).coeff({3, 4, 5, 6}) == Rational(1));
  CHECK(max_abs(hodge(standard_phi<Rational>()) - standard_phi_dual<Rational>()) == 0.0);
  for (int k = 0; k <= 7; ++k) {
    const Form<double> a = random_form(k);
    CHECK(max_abs(hodge(hodge(a)) - a) == 0.0);
  }
}

TEST_CASE("a wedge star b equals inner product times volume") {
  for (int k = 0; k <= 7; ++k)
    for (int n = 0; n < 100; ++n) {
      const Form<double> a = random_form(k), b = random_form(k);
      CHECK(std::abs(top_coefficient(wedge(a, hodge(b))) - inner(a, b)) < 1e-10);
    }
}

TEST_CASE("interior product") {
  CHECK(max_abs(interior(0, monomial<double>({1, 2})) - monomial<double>({2})) == 0.0);
  const Form<Rational> expected =
      -monomial<Rational>({1, 7}) - monomial<Rational>({3, 6}) - monomial<Rational>({4, 5});
  CHECK(max_abs(interior(1, standard_phi<Rational>()) - expected) == 0.0);
  CHECK(interior(0, Form<double>(0)).degree == 0);
  for (int k = 1; k <= 7; ++k) {
    const Vector7<double> v = random_vector();
    const Form<double> a = random_form(k), b = random_form(k - 1);
    CHECK(std::abs(inner(interior(v, a), b) - inner(a, wedge(one_form<double>(v), b))) < 1e-10);
  }
}

TEST_CASE("interior products of phi define the metric") {
  const Form<double> phi = standard_phi<double>();
  for (int n = 0; n < 20; ++n) {
    const Vector7<double> u = random_vector(), v = random_vector();
    const double lhs = top_coefficient(wedge(wedge(interior(u, phi), interior(v, phi)), phi));
    CHECK(std::abs(lhs - 6.0 * u.dot(v)) < 1e-10);
  }
}

TEST_CASE("standard phi") {
  const Form<Rational> phi = standard_phi<Rational>();
  CHECK(phi.coeff({1, 2, 7}) == Rational(1));
  CHECK(phi.coeff({2, 4, 5}) == Rational(-1));
  CHECK(norm2(phi) == Rational(7));
  CHECK(top_coefficient(wedge(phi, standard_phi_dual<Rational>())) == Rational(7));
}

TEST_CASE("antisymmetric arrays") {
  const AntisymArray<Rational> P = to_antisym(standard_phi<Rational>());
  CHECK(P({0, 1, 6}) == Rational(1));
  CHECK(P({1, 0, 6}) == Rational(-1));
  CHECK(P({6, 0, 1}) == Rational(1));
  CHECK(P.tensor_norm2() == Rational(42));
  for (int k = 0; k <= 7; ++k) {
    const Form<double> a = random_form(k);
    const AntisymArray<double> A = to_antisym(a);
    CHECK(max_abs(from_antisym(A) - a) == 0.0);
    double fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    CHECK(std::abs(A.tensor_norm2() - fact * norm2(a)) < 1e-9);
  }
  AntisymArray<double> bad(2);
  bad({0, 1}) = 1.0;
  CHECK_THROWS_AS(from_antisym(bad), std::invalid_argument);
}

TEST_CASE("multi-index validation") {
  CHECK(MultiIndex::from_indices({1, 2, 7}).label() == "127");
  CHECK_THROWS_AS(MultiIndex::from_indices({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex::from_indices({0}), std::invalid_argument);
}

TEST_CASE("contraction identities hold exactly") {
  for (const auto& r : check_contraction_identities<Rational>()) {
    INFO(r.name);
    CHECK(r.residual == 0.0);
  }
  for (const auto& r : check_contraction_identities<double>()) {
    INFO(r.name);
    CHECK(r.residual < 1e-12);
  }
}
