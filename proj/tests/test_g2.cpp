#include "doctest.h"
#include "test_util.hpp"

using namespace g2lab;
using namespace g2test;

TEST_CASE("projector test elements") {
  const Form<Rational> w = standard_omega<Rational>();
  CHECK(max_abs(project(w, IrredLabel{2, 7}) - w) == 0.0);
  const Form<Rational> t = monomial<Rational>({1, 2}) - monomial<Rational>({3, 4});
  CHECK(max_abs(project(t, IrredLabel{2, 7})) == 0.0);
  const Form<Rational> a =
      Rational(4) * wedge(w, monomial<Rational>({7})) - Rational(3) * standard_psi_plus<Rational>();
  CHECK(max_abs(project(a, IrredLabel{3, 27}) - a) == 0.0);
  CHECK(max_abs(project(standard_psi_minus<Rational>(), IrredLabel{3, 7}) - standard_psi_minus<Rational>()) == 0.0);
  CHECK(max_abs(project(standard_phi<Rational>(), IrredLabel{3, 1}) - standard_phi<Rational>()) == 0.0);
  CHECK_THROWS_AS(project(w, IrredLabel{2, 27}), std::invalid_argument);
  CHECK_THROWS_AS(project(w, IrredLabel{3, 7}), std::invalid_argument);
}

TEST_CASE("projector matrices are idempotent, orthogonal and complete") {
  for (int r = 2; r <= 5; ++r) {
    const auto labels = labels_of_degree(r);
    const int n = binomial(7, r);
    MatrixX<Rational> sum = MatrixX<Rational>::Zero(n, n);
    for (IrredLabel l : labels) {
      const MatrixX<Rational>& P = projector_matrix<Rational>(l);
      CHECK(max_abs(MatrixX<Rational>(P * P - P)) == 0.0);
      CHECK(max_abs(MatrixX<Rational>(P - P.transpose())) == 0.0);
      CHECK(P.trace() == Rational(l.dim));
      for (IrredLabel m : labels)
        if (!(m == l)) CHECK(max_abs(MatrixX<Rational>(P * projector_matrix<Rational>(m))) == 0.0);
      sum += P;
    }
    CHECK(max_abs(MatrixX<Rational>(sum - MatrixX<Rational>::Identity(n, n))) == 0.0);
  }
}

TEST_CASE("lambda3 values") {
  CHECK(max_abs(lambda3<Rational>(Matrix7<Rational>::Identity()) - Rational(3) * standard_phi<Rational>()) == 0.0);
  Matrix7<Rational> h = Matrix7<Rational>::Zero();
  h(0, 0) = 1;
  h(1, 1) = -1;
  const Form<Rational> expected = monomial<Rational>({1, 3, 5}) - monomial<Rational>({1, 4, 6}) +
                                  monomial<Rational>({2, 4, 5}) + monomial<Rational>({2, 3, 6});
  CHECK(max_abs(lambda3(h) - expected) == 0.0);
  for (int n = 0; n < 20; ++n) {
    const Matrix7<double> t = random_traceless();
    CHECK(std::abs(norm2(lambda3(t)) - 2.0 * t.squaredNorm()) < 1e-10);
    CHECK(max_abs(project(lambda3(t), 27) - lambda3(t)) < 1e-12);
  }
}

TEST_CASE("sigma contraction") {
  CHECK(max_abs(Matrix7<Rational>(sigma_contract(standard_phi<Rational>()) - Rational(3) * Matrix7<Rational>::Identity())) ==
        0.0);
  for (int seed = 1; seed <= 5; ++seed) {
    const Matrix7<Rational> h = integer_traceless(seed);
    CHECK(max_abs(Matrix7<Rational>(sigma_contract(lambda3(h)) - Rational(kSigmaLambda3) * h)) == 0.0);
  }
  const Matrix7<Rational> s = sigma_contract(standard_psi_minus<Rational>());
  CHECK(max_abs(Matrix7<Rational>(s - s.transpose())) > 0.0);
}

TEST_CASE("inverse of lambda3 on the 27-part") {
  for (int n = 0; n < 10; ++n) {
    const Matrix7<double> h = random_traceless();
    CHECK(max_abs(Matrix7<double>(sym2_from_27(lambda3(h), 1e-10) - h)) < 1e-12);
  }
  const Form<Rational> a = Rational(4) * wedge(standard_omega<Rational>(), monomial<Rational>({7})) -
                           Rational(3) * standard_psi_plus<Rational>();
  Matrix7<Rational> expected = -Matrix7<Rational>::Identity();
  expected(6, 6) = 6;
  CHECK(max_abs(Matrix7<Rational>(sym2_from_27(a) - expected)) == 0.0);
  CHECK(max_abs(Matrix7<Rational>(sym2_from_27(Form<Rational>(3)))) == 0.0);
  CHECK_THROWS_AS(sym2_from_27(standard_phi<Rational>()), std::domain_error);
}

TEST_CASE("quadratic torsion operations") {
  CHECK(max_abs(quad_A(Form<double>(3))) == 0.0);
  for (int n = 0; n < 10; ++n) {
    const Form<double> b = project(random_form(3), 27);
    const Form<double> a = project(random_form(2), 14);
    CHECK(max_abs(quad_C(b) - (quad_A(b) - 2.0 * quad_B(b))) == 0.0);
    CHECK(max_abs(project(quad_A(b), 7)) < 1e-12);
    CHECK(max_abs(project(quad_B(b), 7)) < 1e-12);
    CHECK(max_abs(project(odot_bracket(a, b), 7)) < 1e-12);
  }
}

TEST_CASE("mixed tensor test elements") {
  const MixedTensor<Rational> gp = gamma_prime<Rational>();
  const MixedTensor<Rational> gpp = gamma_double_prime<Rational>();
  CHECK(max_abs(wedge3(gp) - (monomial<Rational>({1, 2, 7}) - monomial<Rational>({3, 4, 7}))) == 0.0);
  CHECK(tensor_norm2(gp) == Rational(4));
  CHECK(tensor_norm2(gpp) == Rational(16, 3));
  CHECK(tensor_inner(gp, gpp) == Rational(0));
  CHECK(max_abs(wedge3(gpp) - Rational(4, 3) * wedge3(gp)) == 0.0);
  const MixedTensor<Rational> g64 = Rational(3) * gpp - Rational(4) * gp;
  CHECK(max_abs(wedge3(g64)) == 0.0);
  const MixedTensor<Rational> g27 = gpp + gp;
  CHECK(Rational(7) * tensor_norm2(g27) == Rational(6) * norm2(wedge3(g27)));
  const V14Split<Rational> s = split_v14(g27);
  CHECK(max_abs(s.part27.slots - g27.slots) == 0.0);
}

TEST_CASE("split of V* tensor Lambda2_14") {
  for (int n = 0; n < 10; ++n) {
    MixedTensor<double> g;
    for (int t = 0; t < 7; ++t) g.set_slot(t, project(random_form(2), 14));
    const V14Split<double> s = split_v14(g);
    CHECK(max_abs((s.part64 + s.part27 + s.part7 - g).slots) < 1e-12);
    CHECK(std::abs(tensor_inner(s.part64, s.part27)) < 1e-10);
    CHECK(std::abs(tensor_inner(s.part64, s.part7)) < 1e-10);
    CHECK(std::abs(tensor_inner(s.part27, s.part7)) < 1e-10);
    CHECK(max_abs(wedge3(s.part64)) < 1e-12);
    CHECK(max_abs(project(wedge3(s.part27), 27) - wedge3(s.part27)) < 1e-12);
    CHECK(max_abs(project(wedge3(s.part7), 7) - wedge3(s.part7)) < 1e-12);
    CHECK(std::abs(7.0 * tensor_norm2(s.part27) - 6.0 * norm2(wedge3(s.part27))) < 1e-9);
    const V14Split<double> again = split_v14(s.part64);
    CHECK(max_abs((again.part64 - s.part64).slots) < 1e-12);
  }
}

TEST_CASE("wedge map kernel on V* tensor Lambda2_14 has dimension 64") {
  MatrixX<double> W(35, 7 * 14);
  const MatrixX<double>& Q = projector_matrix<double>({2, 14});
  Eigen::SelfAdjointEigenSolver<MatrixX<double>> es(Q);
  MatrixX<double> basis14 = es.eigenvectors().rightCols(14);
  int col = 0;
  for (int t = 0; t < 7; ++t)
    for (int b = 0; b < 14; ++b) {
      MixedTensor<double> g;
      g.set_slot(t, Form<double>(2, basis14.col(b)));
      W.col(col++) = wedge3(g).coeffs;
    }
  Eigen::JacobiSVD<MatrixX<double>> svd(W);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > 1e-9) ++rank;
  CHECK(7 * 14 - rank == 64);
}
