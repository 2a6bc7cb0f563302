#include "doctest.h"
#include "g2lab/curvature.hpp"
#include "test_util.hpp"

using namespace g2lab;
using namespace g2test;

namespace {
const Matrix7<Rational> kId = Matrix7<Rational>::Identity();

Matrix7<Rational> exact_diff(const Matrix7<Rational>& a, const Matrix7<Rational>& b) { return a - b; }
}  // namespace

TEST_CASE("first Bianchi map") {
  CHECK(bianchi_residual(kn_product<Rational>(kId)) == 0.0);
  CurvatureTensor<double> r;
  for (int a = 0; a < 21; ++a)
    for (int b = a; b < 21; ++b) r.pairs(a, b) = r.pairs(b, a) = normal();
  CHECK(bianchi_residual(r) > 1e-3);
  CHECK(bianchi_kernel_dimension() == 196);
}

TEST_CASE("Kulkarni-Nomizu product constants") {
  const CurvatureTensor<Rational> rg = kn_product<Rational>(kId);
  CHECK(norm2(rg) == Rational(336));
  CHECK(rg(0, 1, 1, 0) == Rational(2));
  CHECK(max_abs(exact_diff(ricci(rg), Rational(12) * kId)) == 0.0);
  CHECK(max_abs(exact_diff(phi_ricci(rg), Rational(-24) * kId)) == 0.0);
  CHECK(norm2(kn_product<Rational>(Matrix7<Rational>::Zero())) == Rational(0));
  for (int seed = 1; seed <= 3; ++seed) {
    const Matrix7<Rational> h = integer_traceless(seed);
    const Rational n = h.squaredNorm();
    const CurvatureTensor<Rational> a = kn_product(h), b = phi_product(h);
    CHECK(norm2(a) == Rational(20) * n);
    CHECK(norm2(b) == Rational(92, 3) * n);
    CHECK(inner(a, b) == Rational(4) * n);
    CHECK(max_abs(exact_diff(ricci(a), Rational(5) * h)) == 0.0);
    CHECK(max_abs(exact_diff(phi_ricci(a), Rational(4) * h)) == 0.0);
    CHECK(max_abs(exact_diff(ricci(b), h)) == 0.0);
    CHECK(max_abs(exact_diff(phi_ricci(b), Rational(92, 3) * h)) == 0.0);
    CHECK(bianchi_residual(b) == 0.0);
  }
}

TEST_CASE("generalized Ricci tensors") {
  CHECK(max_abs(ricci(CurvatureTensor<double>())) == 0.0);
  const Matrix7<Rational> h = integer_traceless(7);
  CHECK(max_abs(ric_W(kn_product(h))) == 0.0);
  const CurvatureTensor<Rational> w27 = kn_product(h) - Rational(5) * phi_product(h);
  CHECK(max_abs(ricci(w27)) == 0.0);
  // (4·0 − 5·(4 − 5·92/3))/20 = 112/3
  CHECK(max_abs(exact_diff(ric_W(w27), Rational(112, 3) * h)) == 0.0);
  const CurvatureTensor<double> r = random_algebraic_curvature(3);
  CHECK(max_abs(Matrix7<double>(generalized_ricci(r, 1.0, 0.0) - traceless_part<double>(ricci(r)))) == 0.0);
  CHECK(std::abs(phi_ricci(r).trace() + 2.0 * scalar_curvature(r)) < 1e-10);
}

TEST_CASE("decomposition of model tensors") {
  const CurvatureDecomposition<Rational> ds = decompose(kn_product<Rational>(kId));
  CHECK(ds.scalar == Rational(84));
  CHECK(norm2(ds.W77) + norm2(ds.W64) + norm2(ds.W27) + norm2(ds.ricci_block) == Rational(0));

  const Matrix7<Rational> h = integer_traceless(11);
  const CurvatureTensor<Rational> w27 = kn_product(h) - Rational(5) * phi_product(h);
  const CurvatureDecomposition<Rational> d = decompose(w27);
  CHECK(norm2(d.W27 - w27) == Rational(0));
  CHECK(norm2(d.W77) + norm2(d.W64) + norm2(d.ricci_block) + norm2(d.scalar_block) == Rational(0));

  CurvatureTensor<double> bad;
  bad.pairs(0, 0) = 0.5;
  bad.pairs(pair_index(0, 1), pair_index(2, 3)) = bad.pairs(pair_index(2, 3), pair_index(0, 1)) = 1.0;
  CHECK_THROWS_AS(decompose(bad), std::domain_error);
}

TEST_CASE("decomposition of random algebraic curvature") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const CurvatureTensor<double> r = random_algebraic_curvature(seed);
    CHECK(bianchi_residual(r) < 1e-12);
    const CurvatureDecomposition<double> d = decompose(r);
    const double scale = norm2(r);
    CHECK(norm2(d.sum() - r) < 1e-20 * scale);
    const CurvatureTensor<double> blocks[] = {d.W77, d.W64, d.W27, d.ricci_block, d.scalar_block};
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) CHECK(std::abs(inner(blocks[a], blocks[b])) < 1e-10 * scale);
    CHECK(std::abs(norm_identity_defect(r, d)) < 1e-10 * scale);
    for (const auto& w : {d.W77, d.W64}) {
      CHECK(max_abs(ricci(w)) < 1e-10);
      CHECK(max_abs(phi_ricci(w)) < 1e-10);
      const CurvatureDecomposition<double> again = decompose(w);
      CHECK(norm2(again.W77 + again.W64 - w) < 1e-20 * scale);
    }
    CHECK(max_abs(ricci(d.W27)) < 1e-10);
    CHECK(std::abs(norm2(d.W27) - 15.0 / 28.0 * d.ric_w.squaredNorm()) < 1e-9 * scale);
  }
}

TEST_CASE("nearly parallel curvature model") {
  const CurvatureTensor<double> w = decompose(random_algebraic_curvature(42)).W77;
  const double tau0 = 1.7;
  const CurvatureDecomposition<double> d = decompose(nearly_parallel_curvature(w, tau0));
  CHECK(std::abs(d.scalar - 21.0 / 8.0 * tau0 * tau0) < 1e-12);
  CHECK(norm2(d.W77 - w) < 1e-20);
  CHECK(max_abs(d.ric0) < 1e-12);
  CHECK(norm2(d.W27) < 1e-20);
  CHECK(norm2(d.W64) < 1e-20);
}
