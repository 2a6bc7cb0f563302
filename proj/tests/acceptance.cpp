/// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "g2lab/cohomo_one.hpp"
#include "g2lab/identities.hpp"
#include "g2lab/spec_io.hpp"

using namespace g2lab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  /// Records a failed condition; the first few are reported.
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

std::mt19937_64& rng() {
  static std::mt19937_64 gen(7);
  return gen;
}

double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng()); }
double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

Form<double> random_form(int k) {
  Form<double> f(k);
  for (Eigen::Index n = 0; n < f.size(); ++n) f[n] = normal();
  return f;
}

TorsionComponents<double> random_torsion() {
  return {normal(), random_form(1), project(random_form(2), 14), project(random_form(3), 27)};
}

double distance(const TorsionComponents<double>& a, const TorsionComponents<double>& b) {
  return std::max({std::abs(a.tau0 - b.tau0), max_abs(a.tau1 - b.tau1), max_abs(a.tau2 - b.tau2),
                   max_abs(a.tau3 - b.tau3)});
}

std::string sci(double x) {
  std::ostringstream s;
  s << std::setprecision(2) << std::scientific << x;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// 1. Algebraic identities in both kernels.
Outcome identity_suite_criterion() {
  Outcome o;
  const auto t = std::chrono::steady_clock::now();
  double worst = 0;
  for (const auto& r : identity_suite<double>()) {
    worst = std::max(worst, r.residual);
    o.require(r.residual < 1e-12, r.name + " (float)");
  }
  std::size_t count = 0;
  for (const auto& r : identity_suite<Rational>()) {
    ++count;
    o.require(r.residual == 0.0, r.name + " (exact)");
  }
  const double secs = seconds_since(t);
  o.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  o.detail << count << " identities, float max " << sci(worst) << ", exact all zero, " << std::setprecision(2)
           << std::fixed << secs << " s";
  return o;
}

// 2. Projectors of degrees 2-5 and Hodge intertwining.
Outcome projector_criterion() {
  Outcome o;
  double worst = 0;
  for (int r = 2; r <= 5; ++r) {
    const int n = binomial(kDim, r);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    for (IrredLabel l : labels_of_degree(r)) {
      const Eigen::MatrixXd& p = projector_matrix<double>(l);
      sum += p;
      worst = std::max({worst, max_abs(Eigen::MatrixXd(p * p - p)), std::abs(p.trace() - l.dim)});
      for (IrredLabel m : labels_of_degree(r))
        if (m.dim != l.dim) worst = std::max(worst, max_abs(Eigen::MatrixXd(p * projector_matrix<double>(m))));
      // p^{7−r} = * p^r *.
      for (int trial = 0; trial < 10; ++trial) {
        const Form<double> a = random_form(r);
        worst = std::max(worst, max_abs(project(hodge(a), IrredLabel{7 - r, l.dim}) - hodge(project(a, l))));
      }
    }
    worst = std::max(worst, max_abs(Eigen::MatrixXd(sum - Eigen::MatrixXd::Identity(n, n))));
  }
  o.require(worst < 1e-12, "residual " + sci(worst));
  o.detail << (o.pass ? "" : "; ") << "max residual " << sci(worst);
  return o;
}

// 3. Curvature decomposition on random tensors and the nearly parallel model.
Outcome curvature_criterion() {
  Outcome o;
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const CurvatureTensor<double> r = random_algebraic_curvature(seed);
    const CurvatureDecomposition<double> d = decompose(r);
    const double scale = norm2(r);
    const CurvatureTensor<double> blocks[] = {d.W77, d.W64, d.W27, d.ricci_block, d.scalar_block};
    double rel = std::sqrt(norm2(d.sum() - r) / scale);
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) rel = std::max(rel, std::abs(inner(blocks[a], blocks[b])) / scale);
    rel = std::max(rel, std::abs(norm_identity_defect(r, d)) / scale);
    worst = std::max(worst, rel);
  }
  o.require(worst < 1e-10, "random tensors, relative residual " + sci(worst));

  const double tau0 = 1.3;
  const CurvatureTensor<double> w = decompose(random_algebraic_curvature(101)).W77;
  const CurvatureDecomposition<double> d = decompose(nearly_parallel_curvature(w, tau0));
  const double model = std::max({std::abs(d.scalar - 21.0 / 8.0 * tau0 * tau0), max_abs(d.ric0),
                                 std::sqrt(norm2(d.W27)), std::sqrt(norm2(d.W64))});
  o.require(model < 1e-10, "nearly parallel model residual " + sci(model));
  o.detail << (o.pass ? "" : "; ") << "100 tensors, max relative residual " << sci(worst) << "; nearly parallel model "
           << sci(model);
  return o;
}

// 4. The extremally Ricci-pinched homogeneous example, exact and in floating point.
Outcome closed_epr_criterion() {
  Outcome o;
  const auto t = std::chrono::steady_clock::now();
  const auto spec = builtin_example("closed-epr");
  const auto rep = analyze(spec, standard_phi<Rational>(), 0.0);
  o.require(rep.closed, "d phi != 0");
  o.require(max_abs(project(rep.torsion.tau2, 14) - rep.torsion.tau2) == 0.0, "tau not in Lambda^2_14");
  o.require(max_abs(nabla_bar_two_form(rep.canonical.nabla_bar, rep.torsion.tau2).slots) == 0.0, "nabla_bar tau != 0");
  o.require(norm2(rep.decomposition.W64) == 0, "W64 != 0");
  o.require(rep.decomposition.ric0.squaredNorm() ==
                Rational(4, 21) * rep.decomposition.scalar * rep.decomposition.scalar,
            "|Ric0|^2 != 4/21 s^2");
  o.require(rep.epr, "not extremally Ricci-pinched");
  for (const auto& c : rep.checks) o.require(c.residual == 0.0, c.name + " (exact)");
  int ricci_checks = 0;
  for (const std::string k : {"k=(1,0)", "k=(0,1)", "k=(4,-5)"})
    for (const auto& c : rep.checks)
      if (c.name.find("Ricci from torsion") != std::string::npos && c.name.find(k) != std::string::npos) ++ricci_checks;
  o.require(ricci_checks == 6, "Ricci-from-torsion checks missing");
  bool has_pointwise = false, has_norm = false;
  for (const auto& c : rep.checks) {
    has_pointwise |= c.name == "closed: curvature contracted with phi";
    has_norm |= c.name == "closed: norm of curvature contracted with phi";
  }
  o.require(has_pointwise && has_norm, "closed-case curvature checks missing");

  const auto frep = analyze(spec.cast<double>(), standard_phi<double>(), 1e-9);
  double worst = 0;
  for (const auto& c : frep.checks) {
    worst = std::max(worst, c.residual);
    o.require(c.pass, c.name + " (float)");
  }
  const double secs = seconds_since(t);
  o.require(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  o.detail << (o.pass ? "" : "; ") << rep.checks.size() << " checks exact zero, float max " << sci(worst) << ", s = "
           << to_double(rep.decomposition.scalar) << ", " << std::setprecision(2) << std::fixed << secs << " s";
  return o;
}

// 5. Hyperbolic solvable example.
Outcome hyperbolic_criterion() {
  Outcome o;
  const auto spec = builtin_example("hyperbolic").cast<double>();
  const auto rep = analyze(spec, standard_phi<double>(), 1e-10);
  const auto& d = rep.decomposition;
  const double weyl = std::sqrt(norm2(d.W77) + norm2(d.W64) + norm2(d.W27));
  o.require(weyl < 1e-10, "Weyl blocks " + sci(weyl));
  o.require(max_abs(d.ric0) < 1e-10, "Ric0 != 0");
  o.require(std::abs(d.scalar + 42.0) < 1e-10, "s = " + std::to_string(d.scalar));
  o.require(rep.type == std::set<int>{4}, "type " + type_label(rep.type));
  o.require(max_abs(rep.torsion.tau1 - monomial<double>({7})) < 1e-10, "tau1 != e7");
  o.require(rep.all_pass(), "analysis checks");
  o.detail << (o.pass ? "" : "; ") << "s = " << d.scalar << ", type " << type_label(rep.type) << ", tau1 = e7";
  return o;
}

// 6. Warped products over nearly Kahler fibres.
Outcome warped_criterion() {
  Outcome o;
  double route = 0, ricw = 0;
  for (int n = 0; n < 50; ++n) {
    const WarpSpec w{ScalarJet(uniform(0.5, 2.0), uniform(-1, 1), uniform(-1, 1)),
                     ScalarJet(uniform(-3, 3), uniform(-1, 1), uniform(-1, 1)), n % 5 == 0 ? 0.0 : uniform(0.3, 2.0)};
    route = std::max(route, warped_torsion(w).route_residual);
    ricw = std::max(ricw, ricW_residual(w));
  }
  const ScalarJet t = ScalarJet::variable(1.1);
  const WarpSpec round{sin(t), t, 1};
  const auto r = warped_torsion(round);
  const double rest = max_abs(r.generic.tau1) + max_abs(r.generic.tau2) + max_abs(r.generic.tau3);
  o.require(std::abs(r.generic.tau0 - 4.0) < 1e-10 && rest < 1e-10, "round sphere torsion");
  o.require(std::abs(warped_scalar_curvature(round) - 42.0) < 1e-10, "round sphere scalar");
  const auto flat = warped_torsion({t, ScalarJet(0.0), 1});
  o.require(flat.type.empty(), "flat space not parallel");
  double tan_err = 0;
  for (const double t0 : {0.3, 0.8, 1.3, 2.0, 2.7}) {
    const ScalarJet s = ScalarJet::variable(t0);
    const WarpSpec lcp{sin(s), ScalarJet(0.0), 1};
    tan_err = std::max(tan_err, std::abs(warped_torsion(lcp).generic.tau1.coeff({7}) + std::tan(t0 / 2)));
    ricw = std::max(ricw, ricW_residual(lcp));
    route = std::max(route, warped_torsion(lcp).route_residual);
  }
  ricw = std::max({ricw, ricW_residual(round), ricW_residual(WarpSpec{t, ScalarJet(0.0), 1})});
  o.require(tan_err < 1e-10, "tau1 = -tan(t/2) dt, error " + sci(tan_err));
  o.require(route < 1e-9, "route residual " + sci(route));
  o.require(ricw < 1e-9, "Ric^W residual " + sci(ricw));
  o.detail << (o.pass ? "" : "; ") << "route max " << sci(route) << ", Ric^W max " << sci(ricw) << ", tan error "
           << sci(tan_err);
  return o;
}

// 7. Torsion types realized by the sweep.
Outcome sweep_criterion() {
  Outcome o;
  std::set<std::set<int>> seen;
  double route = 0;
  for (const auto& e : type_sweep()) {
    seen.insert(e.type);
    route = std::max(route, e.route_residual);
  }
  const std::vector<std::set<int>> wanted = {{}, {1}, {4}, {1, 4}, {3, 4}, {1, 3, 4}, {2, 4}, {2, 3, 4}, {1, 2, 3, 4}, {1, 3}};
  for (const auto& w : wanted) o.require(seen.count(w) == 1, "missing " + type_label(w));
  o.require(seen.count({1, 2, 3}) == 0, "{1,2,3} produced");
  o.require(route < 1e-9, "route residual " + sci(route));
  o.detail << (o.pass ? "" : "; ") << seen.size() << " distinct types, never {1,2,3}";
  return o;
}

// 8. Torsion round trip.
Outcome round_trip_criterion() {
  Outcome o;
  const Form<double> phi = standard_phi<double>();
  double worst = 0;
  for (int n = 0; n < 100; ++n) {
    const auto t = random_torsion();
    const auto s = recompose(t, 1e-12);
    worst = std::max(worst, distance(t, extract_torsion(phi, s.dphi, s.dstarphi, 1e-10)));
  }
  o.require(worst < 1e-10, "residual " + sci(worst));
  o.detail << (o.pass ? "" : "; ") << "100 tuples, max residual " << sci(worst);
  return o;
}

// 9. Conformal covariance of the Weyl-type Ricci expression.
Outcome conformal_criterion() {
  Outcome o;
  double worst = 0;
  for (int n = 0; n < 20; ++n) {
    TorsionJet<double> j;
    j.torsion = random_torsion();
    j.d_vector_dual = random_form(3);
    j.d_tau2 = random_form(3);
    j.d_tau3 = random_form(4);
    const double f0 = normal();
    const auto jt = conformal_transform_jet(j, f0, random_form(1), random_form(3));
    const Form<double> before = ricci_rhs_exterior(j, 4.0, -5.0);
    const Form<double> after = ricci_rhs_exterior(jt, 4.0, -5.0);
    worst = std::max(worst, max_abs(after - std::exp(-2 * f0) * before) / std::max(1.0, max_abs(before)));
  }
  o.require(worst < 1e-10, "relative residual " + sci(worst));
  // Negative control: the metric Ricci expression alone is not covariant.
  TorsionJet<double> j;
  j.torsion = random_torsion();
  j.d_vector_dual = random_form(3);
  j.d_tau2 = random_form(3);
  j.d_tau3 = random_form(4);
  const auto jt = conformal_transform_jet(j, 0.4, random_form(1), random_form(3));
  const double control = max_abs(ricci_rhs_exterior(jt, 1.0, 0.0) - std::exp(-0.8) * ricci_rhs_exterior(j, 1.0, 0.0));
  o.require(control > 1e-3, "negative control unexpectedly covariant");
  o.detail << (o.pass ? "" : "; ") << "20 jets, weight e^{-2f}, max relative residual " << sci(worst)
           << ", k=(1,0) control deviates by " << sci(control);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"identity suite", identity_suite_criterion},
      {"projector suite", projector_criterion},
      {"curvature decomposition", curvature_criterion},
      {"extremally Ricci-pinched example", closed_epr_criterion},
      {"hyperbolic solvable example", hyperbolic_criterion},
      {"warped-product suite", warped_criterion},
      {"torsion type sweep", sweep_criterion},
      {"torsion round trip", round_trip_criterion},
      {"conformal covariance", conformal_criterion},
  };
  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << n + 1 << ". " << criteria[n].first << ": " << o.detail.str()
              << std::endl;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
