#include "g2lab/cohomo_one.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace g2lab {

namespace {

Form<double> pair_form(int pair) { return monomial<double>({2 * pair + 1, 2 * pair + 2}); }

/// Fibre pair (0, 1, 2) of a 0-based coframe index below 6.
int pair_of(int a) { return a / 2; }

Form<double> values(const JetForm& a) {
  Form<double> r(a.degree);
  for (Eigen::Index n = 0; n < a.size(); ++n) r[n] = a[n].value;
  return r;
}

TorsionComponents<double> substitute(const TorsionComponents<double>& t, const Matrix7<double>& m) {
  return {t.tau0, substitute(t.tau1, m), substitute(t.tau2, m), substitute(t.tau3, m)};
}

TorsionComponents<double> values(const JetTorsion& t) {
  return {t.tau0.value, values(t.tau1), values(t.tau2), values(t.tau3)};
}

double distance(const TorsionComponents<double>& a, const TorsionComponents<double>& b) {
  return std::max({std::abs(a.tau0 - b.tau0), max_abs(a.tau1 - b.tau1), max_abs(a.tau2 - b.tau2),
                   max_abs(a.tau3 - b.tau3)});
}

JetForm jet(const Form<double>& a) { return a.cast<ScalarJet>(); }

void require_positive(const ScalarJet& f, const char* what) {
  if (!(f.value > 0)) throw std::invalid_argument(std::string(what) + " must be positive at the sample point");
}

/// ψ_t⁺ and ψ_t⁻ in the orthonormal coframe.
std::pair<JetForm, JetForm> rotated_psi(const InvariantCalculus& calc, const ScalarJet& theta) {
  const JetForm pp = calc.symbol("psi+");
  const JetForm pm = calc.symbol("psi-");
  const ScalarJet c = cos(theta);
  const ScalarJet s = sin(theta);
  return {c * pp - s * pm, s * pp + c * pm};
}

G2Forms assemble(const InvariantCalculus& calc, const JetForm& omega, const ScalarJet& theta) {
  const auto [psi_p, psi_m] = rotated_psi(calc, theta);
  const JetForm dt = calc.dt();
  G2Forms g;
  g.phi = wedge(omega, dt) + psi_p;
  g.star_phi = ScalarJet(0.5) * wedge(omega, omega) + wedge(psi_m, dt);
  g.phi_point = values(g.phi);
  return g;
}

InvariantCalculus warped_calculus(const WarpSpec& spec) {
  require_positive(spec.f, "warping function f");
  return InvariantCalculus(nearly_kahler_model(spec.sigma), {spec.f, spec.f, spec.f});
}

InvariantCalculus cohom_calculus(const CohomSpec& spec) {
  require_positive(spec.f1, "f1");
  require_positive(spec.f2, "f2");
  require_positive(spec.f3, "f3");
  return InvariantCalculus(flag_model(), {spec.f1, spec.f2, spec.f3});
}

JetForm flag_omega(const InvariantCalculus& calc) {
  return calc.symbol("omega1") + calc.symbol("omega2") + calc.symbol("omega3");
}

/// Generic-route torsion in the adapted frame plus its comparison with the formula route.
TorsionRoutes compare_routes(const InvariantCalculus& calc, const G2Forms& forms, double theta,
                             const TorsionComponents<double>& formula_orthonormal, double tol) {
  const Matrix7<double> m = adapted_frame(theta);
  const JetForm dphi = calc.d(forms.phi, tol);
  const JetForm dpsi = calc.d(forms.star_phi, tol);
  TorsionRoutes r;
  r.generic = extract_torsion(substitute(forms.phi_point, m), substitute(values(dphi), m), substitute(values(dpsi), m),
                              tol * std::max(1.0, max_abs(dphi) + max_abs(dpsi)));
  r.formula = substitute(formula_orthonormal, m);
  r.route_residual = distance(r.generic, r.formula);
  r.type = fg_type(r.generic);
  return r;
}

double weyl_ricci_residual(const InvariantCalculus& calc, const G2Forms& forms, double theta) {
  const JetForm dphi = calc.d(forms.phi);
  const JetForm dpsi = calc.d(forms.star_phi);
  const JetTorsion t = covariant_torsion(forms, dphi, dpsi);
  const JetForm x = hodge(wedge(t.tau1, forms.star_phi));
  const Matrix7<double> m = adapted_frame(theta);
  TorsionJet<double> j;
  j.torsion = substitute(values(t), m);
  j.d_vector_dual = substitute(values(calc.d(x)), m);
  j.d_tau2 = substitute(values(calc.d(t.tau2)), m);
  j.d_tau3 = substitute(values(calc.d(t.tau3)), m);
  return std::sqrt(norm2(ricci_rhs_exterior(j, 4.0, -5.0)));
}

}  // namespace

int SU3Model::index(const std::string& label) const {
  for (std::size_t s = 0; s < labels.size(); ++s)
    if (labels[s] == label) return static_cast<int>(s);
  throw std::out_of_range("SU3Model " + name + ": no symbol " + label);
}

SU3Model nearly_kahler_model(double sigma) {
  if (sigma < 0) throw std::invalid_argument("nearly_kahler_model: sigma must be non-negative");
  SU3Model m;
  m.name = sigma > 0 ? "nearly Kahler" : "Calabi-Yau";
  const Form<double> w = standard_omega<double>();
  const Form<double> w2 = wedge(w, w);
  m.labels = {"1", "omega", "psi+", "psi-", "omega^2", "omega^3"};
  m.patterns = {scalar_form(1.0), w, standard_psi_plus<double>(), standard_psi_minus<double>(), w2, wedge(w2, w)};
  m.d_table = {{}, {{3 * sigma, 2}}, {}, {{-2 * sigma, 4}}, {}, {}};
  return m;
}

SU3Model flag_model() {
  SU3Model m;
  m.name = "SU(3)/T^2";
  const Form<double> w1 = pair_form(0), w2 = pair_form(1), w3 = pair_form(2);
  m.labels = {"1", "omega1", "omega2", "omega3", "psi+", "psi-", "omega12", "omega13", "omega23", "omega123"};
  m.patterns = {scalar_form(1.0),
                w1,
                w2,
                w3,
                standard_psi_plus<double>(),
                standard_psi_minus<double>(),
                wedge(w1, w2),
                wedge(w1, w3),
                wedge(w2, w3),
                wedge(wedge(w1, w2), w3)};
  m.d_table = {{}, {{0.5, 4}}, {{0.5, 4}}, {{0.5, 4}}, {}, {{-2.0, 6}, {-2.0, 7}, {-2.0, 8}}, {}, {}, {}, {}};
  return m;
}

double model_d_squared_defect(const SU3Model& m) {
  double worst = 0;
  for (std::size_t s = 0; s < m.labels.size(); ++s) {
    if (m.d_table[s].empty()) continue;
    Form<double> dd(m.patterns[s].degree + 2);
    for (const auto& [c, r] : m.d_table[s])
      for (const auto& [c2, q] : m.d_table[r]) dd += (c * c2) * m.patterns[q];
    worst = std::max(worst, max_abs(dd));
  }
  // d(ω_i ω_j) and d(ω²) vanish because ω ∧ ψ⁺ = 0; check the tables agree with the Leibniz rule.
  for (std::size_t s = 0; s < m.labels.size(); ++s)
    for (std::size_t r = 0; r < m.labels.size(); ++r) {
      const Form<double>& a = m.patterns[s];
      const Form<double>& b = m.patterns[r];
      if (a.degree + b.degree > 6) continue;
      const Form<double> prod = wedge(a, b);
      if (max_abs(prod) == 0.0) continue;
      // Locate the product as a multiple of a symbol.
      for (std::size_t q = 0; q < m.labels.size(); ++q) {
        const Form<double>& p = m.patterns[q];
        if (p.degree != prod.degree) continue;
        const double lambda = inner(prod, p) / norm2(p);
        if (max_abs(prod - lambda * p) > 1e-12) continue;
        auto d_of = [&](std::size_t x) {
          Form<double> out(m.patterns[x].degree + 1);
          for (const auto& [c, y] : m.d_table[x]) out += c * m.patterns[y];
          return out;
        };
        const double sign = a.degree % 2 == 0 ? 1.0 : -1.0;
        const Form<double> leibniz = wedge(d_of(s), b) + sign * wedge(a, d_of(r));
        worst = std::max(worst, max_abs(leibniz - lambda * d_of(q)));
      }
    }
  return worst;
}

double model_normalization_defect(const SU3Model& m) {
  Form<double> w(2);
  for (std::size_t s = 0; s < m.labels.size(); ++s)
    if (m.labels[s].rfind("omega", 0) == 0 && m.patterns[s].degree == 2) w += m.patterns[s];
  const Form<double> pp = standard_psi_plus<double>();
  const Form<double> pm = standard_psi_minus<double>();
  double worst = max_abs(2.0 * wedge(wedge(w, w), w) - 3.0 * wedge(pp, pm));
  worst = std::max({worst, max_abs(wedge(w, pp)), max_abs(wedge(w, pm))});
  return worst;
}

InvariantCalculus::InvariantCalculus(SU3Model model, std::array<ScalarJet, 3> scales)
    : model_(std::move(model)), scales_(scales) {
  for (const auto& f : scales_) require_positive(f, "fibre scale");
}

ScalarJet InvariantCalculus::scale_of(int s) const {
  const Form<double>& p = model_.patterns[s];
  for (Eigen::Index n = 0; n < p.size(); ++n) {
    if (p[n] == 0) continue;
    const unsigned mask = basis_mask(p.degree, static_cast<int>(n));
    ScalarJet m(1.0);
    for (int a = 0; a < 6; ++a)
      if (mask & (1u << a)) m *= scales_[pair_of(a)];
    return m;
  }
  return ScalarJet(1.0);
}

JetForm InvariantCalculus::symbol(const std::string& label) const { return jet(model_.patterns[model_.index(label)]); }

JetForm InvariantCalculus::dt() const { return jet(monomial<double>({7})); }

InvariantCalculus::Decomposition InvariantCalculus::decompose(const JetForm& a) const {
  const std::size_t n = model_.labels.size();
  Decomposition d{std::vector<ScalarJet>(n, ScalarJet(0.0)), std::vector<ScalarJet>(n, ScalarJet(0.0)), 0};
  JetForm rest = a;
  const Form<double> e7 = monomial<double>({7});
  for (std::size_t s = 0; s < n; ++s) {
    const Form<double>& p = model_.patterns[s];
    if (p.degree == a.degree) {
      d.plain[s] = inner(a, jet(p)) / ScalarJet(norm2(p));
      rest -= d.plain[s] * jet(p);
    }
    if (p.degree + 1 == a.degree) {
      const Form<double> q = wedge(p, e7);
      d.with_dt[s] = inner(a, jet(q)) / ScalarJet(norm2(q));
      rest -= d.with_dt[s] * jet(q);
    }
  }
  d.residual = max_abs(rest);
  return d;
}

double InvariantCalculus::span_residual(const JetForm& a) const { return decompose(a).residual; }

JetForm InvariantCalculus::d(const JetForm& a, double tol) const {
  if (a.degree >= 7) return JetForm(7);
  const Decomposition dec = decompose(a);
  const double scale = std::max(1.0, max_abs(a));
  if (dec.residual > tol * scale)
    throw std::domain_error("InvariantCalculus::d: form leaves the invariant span (residual " +
                            std::to_string(dec.residual) + ")");
  const JetForm e7 = dt();
  JetForm r(a.degree + 1);
  for (std::size_t s = 0; s < model_.labels.size(); ++s) {
    const ScalarJet ms = scale_of(static_cast<int>(s));
    const JetForm ps = jet(model_.patterns[s]);
    if (dec.plain[s] != ScalarJet(0.0)) {
      // d(F m s) = (F m)′ dt∧s + F m ds.
      const ScalarJet fm = dec.plain[s] * ms;
      r += (fm.derivative() / ms) * wedge(e7, ps);
      for (const auto& [c, q] : model_.d_table[s])
        r += (ScalarJet(c) * fm / scale_of(q)) * jet(model_.patterns[q]);
    }
    if (dec.with_dt[s] != ScalarJet(0.0)) {
      const ScalarJet gm = dec.with_dt[s] * ms;
      for (const auto& [c, q] : model_.d_table[s])
        r += (ScalarJet(c) * gm / scale_of(q)) * wedge(jet(model_.patterns[q]), e7);
    }
  }
  return r;
}

G2Forms warped_phi(const WarpSpec& spec) {
  const InvariantCalculus calc = warped_calculus(spec);
  return assemble(calc, calc.symbol("omega"), spec.theta);
}

G2Forms cohom_phi(const CohomSpec& spec) {
  const InvariantCalculus calc = cohom_calculus(spec);
  return assemble(calc, flag_omega(calc), spec.theta);
}

Form<double> substitute(const Form<double>& a, const Matrix7<double>& m) {
  Form<double> r(a.degree);
  for (Eigen::Index n = 0; n < a.size(); ++n) {
    if (a[n] == 0) continue;
    const unsigned mask = basis_mask(a.degree, static_cast<int>(n));
    Form<double> term = scalar_form(a[n]);
    for (int i = 0; i < 7; ++i)
      if (mask & (1u << i)) term = wedge(term, one_form<double>(Vector7<double>(m.row(i).transpose())));
    r += term;
  }
  return r;
}

Matrix7<double> adapted_frame(double theta) {
  const double c = std::cos(theta / 3), s = std::sin(theta / 3);
  Matrix7<double> m = Matrix7<double>::Zero();
  for (int k = 0; k < 3; ++k) {
    m(2 * k, 2 * k) = c;
    m(2 * k, 2 * k + 1) = s;
    m(2 * k + 1, 2 * k) = -s;
    m(2 * k + 1, 2 * k + 1) = c;
  }
  m(6, 6) = 1;
  return m;
}

JetTorsion covariant_torsion(const G2Forms& forms, const JetForm& dphi, const JetForm& dstarphi) {
  const JetForm& phi = forms.phi;
  const JetForm& psi = forms.star_phi;
  JetTorsion t;
  t.tau0 = inner(dphi, psi) / ScalarJet(7.0);
  const JetForm rest = dphi - t.tau0 * psi;
  t.tau1 = hodge(wedge(phi, hodge(rest))) / ScalarJet(12.0);
  t.tau3 = hodge(rest - ScalarJet(3.0) * wedge(t.tau1, phi));
  t.tau2 = -hodge(dstarphi - ScalarJet(4.0) * wedge(t.tau1, psi));
  return t;
}

TorsionRoutes warped_torsion(const WarpSpec& spec, double tol) {
  const InvariantCalculus calc = warped_calculus(spec);
  const G2Forms forms = assemble(calc, calc.symbol("omega"), spec.theta);
  const double f = spec.f.value, fp = spec.f.first(), th = spec.theta.value, thp = spec.theta.first();
  const double sg = spec.sigma;
  const Form<double> omega = standard_omega<double>();
  const Form<double> psi_t = std::cos(th) * standard_psi_plus<double>() - std::sin(th) * standard_psi_minus<double>();
  const Form<double> e7 = monomial<double>({7});
  TorsionComponents<double> t;
  t.tau0 = 4.0 / 7.0 * (thp + 6 * sg * std::sin(th) / f);
  t.tau1 = ((fp - sg * std::cos(th)) / f) * e7;
  t.tau2 = Form<double>(2);
  t.tau3 = (-1.0 / 7.0 * (thp - sg * std::sin(th) / f)) * (4.0 * wedge(omega, e7) - 3.0 * psi_t);
  return compare_routes(calc, forms, th, t, tol);
}

TorsionRoutes cohom_torsion(const CohomSpec& spec, double tol) {
  const InvariantCalculus calc = cohom_calculus(spec);
  const G2Forms forms = assemble(calc, flag_omega(calc), spec.theta);
  const std::array<double, 3> f{spec.f1.value, spec.f2.value, spec.f3.value};
  const double prod = f[0] * f[1] * f[2];
  const double h = (f[0] * f[0] + f[1] * f[1] + f[2] * f[2]) / (2 * prod);
  const double th = spec.theta.value, thp = spec.theta.first();
  const Form<double> psi_t = std::cos(th) * standard_psi_plus<double>() - std::sin(th) * standard_psi_minus<double>();
  const Form<double> e7 = monomial<double>({7});
  TorsionComponents<double> t;
  t.tau0 = 4.0 / 7.0 * (thp + 2 * h * std::sin(th));
  t.tau1 = (h / 3 * (1 - std::cos(th))) * e7;
  t.tau2 = Form<double>(2);
  t.tau3 = (3.0 / 7.0 * (thp - h / 3 * std::sin(th))) * psi_t;
  for (int i = 0; i < 3; ++i) {
    const double fi2 = f[i] * f[i];
    const double others = f[(i + 1) % 3] * f[(i + 1) % 3] + f[(i + 2) % 3] * f[(i + 2) % 3];
    t.tau2 += (-2 * (1 - std::cos(th)) / (3 * prod) * (2 * fi2 - others)) * pair_form(i);
    t.tau3 -= (4.0 / 7.0 * (thp - (5 * fi2 - 2 * others) / (2 * prod) * std::sin(th))) * wedge(pair_form(i), e7);
  }
  TorsionRoutes r = compare_routes(calc, forms, th, t, tol);
  const auto hol = holonomy_residual(spec.f1, spec.f2, spec.f3);
  r.holonomy_residual = std::max({std::abs(hol[0]), std::abs(hol[1]), std::abs(hol[2])});
  r.holonomy_ok = r.holonomy_residual <= tol;
  return r;
}

std::array<double, 3> holonomy_residual(const ScalarJet& f1, const ScalarJet& f2, const ScalarJet& f3) {
  return {(f1 * f2).first() - f3.value, (f2 * f3).first() - f1.value, (f3 * f1).first() - f2.value};
}

std::array<ScalarJet, 3> holonomy_triple(double f1, double f2, double f3) {
  if (!(f1 > 0 && f2 > 0 && f3 > 0)) throw std::invalid_argument("holonomy_triple: values must be positive");
  Eigen::Matrix3d m;
  m << f2, f1, 0, 0, f3, f2, f3, 0, f1;
  const Eigen::PartialPivLU<Eigen::Matrix3d> lu(m);
  const Eigen::Vector3d d1 = lu.solve(Eigen::Vector3d(f3, f1, f2));
  const Eigen::Vector3d rhs(d1[2] - 2 * d1[0] * d1[1], d1[0] - 2 * d1[1] * d1[2], d1[1] - 2 * d1[2] * d1[0]);
  const Eigen::Vector3d d2 = lu.solve(rhs);
  return {ScalarJet(f1, d1[0], d2[0]), ScalarJet(f2, d1[1], d2[1]), ScalarJet(f3, d1[2], d2[2])};
}

std::vector<ThetaBranch> theta_family(const ScalarJet& b, double a) {
  if (!(a > 0)) throw std::invalid_argument("theta_family: a = exp(integral of b) must be positive");
  if (b.value == 0) throw std::invalid_argument("theta_family: b must be non-zero");
  // a′ = ab, a″ = a(b² + b′).
  const ScalarJet aj =
      b.order >= 1 ? ScalarJet(a, a * b.value, a * (b.value * b.value + b.first())) : ScalarJet(a, a * b.value, 0, 1);
  const ScalarJet c = (ScalarJet(1.0) - aj * aj) / (ScalarJet(1.0) + aj * aj);
  const ScalarJet s = ScalarJet(2.0) * aj / (ScalarJet(1.0) + aj * aj);
  return {{"sin=0, cos=+1", ScalarJet(0.0)},
          {"sin=0, cos=-1", ScalarJet(std::numbers::pi)},
          {"generic, sin>0", atan2(s, c)},
          {"generic, sin<0", atan2(-s, c)}};
}

double ricW_residual(const WarpSpec& spec) {
  const InvariantCalculus calc = warped_calculus(spec);
  return weyl_ricci_residual(calc, assemble(calc, calc.symbol("omega"), spec.theta), spec.theta.value);
}

double ricW_residual(const CohomSpec& spec) {
  const InvariantCalculus calc = cohom_calculus(spec);
  return weyl_ricci_residual(calc, assemble(calc, flag_omega(calc), spec.theta), spec.theta.value);
}

double warped_scalar_curvature(const WarpSpec& spec) {
  const InvariantCalculus calc = warped_calculus(spec);
  const G2Forms forms = assemble(calc, calc.symbol("omega"), spec.theta);
  const JetTorsion t = covariant_torsion(forms, calc.d(forms.phi), calc.d(forms.star_phi));
  // δ = −*d* on 1-forms; the Hodge dual of a 7-form is its single coefficient.
  const double delta_tau1 = -calc.d(hodge(t.tau1))[0].value;
  return scalar_from_torsion<double>(values(t), delta_tau1);
}

std::array<double, 2> einstein_warp_check(const ScalarJet& f, double rho, double rho_star) {
  const double v = f.value, d1 = f.first(), d2 = f.second();
  return {d1 * d1 + rho * v * v - rho_star, d2 + rho * v};
}

std::vector<SweepEntry> type_sweep() {
  std::vector<SweepEntry> out;
  auto add_warp = [&](std::string label, const WarpSpec& w) {
    const TorsionRoutes r = warped_torsion(w);
    out.push_back({std::move(label), r.type, r.route_residual});
  };
  auto add_cohom = [&](std::string label, const CohomSpec& c) {
    const TorsionRoutes r = cohom_torsion(c);
    out.push_back({std::move(label), r.type, r.route_residual});
  };
  const ScalarJet t = ScalarJet::variable(1.0);
  const ScalarJet zero(0.0);
  const ScalarJet sin_t = sin(t);

  add_warp("flat R^7: f=t, theta=0", {t, zero, 1});
  add_warp("round S^7: f=sin t, theta=t", {sin_t, t, 1});
  add_warp("S^7 type 4: f=sin t, theta=0", {sin_t, zero, 1});
  add_warp("conformal nearly parallel: theta'=sin(theta)/f",
           {sin_t, theta_family(ScalarJet(1.0) / sin_t, 0.7)[2].theta, 1});
  add_warp("tau0 killed: theta'=-6 sin(theta)/f", {sin_t, theta_family(ScalarJet(-6.0) / sin_t, 0.7)[2].theta, 1});
  add_warp("hyperbolic: f=e^t, theta=t^2", {exp(t), t * t, 0});
  add_warp("Calabi-Yau product: f=1, theta=t", {ScalarJet(1.0), t, 0});

  const auto distinct = holonomy_triple(1.0, 1.3, 1.7);
  const auto equal = holonomy_triple(1.0, 1.0, 1.0);
  const double pi = std::numbers::pi;
  add_cohom("cohom parallel: theta=0", {distinct[0], distinct[1], distinct[2], zero});
  add_cohom("cohom distinct f, theta=pi", {distinct[0], distinct[1], distinct[2], ScalarJet(pi)});
  add_cohom("cohom equal f, theta=pi", {equal[0], equal[1], equal[2], ScalarJet(pi)});
  add_cohom("cohom equal f, theta=0.8+t", {equal[0], equal[1], equal[2], ScalarJet(0.8, 1, 0)});
  add_cohom("cohom distinct f, theta=0.8+t", {distinct[0], distinct[1], distinct[2], ScalarJet(0.8, 1, 0)});
  // θ′ = −2h sinθ removes τ₀.
  const ScalarJet hj = (distinct[0] * distinct[0] + distinct[1] * distinct[1] + distinct[2] * distinct[2]) /
                       (ScalarJet(2.0) * distinct[0] * distinct[1] * distinct[2]);
  add_cohom("cohom distinct f, theta'=-2h sin(theta)",
            {distinct[0], distinct[1], distinct[2], theta_family(ScalarJet(-2.0) * hj, 0.6)[2].theta});
  return out;
}

}  // namespace g2lab
