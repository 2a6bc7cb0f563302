#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "g2lab/cohomo_one.hpp"
#include "g2lab/identities.hpp"
#include "g2lab/spec_io.hpp"
#include "json.hpp"

using namespace g2lab;
using nlohmann::json;

namespace {

/// Exit codes: 0 success, 1 check failure, 2 input error.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Common {
  bool json_out = false;
  bool exact = false;
  double tol = 1e-9;
};

double default_tolerance() {
  if (const char* env = std::getenv("G2LAB_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) throw InputError("G2LAB_TOL: expected a positive number, got '" + std::string(env) + "'");
    return v;
  }
  return 1e-9;
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << std::scientific << x;
  return s.str();
}

std::string fixed(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << std::defaultfloat << (std::abs(x) < 1e-13 ? 0.0 : x);
  return s.str();
}

// ---- identities ----

int cmd_identities(const Common& c, const std::string& negate) {
  const IdentityOptions opt{negate};
  const auto results = c.exact ? identity_suite<Rational>(opt) : identity_suite<double>(opt);
  const double tol = c.exact ? 0.0 : c.tol;
  bool ok = true;
  json rows = json::array();
  for (const auto& r : results) {
    const bool pass = r.residual <= tol;
    ok &= pass;
    rows.push_back({{"name", r.name}, {"residual", r.residual}, {"pass", pass}});
  }
  if (c.json_out) {
    std::cout << json{{"mode", c.exact ? "exact" : "float"}, {"tolerance", tol}, {"identities", rows}, {"all_pass", ok}}.dump(2)
              << "\n";
  } else {
    std::cout << "identity suite (" << (c.exact ? "exact" : "float") << ", tolerance " << fmt(tol) << ")\n";
    for (const auto& r : results)
      std::cout << (r.residual <= tol ? "  ok    " : "  FAIL  ") << std::setw(14) << fmt(r.residual) << "  " << r.name << "\n";
    std::cout << results.size() << " identities, " << (ok ? "all pass" : "FAILURES") << "\n";
  }
  if (!ok) {
    std::cerr << "failing identities:\n";
    for (const auto& r : results)
      if (r.residual > tol) std::cerr << "  " << r.name << " (residual " << fmt(r.residual) << ")\n";
  }
  return ok ? kOk : kCheckFailed;
}

// ---- analyze ----

SpecDocument resolve_spec(const std::string& path, const std::string& builtin) {
  if (!builtin.empty()) {
    try {
      return {builtin_example(builtin), standard_phi<Rational>()};
    } catch (const std::out_of_range& e) {
      throw InputError(e.what());
    }
  }
  if (path.empty()) throw InputError("give a spec file or --builtin NAME");
  return load_spec(path);
}

void print_form(const char* label, const std::vector<double>& v, int degree) {
  std::cout << "  " << label << ":";
  bool any = false;
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (std::abs(v[n]) < 1e-13) continue;
    any = true;
    std::cout << " " << (v[n] < 0 ? "-" : "+") << fixed(std::abs(v[n])) << "e";
    const unsigned mask = basis_mask(degree, static_cast<int>(n));
    for (int i = 0; i < 7; ++i)
      if (mask & (1u << i)) std::cout << i + 1;
  }
  std::cout << (any ? "\n" : " 0\n");
}

int cmd_analyze(const Common& c, const std::string& path, const std::string& builtin, const std::string& output) {
  const SpecDocument doc = resolve_spec(path, builtin);
  ReportSummary s;
  try {
    s = c.exact ? summarize(analyze(doc.spec, doc.phi, 0.0))
                : summarize(analyze(doc.spec.cast<double>(), doc.phi.cast<double>(), c.tol));
  } catch (const std::invalid_argument& e) {
    throw InputError(doc.spec.name + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw InputError(doc.spec.name + ": " + e.what());
  }
  const std::string machine = emit_report(s);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw InputError(output + ": cannot write");
    out << machine << "\n";
  }
  if (c.json_out) {
    std::cout << machine << "\n";
  } else {
    std::cout << "analysis of " << s.name << (c.exact ? " (exact)" : "") << "\n";
    std::cout << "  torsion type: " << type_label(s.type) << "\n";
    std::cout << "  tau0: " << fixed(s.tau0) << "\n";
    print_form("tau1", s.tau1, 1);
    print_form("tau2", s.tau2, 2);
    print_form("tau3", s.tau3, 3);
    std::cout << "  scalar curvature: " << fixed(s.scalar) << "\n";
    std::cout << "  |Ric0|^2: " << fixed(s.ric0_norm2) << "  |W77|^2: " << fixed(s.w77_norm2)
              << "  |W64|^2: " << fixed(s.w64_norm2) << "  |W27|^2: " << fixed(s.w27_norm2) << "\n";
    std::cout << "  unimodular: " << std::boolalpha << s.unimodular << "  closed: " << s.closed
              << "  extremally Ricci-pinched: " << s.epr << "\n";
    std::cout << "  checks:\n";
    for (const auto& k : s.checks)
      std::cout << (k.pass ? "    ok    " : "    FAIL  ") << std::setw(14) << fmt(k.residual) << "  " << k.name << "\n";
    std::cout << "  " << s.checks.size() << " checks, " << (s.all_pass() ? "all pass" : "FAILURES") << "\n";
  }
  return s.all_pass() ? kOk : kCheckFailed;
}

// ---- curvature ----

int cmd_curvature(const Common& c, const std::string& path, const std::string& builtin, long long seed) {
  CurvatureTensor<double> r;
  std::string label;
  if (seed >= 0) {
    r = random_algebraic_curvature(static_cast<std::uint64_t>(seed));
    label = "random algebraic curvature (seed " + std::to_string(seed) + ")";
  } else {
    const SpecDocument doc = resolve_spec(path, builtin);
    const auto spec = doc.spec.cast<double>();
    try {
      r = riemann(spec, levi_civita(spec, c.tol));
    } catch (const std::domain_error& e) {
      throw InputError(e.what());
    }
    label = "Levi-Civita curvature of " + doc.spec.name;
  }
  const auto d = decompose(r, std::max(c.tol, 1e-10));
  const double scale = std::max(1.0, norm2(r));
  const double reassembly = max_abs(PairMatrix<double>(d.sum().pairs - r.pairs));
  const double norm_defect = std::abs(norm_identity_defect(r, d)) / scale;
  const double bianchi = bianchi_residual(r);
  const bool ok = reassembly <= c.tol * scale && norm_defect <= c.tol && bianchi <= c.tol * scale;
  const json out = {{"source", label},
                    {"scalar", d.scalar},
                    {"ric0_norm2", d.ric0.squaredNorm()},
                    {"ricW_norm2", d.ric_w.squaredNorm()},
                    {"w77_norm2", norm2(d.W77)},
                    {"w64_norm2", norm2(d.W64)},
                    {"w27_norm2", norm2(d.W27)},
                    {"norm2", norm2(r)},
                    {"bianchi_residual", bianchi},
                    {"reassembly_residual", reassembly},
                    {"norm_identity_residual", norm_defect},
                    {"all_pass", ok}};
  if (c.json_out) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << label << "\n";
    for (const char* k : {"scalar", "ric0_norm2", "ricW_norm2", "w77_norm2", "w64_norm2", "w27_norm2", "norm2"})
      std::cout << "  " << std::setw(24) << std::left << k << fixed(out[k].get<double>()) << "\n";
    for (const char* k : {"bianchi_residual", "reassembly_residual", "norm_identity_residual"})
      std::cout << "  " << std::setw(24) << std::left << k << fmt(out[k].get<double>()) << "\n";
    std::cout << (ok ? "all pass" : "FAILURES") << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

// ---- warp / sweep ----

/// Named functions of t, or a numeric constant.
ScalarJet function_jet(const std::string& name, double t0) {
  static const std::map<std::string, std::function<ScalarJet(const ScalarJet&)>> table = {
      {"zero", [](const ScalarJet&) { return ScalarJet(0.0); }},
      {"one", [](const ScalarJet&) { return ScalarJet(1.0); }},
      {"const", [](const ScalarJet&) { return ScalarJet(1.0); }},
      {"pi", [](const ScalarJet&) { return ScalarJet(3.14159265358979323846); }},
      {"id", [](const ScalarJet& t) { return t; }},
      {"sq", [](const ScalarJet& t) { return t * t; }},
      {"sin", [](const ScalarJet& t) { return sin(t); }},
      {"cos", [](const ScalarJet& t) { return cos(t); }},
      {"sinh", [](const ScalarJet& t) { return sinh(t); }},
      {"cosh", [](const ScalarJet& t) { return cosh(t); }},
      {"exp", [](const ScalarJet& t) { return exp(t); }},
  };
  const auto it = table.find(name);
  if (it != table.end()) return it->second(ScalarJet::variable(t0));
  char* end = nullptr;
  const double v = std::strtod(name.c_str(), &end);
  if (name.empty() || *end != '\0') {
    std::string known;
    for (const auto& [k, f] : table) known += " " + k;
    throw InputError("unknown function '" + name + "'; use a number or one of:" + known);
  }
  return ScalarJet(v);
}

json torsion_json(const TorsionComponents<double>& t) {
  return {{"tau0", t.tau0},
          {"tau1_norm", std::sqrt(norm2(t.tau1))},
          {"tau2_norm", std::sqrt(norm2(t.tau2))},
          {"tau3_norm", std::sqrt(norm2(t.tau3))}};
}

int cmd_warp(const Common& c, const std::string& f, const std::string& theta, double sigma, double t0) {
  const WarpSpec spec{function_jet(f, t0), function_jet(theta, t0), sigma};
  if (!(spec.f.value > 0)) throw InputError("f must be positive at t = " + fixed(t0));
  if (sigma < 0) throw InputError("sigma must be non-negative");
  const TorsionRoutes r = warped_torsion(spec, c.tol);
  const double ricw = ricW_residual(spec);
  const double s = warped_scalar_curvature(spec);
  const bool ok = r.route_residual <= c.tol && ricw <= c.tol;
  const json out = {{"f", f},          {"theta", theta},  {"sigma", sigma},
                    {"t", t0},         {"torsion", torsion_json(r.generic)},
                    {"tau1_dt", r.generic.tau1.coeff({7})},
                    {"type", type_label(r.type)},
                    {"route_residual", r.route_residual},
                    {"ricW_residual", ricw},
                    {"scalar_curvature", s},
                    {"all_pass", ok}};
  if (c.json_out) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "warped structure f=" << f << ", theta=" << theta << ", sigma=" << sigma << " at t=" << t0 << "\n"
              << "  tau0: " << fixed(r.generic.tau0) << "\n"
              << "  tau1: " << fixed(r.generic.tau1.coeff({7})) << " dt\n"
              << "  |tau2|: " << fixed(std::sqrt(norm2(r.generic.tau2))) << "\n"
              << "  |tau3|: " << fixed(std::sqrt(norm2(r.generic.tau3))) << "\n"
              << "  type: " << type_label(r.type) << "\n"
              << "  scalar curvature: " << fixed(s) << "\n"
              << "  route residual: " << fmt(r.route_residual) << "\n"
              << "  Ric^W residual: " << fmt(ricw) << "\n"
              << (ok ? "all pass" : "FAILURES") << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

std::vector<SweepEntry> configured_sweep(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON (" + std::string(e.what()) + ")");
  }
  std::vector<SweepEntry> out;
  try {
    for (const json& w : cfg.value("warped", json::array())) {
      const double t0 = w.value("t", 1.0);
      const WarpSpec spec{function_jet(w.at("f").get<std::string>(), t0),
                          function_jet(w.at("theta").get<std::string>(), t0), w.value("sigma", 1.0)};
      if (!(spec.f.value > 0) || spec.sigma < 0) throw InputError(path + ": invalid warped entry " + w.dump());
      const auto r = warped_torsion(spec, tol);
      out.push_back({w.value("label", w.dump()), r.type, r.route_residual});
    }
    for (const json& h : cfg.value("cohom", json::array())) {
      const auto f = h.at("f").get<std::vector<double>>();
      if (f.size() != 3) throw InputError(path + ": cohom entry needs three values in \"f\"");
      const auto triple = holonomy_triple(f[0], f[1], f[2]);
      const double t0 = h.value("t", 1.0);
      const auto r = cohom_torsion({triple[0], triple[1], triple[2], function_jet(h.at("theta").get<std::string>(), t0)}, tol);
      out.push_back({h.value("label", h.dump()), r.type, r.route_residual});
    }
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  return out;
}

int cmd_sweep(const Common& c, const std::string& config) {
  const std::vector<SweepEntry> entries = config.empty() ? type_sweep() : configured_sweep(config, c.tol);
  bool ok = true;
  std::set<std::string> realized;
  json rows = json::array();
  for (const auto& e : entries) {
    const bool pass = e.route_residual <= c.tol && e.type != std::set<int>{1, 2, 3};
    ok &= pass;
    realized.insert(type_label(e.type));
    rows.push_back({{"label", e.label}, {"type", type_label(e.type)}, {"route_residual", e.route_residual}, {"pass", pass}});
  }
  if (c.json_out) {
    std::cout << json{{"entries", rows}, {"realized", realized}, {"all_pass", ok}}.dump(2) << "\n";
  } else {
    for (const auto& e : entries)
      std::cout << std::setw(11) << std::left << type_label(e.type) << " " << std::setw(14) << fmt(e.route_residual) << " "
                << e.label << "\n";
    std::cout << "realized types:";
    for (const auto& t : realized) std::cout << " " << t;
    std::cout << "\n" << (ok ? "all pass" : "FAILURES") << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G2-structure torsion and curvature toolkit"};
  app.require_subcommand(1);
  Common c;
  bool tol_given = false;
  auto add_common = [&](CLI::App* sub, bool exact) {
    sub->add_flag("--json", c.json_out, "machine-readable output");
    sub->add_option_function<double>("--tol", [&](double v) { c.tol = v; tol_given = true; },
                                     "tolerance (default 1e-9 or $G2LAB_TOL)")
        ->check(CLI::PositiveNumber);
    if (exact) sub->add_flag("--exact", c.exact, "use the exact rational kernel");
  };

  std::string negate;
  auto* ids = app.add_subcommand("identities", "run the algebraic identity suite");
  add_common(ids, true);
  ids->add_option("--negate-expected", negate, "negate the expected value of one identity (self-test)")->group("");

  std::string path, builtin, output;
  auto* an = app.add_subcommand("analyze", "analyze a left-invariant structure on a Lie group");
  add_common(an, true);
  an->add_option("spec", path, "spec document (JSON)");
  an->add_option("--builtin", builtin, "built-in example instead of a file");
  an->add_option("-o,--output", output, "also write the machine-readable report to this file");

  long long seed = -1;
  auto* cu = app.add_subcommand("curvature", "decompose a Riemann tensor into its G2 blocks");
  add_common(cu, false);
  cu->add_option("spec", path, "spec document (JSON)");
  cu->add_option("--builtin", builtin, "built-in example instead of a file");
  cu->add_option("--random", seed, "random algebraic curvature tensor with this seed")->check(CLI::NonNegativeNumber);

  std::string f = "sin", theta = "id";
  double sigma = 1.0, t0 = 1.0;
  auto* wa = app.add_subcommand("warp", "torsion of a warped product over a nearly Kahler 6-manifold");
  add_common(wa, false);
  wa->add_option("--f", f, "warping function: number or zero|one|const|pi|id|sq|sin|cos|sinh|cosh|exp")
      ->capture_default_str();
  wa->add_option("--theta", theta, "angle function (same vocabulary)")->capture_default_str();
  wa->add_option("--sigma", sigma, "nearly Kahler scale; 0 gives a Calabi-Yau fibre")->capture_default_str();
  wa->add_option("--t", t0, "sample point")->capture_default_str();

  std::string config;
  auto* sw = app.add_subcommand("sweep", "torsion types over a grid of warped and cohomogeneity-one structures");
  add_common(sw, false);
  sw->add_option("--config", config, "sweep document; the built-in grid is used if absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (!tol_given) c.tol = default_tolerance();
    if (*ids) return cmd_identities(c, negate);
    if (*an) return cmd_analyze(c, path, builtin, output);
    if (*cu) return cmd_curvature(c, path, builtin, seed);
    if (*wa) return cmd_warp(c, f, theta, sigma, t0);
    if (*sw) return cmd_sweep(c, config);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
