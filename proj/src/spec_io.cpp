#include "g2lab/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace g2lab {

namespace {

using nlohmann::json;

/// Line and column of a byte offset, both 1-based.
std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t n = 0; n < std::min(byte, text.size()); ++n) {
    if (text[n] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    throw InputError(source_ + ": " + path + ": " + what);
  }

  const json& field(const json& obj, const std::string& key, const std::string& path) const {
    if (!obj.is_object()) fail(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing field \"" + key + "\"");
    return *it;
  }

  int integer(const json& v, const std::string& path, int lo, int hi) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    const auto x = v.get<long long>();
    if (x < lo || x > hi) fail(path, "value " + std::to_string(x) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    return static_cast<int>(x);
  }

  Rational rational(const json& v, const std::string& path) const {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) return Rational(v.get<double>());
    if (v.is_string()) {
      try {
        return Rational(v.get<std::string>());
      } catch (const std::exception&) {
        fail(path, "cannot read \"" + v.get<std::string>() + "\" as a rational number");
      }
    }
    fail(path, "expected a number or a \"p/q\" string");
  }

 private:
  std::string source_;
};

json rational_json(const Rational& x) {
  if (denominator(x) == 1) {
    const auto n = numerator(x);
    if (n <= std::numeric_limits<long long>::max() && n >= std::numeric_limits<long long>::min())
      return static_cast<long long>(n);
  }
  return x.str();
}

}  // namespace

SpecDocument parse_spec(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + position_of(text, e.byte) + ": malformed JSON (" + e.what() + ")");
  }
  const Reader rd(source);
  if (!doc.is_object()) rd.fail("$", "expected a JSON object");
  rd.integer(rd.field(doc, "dim", "$"), "$.dim", 7, 7);

  std::vector<CoframeTerm<Rational>> terms;
  const json& cd = rd.field(doc, "coframe_d", "$");
  if (!cd.is_array()) rd.fail("$.coframe_d", "expected an array");
  for (std::size_t n = 0; n < cd.size(); ++n) {
    const std::string p = "$.coframe_d[" + std::to_string(n) + "]";
    const int k = rd.integer(rd.field(cd[n], "k", p), p + ".k", 1, 7);
    const json& ts = rd.field(cd[n], "terms", p);
    if (!ts.is_array()) rd.fail(p + ".terms", "expected an array");
    for (std::size_t m = 0; m < ts.size(); ++m) {
      const std::string q = p + ".terms[" + std::to_string(m) + "]";
      const int i = rd.integer(rd.field(ts[m], "i", q), q + ".i", 1, 7);
      const int j = rd.integer(rd.field(ts[m], "j", q), q + ".j", 1, 7);
      if (i == j) rd.fail(q, "i and j must differ");
      terms.push_back({k, i, j, rd.rational(rd.field(ts[m], "coeff", q), q + ".coeff")});
    }
  }

  SpecDocument out;
  const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : source;
  try {
    out.spec = LieAlgebraSpec<Rational>::from_terms(terms, name);
  } catch (const std::invalid_argument& e) {
    rd.fail("$.coframe_d", e.what());
  }
  const double jac = jacobi_defect(out.spec.cast<double>());
  if (jac > 1e-12) rd.fail("$.coframe_d", "structure equations violate the Jacobi identity (d∘d defect " + std::to_string(jac) + ")");

  out.phi = standard_phi<Rational>();
  if (doc.contains("phi")) {
    const json& ph = doc["phi"];
    if (!ph.is_array() || ph.size() != 35) rd.fail("$.phi", "expected 35 coefficients in sorted monomial order");
    for (std::size_t n = 0; n < 35; ++n)
      out.phi[static_cast<Eigen::Index>(n)] = rd.rational(ph[n], "$.phi[" + std::to_string(n) + "]");
  }
  return out;
}

SpecDocument load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), path);
}

std::string emit_spec(const SpecDocument& doc) {
  json out;
  out["dim"] = 7;
  out["name"] = doc.spec.name;
  std::map<int, json> by_k;
  for (const auto& t : doc.spec.to_terms()) by_k[t.k].push_back({{"i", t.i}, {"j", t.j}, {"coeff", rational_json(t.coeff)}});
  out["coframe_d"] = json::array();
  for (auto& [k, ts] : by_k) out["coframe_d"].push_back({{"k", k}, {"terms", ts}});
  json phi = json::array();
  for (Eigen::Index n = 0; n < doc.phi.size(); ++n) phi.push_back(rational_json(doc.phi[n]));
  out["phi"] = phi;
  return out.dump(2);
}

bool ReportSummary::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool ReportSummary::operator==(const ReportSummary& o) const {
  auto same_checks = [](const std::vector<CheckResult>& a, const std::vector<CheckResult>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t n = 0; n < a.size(); ++n)
      if (a[n].name != b[n].name || a[n].residual != b[n].residual || a[n].pass != b[n].pass) return false;
    return true;
  };
  return name == o.name && type == o.type && tau0 == o.tau0 && tau1 == o.tau1 && tau2 == o.tau2 && tau3 == o.tau3 &&
         scalar == o.scalar && ric0_norm2 == o.ric0_norm2 && w77_norm2 == o.w77_norm2 && w64_norm2 == o.w64_norm2 &&
         w27_norm2 == o.w27_norm2 && unimodular == o.unimodular && closed == o.closed && epr == o.epr &&
         same_checks(checks, o.checks);
}

std::string emit_report(const ReportSummary& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
  const json out = {{"name", r.name},
                    {"type", r.type},
                    {"torsion", {{"tau0", r.tau0}, {"tau1", r.tau1}, {"tau2", r.tau2}, {"tau3", r.tau3}}},
                    {"curvature",
                     {{"scalar", r.scalar},
                      {"ric0_norm2", r.ric0_norm2},
                      {"w77_norm2", r.w77_norm2},
                      {"w64_norm2", r.w64_norm2},
                      {"w27_norm2", r.w27_norm2}}},
                    {"unimodular", r.unimodular},
                    {"closed", r.closed},
                    {"epr", r.epr},
                    {"all_pass", r.all_pass()},
                    {"checks", checks}};
  return out.dump(2);
}

ReportSummary parse_report(const std::string& text) {
  try {
    const json j = json::parse(text);
    ReportSummary r;
    r.name = j.at("name").get<std::string>();
    r.type = j.at("type").get<std::set<int>>();
    const json& t = j.at("torsion");
    r.tau0 = t.at("tau0").get<double>();
    r.tau1 = t.at("tau1").get<std::vector<double>>();
    r.tau2 = t.at("tau2").get<std::vector<double>>();
    r.tau3 = t.at("tau3").get<std::vector<double>>();
    const json& c = j.at("curvature");
    r.scalar = c.at("scalar").get<double>();
    r.ric0_norm2 = c.at("ric0_norm2").get<double>();
    r.w77_norm2 = c.at("w77_norm2").get<double>();
    r.w64_norm2 = c.at("w64_norm2").get<double>();
    r.w27_norm2 = c.at("w27_norm2").get<double>();
    r.unimodular = j.at("unimodular").get<bool>();
    r.closed = j.at("closed").get<bool>();
    r.epr = j.at("epr").get<bool>();
    for (const json& k : j.at("checks"))
      r.checks.push_back({k.at("name").get<std::string>(), k.at("residual").get<double>(), k.at("pass").get<bool>()});
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

}  // namespace g2lab
