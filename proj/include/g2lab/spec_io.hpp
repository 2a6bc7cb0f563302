#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2lab/homogeneous.hpp"

namespace g2lab {

/// Malformed or inconsistent input; the message names the source, line and JSON path where known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Lie algebra with an orthonormal coframe and a 3-form, as read from a spec document.
///
/// Document layout (JSON): {"dim": 7, "name": "...", "coframe_d": [{"k": 1, "terms": [{"i": 1, "j": 7,
/// "coeff": -1}, ...]}, ...], "phi": [35 coefficients]}; "phi" defaults to the standard 3-form and
/// coefficients are numbers or "p/q" strings.
struct SpecDocument {
  LieAlgebraSpec<Rational> spec;
  Form<Rational> phi;
};

/// Parses a spec document and validates indices and the Jacobi identity; throws InputError.
SpecDocument parse_spec(const std::string& text, const std::string& source = "<input>");
SpecDocument load_spec(const std::string& path);
std::string emit_spec(const SpecDocument& doc);

/// Serializable summary of an analysis: torsion, type, curvature block norms and every check.
struct ReportSummary {
  std::string name;
  std::set<int> type;
  double tau0 = 0;
  std::vector<double> tau1, tau2, tau3;
  double scalar = 0;
  double ric0_norm2 = 0;
  double w77_norm2 = 0;
  double w64_norm2 = 0;
  double w27_norm2 = 0;
  bool unimodular = false;
  bool closed = false;
  bool epr = false;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  bool operator==(const ReportSummary& o) const;
};

template <typename Scalar>
ReportSummary summarize(const AnalysisReport<Scalar>& r) {
  auto coeffs = [](const Form<Scalar>& a) {
    std::vector<double> v(static_cast<std::size_t>(a.size()));
    for (Eigen::Index n = 0; n < a.size(); ++n) v[static_cast<std::size_t>(n)] = to_double(a[n]);
    return v;
  };
  ReportSummary s;
  s.name = r.name;
  s.type = r.type;
  s.tau0 = to_double(r.torsion.tau0);
  s.tau1 = coeffs(r.torsion.tau1);
  s.tau2 = coeffs(r.torsion.tau2);
  s.tau3 = coeffs(r.torsion.tau3);
  s.scalar = to_double(r.decomposition.scalar);
  s.ric0_norm2 = to_double(Scalar(r.decomposition.ric0.squaredNorm()));
  s.w77_norm2 = to_double(norm2(r.decomposition.W77));
  s.w64_norm2 = to_double(norm2(r.decomposition.W64));
  s.w27_norm2 = to_double(norm2(r.decomposition.W27));
  s.unimodular = r.unimodular;
  s.closed = r.closed;
  s.epr = r.epr;
  s.checks = r.checks;
  return s;
}

std::string emit_report(const ReportSummary& r);
/// Inverse of emit_report; throws InputError.
ReportSummary parse_report(const std::string& text);

}  // namespace g2lab
