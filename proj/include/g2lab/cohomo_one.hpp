#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "g2lab/jet.hpp"
#include "g2lab/torsion.hpp"

namespace g2lab {

/// Form on I × M* in the orthonormal coframe (f·e¹, …, f·e⁶, dt) with jet coefficients in t.
using JetForm = Form<ScalarJet>;

/// Invariant forms of an SU(3)-structure fibre, their model-point patterns on e¹…e⁶, and their differentials.
struct SU3Model {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Form<double>> patterns;
  /// d(symbol s) = Σ (coefficient, symbol r) in the fibre's own coframe.
  std::vector<std::vector<std::pair<double, int>>> d_table;

  int index(const std::string& label) const;
};

/// Nearly Kähler (σ > 0) or Calabi–Yau (σ = 0) fibre: dω = 3σψ⁺, dψ⁺ = 0, dψ⁻ = −2σω².
SU3Model nearly_kahler_model(double sigma);

/// SU(3)/T² fibre: dω_i = ½ψ⁺, dψ⁺ = 0, dψ⁻ = −2Σ_{i<j}ω_iω_j.
SU3Model flag_model();

/// Largest coefficient of d∘d over the symbols of a model.
double model_d_squared_defect(const SU3Model& m);

/// Largest defect of 2ω³ = 3ψ⁺∧ψ⁻ and ω∧ψ± = 0 at the model point.
double model_normalization_defect(const SU3Model& m);

/// Exterior calculus on the invariant forms of I × M* with fibre scale factors f₁, f₂, f₃
/// (the coframe pairs (e¹,e²), (e³,e⁴), (e⁵,e⁶) are scaled by f₁, f₂, f₃).
class InvariantCalculus {
 public:
  InvariantCalculus(SU3Model model, std::array<ScalarJet, 3> scales);

  const SU3Model& model() const { return model_; }
  /// The symbol scaled to unit pattern in the orthonormal coframe.
  JetForm symbol(const std::string& label) const;
  JetForm dt() const;
  /// d of a form in the invariant span; throws std::domain_error if the form leaves the span.
  JetForm d(const JetForm& a, double tol = 1e-9) const;
  /// Distance of a form from the invariant span (values only).
  double span_residual(const JetForm& a) const;

 private:
  struct Decomposition {
    std::vector<ScalarJet> plain;   ///< coefficients of ŝ
    std::vector<ScalarJet> with_dt; ///< coefficients of ŝ∧dt
    double residual;
  };
  Decomposition decompose(const JetForm& a) const;
  ScalarJet scale_of(int s) const;

  SU3Model model_;
  std::array<ScalarJet, 3> scales_;
};

/// φ = ω_t∧dt + ψ_t⁺ and *φ = ½ω_t² + ψ_t⁻∧dt, as jets and as model-point values.
struct G2Forms {
  JetForm phi;
  JetForm star_phi;
  Form<double> phi_point;
};

struct WarpSpec {
  ScalarJet f;
  ScalarJet theta;
  double sigma = 1;
};

struct CohomSpec {
  ScalarJet f1;
  ScalarJet f2;
  ScalarJet f3;
  ScalarJet theta;
};

G2Forms warped_phi(const WarpSpec& spec);
G2Forms cohom_phi(const CohomSpec& spec);

/// Coframe change ê^i = Σ_j m(i,j) ẽ^j applied to the coefficients of a form.
Form<double> substitute(const Form<double>& a, const Matrix7<double>& m);

/// Matrix m for which φ(θ) = ω∧dt + cosθψ⁺ − sinθψ⁻ becomes the standard 3-form under substitute.
Matrix7<double> adapted_frame(double theta);

/// Torsion from the two routes (closed-form formulas and generic extraction), in the adapted frame.
struct TorsionRoutes {
  TorsionComponents<double> formula;
  TorsionComponents<double> generic;
  double route_residual = 0;
  std::set<int> type;
  double holonomy_residual = 0;  ///< cohomogeneity-one only
  bool holonomy_ok = true;       ///< false when the formulas' holonomy assumption fails
};

/// τ computed covariantly from jets of dφ and d*φ, still in the orthonormal coframe.
struct JetTorsion {
  ScalarJet tau0;
  JetForm tau1;
  JetForm tau2;
  JetForm tau3;
};

JetTorsion covariant_torsion(const G2Forms& forms, const JetForm& dphi, const JetForm& dstarphi);

TorsionRoutes warped_torsion(const WarpSpec& spec, double tol = 1e-9);
TorsionRoutes cohom_torsion(const CohomSpec& spec, double tol = 1e-9);

/// (f_if_j)′ − f_k for (i,j,k) = (1,2,3), (2,3,1), (3,1,2).
std::array<double, 3> holonomy_residual(const ScalarJet& f1, const ScalarJet& f2, const ScalarJet& f3);

/// Jets of the holonomy triple through the given values: (f_if_j)′ = f_k solved for f′ and f″.
std::array<ScalarJet, 3> holonomy_triple(double f1, double f2, double f3);

/// Solutions of θ′ = b sin θ at the sample point, given the value of a = exp∫b there.
struct ThetaBranch {
  std::string name;
  ScalarJet theta;
};
std::vector<ThetaBranch> theta_family(const ScalarJet& b, double a);

/// Norm of p³₂₇ of the Weyl-type Ricci expression for a warped structure (zero when Ric^W = 0).
double ricW_residual(const WarpSpec& spec);

/// Same for a cohomogeneity-one structure.
double ricW_residual(const CohomSpec& spec);

/// Scalar curvature from the torsion of a warped structure.
double warped_scalar_curvature(const WarpSpec& spec);

/// ((f′)² + ρf² − ρ*, f″ + ρf).
std::array<double, 2> einstein_warp_check(const ScalarJet& f, double rho, double rho_star);

struct SweepEntry {
  std::string label;
  std::set<int> type;
  double route_residual;
};

/// Curated grid of warped and cohomogeneity-one structures with their torsion types.
std::vector<SweepEntry> type_sweep();

}  // namespace g2lab
