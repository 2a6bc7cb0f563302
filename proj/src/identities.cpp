#include "g2lab/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "g2lab/curvature.hpp"
#include "g2lab/g2.hpp"
#include "g2lab/homogeneous.hpp"

namespace g2lab {

namespace {

/// Fixed integer traceless symmetric tensors, so both kernels test the same data.
template <typename Scalar>
Matrix7<Scalar> sample_traceless(int variant) {
  Matrix7<Scalar> h;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) h(i, j) = h(j, i) = Scalar(((3 * i + 5 * j + 7 * variant) % 7) - 3);
  return traceless_part<Scalar>(h);
}

template <typename Scalar>
Form<Scalar> sample_form(int k, int variant) {
  Form<Scalar> a(k);
  for (Eigen::Index n = 0; n < a.size(); ++n) a[n] = Scalar(static_cast<int>((5 * n + 3 * variant) % 9) - 4);
  return a;
}

/// Curvature tensors with every block present: a Lie-group example with W₆₄ ≠ 0, plus a random one in float mode.
template <typename Scalar>
std::vector<CurvatureTensor<Scalar>> sample_curvatures() {
  const auto spec = builtin_example("closed-solvable").cast<Scalar>();
  std::vector<CurvatureTensor<Scalar>> out{riemann(spec, levi_civita(spec, 0.0))};
  if constexpr (!is_exact_v<Scalar>) out.push_back(random_algebraic_curvature(20240607));
  return out;
}

class Suite {
 public:
  explicit Suite(const IdentityOptions& o) : options_(o) {}

  /// Identity lhs = c·rhs with a constant c that fault injection may negate; residual relative to max(1, |c·rhs|).
  template <typename Scalar, typename A, typename B>
  void expect(const std::string& name, const A& lhs, const Scalar& c, const B& rhs) {
    const Scalar sign = name == options_.negate_expected ? Scalar(-1) : Scalar(1);
    injected_ |= name == options_.negate_expected;
    injectable_.push_back(name);
    const double scale = std::max(1.0, max_abs(c * rhs));
    out_.push_back({name, max_abs(lhs - (sign * c) * rhs) / scale});
  }

  void add(const NamedResidual& r) { out_.push_back(r); }

  const std::vector<std::string>& injectable() const { return injectable_; }

  std::vector<NamedResidual> finish() {
    if (!options_.negate_expected.empty() && !injected_)
      throw std::invalid_argument("identity_suite: no injectable identity named '" + options_.negate_expected + "'");
    return std::move(out_);
  }

 private:
  IdentityOptions options_;
  bool injected_ = false;
  std::vector<std::string> injectable_;
  std::vector<NamedResidual> out_;
};

template <typename Scalar>
Eigen::Matrix<Scalar, 1, 1> as_matrix(const Scalar& x) {
  return Eigen::Matrix<Scalar, 1, 1>::Constant(x);
}

template <typename Scalar>
std::vector<NamedResidual> run_suite(Suite& s) {
  using M = Matrix7<Scalar>;
  const M id = M::Identity();
  const Scalar one(1);

  for (const auto& r : check_contraction_identities<Scalar>()) s.add(r);

  // Projectors of each degree.
  for (int r = 2; r <= 5; ++r) {
    const int n = binomial(kDim, r);
    MatrixX<Scalar> sum = MatrixX<Scalar>::Zero(n, n);
    Scalar idem(0), orth(0), dims(0);
    for (IrredLabel l : labels_of_degree(r)) {
      const MatrixX<Scalar>& p = projector_matrix<Scalar>(l);
      sum += p;
      idem = std::max(idem, Scalar(max_abs(MatrixX<Scalar>(p * p - p))));
      dims = std::max(dims, abs_value<Scalar>(p.trace() - Scalar(l.dim)));
      for (IrredLabel o : labels_of_degree(r))
        if (o.dim != l.dim) orth = std::max(orth, Scalar(max_abs(MatrixX<Scalar>(p * projector_matrix<Scalar>(o)))));
    }
    const std::string deg = std::to_string(r);
    s.add({"projectors of degree " + deg + " are idempotent", to_double(idem)});
    s.add({"projectors of degree " + deg + " are mutually orthogonal", to_double(orth)});
    s.add({"projectors of degree " + deg + " sum to the identity", max_abs(MatrixX<Scalar>(sum - MatrixX<Scalar>::Identity(n, n)))});
    s.add({"projectors of degree " + deg + " have trace = dimension", to_double(dims)});
  }
  // Hodge intertwining between degrees r and 7 − r.
  {
    double worst = 0;
    for (int r = 2; r <= 3; ++r)
      for (IrredLabel l : labels_of_degree(r)) {
        const Form<Scalar> a = sample_form<Scalar>(r, l.dim);
        worst = std::max(worst, max_abs(project(hodge(a), IrredLabel{7 - r, l.dim}) - hodge(project(a, l))));
      }
    s.add({"projection commutes with the Hodge star", worst});
  }

  // λ₃ and σ.
  const M h = sample_traceless<Scalar>(0);
  const Scalar hn = h.squaredNorm();
  s.expect("|lambda3(h)|^2 = 2 |h|^2", as_matrix(norm2(lambda3(h))), Scalar(2), as_matrix(hn));
  s.expect("sigma(lambda3(h)) = 2 h", sigma_contract(lambda3(h)), Scalar(2), h);
  s.expect("sigma(phi) = 3 g", sigma_contract(standard_phi<Scalar>()), Scalar(3), id);

  // Test elements of V* ⊗ Λ²₁₄.
  const MixedTensor<Scalar> gp = gamma_prime<Scalar>();
  const MixedTensor<Scalar> gpp = gamma_double_prime<Scalar>();
  s.expect("|gamma'|^2 = 4", as_matrix(tensor_norm2(gp)), Scalar(4), as_matrix(one));
  s.expect("|gamma''|^2 = 16/3", as_matrix(tensor_norm2(gpp)), Scalar(16) / Scalar(3), as_matrix(one));
  s.expect("wedge3(gamma'') = 4/3 wedge3(gamma')", wedge3(gpp), Scalar(4) / Scalar(3), wedge3(gp));
  s.add({"wedge3(3 gamma'' - 4 gamma') = 0", max_abs(wedge3(Scalar(3) * gpp - Scalar(4) * gp))});
  {
    const MixedTensor<Scalar> g27 = gpp + gp;
    // Tensor norm of a 3-form is 3! times its form norm.
    s.expect("7 |gamma|^2 = |wedge3(gamma)|^2 on the 27-part", as_matrix(Scalar(7) * tensor_norm2(g27)), Scalar(6),
             as_matrix(norm2(wedge3(g27))));
  }

  // Ricci contractions of the curvature products.
  const CurvatureTensor<Scalar> rg_id = kn_product<Scalar>(id);
  const CurvatureTensor<Scalar> rg = kn_product(h);
  const CurvatureTensor<Scalar> rp = phi_product(h);
  s.expect("Ric(r_g(g)) = 12 g", ricci(rg_id), Scalar(12), id);
  s.expect("Ric(r_g(h)) = 5 h", ricci(rg), Scalar(5), h);
  s.expect("Ric(r_phi(h)) = h", ricci(rp), one, h);
  s.expect("Ric_phi(r_g(g)) = -24 g", phi_ricci(rg_id), Scalar(-24), id);
  s.expect("Ric_phi(r_g(h)) = 4 h", phi_ricci(rg), Scalar(4), h);
  s.expect("Ric_phi(r_phi(h)) = 92/3 h", phi_ricci(rp), Scalar(92) / Scalar(3), h);
  s.expect("|r_g(h)|^2 = 20 |h|^2", as_matrix(norm2(rg)), Scalar(20), as_matrix(hn));
  s.expect("|r_phi(h)|^2 = 92/3 |h|^2", as_matrix(norm2(rp)), Scalar(92) / Scalar(3), as_matrix(hn));
  s.expect("<r_phi(h), r_g(h)> = 4 |h|^2", as_matrix(inner(rp, rg)), Scalar(4), as_matrix(hn));
  s.expect("|r_g(g)|^2 = 336", as_matrix(norm2(rg_id)), Scalar(336), as_matrix(one));
  s.add({"r_phi(h) satisfies the first Bianchi identity", bianchi_residual(rp)});
  s.add({"Ric^W(r_g(h)) = 0", max_abs(ric_W(rg))});

  // Block decomposition of curvature tensors.
  double reassembly = 0, norm_identity = 0, bianchi = 0;
  for (const auto& r : sample_curvatures<Scalar>()) {
    const CurvatureDecomposition<Scalar> d = decompose(r);
    bianchi = std::max(bianchi, bianchi_residual(r));
    reassembly = std::max(reassembly, max_abs(PairMatrix<Scalar>(d.sum().pairs - r.pairs)));
    norm_identity = std::max(norm_identity, std::abs(to_double(norm_identity_defect(r, d))) /
                                                std::max(1.0, to_double(norm2(r))));
  }
  s.add({"curvature satisfies the first Bianchi identity", bianchi});
  s.add({"curvature blocks reassemble", reassembly});
  s.add({"curvature norm identity (relative)", norm_identity});
  return s.finish();
}

}  // namespace

template <typename Scalar>
std::vector<NamedResidual> identity_suite(const IdentityOptions& options) {
  Suite s(options);
  return run_suite<Scalar>(s);
}

std::vector<std::string> injectable_identities() {
  Suite s({});
  run_suite<double>(s);
  return s.injectable();
}

template std::vector<NamedResidual> identity_suite<double>(const IdentityOptions&);
template std::vector<NamedResidual> identity_suite<Rational>(const IdentityOptions&);

}  // namespace g2lab
