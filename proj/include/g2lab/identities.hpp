#pragma once

#include <string>
#include <vector>

#include "g2lab/exterior.hpp"

namespace g2lab {

/// Options of the algebraic identity suite.
struct IdentityOptions {
  /// Name of a constant-valued identity whose expected value is negated (fault injection for tests).
  std::string negate_expected;
};

/// The algebraic identity suite: φ contractions, projectors, λ₃/σ constants, the V*⊗Λ²₁₄ test
/// elements, the Ricci-contraction constants of the curvature products and the curvature norm identity.
/// Instantiated for double and Rational; in the exact kernel every residual is an exact zero.
template <typename Scalar>
std::vector<NamedResidual> identity_suite(const IdentityOptions& options = {});

/// Names of identities that accept fault injection through IdentityOptions::negate_expected.
std::vector<std::string> injectable_identities();

}  // namespace g2lab
