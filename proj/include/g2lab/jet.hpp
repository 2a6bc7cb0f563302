#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

namespace g2lab {

/// Second-order jet (f, f′, f″) of a function of t at a sample point.
///
/// `order` counts the trustworthy derivatives: differentiation lowers it by one and
/// arithmetic keeps the minimum, so a stale f″ can never leak into a result silently.
struct ScalarJet {
  double value = 0;
  double d1 = 0;
  double d2 = 0;
  int order = 2;

  ScalarJet() = default;
  ScalarJet(double v) : value(v) {}  // NOLINT: constants embed implicitly
  ScalarJet(double v, double first, double second, int ord = 2) : value(v), d1(first), d2(second), order(ord) {
    if (ord < 0 || ord > 2) throw std::invalid_argument("ScalarJet: order must lie in 0..2");
    if (ord < 2) d2 = 0;
    if (ord < 1) d1 = 0;
  }

  /// The coordinate t itself at t = t0.
  static ScalarJet variable(double t0) { return {t0, 1, 0}; }

  /// Jet whose derivative is the given jet.
  static ScalarJet antiderivative(double v, const ScalarJet& deriv) {
    return {v, deriv.value, deriv.d1, std::min(2, deriv.order + 1)};
  }

  ScalarJet derivative() const {
    if (order < 1) throw std::domain_error("ScalarJet: derivative of an order-0 jet");
    return {d1, d2, 0, order - 1};
  }

  double first() const {
    if (order < 1) throw std::domain_error("ScalarJet: first derivative unavailable");
    return d1;
  }
  double second() const {
    if (order < 2) throw std::domain_error("ScalarJet: second derivative unavailable");
    return d2;
  }

  explicit operator double() const { return value; }

  ScalarJet operator-() const { return {-value, -d1, -d2, order}; }
  ScalarJet& operator+=(const ScalarJet& o) { return *this = *this + o; }
  ScalarJet& operator-=(const ScalarJet& o) { return *this = *this - o; }
  ScalarJet& operator*=(const ScalarJet& o) { return *this = *this * o; }
  ScalarJet& operator/=(const ScalarJet& o) { return *this = *this / o; }

  friend ScalarJet operator+(const ScalarJet& a, const ScalarJet& b) {
    return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2, std::min(a.order, b.order)};
  }
  friend ScalarJet operator-(const ScalarJet& a, const ScalarJet& b) {
    return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2, std::min(a.order, b.order)};
  }
  friend ScalarJet operator*(const ScalarJet& a, const ScalarJet& b) {
    return {a.value * b.value, a.d1 * b.value + a.value * b.d1, a.d2 * b.value + 2 * a.d1 * b.d1 + a.value * b.d2,
            std::min(a.order, b.order)};
  }
  friend ScalarJet operator/(const ScalarJet& a, const ScalarJet& b) { return a * b.reciprocal(); }

  /// Exact equality of all tracked components; used to skip structural zeros.
  friend bool operator==(const ScalarJet& a, const ScalarJet& b) {
    return a.value == b.value && a.d1 == b.d1 && a.d2 == b.d2;
  }
  friend bool operator!=(const ScalarJet& a, const ScalarJet& b) { return !(a == b); }
  /// Ordering by value only.
  friend bool operator<(const ScalarJet& a, const ScalarJet& b) { return a.value < b.value; }
  friend bool operator>(const ScalarJet& a, const ScalarJet& b) { return a.value > b.value; }

  /// g∘u from g(u), g′(u), g″(u).
  ScalarJet compose(double g0, double g1, double g2) const { return {g0, g1 * d1, g2 * d1 * d1 + g1 * d2, order}; }

  ScalarJet reciprocal() const {
    if (value == 0) throw std::domain_error("ScalarJet: division by a jet with zero value");
    const double v = value;
    return compose(1 / v, -1 / (v * v), 2 / (v * v * v));
  }
};

inline ScalarJet sin(const ScalarJet& u) { return u.compose(std::sin(u.value), std::cos(u.value), -std::sin(u.value)); }
inline ScalarJet cos(const ScalarJet& u) { return u.compose(std::cos(u.value), -std::sin(u.value), -std::cos(u.value)); }
inline ScalarJet exp(const ScalarJet& u) {
  const double e = std::exp(u.value);
  return u.compose(e, e, e);
}
inline ScalarJet sinh(const ScalarJet& u) {
  return u.compose(std::sinh(u.value), std::cosh(u.value), std::sinh(u.value));
}
inline ScalarJet cosh(const ScalarJet& u) {
  return u.compose(std::cosh(u.value), std::sinh(u.value), std::cosh(u.value));
}
inline ScalarJet log(const ScalarJet& u) {
  if (u.value <= 0) throw std::domain_error("ScalarJet: log of a non-positive value");
  return u.compose(std::log(u.value), 1 / u.value, -1 / (u.value * u.value));
}
inline ScalarJet sqrt(const ScalarJet& u) {
  if (u.value <= 0) throw std::domain_error("ScalarJet: sqrt of a non-positive value");
  const double s = std::sqrt(u.value);
  return u.compose(s, 0.5 / s, -0.25 / (s * u.value));
}
inline ScalarJet abs(const ScalarJet& u) { return u.value < 0 ? -u : u; }

/// Angle of (x, y) with its derivatives.
inline ScalarJet atan2(const ScalarJet& y, const ScalarJet& x) {
  const int ord = std::min(y.order, x.order);
  if (ord == 0) return {std::atan2(y.value, x.value), 0, 0, 0};
  const ScalarJet rate = (x * y.derivative() - y * x.derivative()) / (x * x + y * y);
  return ScalarJet::antiderivative(std::atan2(y.value, x.value), rate);
}

}  // namespace g2lab

namespace Eigen {

template <>
struct NumTraits<g2lab::ScalarJet> : GenericNumTraits<double> {
  using Real = g2lab::ScalarJet;
  using NonInteger = g2lab::ScalarJet;
  using Nested = g2lab::ScalarJet;
  using Literal = g2lab::ScalarJet;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 3, AddCost = 3, MulCost = 9 };
  static Real epsilon() { return NumTraits<double>::epsilon(); }
  static Real dummy_precision() { return NumTraits<double>::dummy_precision(); }
  static Real highest() { return NumTraits<double>::highest(); }
  static Real lowest() { return NumTraits<double>::lowest(); }
  static int digits10() { return NumTraits<double>::digits10(); }
};

}  // namespace Eigen
