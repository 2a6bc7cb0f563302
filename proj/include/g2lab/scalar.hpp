#pragma once

#include <cmath>
#include <type_traits>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace g2lab {

/// Exact scalar used by the rational kernel.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

}  // namespace g2lab

namespace boost::multiprecision {

namespace detail {
template <class T, class Num>
struct g2lab_default_compat
    : std::bool_constant<std::is_convertible_v<T, Num> && !std::is_same_v<T, Num> && !is_number_expression<T>::value> {};

// Eigen expressions expose a void const_iterator, which the byte-container probe cannot digest.
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : std::false_type {};
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Array<S, R, C, O, MR, MC>> : std::false_type {};
template <class X, int R, int C, bool I>
struct is_byte_container<Eigen::Block<X, R, C, I>> : std::false_type {};
template <class Op, class L, class R>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, R>> : std::false_type {};
template <class Op, class X>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, X>> : std::false_type {};
template <class Op, class X>
struct is_byte_container<Eigen::CwiseNullaryOp<Op, X>> : std::false_type {};
template <class X>
struct is_byte_container<Eigen::Transpose<X>> : std::false_type {};
template <class L, class R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> : std::false_type {};
template <class X, int O, class S>
struct is_byte_container<Eigen::Map<X, O, S>> : std::false_type {};
template <class X, int O, class S>
struct is_byte_container<Eigen::Ref<X, O, S>> : std::false_type {};
}  // namespace detail

/// Keeps Eigen expressions out of the mixed-arithmetic overloads of the exact scalar.
template <class T>
struct is_compatible_arithmetic_type<T, g2lab::Rational>
    : std::conjunction<std::negation<std::is_base_of<Eigen::EigenBase<T>, T>>,
                       detail::g2lab_default_compat<T, g2lab::Rational>> {};

}  // namespace boost::multiprecision

namespace g2lab {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector7 = Eigen::Matrix<Scalar, 7, 1>;
template <typename Scalar>
using Matrix7 = Eigen::Matrix<Scalar, 7, 7>;

template <typename Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

/// p/q in the requested scalar type.
template <typename Scalar>
Scalar ratio(long p, long q) {
  return Scalar(p) / Scalar(q);
}

template <typename Scalar>
double to_double(const Scalar& x) {
  return static_cast<double>(x);
}

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

/// Largest absolute entry of a dense expression, as a double.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Scalar best(0);
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Scalar v = abs_value<Scalar>(m(i, j));
      if (v > best) best = v;
    }
  return to_double(best);
}

/// Exponential that only exists for floating scalars.
template <typename Scalar>
Scalar exp_value(const Scalar& x) {
  static_assert(!is_exact_v<Scalar>, "exp is not available in exact mode");
  using std::exp;
  return exp(x);
}

}  // namespace g2lab
