#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2lab/scalar.hpp"

namespace g2lab {

constexpr int kDim = 7;

constexpr int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Strictly increasing index set in 1..7, stored as a bit mask (bit i-1 for index i).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::uint8_t mask) : mask_(mask) {}

  /// Builds from 1-based strictly increasing indices; rejects anything else.
  static MultiIndex from_indices(std::initializer_list<int> idx) {
    return from_indices(std::vector<int>(idx));
  }
  static MultiIndex from_indices(const std::vector<int>& idx) {
    std::uint8_t m = 0;
    int prev = 0;
    for (int i : idx) {
      if (i < 1 || i > kDim || i <= prev)
        throw std::invalid_argument("MultiIndex: indices must be strictly increasing in 1..7");
      m |= static_cast<std::uint8_t>(1u << (i - 1));
      prev = i;
    }
    return MultiIndex(m);
  }

  std::uint8_t mask() const { return mask_; }
  int degree() const { return std::popcount(static_cast<unsigned>(mask_)); }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < kDim; ++i)
      if (mask_ & (1u << i)) out.push_back(i + 1);
    return out;
  }
  std::string label() const {
    std::string s;
    for (int i : indices()) s += static_cast<char>('0' + i);
    return s;
  }
  bool operator==(const MultiIndex& o) const { return mask_ == o.mask_; }

 private:
  std::uint8_t mask_ = 0;
};

namespace detail {

struct BasisTable {
  std::array<std::vector<std::uint8_t>, kDim + 1> masks;
  std::array<int, 128> position{};
};

inline void collect(int start, int left, std::uint8_t acc, std::vector<std::uint8_t>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (int i = start; i <= kDim - left; ++i)
    collect(i + 1, left - 1, static_cast<std::uint8_t>(acc | (1u << i)), out);
}

inline const BasisTable& basis_table() {
  static const BasisTable table = [] {
    BasisTable t;
    for (int k = 0; k <= kDim; ++k) {
      collect(0, k, 0, t.masks[k]);
      for (std::size_t n = 0; n < t.masks[k].size(); ++n) t.position[t.masks[k][n]] = static_cast<int>(n);
    }
    return t;
  }();
  return table;
}

/// Sign of e^A ∧ e^B relative to e^{A∪B}; zero when the sets overlap.
inline int merge_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int j = 0; j < kDim; ++j)
    if (b & (1u << j)) swaps += std::popcount(a >> (j + 1));
  return (swaps & 1) ? -1 : 1;
}

}  // namespace detail

/// Basis mask of the n-th sorted monomial of degree k.
inline std::uint8_t basis_mask(int k, int n) { return detail::basis_table().masks[k][n]; }
/// Position of a mask inside the sorted basis of its degree.
inline int basis_position(unsigned mask) { return detail::basis_table().position[mask]; }

/// Degree-k exterior form on ℝ⁷ as a dense coefficient vector over sorted monomials.
template <typename Scalar>
struct Form {
  int degree = 0;
  VectorX<Scalar> coeffs = VectorX<Scalar>::Zero(1);

  Form() = default;
  explicit Form(int k) : degree(k), coeffs(VectorX<Scalar>::Zero(binomial(kDim, k))) {
    if (k < 0 || k > kDim) throw std::invalid_argument("Form: degree out of range");
  }
  Form(int k, VectorX<Scalar> c) : degree(k), coeffs(std::move(c)) {
    if (k < 0 || k > kDim) throw std::invalid_argument("Form: degree out of range");
    if (coeffs.size() != binomial(kDim, k)) throw std::invalid_argument("Form: coefficient length mismatch");
  }

  Eigen::Index size() const { return coeffs.size(); }
  Scalar& operator[](Eigen::Index n) { return coeffs[n]; }
  const Scalar& operator[](Eigen::Index n) const { return coeffs[n]; }

  /// Coefficient of e^{i₁…i_k} for 1-based indices in any order (sign-adjusted).
  Scalar coeff(std::initializer_list<int> idx) const {
    std::vector<int> v(idx);
    if (static_cast<int>(v.size()) != degree) throw std::invalid_argument("Form::coeff: wrong number of indices");
    int sign = 1;
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b) {
        if (v[a] == v[b]) return Scalar(0);
        if (v[a] > v[b]) sign = -sign;
      }
    std::sort(v.begin(), v.end());
    const Scalar& c = coeffs[basis_position(MultiIndex::from_indices(v).mask())];
    return sign > 0 ? c : Scalar(-c);
  }

  Form& operator+=(const Form& o) {
    check_same(o);
    coeffs += o.coeffs;
    return *this;
  }
  Form& operator-=(const Form& o) {
    check_same(o);
    coeffs -= o.coeffs;
    return *this;
  }
  Form& operator*=(const Scalar& s) {
    coeffs *= s;
    return *this;
  }

  template <typename Other>
  Form<Other> cast() const {
    return Form<Other>(degree, coeffs.template cast<Other>());
  }

 private:
  void check_same(const Form& o) const {
    if (o.degree != degree) throw std::invalid_argument("Form: degree mismatch in sum");
  }
};

template <typename Scalar>
Form<Scalar> operator+(Form<Scalar> a, const Form<Scalar>& b) {
  return a += b;
}
template <typename Scalar>
Form<Scalar> operator-(Form<Scalar> a, const Form<Scalar>& b) {
  return a -= b;
}
template <typename Scalar>
Form<Scalar> operator-(Form<Scalar> a) {
  a.coeffs = -a.coeffs;
  return a;
}
template <typename Scalar>
Form<Scalar> operator*(const Scalar& s, Form<Scalar> a) {
  return a *= s;
}
template <typename Scalar>
Form<Scalar> operator*(Form<Scalar> a, const Scalar& s) {
  return a *= s;
}
template <typename Scalar>
Form<Scalar> operator/(Form<Scalar> a, const Scalar& s) {
  a.coeffs /= s;
  return a;
}

/// c·e^{i₁…i_k} for 1-based indices in any order.
template <typename Scalar>
Form<Scalar> monomial(std::initializer_list<int> idx, const Scalar& c = Scalar(1)) {
  std::vector<int> v(idx);
  int sign = 1;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (v[a] == v[b]) return Form<Scalar>(static_cast<int>(v.size()));
      if (v[a] > v[b]) sign = -sign;
    }
  std::sort(v.begin(), v.end());
  Form<Scalar> f(static_cast<int>(v.size()));
  f[basis_position(MultiIndex::from_indices(v).mask())] = sign > 0 ? c : Scalar(-c);
  return f;
}

template <typename Scalar>
Form<Scalar> scalar_form(const Scalar& c) {
  Form<Scalar> f(0);
  f[0] = c;
  return f;
}

/// The 1-form with components v.
template <typename Scalar>
Form<Scalar> one_form(const Vector7<Scalar>& v) {
  return Form<Scalar>(1, VectorX<Scalar>(v));
}

/// e^i for a 0-based index i.
template <typename Scalar>
Form<Scalar> basis_one_form(int i) {
  Form<Scalar> f(1);
  f[i] = Scalar(1);
  return f;
}

template <typename Scalar>
Vector7<Scalar> vector_of(const Form<Scalar>& a) {
  if (a.degree != 1) throw std::invalid_argument("vector_of: expected a 1-form");
  return Vector7<Scalar>(a.coeffs);
}

template <typename Scalar>
Form<Scalar> wedge(const Form<Scalar>& a, const Form<Scalar>& b) {
  if (a.degree + b.degree > kDim) throw std::invalid_argument("wedge: degree overflow");
  Form<Scalar> r(a.degree + b.degree);
  const Scalar zero(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] == zero) continue;
    const unsigned ma = basis_mask(a.degree, static_cast<int>(i));
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      if (b[j] == zero) continue;
      const unsigned mb = basis_mask(b.degree, static_cast<int>(j));
      const int s = detail::merge_sign(ma, mb);
      if (s == 0) continue;
      if (s > 0)
        r[basis_position(ma | mb)] += a[i] * b[j];
      else
        r[basis_position(ma | mb)] -= a[i] * b[j];
    }
  }
  return r;
}

/// Hodge star for the orientation e¹²³⁴⁵⁶⁷, normalised by a ∧ *b = ⟨a,b⟩ vol.
template <typename Scalar>
Form<Scalar> hodge(const Form<Scalar>& a) {
  Form<Scalar> r(kDim - a.degree);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const unsigned m = basis_mask(a.degree, static_cast<int>(i));
    const unsigned mc = 0x7Fu & ~m;
    const int s = detail::merge_sign(m, mc);
    r[basis_position(mc)] = s > 0 ? a[i] : Scalar(-a[i]);
  }
  return r;
}

/// Interior product with the basis vector e_i (0-based).
template <typename Scalar>
Form<Scalar> interior(int i, const Form<Scalar>& a) {
  if (a.degree == 0) return Form<Scalar>(0);
  Form<Scalar> r(a.degree - 1);
  const unsigned bit = 1u << i;
  for (Eigen::Index n = 0; n < a.size(); ++n) {
    const unsigned m = basis_mask(a.degree, static_cast<int>(n));
    if (!(m & bit)) continue;
    const int p = std::popcount(m & (bit - 1));
    if (p & 1)
      r[basis_position(m & ~bit)] -= a[n];
    else
      r[basis_position(m & ~bit)] += a[n];
  }
  return r;
}

template <typename Scalar>
Form<Scalar> interior(const Vector7<Scalar>& v, const Form<Scalar>& a) {
  if (a.degree == 0) return Form<Scalar>(0);
  Form<Scalar> r(a.degree - 1);
  for (int i = 0; i < kDim; ++i)
    if (v[i] != Scalar(0)) r += v[i] * interior(i, a);
  return r;
}

/// Form inner product (sorted monomials orthonormal).
template <typename Scalar>
Scalar inner(const Form<Scalar>& a, const Form<Scalar>& b) {
  if (a.degree != b.degree) throw std::invalid_argument("inner: degree mismatch");
  return a.coeffs.dot(b.coeffs);
}

template <typename Scalar>
Scalar norm2(const Form<Scalar>& a) {
  return inner(a, a);
}

template <typename Scalar>
double max_abs(const Form<Scalar>& a) {
  return max_abs(a.coeffs);
}

template <typename Scalar>
Form<Scalar> volume_form() {
  return monomial<Scalar>({1, 2, 3, 4, 5, 6, 7});
}

/// The scalar c with a = c·vol for a 7-form a.
template <typename Scalar>
Scalar top_coefficient(const Form<Scalar>& a) {
  if (a.degree != kDim) throw std::invalid_argument("top_coefficient: expected a 7-form");
  return a[0];
}

template <typename Scalar>
Form<Scalar> standard_phi() {
  const Scalar one(1);
  return monomial<Scalar>({1, 2, 7}, one) + monomial<Scalar>({3, 4, 7}, one) + monomial<Scalar>({5, 6, 7}, one) +
         monomial<Scalar>({1, 3, 5}, one) - monomial<Scalar>({2, 4, 5}, one) - monomial<Scalar>({1, 4, 6}, one) -
         monomial<Scalar>({2, 3, 6}, one);
}

template <typename Scalar>
Form<Scalar> standard_phi_dual() {
  const Scalar one(1);
  return monomial<Scalar>({1, 2, 3, 4}, one) + monomial<Scalar>({3, 4, 5, 6}, one) +
         monomial<Scalar>({5, 6, 1, 2}, one) - monomial<Scalar>({2, 4, 6, 7}, one) +
         monomial<Scalar>({1, 3, 6, 7}, one) + monomial<Scalar>({2, 3, 5, 7}, one) +
         monomial<Scalar>({1, 4, 5, 7}, one);
}

/// ω = e¹² + e³⁴ + e⁵⁶.
template <typename Scalar>
Form<Scalar> standard_omega() {
  const Scalar one(1);
  return monomial<Scalar>({1, 2}, one) + monomial<Scalar>({3, 4}, one) + monomial<Scalar>({5, 6}, one);
}

/// ψ⁺ = e¹³⁵ − e²⁴⁵ − e¹⁴⁶ − e²³⁶.
template <typename Scalar>
Form<Scalar> standard_psi_plus() {
  const Scalar one(1);
  return monomial<Scalar>({1, 3, 5}, one) - monomial<Scalar>({2, 4, 5}, one) - monomial<Scalar>({1, 4, 6}, one) -
         monomial<Scalar>({2, 3, 6}, one);
}

/// ψ⁻ = −e²⁴⁶ + e¹³⁶ + e²³⁵ + e¹⁴⁵.
template <typename Scalar>
Form<Scalar> standard_psi_minus() {
  const Scalar one(1);
  return -monomial<Scalar>({2, 4, 6}, one) + monomial<Scalar>({1, 3, 6}, one) + monomial<Scalar>({2, 3, 5}, one) +
         monomial<Scalar>({1, 4, 5}, one);
}

/// Totally antisymmetric component array A[i₁…i_k] (0-based, row-major over 7^k entries).
template <typename Scalar>
struct AntisymArray {
  int degree = 0;
  std::vector<Scalar> data = std::vector<Scalar>(1, Scalar(0));

  AntisymArray() = default;
  explicit AntisymArray(int k) : degree(k), data(static_cast<std::size_t>(ipow7(k)), Scalar(0)) {}

  static long ipow7(int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= kDim;
    return r;
  }
  std::size_t size() const { return data.size(); }

  Scalar& operator()(std::initializer_list<int> idx) { return data[flat(idx.begin())]; }
  const Scalar& operator()(std::initializer_list<int> idx) const { return data[flat(idx.begin())]; }

  std::size_t flat(const int* idx) const {
    std::size_t f = 0;
    for (int n = 0; n < degree; ++n) f = f * kDim + static_cast<std::size_t>(idx[n]);
    return f;
  }

  /// Tensor norm²: sum over all index tuples.
  Scalar tensor_norm2() const {
    Scalar s(0);
    for (const auto& x : data) s += x * x;
    return s;
  }
};

namespace detail {

/// Decodes a flat index into k digits; returns the permutation sign to sorted order (0 on repeats) and the mask.
inline int tuple_sign(long flat, int k, unsigned& mask) {
  int digits[kDim];
  for (int n = k - 1; n >= 0; --n) {
    digits[n] = static_cast<int>(flat % kDim);
    flat /= kDim;
  }
  mask = 0;
  int sign = 1;
  for (int a = 0; a < k; ++a) {
    if (mask & (1u << digits[a])) return 0;
    mask |= 1u << digits[a];
    for (int b = a + 1; b < k; ++b)
      if (digits[a] > digits[b]) sign = -sign;
  }
  return sign;
}

}  // namespace detail

template <typename Scalar>
AntisymArray<Scalar> to_antisym(const Form<Scalar>& a) {
  AntisymArray<Scalar> A(a.degree);
  for (long f = 0; f < static_cast<long>(A.size()); ++f) {
    unsigned mask = 0;
    const int s = detail::tuple_sign(f, a.degree, mask);
    if (s == 0) continue;
    const Scalar& c = a[basis_position(mask)];
    A.data[f] = s > 0 ? c : Scalar(-c);
  }
  return A;
}

/// Inverse of to_antisym; rejects arrays that are not totally antisymmetric.
template <typename Scalar>
Form<Scalar> from_antisym(const AntisymArray<Scalar>& A, const Scalar& tol = Scalar(0)) {
  Form<Scalar> a(A.degree);
  for (long f = 0; f < static_cast<long>(A.size()); ++f) {
    unsigned mask = 0;
    const int s = detail::tuple_sign(f, A.degree, mask);
    if (s == 1) {
      // sorted tuples are exactly the sign +1 tuples whose digits increase
      bool increasing = true;
      long g = f;
      int last = kDim;
      for (int n = 0; n < A.degree; ++n) {
        const int d = static_cast<int>(g % kDim);
        g /= kDim;
        if (d >= last) increasing = false;
        last = d;
      }
      if (increasing) a[basis_position(mask)] = A.data[f];
    }
  }
  const AntisymArray<Scalar> back = to_antisym(a);
  for (std::size_t f = 0; f < A.size(); ++f)
    if (abs_value<Scalar>(back.data[f] - A.data[f]) > tol)
      throw std::invalid_argument("from_antisym: array is not totally antisymmetric");
  return a;
}

/// A named identity and the size of its defect.
struct NamedResidual {
  std::string name;
  double residual;
};
using ContractionResidual = NamedResidual;

/// Residuals of the standard φ contraction identities, one entry per identity.

template <typename Scalar>
std::vector<ContractionResidual> check_contraction_identities() {
  const AntisymArray<Scalar> P = to_antisym(standard_phi<Scalar>());
  const AntisymArray<Scalar> Q = to_antisym(standard_phi_dual<Scalar>());
  auto p3 = [&](int i, int j, int k) -> const Scalar& { return P.data[(i * 7 + j) * 7 + k]; };
  auto p4 = [&](int i, int j, int k, int l) -> const Scalar& { return Q.data[((i * 7 + j) * 7 + k) * 7 + l]; };
  auto delta = [](int a, int b) { return a == b ? Scalar(1) : Scalar(0); };
  auto worst = [](Scalar& acc, const Scalar& v) {
    Scalar a = abs_value<Scalar>(v);
    if (a > acc) acc = a;
  };

  Scalar r26(0), r27(0), r28(0), r29(0), r210(0), r4full(0);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      Scalar s(0), f(0);
      for (int p = 0; p < 7; ++p)
        for (int q = 0; q < 7; ++q) s += p3(i, p, q) * p3(p, q, j);
      for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
          for (int c = 0; c < 7; ++c) f += p4(i, a, b, c) * p4(j, a, b, c);
      worst(r26, s - Scalar(6) * delta(i, j));
      worst(r4full, f - Scalar(24) * delta(i, j));
      for (int k = 0; k < 7; ++k) {
        Scalar t(0);
        for (int p = 0; p < 7; ++p)
          for (int q = 0; q < 7; ++q) t += p3(i, p, q) * p4(p, q, j, k);
        worst(r29, t - Scalar(4) * p3(i, j, k));
        for (int l = 0; l < 7; ++l) {
          const Scalar dd = delta(i, k) * delta(j, l) - delta(j, k) * delta(i, l);
          Scalar u(0), w(0);
          for (int p = 0; p < 7; ++p) u += p3(i, j, p) * p3(p, k, l);
          for (int p = 0; p < 7; ++p)
            for (int q = 0; q < 7; ++q) w += p4(i, j, p, q) * p4(p, q, k, l);
          worst(r27, u - dd - p4(i, j, k, l));
          worst(r28, w - Scalar(4) * dd - Scalar(2) * p4(i, j, k, l));
          for (int m = 0; m < 7; ++m) {
            Scalar v(0);
            for (int p = 0; p < 7; ++p) v += p3(i, j, p) * p4(p, k, l, m);
            const Scalar rhs = delta(i, k) * p3(j, l, m) - delta(j, k) * p3(i, l, m) + delta(i, l) * p3(j, m, k) -
                               delta(j, l) * p3(i, m, k) + delta(i, m) * p3(j, k, l) - delta(j, m) * p3(i, k, l);
            worst(r210, v - rhs);
          }
        }
      }
    }
  return {{"phi_ipq phi_pqj = 6 delta_ij", to_double(r26)},
          {"phi_ijp phi_pkl = dd + phi_ijkl", to_double(r27)},
          {"phi_ijpq phi_pqkl = 4 dd + 2 phi_ijkl", to_double(r28)},
          {"phi_ipq phi_pqjk = 4 phi_ijk", to_double(r29)},
          {"phi_ijp phi_pklm = delta-phi expansion", to_double(r210)},
          {"phi_pabc phi_qabc = 24 delta_pq", to_double(r4full)}};
}

}  // namespace g2lab
