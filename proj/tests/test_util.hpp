#pragma once

#include <random>

#include "g2lab/g2.hpp"

namespace g2test {

using namespace g2lab;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240607);
  return gen;
}

inline double normal() {
  static std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng());
}

inline Form<double> random_form(int k) {
  Form<double> f(k);
  for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = normal();
  return f;
}

inline Vector7<double> random_vector() {
  Vector7<double> v;
  for (int i = 0; i < 7; ++i) v[i] = normal();
  return v;
}

inline Matrix7<double> random_symmetric() {
  Matrix7<double> h;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) h(i, j) = normal();
  return (h + h.transpose()) / 2.0;
}

inline Matrix7<double> random_traceless() { return traceless_part<double>(random_symmetric()); }

/// Small integer-valued traceless symmetric tensor for the exact kernel.
inline Matrix7<Rational> integer_traceless(int seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix7<Rational> h;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) h(i, j) = h(j, i) = Rational(d(gen));
  return traceless_part<Rational>(h);
}

}  // namespace g2test
