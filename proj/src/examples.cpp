#include <map>
#include <stdexcept>

#include "g2lab/homogeneous.hpp"

namespace g2lab {

namespace {

using Terms = std::vector<CoframeTerm<Rational>>;
using Mat6 = Eigen::Matrix<Rational, 6, 6>;

Mat6 integer_matrix(const int (&a)[6][6]) {
  Mat6 m;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = Rational(a[i][j]);
  return m;
}

LieAlgebraSpec<Rational> closed_epr() {
  const Terms t = {{1, 1, 7, -1}, {1, 3, 6, -2}, {1, 4, 5, -2}, {2, 2, 7, -1}, {2, 3, 5, -2}, {2, 6, 4, -2},
                   {3, 3, 7, 1},  {4, 4, 7, 1},  {5, 5, 7, -2}, {6, 6, 7, -2}};
  return LieAlgebraSpec<Rational>::from_terms(t, "closed-epr");
}

LieAlgebraSpec<Rational> hyperbolic() {
  Terms t;
  for (int i = 1; i <= 6; ++i) t.push_back({i, i, 7, -1});
  return LieAlgebraSpec<Rational>::from_terms(t, "hyperbolic");
}

/// A closed structure on ℝ ⋉_A ℝ⁶ that is not extremally Ricci-pinched.
LieAlgebraSpec<Rational> closed_solvable() {
  const int a[6][6] = {{-1, 3, 0, -1, 0, -2}, {-3, -1, 1, 0, 2, 0}, {1, 0, 0, -1, -1, 0},
                       {0, 1, 1, 0, 0, -1},   {0, 0, 0, -1, 1, -2}, {0, 0, 1, 0, 2, 1}};
  return solvable_extension<Rational>(integer_matrix(a), "closed-solvable");
}

/// A rank-one solvable algebra whose structure has all four torsion classes.
LieAlgebraSpec<Rational> generic_solvable() {
  const int a[6][6] = {{1, 2, 0, -1, 0, 1}, {0, -1, 1, 0, 2, 0}, {1, 0, 2, 0, -1, 0},
                       {0, 1, 0, 1, 0, -2}, {2, 0, -1, 0, 1, 1}, {0, 1, 0, 1, 0, 3}};
  return solvable_extension<Rational>(integer_matrix(a), "generic-solvable");
}

/// su(2) ⊕ ℝ⁴ with unequal scales on the su(2) factor; unimodular.
LieAlgebraSpec<Rational> su2_r4() {
  const Terms t = {{1, 2, 3, -1}, {2, 3, 1, -2}, {3, 1, 2, -3}};
  return LieAlgebraSpec<Rational>::from_terms(t, "su2-r4");
}

const std::map<std::string, LieAlgebraSpec<Rational> (*)()>& registry() {
  static const std::map<std::string, LieAlgebraSpec<Rational> (*)()> m = {
      {"flat", [] { return LieAlgebraSpec<Rational>::from_terms({}, "flat"); }},
      {"hyperbolic", hyperbolic},
      {"closed-epr", closed_epr},
      {"closed-solvable", closed_solvable},
      {"generic-solvable", generic_solvable},
      {"su2-r4", su2_r4},
  };
  return m;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

LieAlgebraSpec<Rational> builtin_example(const std::string& name) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw std::out_of_range("unknown built-in example: " + name);
  return it->second();
}

}  // namespace g2lab
