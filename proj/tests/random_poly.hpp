#pragma once

#include "grt2/poly.hpp"
#include "printers.hpp"

#include <algorithm>
#include <random>

namespace grt2::testgen {

inline Rational random_coefficient(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  return make_rational(num(rng), den(rng));
}

inline Poly3 random_poly3(std::mt19937& rng, int max_degree, int terms) {
  std::uniform_int_distribution<int> e(0, max_degree);
  Poly3 p;
  for (int t = 0; t < terms; ++t) {
    Monomial3 m{e(rng), e(rng), e(rng)};
    while (m[0] + m[1] + m[2] > max_degree) --*std::max_element(m.begin(), m.end());
    p.add_term(m, random_coefficient(rng));
  }
  return p;
}

inline Poly3 random_homogeneous3(std::mt19937& rng, int degree, int terms) {
  std::uniform_int_distribution<int> e(0, degree);
  Poly3 p;
  for (int t = 0; t < terms; ++t) {
    int a = e(rng);
    std::uniform_int_distribution<int> e2(0, degree - a);
    int b = e2(rng);
    p.add_term({a, b, degree - a - b}, random_coefficient(rng));
  }
  return p;
}

inline Poly2 random_poly2(std::mt19937& rng, int max_degree, int terms) {
  std::uniform_int_distribution<int> e(0, max_degree);
  Poly2 p;
  for (int t = 0; t < terms; ++t) {
    int a = e(rng);
    std::uniform_int_distribution<int> e2(0, max_degree - a);
    p.add_term({a, e2(rng)}, random_coefficient(rng));
  }
  return p;
}

// Random Lie polynomial: nested commutators of x and y.
inline NCPoly random_lie(std::mt19937& rng, int depth_budget) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (depth_budget == 0) return letter(coin(rng) ? 'x' : 'y');
  std::uniform_int_distribution<int> split(0, depth_budget - 1);
  const int left = split(rng);
  return nc_bracket(random_lie(rng, left), random_lie(rng, depth_budget - 1 - left));
}

}  // namespace grt2::testgen
