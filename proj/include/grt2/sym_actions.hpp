#pragma once

#include "grt2/poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace grt2 {

// A permutation of three positions. images[i] is sigma(i+1) - 1.
//
// All three actions below send an exponent triple k to (k[s(1)], k[s(2)],
// k[s(3)]). For that to be a left action the product is taken as
// (s * t)(i) = t(s(i)), so that s.(t.p) == (s * t).p.
class PermS3 {
 public:
  PermS3() : images_{0, 1, 2} {}
  // Throws std::invalid_argument unless the images form a bijection of {0,1,2}.
  explicit PermS3(std::array<int, 3> images);

  static PermS3 identity() { return PermS3(); }
  // Cycle notation with 1-based points, e.g. "(12)", "(123)", "()" for the identity.
  static PermS3 from_cycle(const std::string& cycle);
  static const std::vector<PermS3>& all();

  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  const std::array<int, 3>& images() const { return images_; }
  // +1 for even, -1 for odd permutations.
  int sign() const;
  PermS3 inverse() const;

  friend PermS3 operator*(const PermS3& s, const PermS3& t);
  friend bool operator==(const PermS3& a, const PermS3& b) { return a.images_ == b.images_; }

  std::string to_string() const;

 private:
  std::array<int, 3> images_;
};

Monomial3 permute_exponents(const PermS3& s, const Monomial3& m);

// sigma.(x^k1 y^k2 z^k3) = (-1)^|sigma| x^k_s(1) y^k_s(2) z^k_s(3)
Poly3 sign_action(const PermS3& s, const Poly3& p);

// Same exponent permutation without the sign; used on K[alpha, beta, gamma].
Poly3 plain_action(const PermS3& s, const Poly3& p);

// sigma_*(p) = phi(sigma.(p lifted with z^0)) on K[x,y] = K[x,y,z]/(x+y+z).
Poly2 induced_action(const PermS3& s, const Poly2& p);

// Lift x^a y^b -> x^a y^b z^0.
Poly3 lift_z0(const Poly2& p);

// Canonical representative in the sign coinvariants K[x,y,z]_{S3}: each
// monomial goes to its strictly decreasing exponent rearrangement carrying the
// sign of the sorting permutation; monomials with a repeated exponent vanish.
Poly3 sign_coinvariant_normal_form(const Poly3& p);

// Strictly decreasing exponent triples of the given total degree.
std::vector<Monomial3> strictly_decreasing_triples(int degree);

}  // namespace grt2
