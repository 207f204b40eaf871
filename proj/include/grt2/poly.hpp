#pragma once

#include "grt2/rational.hpp"

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace grt2 {

// Exponent triple (k1, k2, k3) of x^k1 y^k2 z^k3 (or alpha, beta, gamma).
using Monomial3 = std::array<int, 3>;
// Exponent pair (a, b) of x^a y^b.
using Monomial2 = std::array<int, 2>;

// Word over the letters 'x' and 'y'.
using NCWord = std::string;

template <class Key>
struct MonomialTraits;

template <std::size_t N>
struct MonomialTraits<std::array<int, N>> {
  static std::array<int, N> one() { return {}; }
  static std::array<int, N> mul(const std::array<int, N>& a, const std::array<int, N>& b) {
    std::array<int, N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
  }
  static int degree(const std::array<int, N>& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
  }
};

template <>
struct MonomialTraits<NCWord> {
  static NCWord one() { return {}; }
  static NCWord mul(const NCWord& a, const NCWord& b) { return a + b; }
  static int degree(const NCWord& w) { return static_cast<int>(w.size()); }
};

// Sparse polynomial over Q with keys kept in lexicographic order. No stored
// coefficient is ever zero, so structural equality is ring equality.
template <class Key>
class SparsePoly {
 public:
  using Traits = MonomialTraits<Key>;
  using Terms = std::map<Key, Rational>;

  SparsePoly() = default;
  SparsePoly(std::initializer_list<std::pair<Key, Rational>> terms) {
    for (const auto& [k, c] : terms) add_term(k, c);
  }

  static SparsePoly monomial(const Key& k, const Rational& c = 1) {
    SparsePoly p;
    p.add_term(k, c);
    return p;
  }
  static SparsePoly constant(const Rational& c) { return monomial(Traits::one(), c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Key& k, const Rational& c) {
    if (grt2::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (grt2::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SparsePoly& operator*=(const Rational& c) {
    if (grt2::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Rational(-1); }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) r.add_term(Traits::mul(ka, kb), ca * cb);
    }
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly pow(int n) const {
    SparsePoly r = constant(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

 private:
  Terms terms_;
};

using Poly3 = SparsePoly<Monomial3>;
using Poly2 = SparsePoly<Monomial2>;
using NCPoly = SparsePoly<NCWord>;

// Generators.
Poly3 var3(int index);  // 0 -> x, 1 -> y, 2 -> z
Poly2 var2(int index);  // 0 -> x, 1 -> y
NCPoly letter(char c);  // 'x' or 'y'

// Ring homomorphism K[x,y,z] -> K[x,y]: x -> x, y -> y, z -> -x-y.
Poly2 substitute_phi(const Poly3& p);

// Projections onto monomials of even / odd total degree.
Poly3 even_part(const Poly3& p);
Poly3 odd_part(const Poly3& p);
Poly2 even_part(const Poly2& p);
Poly2 odd_part(const Poly2& p);

// Commutator ab - ba.
NCPoly nc_bracket(const NCPoly& a, const NCPoly& b);

// Number of 'y' letters.
int word_depth(const NCWord& w);
// Minimum word depth over the terms. Throws std::domain_error for zero.
int depth(const NCPoly& p);

Integer binomial(int n, int k);

std::string to_string(const Poly3& p, const char* vars = "xyz");
std::string to_string(const Poly2& p, const char* vars = "xy");
std::string to_string(const NCPoly& p);

}  // namespace grt2
