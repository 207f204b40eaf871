#include "grt2/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace grt2 {

Poly3 var3(int index) {
  Monomial3 m{};
  m.at(static_cast<std::size_t>(index)) = 1;
  return Poly3::monomial(m);
}

Poly2 var2(int index) {
  Monomial2 m{};
  m.at(static_cast<std::size_t>(index)) = 1;
  return Poly2::monomial(m);
}

NCPoly letter(char c) {
  if (c != 'x' && c != 'y') throw std::invalid_argument("letters are 'x' and 'y'");
  return NCPoly::monomial(NCWord(1, c));
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Poly2 substitute_phi(const Poly3& p) {
  Poly2 out;
  for (const auto& [m, c] : p.terms()) {
    // x^a y^b (-x-y)^n = (-1)^n sum_j C(n,j) x^(a+j) y^(b+n-j)
    const int n = m[2];
    const Rational sign = (n % 2 == 0) ? 1 : -1;
    for (int j = 0; j <= n; ++j) {
      out.add_term({m[0] + j, m[1] + n - j}, sign * c * Rational(binomial(n, j)));
    }
  }
  return out;
}

namespace {

template <class P>
P parity_part(const P& p, int parity) {
  P out;
  for (const auto& [m, c] : p.terms()) {
    if (P::Traits::degree(m) % 2 == parity) out.add_term(m, c);
  }
  return out;
}

template <std::size_t N>
std::string poly_to_string(const SparsePoly<std::array<int, N>>& p, const char* vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    if (mag != 1 || constant) os << to_string(mag);
    bool need_star = (mag != 1 || constant);
    for (std::size_t i = 0; i < N; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << '*';
      os << vars[i];
      if (m[i] > 1) os << '^' << m[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

Poly3 even_part(const Poly3& p) { return parity_part(p, 0); }
Poly3 odd_part(const Poly3& p) { return parity_part(p, 1); }
Poly2 even_part(const Poly2& p) { return parity_part(p, 0); }
Poly2 odd_part(const Poly2& p) { return parity_part(p, 1); }

NCPoly nc_bracket(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

int word_depth(const NCWord& w) { return static_cast<int>(std::count(w.begin(), w.end(), 'y')); }

int depth(const NCPoly& p) {
  if (p.is_zero()) throw std::domain_error("depth of the zero polynomial is undefined");
  int d = std::numeric_limits<int>::max();
  for (const auto& [w, c] : p.terms()) d = std::min(d, word_depth(w));
  return d;
}

std::string to_string(const Poly3& p, const char* vars) { return poly_to_string(p, vars); }
std::string to_string(const Poly2& p, const char* vars) { return poly_to_string(p, vars); }

std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || w.empty()) os << to_string(mag) << (w.empty() ? "" : "*");
    os << w;
    first = false;
  }
  return os.str();
}

}  // namespace grt2
