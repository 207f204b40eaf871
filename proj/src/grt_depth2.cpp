#include "grt2/grt_depth2.hpp"

#include "grt2/linalg.hpp"
#include "grt2/sym_actions.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace grt2 {

NCPoly ad_power(int n) {
  if (n < 0) throw std::invalid_argument("ad power must be non-negative");
  NCPoly out;
  for (int u = 0; u <= n; ++u) {
    const Rational c = Rational(binomial(n, u)) * (u % 2 == 0 ? 1 : -1);
    out.add_term(std::string(static_cast<std::size_t>(n - u), 'x') + 'y' + std::string(static_cast<std::size_t>(u), 'x'), c);
  }
  return out;
}

NCPoly apply_derivation(const NCPoly& psi, const NCPoly& w) {
  const NCPoly image = nc_bracket(letter('y'), psi);
  NCPoly out;
  for (const auto& [word, c] : w.terms()) {
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
      if (word[pos] != 'y') continue;
      const NCPoly left = NCPoly::monomial(word.substr(0, pos));
      const NCPoly right = NCPoly::monomial(word.substr(pos + 1));
      out += c * (left * image * right);
    }
  }
  return out;
}

NCPoly ihara_bracket(const NCPoly& a, const NCPoly& b) {
  return apply_derivation(a, b) - apply_derivation(b, a) + nc_bracket(a, b);
}

Poly3 depth2_encode(const NCPoly& p) {
  Poly3 out;
  for (const auto& [word, c] : p.terms()) {
    if (word_depth(word) != 2) continue;
    const auto first = word.find('y');
    const auto second = word.find('y', first + 1);
    out.add_term({static_cast<int>(first), static_cast<int>(second - first - 1),
                  static_cast<int>(word.size() - second - 1)},
                 c);
  }
  return out;
}

Poly3 schneps_polynomial(int k, const std::vector<Rational>& full) {
  const Poly3 a_minus_b = var3(0) - var3(1);
  const Poly3 b_minus_c = var3(1) - var3(2);
  Poly3 g;
  for (std::size_t idx = 0; idx < full.size(); ++idx) {
    if (is_zero(full[idx])) continue;
    const int i = static_cast<int>(idx) + 1;
    g += full[idx] * (a_minus_b.pow(2 * i) * b_minus_c.pow(k - 2 - 2 * i));
  }
  return g;
}

std::vector<Rational> extend_antisymmetric(int k, const std::vector<Rational>& reduced) {
  const int full_len = (k - 4) / 2;
  std::vector<Rational> full(static_cast<std::size_t>(full_len), Rational(0));
  for (std::size_t idx = 0; idx < reduced.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    const int mirror = k / 2 - 1 - i;
    if (mirror == i) continue;
    full.at(static_cast<std::size_t>(i - 1)) = reduced[idx];
    full.at(static_cast<std::size_t>(mirror - 1)) = -reduced[idx];
  }
  return full;
}

bool schneps_check_full(int k, const std::vector<Rational>& full) {
  if (k % 2 != 0) throw std::invalid_argument("Schneps criterion needs even weight, got " + std::to_string(k));
  const Poly3 g = schneps_polynomial(k, full);
  const bool first = (g + plain_action(PermS3::from_cycle("(13)"), g)).is_zero();
  const bool second =
      (g + plain_action(PermS3::from_cycle("(123)"), g) + plain_action(PermS3::from_cycle("(132)"), g)).is_zero();
  return first && second;
}

bool schneps_check(const RelationVector& r) {
  return schneps_check_full(r.weight, extend_antisymmetric(r.weight, r.coefficients));
}

std::vector<RelationVector> bracket_kernel(int k) {
  if (k < 8 || k % 2 != 0) throw std::invalid_argument("relation weight must be even and >= 8, got " + std::to_string(k));
  std::map<Monomial3, int> idx;
  std::vector<Poly3> images;
  for (int i = 1; i <= relation_index_count(k); ++i) {
    images.push_back(depth2_encode(ihara_bracket(ad_power(2 * i), ad_power(k - 2 - 2 * i))));
    for (const auto& [m, c] : images.back().terms()) idx.try_emplace(m, static_cast<int>(idx.size()));
  }
  std::vector<SparseVec> gens;
  for (const auto& p : images) {
    std::map<int, Rational> coords;
    for (const auto& [m, c] : p.terms()) coords.emplace(idx.at(m), c);
    gens.emplace_back(coords.begin(), coords.end());
  }
  return normalize_relations(k, relation_kernel(gens, EchelonBasis{}));
}

}  // namespace grt2
