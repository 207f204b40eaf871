#include "grt2/sym_actions.hpp"

#include <algorithm>
#include <stdexcept>

namespace grt2 {

PermS3::PermS3(std::array<int, 3> images) : images_(images) {
  std::array<int, 3> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) throw std::invalid_argument("not a permutation of {1,2,3}");
}

PermS3 PermS3::from_cycle(const std::string& cycle) {
  std::array<int, 3> img{0, 1, 2};
  std::vector<int> pts;
  for (char c : cycle) {
    if (c >= '1' && c <= '3') pts.push_back(c - '1');
    else if (c != '(' && c != ')' && c != ' ') throw std::invalid_argument("bad cycle '" + cycle + "'");
  }
  for (std::size_t i = 0; i < pts.size(); ++i) img[static_cast<std::size_t>(pts[i])] = pts[(i + 1) % pts.size()];
  return PermS3(img);
}

const std::vector<PermS3>& PermS3::all() {
  static const std::vector<PermS3> perms = [] {
    std::vector<PermS3> out;
    std::array<int, 3> a{0, 1, 2};
    do out.emplace_back(a);
    while (std::next_permutation(a.begin(), a.end()));
    return out;
  }();
  return perms;
}

int PermS3::sign() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

PermS3 PermS3::inverse() const {
  std::array<int, 3> inv{};
  for (int i = 0; i < 3; ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return PermS3(inv);
}

PermS3 operator*(const PermS3& s, const PermS3& t) {
  std::array<int, 3> img{};
  for (int i = 0; i < 3; ++i) img[static_cast<std::size_t>(i)] = t(s(i));
  return PermS3(img);
}

std::string PermS3::to_string() const {
  std::string out;
  std::array<bool, 3> seen{};
  for (int start = 0; start < 3; ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    out += '(';
    int i = start;
    do {
      seen[static_cast<std::size_t>(i)] = true;
      out += static_cast<char>('1' + i);
      i = (*this)(i);
    } while (i != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Monomial3 permute_exponents(const PermS3& s, const Monomial3& m) {
  return {m[static_cast<std::size_t>(s(0))], m[static_cast<std::size_t>(s(1))],
          m[static_cast<std::size_t>(s(2))]};
}

Poly3 sign_action(const PermS3& s, const Poly3& p) {
  Poly3 out;
  const Rational sign = s.sign();
  for (const auto& [m, c] : p.terms()) out.add_term(permute_exponents(s, m), sign * c);
  return out;
}

Poly3 plain_action(const PermS3& s, const Poly3& p) {
  Poly3 out;
  for (const auto& [m, c] : p.terms()) out.add_term(permute_exponents(s, m), c);
  return out;
}

Poly3 lift_z0(const Poly2& p) {
  Poly3 out;
  for (const auto& [m, c] : p.terms()) out.add_term({m[0], m[1], 0}, c);
  return out;
}

Poly2 induced_action(const PermS3& s, const Poly2& p) {
  return substitute_phi(sign_action(s, lift_z0(p)));
}

Poly3 sign_coinvariant_normal_form(const Poly3& p) {
  Poly3 out;
  for (const auto& [m, c] : p.terms()) {
    if (m[0] == m[1] || m[1] == m[2] || m[0] == m[2]) continue;
    Monomial3 sorted = m;
    int swaps = 0;
    // Three-element bubble sort into decreasing order, counting transpositions.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i + 1 < 3; ++i) {
        if (sorted[i] < sorted[i + 1]) {
          std::swap(sorted[i], sorted[i + 1]);
          ++swaps;
        }
      }
    }
    out.add_term(sorted, swaps % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

std::vector<Monomial3> strictly_decreasing_triples(int degree) {
  std::vector<Monomial3> out;
  for (int k3 = 0; 3 * k3 + 3 <= degree; ++k3) {
    for (int k2 = k3 + 1; k3 + 2 * k2 + 1 <= degree; ++k2) {
      const int k1 = degree - k2 - k3;
      if (k1 > k2) out.push_back({k1, k2, k3});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grt2
