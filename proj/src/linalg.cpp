#include "grt2/linalg.hpp"

#include <algorithm>

namespace grt2 {

SparseVec to_sparse(const DenseVec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) out.emplace_back(static_cast<int>(i), v[i]);
  }
  return out;
}

DenseVec to_dense(const SparseVec& v, int dim) {
  DenseVec out(static_cast<std::size_t>(dim), Rational(0));
  for (const auto& [i, c] : v) out.at(static_cast<std::size_t>(i)) = c;
  return out;
}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
  std::map<int, Rational> work(v.begin(), v.end());
  auto it = work.begin();
  while (it != work.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const int pivot = it->first;
    const Rational factor = it->second;
    work.erase(it);
    // Remaining row entries lie strictly right of the pivot.
    for (auto e = std::next(row->second.begin()); e != row->second.end(); ++e) {
      auto [pos, inserted] = work.try_emplace(e->first, -factor * e->second);
      if (!inserted) {
        pos->second -= factor * e->second;
        if (is_zero(pos->second)) work.erase(pos);
      }
    }
    it = work.upper_bound(pivot);
  }
  return SparseVec(work.begin(), work.end());
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const Rational lead = r.front().second;
  for (auto& [i, c] : r) c /= lead;
  const int pivot = r.front().first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors) {
  EchelonBasis b;
  for (const auto& v : vectors) b.insert(v);
  return b.rank();
}

std::vector<DenseVec> relation_kernel(const std::vector<SparseVec>& vectors,
                                      const EchelonBasis& modulo) {
  // Augment each reduced vector with a tag block recording which inputs it
  // combines; a vector that reduces to zero in the main block yields the tag
  // block as a relation.
  int main_dim = 0;
  std::vector<SparseVec> reduced;
  reduced.reserve(vectors.size());
  for (const auto& v : vectors) {
    reduced.push_back(modulo.reduce(v));
    if (!reduced.back().empty()) main_dim = std::max(main_dim, reduced.back().back().first + 1);
  }
  const int m = static_cast<int>(vectors.size());
  EchelonBasis basis;
  std::vector<DenseVec> kernel;
  for (int i = 0; i < m; ++i) {
    SparseVec aug = reduced[static_cast<std::size_t>(i)];
    aug.emplace_back(main_dim + i, Rational(1));
    SparseVec r = basis.reduce(aug);
    if (!r.empty() && r.front().first >= main_dim) {
      DenseVec rel(static_cast<std::size_t>(m), Rational(0));
      for (const auto& [idx, c] : r) rel[static_cast<std::size_t>(idx - main_dim)] = c;
      kernel.push_back(std::move(rel));
    } else {
      basis.insert(aug);
    }
  }
  return rref(std::move(kernel));
}

std::vector<DenseVec> rref(std::vector<DenseVec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Rational lead = rows[r][col];
    for (auto& c : rows[r]) c /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][col])) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool same_span(const std::vector<DenseVec>& a, const std::vector<DenseVec>& b) {
  auto ra = rref(a);
  auto rb = rref(b);
  return ra == rb;
}

bool in_span(const DenseVec& v, const std::vector<DenseVec>& basis) {
  auto with = basis;
  with.push_back(v);
  return rref(with).size() == rref(basis).size();
}

bool is_zero(const DenseVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return is_zero(c); });
}

DenseVec primitive_integer(const DenseVec& v) {
  if (is_zero(v)) return v;
  Integer den_lcm = 1;
  for (const auto& c : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : v) {
    Integer z = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  auto lead = std::find_if(ints.begin(), ints.end(), [](const Integer& z) { return sgn(z) != 0; });
  if (sgn(*lead) < 0) g = -g;
  DenseVec out;
  out.reserve(v.size());
  for (const auto& z : ints) out.emplace_back(Integer(z / g));
  return out;
}

}  // namespace grt2
