#include "grt2/theta_complex.hpp"

#include "grt2/sym_actions.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace grt2 {

namespace {

bool grade_allows_degree(int grade, int degree) {
  switch (grade) {
    case 0: return degree % 2 == 1;
    case 1: return degree >= 0;
    case 2: return degree > 0 && degree % 2 == 0;
    default: return false;
  }
}

void check_grade(int grade) {
  if (grade < 0 || grade > 2) throw std::invalid_argument("grade must be 0, 1 or 2, got " + std::to_string(grade));
}

std::map<Monomial3, int> index_of(const std::vector<Monomial3>& basis) {
  std::map<Monomial3, int> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  return idx;
}

SparseVec to_coords(const Poly3& p, const std::map<Monomial3, int>& idx) {
  std::map<int, Rational> coords;
  for (const auto& [m, c] : p.terms()) coords.emplace(idx.at(m), c);
  return SparseVec(coords.begin(), coords.end());
}

const Poly3& x_plus_y_plus_z() {
  static const Poly3 s = var3(0) + var3(1) + var3(2);
  return s;
}

}  // namespace

ThetaElement ThetaElement::make(int grade, const Poly3& p) {
  check_grade(grade);
  for (const auto& [m, c] : p.terms()) {
    const int deg = MonomialTraits<Monomial3>::degree(m);
    if (!grade_allows_degree(grade, deg)) {
      throw std::invalid_argument("monomial of degree " + std::to_string(deg) + " not allowed in grade " +
                                  std::to_string(grade));
    }
  }
  return ThetaElement{grade, sign_coinvariant_normal_form(p)};
}

int theta_weight(int grade, int total_degree) {
  check_grade(grade);
  return total_degree + 2 - grade;
}

ThetaElement d0_theta(const ThetaElement& e) {
  if (e.grade == 0) return ThetaElement::make(1, Rational(2) * (x_plus_y_plus_z() * e.value));
  if (e.grade == 1) return ThetaElement::make(2, even_part(x_plus_y_plus_z() * e.value));
  throw std::invalid_argument("d0 is zero out of grade 2: top of complex");
}

std::vector<Monomial3> weight_slice_basis(int grade, int k) {
  check_grade(grade);
  const int degree = k - (2 - grade);
  if (degree < 0 || !grade_allows_degree(grade, degree)) return {};
  return strictly_decreasing_triples(degree);
}

std::vector<SparseVec> d0_matrix(int grade, int k) {
  if (grade != 0 && grade != 1) throw std::invalid_argument("d0 matrix needs source grade 0 or 1");
  const auto target = index_of(weight_slice_basis(grade + 1, k));
  std::vector<SparseVec> rows;
  for (const auto& m : weight_slice_basis(grade, k)) {
    rows.push_back(to_coords(d0_theta(ThetaElement{grade, Poly3::monomial(m)}).value, target));
  }
  return rows;
}

int cohomology_dim(int i, int k) {
  check_grade(i);
  const auto dim = static_cast<int>(weight_slice_basis(i, k).size());
  const int rank_in = i == 0 ? 0 : static_cast<int>(rank_of(d0_matrix(i - 1, k)));
  const int rank_out = i == 2 ? 0 : static_cast<int>(rank_of(d0_matrix(i, k)));
  return dim - rank_in - rank_out;
}

Poly2 psi_monomial(int a, int b) {
  if ((a + b) % 2 != 0) throw std::invalid_argument("psi is defined on even total degree only");
  // The a >= b branch includes a == b, where it reads psi(x^a y^a) = -psi(x^a y^a).
  if (a == 0 || b == 0 || a == b) return {};
  if (a > b) return -psi_monomial(b, a);
  if (a % 2 == 0) return Poly2::monomial({a, b});

  thread_local std::map<Monomial2, Poly2> memo;
  if (auto it = memo.find({a, b}); it != memo.end()) return it->second;

  Poly2 sum = psi_monomial(a + 1, b - 1);
  for (int j = 2; j <= a + 1; j += 2) sum += Rational(binomial(a + 1, j)) * psi_monomial(j, a + b - j);
  for (int j = 1; j <= a - 2; j += 2) sum += Rational(binomial(a + 1, j)) * psi_monomial(j, a + b - j);
  sum *= Rational(-1, a + 1);
  memo.emplace(Monomial2{a, b}, sum);
  return sum;
}

Poly2 psi(const Poly2& p) {
  Poly2 out;
  for (const auto& [m, c] : p.terms()) out += c * psi_monomial(m[0], m[1]);
  return out;
}

bool in_A(const Poly2& p) {
  for (const auto& [m, c] : p.terms()) {
    if (m[0] % 2 != 0 || m[1] % 2 != 0 || m[0] > m[1]) return false;
  }
  return true;
}

Poly2 theta_relation(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("theta_relation needs a, b >= 1");
  return psi(substitute_phi(Poly3::monomial({a, b, a})));
}

int relation_index_count(int k) { return (k - 4) / 4; }

int expected_relation_count(int k) { return (k - 4) / 4 - (k - 2) / 6; }

RelationVector relation_from_A(int k, const Poly2& p) {
  RelationVector r{k, std::vector<Rational>(static_cast<std::size_t>(relation_index_count(k)), Rational(0))};
  for (int i = 1; i <= relation_index_count(k); ++i) {
    r.coefficients[static_cast<std::size_t>(i - 1)] = p.coefficient({2 * i, k - 2 - 2 * i});
  }
  return r;
}

std::vector<RelationVector> normalize_relations(int k, const std::vector<DenseVec>& rows) {
  std::vector<RelationVector> out;
  for (const auto& row : rows) out.push_back(RelationVector{k, primitive_integer(row)});
  return out;
}

std::vector<DenseVec> relation_rows(const std::vector<RelationVector>& rels) {
  std::vector<DenseVec> rows;
  for (const auto& r : rels) rows.push_back(r.coefficients);
  return rows;
}

namespace {

void check_relation_weight(int k) {
  if (k < 8 || k % 2 != 0) throw std::invalid_argument("relation weight must be even and >= 8, got " + std::to_string(k));
}

}  // namespace

std::vector<RelationVector> relation_space(int k) {
  check_relation_weight(k);
  const int slice = k - 1;
  const auto idx = index_of(weight_slice_basis(1, slice));
  EchelonBasis image;
  for (const auto& row : d0_matrix(0, slice)) image.insert(row);
  std::vector<SparseVec> gens;
  for (int i = 1; i <= relation_index_count(k); ++i) {
    gens.push_back(to_coords(theta_generator(i, (k - 2) / 2 - i).value, idx));
  }
  return normalize_relations(k, relation_kernel(gens, image));
}

std::vector<RelationVector> psi_relation_space(int k) {
  check_relation_weight(k);
  const int n = k - 2;
  // Coordinates on K[x,y] of degree n: x^a y^{n-a} -> a.
  auto coords = [](const Poly2& p) {
    SparseVec v;
    for (const auto& [m, c] : p.terms()) v.emplace_back(m[0], c);
    return v;
  };
  EchelonBasis b_space;
  for (int a = 0; a <= n; ++a) {
    const Poly2 v = Poly2::monomial({a, n - a});
    const Poly2 pv = psi(v);
    for (const auto& s : PermS3::all()) b_space.insert(coords(psi(induced_action(s, v)) - pv));
  }
  std::vector<SparseVec> gens;
  for (int i = 1; i <= relation_index_count(k); ++i) gens.push_back(coords(Poly2::monomial({2 * i, n - 2 * i})));
  return normalize_relations(k, relation_kernel(gens, b_space));
}

std::vector<RelationVector> theta_relation_seeds(int k) {
  check_relation_weight(k);
  std::vector<RelationVector> out;
  for (int a = 1; 2 * a + 1 <= k - 2; ++a) {
    const Poly2 r = theta_relation(a, k - 2 - 2 * a);
    if (r.is_zero()) continue;
    out.push_back(relation_from_A(k, r));
  }
  return out;
}

ThetaElement theta_generator(int i, int j) {
  return ThetaElement::make(1, Poly3::monomial({2 * i, 2 * j, 0}));
}

}  // namespace grt2
