#pragma once

#include "grt2/linalg.hpp"
#include "grt2/poly.hpp"

#include <vector>

namespace grt2 {

// Element of C0, C1 or C2 in sign-coinvariant normal form.
//
//   C0 = (K[x,y,z]^odd)_{S3}, C1 = K[x,y,z]_{S3}, C2 = (K[x,y,z]^even_{>0})_{S3}
//
// A homogeneous element of total degree n sits in weight n + (2 - grade): the
// external vertex carries two junction hairs in grade 0, one in grade 1 and
// none in grade 2.
struct ThetaElement {
  int grade = 1;
  Poly3 value;

  // Normalizes p. Throws std::invalid_argument when grade is not 0, 1 or 2 or
  // when a monomial violates the grade's parity constraint.
  static ThetaElement make(int grade, const Poly3& p);

  friend bool operator==(const ThetaElement& a, const ThetaElement& b) {
    return a.grade == b.grade && a.value == b.value;
  }
};

int theta_weight(int grade, int total_degree);

// d0 on C0 -> C1 is multiplication by 2(x+y+z); on C1 -> C2 it is the even
// part of (x+y+z)p. Throws std::invalid_argument for grade 2.
ThetaElement d0_theta(const ThetaElement& e);

// Strictly decreasing triples of degree k - (2 - grade) allowed in the grade.
std::vector<Monomial3> weight_slice_basis(int grade, int k);

// Matrix of d0 from the grade-g slice of weight k into the grade-(g+1) slice,
// one sparse row per source basis monomial.
std::vector<SparseVec> d0_matrix(int grade, int k);

// dim H^i of (C, d0) in weight k.
int cohomology_dim(int i, int k);

// Recursive projection K[x,y]^even -> A = span(x^a y^b | 0 <= a <= b even).
// Diagonal monomials x^a y^a go to 0; they vanish in the coinvariants. Throws std::invalid_argument on odd-degree monomials.
Poly2 psi(const Poly2& p);
Poly2 psi_monomial(int a, int b);
bool in_A(const Poly2& p);

// psi(x^a y^b (-x-y)^a), the image of x^a y^b z^a, which vanishes in the
// coinvariants. A nonzero value is a relation among theta graphs.
Poly2 theta_relation(int a, int b);

// Linear relation among the brackets {sigma_{2i+1}, sigma_{k-1-2i}},
// 1 <= i <= floor((k-4)/4), stored with coefficients[i-1] = a_i.
struct RelationVector {
  int weight = 0;
  std::vector<Rational> coefficients;

  friend bool operator==(const RelationVector& a, const RelationVector& b) {
    return a.weight == b.weight && a.coefficients == b.coefficients;
  }
};

int relation_index_count(int k);
// floor((k-4)/4) - floor((k-2)/6)
int expected_relation_count(int k);

// Reads the coefficients of x^{2i} y^{k-2-2i} off an element of A.
RelationVector relation_from_A(int k, const Poly2& p);

// Kernel of a -> sum a_i [x^{2i} y^{k-2-2i}] in H^1 of weight k - 1, computed
// as a kernel modulo the image of d0 in the C1 slice. Basis vectors are
// primitive integer vectors with positive leading entry, in RREF order.
std::vector<RelationVector> relation_space(int k);

// Same space computed in A: the a with sum a_i x^{2i} y^{k-2-2i} in
// B = span(psi(sigma_* v) - psi(v)).
std::vector<RelationVector> psi_relation_space(int k);

// theta_relation(a, b) over all a, b >= 1 with 2a + b = k - 2, as relation
// vectors (zero outputs skipped).
std::vector<RelationVector> theta_relation_seeds(int k);

// Grade-1 element x^{2i} y^{2j} z^0 in normal form.
ThetaElement theta_generator(int i, int j);

// Primitive integer form of each vector, in the order given.
std::vector<RelationVector> normalize_relations(int k, const std::vector<DenseVec>& rows);
std::vector<DenseVec> relation_rows(const std::vector<RelationVector>& rels);

}  // namespace grt2
