#pragma once

#include "grt2/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace grt2 {

// Sparse vector over Q: (index, coefficient) pairs, indices strictly
// increasing, no zero coefficients.
using SparseVec = std::vector<std::pair<int, Rational>>;
using DenseVec = std::vector<Rational>;

SparseVec to_sparse(const DenseVec& v);
DenseVec to_dense(const SparseVec& v, int dim);

// Row-echelon basis of a subspace of Q^n built incrementally. Every stored row
// has leading coefficient 1 at its pivot, and no other stored row has a
// nonzero entry at a pivot smaller than its own.
class EchelonBasis {
 public:
  // Remainder of v after subtracting multiples of the stored rows. Zero iff v
  // lies in the span.
  SparseVec reduce(const SparseVec& v) const;

  // Adds v to the span. Returns false (and changes nothing) when v already
  // lies in it.
  bool insert(const SparseVec& v);

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<int, SparseVec> rows_;  // pivot -> row
};

std::size_t rank_of(const std::vector<SparseVec>& vectors);

// Basis of { a in Q^m : sum_i a_i v_i lies in `modulo` }, where v_0..v_{m-1}
// are the given vectors. Pass an empty EchelonBasis for the plain kernel.
// The result is in reduced row-echelon form.
std::vector<DenseVec> relation_kernel(const std::vector<SparseVec>& vectors,
                                      const EchelonBasis& modulo);

// Reduced row-echelon form with zero rows dropped.
std::vector<DenseVec> rref(std::vector<DenseVec> rows);

bool same_span(const std::vector<DenseVec>& a, const std::vector<DenseVec>& b);
bool in_span(const DenseVec& v, const std::vector<DenseVec>& basis);

// Scales v to integer entries with gcd 1 and a positive first nonzero entry.
DenseVec primitive_integer(const DenseVec& v);

bool is_zero(const DenseVec& v);

}  // namespace grt2
