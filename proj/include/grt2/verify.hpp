#pragma once

#include "grt2/graph_ops.hpp"
#include "grt2/theta_complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grt2 {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckLine> lines;

  bool passed() const;
  void add(std::string name, bool passed, std::string detail = {});
  void append(const CheckReport& other);
};

// floor(k/6) on the parity that carries cohomology, 0 otherwise: odd k in
// degree 1, even k in degree 2, never in degree 0.
int closed_form_dim(int degree, int k);

struct DimsRow {
  int weight = 0;
  int degree = 0;
  int dim = 0;
  int closed_form = 0;
  bool match = false;
};

// Rows for weights 1..max_weight in ascending order.
std::vector<DimsRow> dims_table(int degree, int max_weight);

enum class Oracle { Psi, Rank, Ihara };

const char* oracle_name(Oracle o);
std::vector<RelationVector> relation_oracle(Oracle o, int k);

// Selected oracles at weight k: expected count, Schneps check on every vector
// and, with more than one oracle, span equality.
CheckReport relation_agreement(int k, const std::vector<Oracle>& oracles);
// Same checks on spaces already computed, spaces[i] from oracles[i].
CheckReport check_relation_spaces(int k, const std::vector<Oracle>& oracles,
                                  const std::vector<std::vector<RelationVector>>& spaces);
// Spaces of the given oracles, computed in parallel.
std::vector<std::vector<RelationVector>> relation_spaces(int k, const std::vector<Oracle>& oracles);

// `samples` random integer vectors outside the relation space at weight k,
// each of which must fail the Schneps check.
CheckReport schneps_negative_sample(int k, int samples, std::uint64_t seed);

enum class GraphCheck { DSquared, Encoding, Bowtie, Filtration, ThetaIdentity };

const char* graph_check_name(GraphCheck c);

// Runs one graph suite. Starting graphs with more than size_cap vertices are
// skipped and reported as such.
CheckReport run_graph_check(GraphCheck c, int size_cap);

struct ThetaShape {
  int grade = 0;
  Monomial3 exponents{};
  Graph graph;
};

// Hairy theta graphs of weight <= max_weight in the given grade, one per
// monomial x^a y^b z^c with at most one zero exponent, in ascending weight.
std::vector<ThetaShape> theta_shapes(int grade, int max_weight);

// Remainder d0 E_{2i,2j} - 4 theta_{2i,2j} together with the two-loop part of
// the marked level-2 projection of [w_{2i+1}, w_{2j+1}].
struct ThetaIdentity {
  Rational theta_coefficient;
  GraphSum figure_eight_terms;
  GraphSum remainder;
  GraphSum marked_bowtie;
  // remainder = lambda * marked_bowtie when such a nonzero lambda exists.
  std::optional<Rational> lambda;
};

ThetaIdentity theta_identity(int i, int j);

}  // namespace grt2
