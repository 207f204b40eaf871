#pragma once

#include "grt2/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace grt2 {

// ICG: internally connected admissible graphs with external vertices.
// Admissible: admissible graphs that need not be internally connected.
// GC2: connected graphs without external vertices, every vertex >= 3-valent.
enum class GraphKind { ICG, Admissible, GC2 };

// Undirected graph with an ordered edge list. external[v] != 0 marks an
// external vertex; external vertices are labeled 1, 2, ... in index order.
struct Graph {
  std::vector<std::uint8_t> external;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int vertices, std::vector<std::pair<int, int>> edge_list, std::vector<int> external_vertices = {});

  int vertex_count() const { return static_cast<int>(external.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_external(int v) const { return external.at(static_cast<std::size_t>(v)) != 0; }
  int internal_count() const;
  std::vector<int> valences() const;
  // Indices of the edges incident to each vertex, in edge order.
  std::vector<std::vector<int>> incidence() const;

  friend auto operator<=>(const Graph&, const Graph&) = default;
  friend bool operator==(const Graph&, const Graph&) = default;
};

// 1 - #edges + 2 #internal
int icg_degree(const Graph& g);
// -2 - #edges + 2 #vertices
int gc2_degree(const Graph& g);

// Name of the first violated admissibility condition, if any.
std::optional<std::string> admissibility_violation(const Graph& g, GraphKind kind);
bool has_double_edge(const Graph& g);

// Minimal labeled representative of g up to relabeling internal vertices, with
// edges written (min, max) and sorted. g equals sign * graph in the quotient by
// edge-order permutations.
struct CanonicalForm {
  Graph graph;
  int sign = 1;
};

// Returns nullopt when the class is zero: some automorphism permutes the edges
// oddly, or (GC2 only) a double edge is present. Throws std::invalid_argument
// naming the violated condition when g is not admissible for the kind.
std::optional<CanonicalForm> canonicalize(const Graph& g, GraphKind kind);

// Canonicalization without the admissibility check.
std::optional<CanonicalForm> canonical_form(const Graph& g);

// Linear combination of canonical graph classes with nonzero coefficients.
class GraphSum {
 public:
  using Terms = std::map<Graph, Rational>;

  explicit GraphSum(GraphKind kind = GraphKind::ICG) : kind_(kind) {}
  static GraphSum single(const Graph& g, GraphKind kind, const Rational& c = 1);

  GraphKind kind() const { return kind_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Graph& canonical) const;

  // Canonicalizes g (throwing if inadmissible) and adds c * g.
  void add(const Graph& g, const Rational& c);
  // Adds c * g for g already in canonical form.
  void add_canonical(const Graph& g, const Rational& c);

  GraphSum& operator+=(const GraphSum& o);
  GraphSum& operator-=(const GraphSum& o);
  GraphSum& operator*=(const Rational& c);
  friend GraphSum operator+(GraphSum a, const GraphSum& b) { return a += b; }
  friend GraphSum operator-(GraphSum a, const GraphSum& b) { return a -= b; }
  friend GraphSum operator*(const Rational& c, GraphSum a) { return a *= c; }
  friend bool operator==(const GraphSum& a, const GraphSum& b) { return a.terms_ == b.terms_; }

 private:
  GraphKind kind_;
  Terms terms_;
};

// Interchange format:
//   V <n> E <m>
//   v <index> ext|int      (one line per vertex)
//   e <rank> <u> <v>       (one line per edge, rank = position in the order)
std::string format_graph(const Graph& g);
// Throws std::invalid_argument on malformed text.
Graph parse_graph(const std::string& text);

// Sums: one "coef <q>" line before each graph block.
std::string format_graph_sum(const GraphSum& s);
GraphSum parse_graph_sum(const std::string& text, GraphKind kind);

}  // namespace grt2
