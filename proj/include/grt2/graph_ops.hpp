#pragma once

#include "grt2/graph.hpp"
#include "grt2/poly.hpp"
#include "grt2/theta_complex.hpp"

#include <optional>
#include <utility>

namespace grt2 {

// First Betti number of the subgraph spanned by internal vertices and the
// edges between them.
int internal_loop_count(const Graph& g);

// Vertex splitting on ICG (or Admissible) sums. An internal vertex splits into
// two internal vertices, an external one into itself plus a new internal
// vertex; incident edges are redistributed in every admissible way and the new
// edge comes last. With loop_preserving set only terms that keep the internal
// loop count survive, which is d0.
GraphSum icg_differential(const GraphSum& s, bool loop_preserving);

// Vertex splitting on GC2 sums; both halves keep at least two old edges.
GraphSum gc2_differential(const GraphSum& s);

// #vertices - maximal valence
int filtration_value(const Graph& g);

// Pre-Lie insertion g1 o g2: sum over vertices j of g1 and all reattachments of
// the edges at j to vertices of g2; g1's edges first. With max_level set, terms
// above that filtration value are dropped before canonicalization.
GraphSum gc2_insert(const GraphSum& g1, const GraphSum& g2, std::optional<int> max_level = std::nullopt);

// [g1, g2] = g1 o g2 - (-1)^{deg g1 deg g2} g2 o g1
GraphSum gc2_bracket(const GraphSum& g1, const GraphSum& g2, std::optional<int> max_level = std::nullopt);

// Terms with filtration value exactly `level`.
GraphSum level_projection(const GraphSum& s, int level);
// Terms with exactly `loops` internal loops.
GraphSum loop_projection(const GraphSum& s, int loops);

// Hub 0 joined to the cycle 1..n; spokes first, then rim edges (i, i+1).
// Throws std::invalid_argument for even or fewer than 3 spokes.
Graph wheel_graph(int spokes);
GraphSum wheel(int spokes);

// Sum over the vertices of each term marked as the external vertex, kept when
// ICG-admissible.
GraphSum mark_one_external(const GraphSum& s);

// Connected input; true iff deleting any one vertex leaves a connected graph.
bool is_one_vertex_irreducible(const Graph& g);

// Reference hairy theta graph for x^k1 y^k2 z^k3 in grade 0, 1 or 2. Vertex 0
// is external, 1 and 2 are the junctions, the strands run from 1 to 2. Edge
// order: [junction hair at 1 (grades 0, 1)], strand 1, strand 2, strand 3,
// [junction hair at 2 (grade 0)], each strand as segment, hair, segment, ...
// Throws std::invalid_argument when two exponents are 0 (double edge).
Graph theta_graph(int grade, const Monomial3& k);

// Reads a hairy theta graph back into its polynomial class. Throws
// std::invalid_argument for graphs that are not theta shapes.
ThetaElement theta_graph_encode(const Graph& g);
ThetaElement theta_graph_encode(const GraphSum& s);
GraphSum theta_graph_decode(const ThetaElement& e);

// Figure-eight graph: a center with one hair, an upper loop through 2i hairy
// vertices and a lower loop through 2j hairy vertices. Edge order: center
// hair, upper loop, lower loop, each loop as segment, hair, ..., segment.
Graph figure_eight_graph(int two_i, int two_j);

// The two bowtie representatives in [w3, w5]: w5 inserted at a vertex of w3
// (two edges to the hub, one to a rim vertex), and w3 inserted at the hub of
// w5 (four spokes to one vertex, one to another). Edge orders follow the
// insertion convention.
std::pair<Graph, Graph> bowtie_graphs_3_5();

}  // namespace grt2
