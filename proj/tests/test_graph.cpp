#include "grt2/graph.hpp"
#include "grt2/graph_ops.hpp"
#include "grt2/sym_actions.hpp"
#include "grt2/verify.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace grt2;

namespace {

// Reference canonical form: minimum over every relabeling that fixes the
// external vertices of the sorted edge list, with the sign of the sorting
// permutation. nullopt when two relabelings reach the minimum with
// different signs.
std::optional<CanonicalForm> brute_canonical(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> internal;
  for (int v = 0; v < n; ++v) {
    if (!g.is_external(v)) internal.push_back(v);
  }
  std::vector<int> perm = internal;
  std::optional<CanonicalForm> best;
  bool odd = false;
  do {
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    for (std::size_t i = 0; i < internal.size(); ++i) label[static_cast<std::size_t>(internal[i])] = perm[i];
    std::vector<std::pair<std::pair<int, int>, int>> tagged;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto [a, b] = g.edges[e];
      tagged.push_back({std::minmax(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]), static_cast<int>(e)});
    }
    std::sort(tagged.begin(), tagged.end());
    int inversions = 0;
    for (std::size_t i = 0; i < tagged.size(); ++i) {
      for (std::size_t j = i + 1; j < tagged.size(); ++j) inversions += tagged[i].second > tagged[j].second;
    }
    Graph h = g;
    h.edges.clear();
    for (const auto& t : tagged) h.edges.push_back(t.first);
    const int sign = inversions % 2 == 0 ? 1 : -1;
    if (!best || h < best->graph) {
      best = CanonicalForm{h, sign};
    } else if (h == best->graph && sign != best->sign) {
      odd = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (odd || has_double_edge(g)) return std::nullopt;
  return best;
}

Graph random_graph(std::mt19937& rng, int n, int externals, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<int> ext(static_cast<std::size_t>(externals));
  std::iota(ext.begin(), ext.end(), 0);
  return Graph(n, edges, ext);
}

// Relabels internal vertices by a random permutation, flips random edges and
// shuffles the edge order; returns the sign of the edge permutation.
int scramble(std::mt19937& rng, const Graph& g, Graph& out) {
  const int n = g.vertex_count();
  std::vector<int> internal;
  for (int v = 0; v < n; ++v) {
    if (!g.is_external(v)) internal.push_back(v);
  }
  std::vector<int> image = internal;
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  for (std::size_t i = 0; i < internal.size(); ++i) label[static_cast<std::size_t>(internal[i])] = image[i];
  std::vector<int> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  out = g;
  std::bernoulli_distribution flip(0.5);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [a, b] = g.edges[static_cast<std::size_t>(order[i])];
    a = label[static_cast<std::size_t>(a)];
    b = label[static_cast<std::size_t>(b)];
    out.edges[i] = flip(rng) ? std::pair{b, a} : std::pair{a, b};
  }
  int inversions = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) inversions += order[i] > order[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Graph> sample_graphs() {
  std::vector<Graph> gs = {wheel_graph(3), wheel_graph(5), wheel_graph(7), figure_eight_graph(2, 4),
                           theta_graph(1, {2, 4, 0}), theta_graph(0, {2, 3, 4}), theta_graph(2, {1, 2, 3})};
  const auto [b1, b2] = bowtie_graphs_3_5();
  gs.push_back(b1);
  gs.push_back(b2);
  return gs;
}

GraphSum gc2(const Graph& g) { return GraphSum::single(g, GraphKind::GC2); }
GraphSum icg(const Graph& g) { return GraphSum::single(g, GraphKind::ICG); }

}  // namespace

TEST(Canonicalize, AgreesWithBruteForce) {
  std::mt19937 rng(41);
  int nonzero = 0, zero = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 4;
    const Graph g = random_graph(rng, n, trial % 3 == 0 ? 1 : 0, 0.55);
    Graph h;
    scramble(rng, g, h);
    const auto fast_g = canonical_form(g), fast_h = canonical_form(h);
    const auto slow_g = brute_canonical(g), slow_h = brute_canonical(h);
    ASSERT_EQ(fast_g.has_value(), slow_g.has_value()) << format_graph(g);
    ASSERT_EQ(fast_h.has_value(), fast_g.has_value());
    if (!fast_g) {
      ++zero;
      continue;
    }
    ++nonzero;
    EXPECT_EQ(fast_g->graph, fast_h->graph);
    EXPECT_EQ(fast_g->sign * fast_h->sign, slow_g->sign * slow_h->sign);
  }
  EXPECT_GT(nonzero, 50);
  EXPECT_GT(zero, 5);
}

TEST(Canonicalize, DistinguishesNonIsomorphicGraphs) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 6, 1, 0.5), h = random_graph(rng, 6, 1, 0.5);
    const auto fg = canonical_form(g), fh = canonical_form(h);
    const auto bg = brute_canonical(g), bh = brute_canonical(h);
    if (!fg || !fh) continue;
    EXPECT_EQ(fg->graph == fh->graph, bg->graph == bh->graph);
  }
}

TEST(Canonicalize, InvariantUnderRelabelingWithTrackedSign) {
  std::mt19937 rng(43);
  for (const Graph& g : sample_graphs()) {
    const auto base = canonical_form(g);
    ASSERT_TRUE(base.has_value());
    for (int trial = 0; trial < 20; ++trial) {
      Graph h;
      const int sign = scramble(rng, g, h);
      const auto cf = canonical_form(h);
      ASSERT_TRUE(cf.has_value());
      EXPECT_EQ(cf->graph, base->graph);
      EXPECT_EQ(cf->sign, sign * base->sign);
    }
  }
}

TEST(Canonicalize, Idempotent) {
  for (const Graph& g : sample_graphs()) {
    const auto cf = canonical_form(g);
    ASSERT_TRUE(cf.has_value());
    const auto again = canonical_form(cf->graph);
    ASSERT_TRUE(again.has_value());
    EXPECT_EQ(again->graph, cf->graph);
    EXPECT_EQ(again->sign, 1);
  }
}

TEST(Canonicalize, EdgeTranspositionFlipsSign) {
  Graph g = wheel_graph(5);
  Graph h = g;
  std::swap(h.edges[0], h.edges[1]);
  EXPECT_EQ(canonical_form(g)->sign, -canonical_form(h)->sign);
  EXPECT_EQ(canonical_form(g)->graph, canonical_form(h)->graph);
}

TEST(Canonicalize, RejectsInadmissible) {
  const Graph g(2, {{0, 1}}, {0});
  EXPECT_THROW(canonicalize(g, GraphKind::ICG), std::invalid_argument);
  EXPECT_TRUE(admissibility_violation(g, GraphKind::ICG).has_value());
  EXPECT_THROW(canonicalize(Graph(3, {{0, 1}, {1, 2}, {2, 0}}), GraphKind::GC2), std::invalid_argument);
  EXPECT_THROW(canonicalize(Graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}}, {0}), GraphKind::ICG), std::invalid_argument);
}

TEST(Canonicalize, OddSymmetryVanishes) {
  // The even wheel has a reflection acting oddly on edges.
  Graph w4(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
  EXPECT_FALSE(canonical_form(w4).has_value());
  EXPECT_THROW(wheel_graph(4), std::invalid_argument);
  EXPECT_THROW(wheel_graph(1), std::invalid_argument);
  // K4 = w3 survives.
  EXPECT_TRUE(canonical_form(wheel_graph(3)).has_value());
}

TEST(GraphSum, LinearAndCanonical) {
  const Graph g = wheel_graph(5);
  Graph h = g;
  std::swap(h.edges[2], h.edges[7]);
  EXPECT_TRUE((gc2(g) + gc2(h)).is_zero());
  EXPECT_EQ(gc2(g) - gc2(h), Rational(2) * gc2(g));
  EXPECT_TRUE((Rational(0) * gc2(g)).is_zero());
}

TEST(Wheel, CountsAndDegree) {
  for (int n : {3, 5, 7}) {
    const Graph w = wheel_graph(n);
    EXPECT_EQ(w.vertex_count(), n + 1);
    EXPECT_EQ(w.edge_count(), 2 * n);
    EXPECT_EQ(gc2_degree(w), 0);
    EXPECT_FALSE(admissibility_violation(w, GraphKind::GC2).has_value());
  }
}

TEST(Filtration, Examples) {
  for (int n : {3, 5, 7}) EXPECT_EQ(filtration_value(wheel_graph(n)), 1);
  const auto [b1, b2] = bowtie_graphs_3_5();
  EXPECT_EQ(filtration_value(b1), 2);
  EXPECT_EQ(filtration_value(b2), 2);
  const Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_EQ(filtration_value(k33), 3);
}

TEST(InternalLoops, Examples) {
  const Graph tree(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 2}, {1, 3}}, {2, 3, 4});
  EXPECT_EQ(internal_loop_count(tree), 0);
  EXPECT_EQ(internal_loop_count(theta_graph(1, {2, 4, 0})), 2);
  EXPECT_EQ(internal_loop_count(figure_eight_graph(2, 4)), 2);
  EXPECT_EQ(internal_loop_count(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}, {0})), 1);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_one_vertex_irreducible(wheel_graph(5)));
  EXPECT_TRUE(is_one_vertex_irreducible(wheel_graph(3)));
  EXPECT_FALSE(is_one_vertex_irreducible(Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}})));
  EXPECT_TRUE(is_one_vertex_irreducible(Graph(2, {{0, 1}})));
}

TEST(ThetaEncoding, Examples) {
  const ThetaElement ordering = theta_graph_encode(theta_graph(0, {2, 3, 4}));
  EXPECT_EQ(ordering, ThetaElement::make(0, Poly3::monomial({2, 3, 4}, 1)));
  const ThetaElement t24 = theta_graph_encode(theta_graph(1, {2, 4, 0}));
  EXPECT_EQ(t24, ThetaElement::make(1, Poly3::monomial({2, 4, 0}, 1)));
  EXPECT_EQ(theta_graph(0, {2, 3, 4}).vertex_count(), 12);
  EXPECT_EQ(theta_graph(0, {2, 3, 4}).edge_count(), 23);
}

TEST(ThetaEncoding, RejectsOtherShapes) {
  EXPECT_THROW(theta_graph_encode(figure_eight_graph(2, 4)), std::invalid_argument);
  EXPECT_THROW(theta_graph_encode(wheel_graph(3)), std::invalid_argument);
  EXPECT_THROW(theta_graph(1, {0, 0, 3}), std::invalid_argument);
}

TEST(ThetaEncoding, DecodeEncodeRoundTrip) {
  int checked = 0;
  for (int n = 0; n <= 10; ++n) {
    for (const Monomial3& m : strictly_decreasing_triples(n)) {
      const ThetaElement e = ThetaElement::make(1, Poly3::monomial(m, 1));
      const GraphSum decoded = theta_graph_decode(e);
      EXPECT_EQ(theta_graph_encode(decoded), e);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(ThetaEncoding, NaturalityWithPolynomialDifferential) {
  int checked = 0;
  for (int grade = 0; grade <= 1; ++grade) {
    for (const ThetaShape& s : theta_shapes(grade, 9)) {
      const auto& m = s.exponents;
      const int n = m[0] + m[1] + m[2];
      const bool zero = (grade == 0 && n % 2 == 0) || m[0] == m[1] || m[1] == m[2] || m[0] == m[2];
      EXPECT_EQ(canonical_form(s.graph).has_value(), !zero);
      if (zero) continue;
      const GraphSum g = icg(s.graph);
      const ThetaElement e = theta_graph_encode(g);
      EXPECT_EQ(theta_graph_encode(icg_differential(g, true)).value, d0_theta(e).value) << to_string(e.value);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Differential, SquaresToZeroOnThetaShapes) {
  for (int grade = 0; grade <= 1; ++grade) {
    for (const ThetaShape& s : theta_shapes(grade, 7)) {
      const GraphSum d = icg_differential(icg(s.graph), false);
      EXPECT_TRUE(icg_differential(d, false).is_zero());
    }
  }
}

TEST(Differential, SquaresToZeroOnMarkedWheels) {
  for (int n : {3, 5}) {
    const GraphSum m = mark_one_external(wheel(n));
    ASSERT_FALSE(m.is_zero());
    EXPECT_TRUE(icg_differential(icg_differential(m, false), false).is_zero());
  }
  EXPECT_TRUE(gc2_differential(gc2_differential(wheel(5))).is_zero());
}

TEST(Differential, LoopPreservingPartKeepsLoops) {
  const GraphSum e = icg(figure_eight_graph(2, 4));
  const GraphSum d = icg_differential(e, true);
  ASSERT_FALSE(d.is_zero());
  for (const auto& [g, c] : d.terms()) EXPECT_EQ(internal_loop_count(g), 2);
}

TEST(Bracket, SelfBracketOfOddDegreeZeroVanishes) {
  EXPECT_TRUE(gc2_bracket(wheel(3), wheel(3)).is_zero());
  EXPECT_TRUE(gc2_bracket(wheel(5), wheel(5)).is_zero());
}

TEST(Bracket, Antisymmetric) {
  EXPECT_EQ(gc2_bracket(wheel(3), wheel(5)), Rational(-1) * gc2_bracket(wheel(5), wheel(3)));
}

TEST(Bracket, FiltrationAdditive) {
  for (const auto& [a, b] : {std::pair{3, 5}, std::pair{3, 7}}) {
    const GraphSum br = gc2_bracket(wheel(a), wheel(b));
    ASSERT_FALSE(br.is_zero());
    for (const auto& [g, c] : br.terms()) {
      EXPECT_GE(filtration_value(g), 2);
      EXPECT_EQ(gc2_degree(g), 0);
    }
  }
}

TEST(Bracket, PreLieAndJacobiOnWheels) {
  const GraphSum a = wheel(3), c = wheel(5);
  // (a o b) o c - a o (b o c) is symmetric in b and c.
  auto assoc = [](const GraphSum& x, const GraphSum& y, const GraphSum& z) {
    return gc2_insert(gc2_insert(x, y), z) - gc2_insert(x, gc2_insert(y, z));
  };
  EXPECT_EQ(assoc(a, a, c), assoc(a, c, a));
  const GraphSum jacobi = gc2_bracket(a, gc2_bracket(a, c)) + gc2_bracket(a, gc2_bracket(c, a)) +
                          gc2_bracket(c, gc2_bracket(a, a));
  EXPECT_TRUE(jacobi.is_zero());
}

TEST(Bracket, TruncationMatchesLevelProjection) {
  const GraphSum full = gc2_bracket(wheel(3), wheel(5));
  const GraphSum truncated = gc2_bracket(wheel(3), wheel(5), 2);
  EXPECT_EQ(level_projection(full, 2), level_projection(truncated, 2));
}

TEST(Bracket, LevelTwoPartIsBowtieDifference) {
  const auto [b1, b2] = bowtie_graphs_3_5();
  const GraphSum bowtie = gc2(b1) - gc2(b2);
  ASSERT_EQ(bowtie.size(), 2u);
  const GraphSum level2 = level_projection(gc2_bracket(wheel(3), wheel(5)), 2);
  const auto& [g, c] = *bowtie.terms().begin();
  const Rational ratio = level2.coefficient(g) / c;
  EXPECT_NE(ratio, 0);
  EXPECT_EQ(level2, ratio * bowtie);
}

TEST(Marking, MarkedK4IsOneClass) {
  const GraphSum m = mark_one_external(wheel(3));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(abs(m.terms().begin()->second), 4);
}

TEST(Marking, TwoLoopsOnlyAtMaximalValence) {
  const GraphSum level2 = level_projection(gc2_bracket(wheel(3), wheel(5)), 2);
  for (const auto& [g, c] : level2.terms()) {
    const auto val = g.valences();
    const int top = *std::max_element(val.begin(), val.end());
    for (int v = 0; v < g.vertex_count(); ++v) {
      Graph h = g;
      h.external[static_cast<std::size_t>(v)] = 1;
      EXPECT_EQ(internal_loop_count(h) == 2, val[static_cast<std::size_t>(v)] == top);
    }
  }
}

TEST(ThetaIdentity, FigureEightDifferential) {
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const ThetaIdentity t = theta_identity(i, j);
    EXPECT_EQ(t.theta_coefficient, 4);
    EXPECT_TRUE(t.figure_eight_terms.is_zero());
    EXPECT_EQ(t.remainder.size(), 2u);
    ASSERT_TRUE(t.lambda.has_value());
    EXPECT_EQ(t.remainder, *t.lambda * t.marked_bowtie);
  }
}

TEST(TextFormat, RoundTrip) {
  for (const Graph& g : sample_graphs()) {
    const std::string text = format_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(format_graph(parse_graph(text)), text);
  }
  const GraphSum s = gc2_bracket(wheel(3), wheel(5));
  const std::string text = format_graph_sum(s);
  EXPECT_EQ(parse_graph_sum(text, GraphKind::GC2), s);
  EXPECT_EQ(format_graph_sum(parse_graph_sum(text, GraphKind::GC2)), text);
}

TEST(TextFormat, Example) {
  EXPECT_EQ(format_graph(Graph(3, {{1, 0}, {1, 2}}, {0})), "V 3 E 2\nv 0 ext\nv 1 int\nv 2 int\ne 0 1 0\ne 1 1 2\n");
}

TEST(TextFormat, RejectsMalformed) {
  EXPECT_THROW(parse_graph(""), std::invalid_argument);
  EXPECT_THROW(parse_graph("V 2 E 1\nv 0 int\nv 1 int\n"), std::invalid_argument);
  EXPECT_THROW(parse_graph("V 2 E 1\nv 0 int\nv 1 int\ne 0 0 5\n"), std::invalid_argument);
  EXPECT_THROW(parse_graph("V 2 E 1\nv 0 int\nv 1 maybe\ne 0 0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_graph("V 2 E 1\nv 0 int\nv 1 int\ne 3 0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_graph("V 2 E 1\nv 0 int\nv 1 int\ne 0 0 1\nextra\n"), std::invalid_argument);
}
