#include "grt2/graph_ops.hpp"

#include "grt2/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grt2 {

namespace {

int component_count(const Graph& g, const std::vector<bool>& keep) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  int count = static_cast<int>(std::count(keep.begin(), keep.end(), true));
  for (const auto& [a, b] : g.edges) {
    if (!keep[static_cast<std::size_t>(a)] || !keep[static_cast<std::size_t>(b)]) continue;
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --count;
    }
  }
  return count;
}

// Moves the edges listed in `moved` from v to a new vertex and appends the
// edge (v, new vertex).
Graph split(const Graph& g, int v, const std::vector<int>& moved) {
  Graph h = g;
  const int w = g.vertex_count();
  h.external.push_back(0);
  for (int e : moved) {
    auto& edge = h.edges[static_cast<std::size_t>(e)];
    if (edge.first == v) edge.first = w;
    else edge.second = w;
  }
  h.edges.emplace_back(v, w);
  return h;
}

// Calls f(T) for every subset T of inc given as a bitmask, |T| >= min_moved,
// |inc \ T| >= min_kept. With unordered set, inc[0] never moves so that each
// unordered split is produced once.
template <class F>
void for_each_split(const std::vector<int>& inc, int min_moved, int min_kept, bool unordered, F&& f) {
  const int d = static_cast<int>(inc.size());
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (unordered && (mask & 1u)) continue;
    const int moved = __builtin_popcount(mask);
    if (moved < min_moved || d - moved < min_kept) continue;
    std::vector<int> t;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) t.push_back(inc[static_cast<std::size_t>(i)]);
    }
    f(t);
  }
}

}  // namespace

int internal_loop_count(const Graph& g) {
  std::vector<bool> internal(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) internal[static_cast<std::size_t>(v)] = !g.is_external(v);
  int edges = 0;
  for (const auto& [a, b] : g.edges) {
    if (!g.is_external(a) && !g.is_external(b)) ++edges;
  }
  return edges - g.internal_count() + component_count(g, internal);
}

GraphSum icg_differential(const GraphSum& s, bool loop_preserving) {
  if (s.kind() == GraphKind::GC2) throw std::invalid_argument("icg_differential needs an ICG or admissible sum");
  GraphSum out(s.kind());
  for (const auto& [g, c] : s.terms()) {
    const int loops = internal_loop_count(g);
    const auto inc = g.incidence();
    for (int v = 0; v < g.vertex_count(); ++v) {
      const bool ext = g.is_external(v);
      for_each_split(inc[static_cast<std::size_t>(v)], 2, ext ? 0 : 2, !ext, [&](const std::vector<int>& moved) {
        Graph h = split(g, v, moved);
        if (admissibility_violation(h, s.kind())) return;
        if (loop_preserving && internal_loop_count(h) != loops) return;
        if (auto cf = canonical_form(h)) out.add_canonical(cf->graph, cf->sign * c);
      });
    }
  }
  return out;
}

GraphSum gc2_differential(const GraphSum& s) {
  if (s.kind() != GraphKind::GC2) throw std::invalid_argument("gc2_differential needs a GC2 sum");
  GraphSum out(GraphKind::GC2);
  for (const auto& [g, c] : s.terms()) {
    const auto inc = g.incidence();
    for (int v = 0; v < g.vertex_count(); ++v) {
      for_each_split(inc[static_cast<std::size_t>(v)], 2, 2, true, [&](const std::vector<int>& moved) {
        if (auto cf = canonical_form(split(g, v, moved))) out.add_canonical(cf->graph, cf->sign * c);
      });
    }
  }
  return out;
}

int filtration_value(const Graph& g) {
  const auto val = g.valences();
  const int max_val = val.empty() ? 0 : *std::max_element(val.begin(), val.end());
  return g.vertex_count() - max_val;
}

namespace {

struct InsertTask {
  const Graph* g1;
  const Graph* g2;
  Rational coef;
  int j;
  int first;  // image of the first edge at j, or -1 when j has no edges
};

GraphSum run_insert_task(const InsertTask& t, std::optional<int> max_level) {
  const Graph& g1 = *t.g1;
  const Graph& g2 = *t.g2;
  GraphSum out(GraphKind::GC2);
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  const int offset = n1 - 1;
  const int total = n1 + n2 - 1;
  auto map1 = [&](int v) { return v < t.j ? v : v - 1; };
  std::vector<int> at_j;
  for (int e = 0; e < g1.edge_count(); ++e) {
    const auto& [a, b] = g1.edges[static_cast<std::size_t>(e)];
    if (a == t.j || b == t.j) at_j.push_back(e);
  }
  const auto val1 = g1.valences();
  const auto val2 = g2.valences();
  int base_max = 0;
  for (int v = 0; v < n1; ++v) {
    if (v != t.j) base_max = std::max(base_max, val1[static_cast<std::size_t>(v)]);
  }
  const auto d = at_j.size();
  std::vector<int> image(d, 0);
  if (d > 0) image[0] = t.first;
  std::vector<int> extra(static_cast<std::size_t>(n2), 0);
  while (true) {
    bool keep = true;
    if (max_level) {
      std::fill(extra.begin(), extra.end(), 0);
      for (int u : image) ++extra[static_cast<std::size_t>(u)];
      int max_val = base_max;
      for (int u = 0; u < n2; ++u) max_val = std::max(max_val, val2[static_cast<std::size_t>(u)] + extra[static_cast<std::size_t>(u)]);
      keep = total - max_val <= *max_level;
    }
    if (keep) {
      Graph h;
      h.external.assign(static_cast<std::size_t>(total), 0);
      h.edges.reserve(static_cast<std::size_t>(g1.edge_count() + g2.edge_count()));
      std::size_t k = 0;
      for (int e = 0; e < g1.edge_count(); ++e) {
        const auto& [a, b] = g1.edges[static_cast<std::size_t>(e)];
        if (a == t.j) h.edges.emplace_back(offset + image[k++], map1(b));
        else if (b == t.j) h.edges.emplace_back(map1(a), offset + image[k++]);
        else h.edges.emplace_back(map1(a), map1(b));
      }
      for (const auto& [a, b] : g2.edges) h.edges.emplace_back(offset + a, offset + b);
      if (auto cf = canonical_form(h)) out.add_canonical(cf->graph, cf->sign * t.coef);
    }
    // Next assignment, first digit fixed by the task.
    std::size_t pos = 1;
    while (pos < d && image[pos] == n2 - 1) image[pos++] = 0;
    if (pos >= d) break;
    ++image[pos];
  }
  return out;
}

}  // namespace

GraphSum gc2_insert(const GraphSum& g1, const GraphSum& g2, std::optional<int> max_level) {
  if (g1.kind() != GraphKind::GC2 || g2.kind() != GraphKind::GC2) throw std::invalid_argument("gc2_insert needs GC2 sums");
  std::vector<InsertTask> tasks;
  for (const auto& [a, ca] : g1.terms()) {
    for (const auto& [b, cb] : g2.terms()) {
      const auto val = a.valences();
      for (int j = 0; j < a.vertex_count(); ++j) {
        if (val[static_cast<std::size_t>(j)] == 0) {
          tasks.push_back({&a, &b, ca * cb, j, -1});
          continue;
        }
        for (int f = 0; f < b.vertex_count(); ++f) tasks.push_back({&a, &b, ca * cb, j, f});
      }
    }
  }
  std::vector<GraphSum> parts(tasks.size(), GraphSum(GraphKind::GC2));
  parallel_for(tasks.size(), [&](std::size_t i) { parts[i] = run_insert_task(tasks[i], max_level); });
  GraphSum out(GraphKind::GC2);
  for (const auto& p : parts) out += p;
  return out;
}

GraphSum gc2_bracket(const GraphSum& g1, const GraphSum& g2, std::optional<int> max_level) {
  GraphSum out = gc2_insert(g1, g2, max_level);
  // Graded sign for homogeneous inputs; degrees are read off the first term.
  int sign = 1;
  if (!g1.is_zero() && !g2.is_zero()) {
    const int d1 = gc2_degree(g1.terms().begin()->first);
    const int d2 = gc2_degree(g2.terms().begin()->first);
    sign = (d1 * d2) % 2 == 0 ? 1 : -1;
  }
  GraphSum back = gc2_insert(g2, g1, max_level);
  back *= Rational(sign);
  out -= back;
  return out;
}

GraphSum level_projection(const GraphSum& s, int level) {
  GraphSum out(s.kind());
  for (const auto& [g, c] : s.terms()) {
    if (filtration_value(g) == level) out.add_canonical(g, c);
  }
  return out;
}

GraphSum loop_projection(const GraphSum& s, int loops) {
  GraphSum out(s.kind());
  for (const auto& [g, c] : s.terms()) {
    if (internal_loop_count(g) == loops) out.add_canonical(g, c);
  }
  return out;
}

Graph wheel_graph(int spokes) {
  if (spokes < 3 || spokes % 2 == 0) {
    throw std::invalid_argument("wheel needs an odd number of spokes >= 3, got " + std::to_string(spokes) +
                                " (even wheels vanish)");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= spokes; ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= spokes; ++i) edges.emplace_back(i, i % spokes + 1);
  return Graph(spokes + 1, edges);
}

GraphSum wheel(int spokes) { return GraphSum::single(wheel_graph(spokes), GraphKind::GC2); }

GraphSum mark_one_external(const GraphSum& s) {
  GraphSum out(GraphKind::ICG);
  for (const auto& [g, c] : s.terms()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      Graph h = g;
      h.external.assign(h.external.size(), 0);
      h.external[static_cast<std::size_t>(v)] = 1;
      if (admissibility_violation(h, GraphKind::ICG)) continue;
      if (auto cf = canonical_form(h)) out.add_canonical(cf->graph, cf->sign * c);
    }
  }
  return out;
}

bool is_one_vertex_irreducible(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<bool> keep(n, true);
    keep[v] = false;
    if (component_count(g, keep) > 1) return false;
  }
  return true;
}

namespace {

// Appends a path from `from` to `to` through `hairs` new vertices, each with a
// hair to `hub`: segment, hair, segment, ..., segment.
void add_hairy_path(Graph& g, int from, int to, int hairs, int hub) {
  int prev = from;
  for (int h = 0; h < hairs; ++h) {
    const int v = g.vertex_count();
    g.external.push_back(0);
    g.edges.emplace_back(prev, v);
    g.edges.emplace_back(v, hub);
    prev = v;
  }
  g.edges.emplace_back(prev, to);
}

}  // namespace

Graph theta_graph(int grade, const Monomial3& k) {
  if (grade < 0 || grade > 2) throw std::invalid_argument("theta grade must be 0, 1 or 2");
  if (std::count(k.begin(), k.end(), 0) > 1) throw std::invalid_argument("two bare strands would form a double edge");
  for (int e : k) {
    if (e < 0) throw std::invalid_argument("negative hair count");
  }
  Graph g;
  g.external = {1, 0, 0};
  if (grade <= 1) g.edges.emplace_back(1, 0);
  for (int e : k) add_hairy_path(g, 1, 2, e, 0);
  if (grade == 0) g.edges.emplace_back(2, 0);
  return g;
}

ThetaElement theta_graph_encode(const Graph& g) {
  auto reject = [](const std::string& why) -> ThetaElement { throw std::invalid_argument("not a theta shape: " + why); };
  const int n = g.vertex_count();
  int ext = -1;
  for (int v = 0; v < n; ++v) {
    if (g.is_external(v)) {
      if (ext >= 0) return reject("more than one external vertex");
      ext = v;
    }
  }
  if (ext < 0) return reject("no external vertex");
  if (admissibility_violation(g, GraphKind::ICG)) return reject("not ICG-admissible");
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
  std::vector<int> hairs(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : g.edges) {
    if (a == ext) ++hairs[static_cast<std::size_t>(b)];
    else if (b == ext) ++hairs[static_cast<std::size_t>(a)];
    else {
      nbr[static_cast<std::size_t>(a)].push_back(b);
      nbr[static_cast<std::size_t>(b)].push_back(a);
    }
  }
  std::vector<int> junctions;
  for (int v = 0; v < n; ++v) {
    if (v == ext) continue;
    const auto deg = nbr[static_cast<std::size_t>(v)].size();
    const int h = hairs[static_cast<std::size_t>(v)];
    if (deg == 3 && h <= 1) junctions.push_back(v);
    else if (deg != 2 || h != 1) return reject("vertex " + std::to_string(v) + " is neither a junction nor a hairy strand vertex");
  }
  if (junctions.size() != 2) return reject("expected two junctions");
  const int hairy = hairs[static_cast<std::size_t>(junctions[0])] + hairs[static_cast<std::size_t>(junctions[1])];
  const int grade = 2 - hairy;
  int left = junctions[0], right = junctions[1];
  if (grade == 1 && hairs[static_cast<std::size_t>(left)] == 0) std::swap(left, right);
  Monomial3 k{};
  for (std::size_t s = 0; s < 3; ++s) {
    int prev = left, cur = nbr[static_cast<std::size_t>(left)][s], len = 0;
    while (cur != right) {
      if (cur == left) return reject("strand returns to its starting junction");
      const auto& nb = nbr[static_cast<std::size_t>(cur)];
      const int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    k[s] = len;
  }
  const auto mine = canonical_form(g);
  if (!mine) return ThetaElement{grade, Poly3{}};
  const auto ref = canonical_form(theta_graph(grade, k));
  if (!ref || ref->graph != mine->graph) throw std::logic_error("theta reference graph does not match its own shape");
  const Rational sign = mine->sign * ref->sign;
  const int degree = k[0] + k[1] + k[2];
  const bool parity_ok = grade == 1 || (grade == 0 ? degree % 2 == 1 : degree % 2 == 0 && degree > 0);
  if (!parity_ok) throw std::logic_error("nonzero theta graph in a class the sign lemma declares zero");
  return ThetaElement::make(grade, Poly3::monomial(k, sign));
}

ThetaElement theta_graph_encode(const GraphSum& s) {
  std::optional<int> grade;
  Poly3 value;
  for (const auto& [g, c] : s.terms()) {
    ThetaElement e = theta_graph_encode(g);
    if (grade && *grade != e.grade) throw std::invalid_argument("theta sum mixes grades");
    grade = e.grade;
    value += c * e.value;
  }
  return ThetaElement{grade.value_or(1), value};
}

GraphSum theta_graph_decode(const ThetaElement& e) {
  GraphSum out(GraphKind::ICG);
  for (const auto& [m, c] : e.value.terms()) out.add(theta_graph(e.grade, m), c);
  return out;
}

Graph figure_eight_graph(int two_i, int two_j) {
  if (two_i < 2 || two_j < 2) throw std::invalid_argument("figure-eight loops need at least two hairy vertices");
  Graph g;
  g.external = {1, 0};
  g.edges.emplace_back(1, 0);
  add_hairy_path(g, 1, 1, two_i, 0);
  add_hairy_path(g, 1, 1, two_j, 0);
  return g;
}

std::pair<Graph, Graph> bowtie_graphs_3_5() {
  // w5 inserted at vertex 0 of w3: w3's vertices 1, 2, 3 become 0, 1, 2; w5's
  // hub is 3 and its rim 4..8.
  Graph b1(9, {{3, 0}, {3, 1}, {4, 2}, {0, 1}, {1, 2}, {2, 0},
               {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}});
  // w3 inserted at the hub of w5: w5's rim becomes 0..4; w3's hub is 5 and
  // its rim 6, 7, 8.
  Graph b2(9, {{0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 6}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
               {5, 6}, {5, 7}, {5, 8}, {6, 7}, {7, 8}, {8, 6}});
  return {b1, b2};
}

}  // namespace grt2
