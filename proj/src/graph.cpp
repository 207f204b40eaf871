#include "grt2/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grt2 {

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edge_list, std::vector<int> external_vertices)
    : external(static_cast<std::size_t>(vertices), 0), edges(std::move(edge_list)) {
  for (int v : external_vertices) external.at(static_cast<std::size_t>(v)) = 1;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertices || b >= vertices) throw std::invalid_argument("edge endpoint out of range");
  }
}

int Graph::internal_count() const {
  return static_cast<int>(std::count(external.begin(), external.end(), std::uint8_t{0}));
}

std::vector<int> Graph::valences() const {
  std::vector<int> val(external.size(), 0);
  for (const auto& [a, b] : edges) {
    ++val[static_cast<std::size_t>(a)];
    ++val[static_cast<std::size_t>(b)];
  }
  return val;
}

std::vector<std::vector<int>> Graph::incidence() const {
  std::vector<std::vector<int>> inc(external.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    inc[static_cast<std::size_t>(edges[e].first)].push_back(static_cast<int>(e));
    if (edges[e].second != edges[e].first) inc[static_cast<std::size_t>(edges[e].second)].push_back(static_cast<int>(e));
  }
  return inc;
}

int icg_degree(const Graph& g) { return 1 - g.edge_count() + 2 * g.internal_count(); }

int gc2_degree(const Graph& g) { return -2 - g.edge_count() + 2 * g.vertex_count(); }

bool has_double_edge(const Graph& g) {
  std::vector<std::pair<int, int>> sorted;
  sorted.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) sorted.push_back(std::minmax(a, b));
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

namespace {

// Connected components restricted to vertices with keep[v]; returns a
// component id per vertex (-1 for dropped vertices) and the component count.
std::pair<std::vector<int>, int> components(const Graph& g, const std::vector<bool>& keep) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& [a, b] : g.edges) {
    if (!keep[static_cast<std::size_t>(a)] || !keep[static_cast<std::size_t>(b)]) continue;
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  std::vector<int> comp(n, -1), root_id(n, -1);
  int count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    auto& id = root_id[static_cast<std::size_t>(find(static_cast<int>(v)))];
    if (id < 0) id = count++;
    comp[v] = id;
  }
  return {comp, count};
}

}  // namespace

std::optional<std::string> admissibility_violation(const Graph& g, GraphKind kind) {
  const int n = g.vertex_count();
  for (const auto& [a, b] : g.edges) {
    if (a == b) return "simple loop at vertex " + std::to_string(a);
  }
  const auto val = g.valences();
  if (kind == GraphKind::GC2) {
    if (n == 0) return "empty graph";
    for (int v = 0; v < n; ++v) {
      if (g.is_external(v)) return "external vertex in a GC2 graph";
      if (val[static_cast<std::size_t>(v)] < 3) return "vertex " + std::to_string(v) + " is not at least trivalent";
    }
    if (components(g, std::vector<bool>(static_cast<std::size_t>(n), true)).second != 1) return "graph is not connected";
    return std::nullopt;
  }
  if (has_double_edge(g)) return "double edge";
  for (int v = 0; v < n; ++v) {
    if (!g.is_external(v) && val[static_cast<std::size_t>(v)] < 3) {
      return "internal vertex " + std::to_string(v) + " is not at least trivalent";
    }
  }
  // Every internal vertex reaches an external one.
  const auto [comp, count] = components(g, std::vector<bool>(static_cast<std::size_t>(n), true));
  std::vector<bool> comp_has_external(static_cast<std::size_t>(count), false);
  for (int v = 0; v < n; ++v) {
    if (g.is_external(v)) comp_has_external[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = true;
  }
  for (int v = 0; v < n; ++v) {
    if (!comp_has_external[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]) {
      return "internal vertex " + std::to_string(v) + " has no path to an external vertex";
    }
  }
  if (kind == GraphKind::ICG) {
    std::vector<bool> internal(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) internal[static_cast<std::size_t>(v)] = !g.is_external(v);
    if (components(g, internal).second > 1) return "graph is not internally connected";
  }
  return std::nullopt;
}

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
    const auto n = static_cast<std::size_t>(n_);
    adj_start_.assign(n + 1, 0);
    for (const auto& [a, b] : g.edges) {
      ++adj_start_[static_cast<std::size_t>(a) + 1];
      ++adj_start_[static_cast<std::size_t>(b) + 1];
    }
    for (std::size_t v = 0; v < n; ++v) adj_start_[v + 1] += adj_start_[v];
    adj_.resize(static_cast<std::size_t>(adj_start_[n]));
    std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
    for (const auto& [a, b] : g.edges) {
      adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(a)]++)] = b;
      adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(b)]++)] = a;
    }
    keys_.resize(adj_.size() + n);
    order_.resize(n);
  }

  std::optional<CanonicalForm> run() {
    // Initial colors: internal vertices first, then externals by label.
    std::vector<int> color(static_cast<std::size_t>(n_));
    int label = 0;
    for (int v = 0; v < n_; ++v) {
      color[static_cast<std::size_t>(v)] = g_.is_external(v) ? 1 + (++label) : 0;
    }
    search(std::move(color));
    if (odd_automorphism_) return std::nullopt;
    return CanonicalForm{best_, best_sign_};
  }

 private:
  // Key of v: its color followed by the sorted colors of its neighbors.
  std::pair<const int*, const int*> key(int v) const {
    const auto begin = static_cast<std::size_t>(adj_start_[static_cast<std::size_t>(v)] + v);
    const auto end = static_cast<std::size_t>(adj_start_[static_cast<std::size_t>(v) + 1] + v + 1);
    return {keys_.data() + begin, keys_.data() + end};
  }

  // Refines to the coarsest equitable coloring; colors are ranks of the keys,
  // so they depend only on the isomorphism type of the colored graph.
  std::vector<int> refine(std::vector<int> color) {
    std::vector<int> distinct = color;
    std::sort(distinct.begin(), distinct.end());
    int cells = static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
    while (true) {
      for (int v = 0; v < n_; ++v) {
        const auto lo = static_cast<std::size_t>(adj_start_[static_cast<std::size_t>(v)]);
        const auto hi = static_cast<std::size_t>(adj_start_[static_cast<std::size_t>(v) + 1]);
        int* out = keys_.data() + lo + static_cast<std::size_t>(v);
        *out++ = color[static_cast<std::size_t>(v)];
        for (std::size_t i = lo; i < hi; ++i) *out++ = color[static_cast<std::size_t>(adj_[i])];
        std::sort(keys_.data() + lo + static_cast<std::size_t>(v) + 1, out);
      }
      std::iota(order_.begin(), order_.end(), 0);
      auto less = [this](int a, int b) {
        const auto [a0, a1] = key(a);
        const auto [b0, b1] = key(b);
        return std::lexicographical_compare(a0, a1, b0, b1);
      };
      std::sort(order_.begin(), order_.end(), less);
      int rank = 0;
      for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i > 0 && less(order_[i - 1], order_[i])) ++rank;
        color[static_cast<std::size_t>(order_[i])] = rank;
      }
      const int new_cells = n_ == 0 ? 0 : rank + 1;
      if (new_cells == cells) return color;
      cells = new_cells;
    }
  }

  void search(std::vector<int> color) {
    color = refine(std::move(color));
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (int c : color) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (color[static_cast<std::size_t>(v)] != target) continue;
      std::vector<int> next(color.size());
      for (int u = 0; u < n_; ++u) {
        const int c = color[static_cast<std::size_t>(u)];
        next[static_cast<std::size_t>(u)] = 2 * c + (c == target && u != v ? 1 : 0);
      }
      search(std::move(next));
      if (odd_automorphism_) return;
    }
  }

  void leaf(const std::vector<int>& label) {
    Graph h;
    h.external.assign(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) h.external[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = g_.external[static_cast<std::size_t>(v)];
    std::vector<std::pair<int, int>> relabeled;
    relabeled.reserve(g_.edges.size());
    for (const auto& [a, b] : g_.edges) {
      relabeled.push_back(std::minmax(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]));
    }
    std::vector<int> order(relabeled.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      return relabeled[static_cast<std::size_t>(i)] < relabeled[static_cast<std::size_t>(j)];
    });
    h.edges.reserve(relabeled.size());
    for (int i : order) h.edges.push_back(relabeled[static_cast<std::size_t>(i)]);
    const int sign = permutation_sign(order);
    if (!have_best_ || h < best_) {
      best_ = std::move(h);
      best_sign_ = sign;
      have_best_ = true;
    } else if (h == best_ && sign != best_sign_) {
      odd_automorphism_ = true;
    }
  }

  static int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int transpositions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      std::size_t j = i;
      int len = 0;
      while (!seen[j]) {
        seen[j] = true;
        j = static_cast<std::size_t>(perm[j]);
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> adj_start_, adj_, keys_, order_;
  Graph best_;
  int best_sign_ = 1;
  bool have_best_ = false;
  bool odd_automorphism_ = false;
};

}  // namespace

std::optional<CanonicalForm> canonical_form(const Graph& g) {
  if (has_double_edge(g)) {
    // Swapping the two parallel edges is an odd automorphism.
    return std::nullopt;
  }
  return Canonizer(g).run();
}

std::optional<CanonicalForm> canonicalize(const Graph& g, GraphKind kind) {
  if (auto bad = admissibility_violation(g, kind)) throw std::invalid_argument("inadmissible graph: " + *bad);
  return canonical_form(g);
}

GraphSum GraphSum::single(const Graph& g, GraphKind kind, const Rational& c) {
  GraphSum s(kind);
  s.add(g, c);
  return s;
}

Rational GraphSum::coefficient(const Graph& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GraphSum::add(const Graph& g, const Rational& c) {
  if (grt2::is_zero(c)) return;
  auto cf = canonicalize(g, kind_);
  if (!cf) return;
  add_canonical(cf->graph, cf->sign * c);
}

void GraphSum::add_canonical(const Graph& g, const Rational& c) {
  if (grt2::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (grt2::is_zero(it->second)) terms_.erase(it);
  }
}

GraphSum& GraphSum::operator+=(const GraphSum& o) {
  for (const auto& [g, c] : o.terms_) add_canonical(g, c);
  return *this;
}

GraphSum& GraphSum::operator-=(const GraphSum& o) {
  for (const auto& [g, c] : o.terms_) add_canonical(g, -c);
  return *this;
}

GraphSum& GraphSum::operator*=(const Rational& c) {
  if (grt2::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "V " << g.vertex_count() << " E " << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) os << "v " << v << ' ' << (g.is_external(v) ? "ext" : "int") << '\n';
  for (int e = 0; e < g.edge_count(); ++e) {
    os << "e " << e << ' ' << g.edges[static_cast<std::size_t>(e)].first << ' ' << g.edges[static_cast<std::size_t>(e)].second
       << '\n';
  }
  return os.str();
}

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw std::invalid_argument("graph text: " + what); }

Graph parse_block(std::istream& in, const std::string& header) {
  std::istringstream hs(header);
  std::string v_tag, e_tag;
  int n = -1, m = -1;
  if (!(hs >> v_tag >> n >> e_tag >> m) || v_tag != "V" || e_tag != "E" || n < 0 || m < 0) {
    parse_error("bad header '" + header + "'");
  }
  Graph g;
  g.external.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> seen_v(static_cast<std::size_t>(n), false);
  std::vector<std::optional<std::pair<int, int>>> edges(static_cast<std::size_t>(m));
  std::string line;
  for (int i = 0; i < n + m; ++i) {
    if (!std::getline(in, line)) parse_error("unexpected end of input");
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      int idx = -1;
      std::string kind;
      if (!(ls >> idx >> kind) || idx < 0 || idx >= n || seen_v[static_cast<std::size_t>(idx)]) parse_error("bad vertex line '" + line + "'");
      if (kind != "ext" && kind != "int") parse_error("vertex kind must be ext or int in '" + line + "'");
      seen_v[static_cast<std::size_t>(idx)] = true;
      g.external[static_cast<std::size_t>(idx)] = kind == "ext" ? 1 : 0;
    } else if (tag == "e") {
      int rank = -1, a = -1, b = -1;
      if (!(ls >> rank >> a >> b) || rank < 0 || rank >= m || edges[static_cast<std::size_t>(rank)] || a < 0 || a >= n || b < 0 || b >= n) {
        parse_error("bad edge line '" + line + "'");
      }
      edges[static_cast<std::size_t>(rank)] = std::make_pair(a, b);
    } else {
      parse_error("unexpected line '" + line + "'");
    }
    std::string rest;
    if (ls >> rest) parse_error("trailing text in '" + line + "'");
  }
  if (std::find(seen_v.begin(), seen_v.end(), false) != seen_v.end()) parse_error("missing vertex line");
  for (const auto& e : edges) g.edges.push_back(*e);
  return g;
}

bool next_nonempty_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!next_nonempty_line(in, header)) parse_error("empty input");
  Graph g = parse_block(in, header);
  std::string extra;
  if (next_nonempty_line(in, extra)) parse_error("trailing line '" + extra + "'");
  return g;
}

std::string format_graph_sum(const GraphSum& s) {
  std::string out;
  for (const auto& [g, c] : s.terms()) out += "coef " + to_string(c) + '\n' + format_graph(g);
  return out;
}

GraphSum parse_graph_sum(const std::string& text, GraphKind kind) {
  std::istringstream in(text);
  GraphSum s(kind);
  std::string line;
  while (next_nonempty_line(in, line)) {
    std::istringstream ls(line);
    std::string tag, coef;
    if (!(ls >> tag >> coef) || tag != "coef") parse_error("expected 'coef <q>', got '" + line + "'");
    const Rational c = parse_rational(coef);
    std::string header;
    if (!next_nonempty_line(in, header)) parse_error("coef line without graph");
    s.add(parse_block(in, header), c);
  }
  return s;
}

}  // namespace grt2
