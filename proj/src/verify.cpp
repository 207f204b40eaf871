#include "grt2/verify.hpp"

#include "grt2/grt_depth2.hpp"
#include "grt2/parallel.hpp"
#include "grt2/sym_actions.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace grt2 {

bool CheckReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
}

void CheckReport::add(std::string name, bool ok, std::string detail) {
  lines.push_back(CheckLine{std::move(name), ok, std::move(detail)});
}

void CheckReport::append(const CheckReport& other) {
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

int closed_form_dim(int degree, int k) {
  if (degree == 1 && k % 2 == 1) return k / 6;
  if (degree == 2 && k % 2 == 0) return k / 6;
  return 0;
}

std::vector<DimsRow> dims_table(int degree, int max_weight) {
  if (degree < 0 || degree > 2) throw std::invalid_argument("degree must be 0, 1 or 2");
  if (max_weight < 1) throw std::invalid_argument("max weight must be at least 1");
  std::vector<DimsRow> rows(static_cast<std::size_t>(max_weight));
  parallel_for(rows.size(), [&](std::size_t idx) {
    const int k = static_cast<int>(idx) + 1;
    DimsRow& r = rows[idx];
    r.weight = k;
    r.degree = degree;
    r.dim = cohomology_dim(degree, k);
    r.closed_form = closed_form_dim(degree, k);
    r.match = r.dim == r.closed_form;
  });
  return rows;
}

const char* oracle_name(Oracle o) {
  switch (o) {
    case Oracle::Psi: return "psi";
    case Oracle::Rank: return "rank";
    case Oracle::Ihara: return "ihara";
  }
  return "?";
}

std::vector<RelationVector> relation_oracle(Oracle o, int k) {
  switch (o) {
    case Oracle::Psi: return psi_relation_space(k);
    case Oracle::Rank: return relation_space(k);
    case Oracle::Ihara: return bracket_kernel(k);
  }
  throw std::invalid_argument("unknown oracle");
}

std::vector<std::vector<RelationVector>> relation_spaces(int k, const std::vector<Oracle>& oracles) {
  std::vector<std::vector<RelationVector>> spaces(oracles.size());
  parallel_for(oracles.size(), [&](std::size_t i) { spaces[i] = relation_oracle(oracles[i], k); });
  return spaces;
}

CheckReport relation_agreement(int k, const std::vector<Oracle>& oracles) {
  if (oracles.empty()) throw std::invalid_argument("no oracle selected");
  return check_relation_spaces(k, oracles, relation_spaces(k, oracles));
}

CheckReport check_relation_spaces(int k, const std::vector<Oracle>& oracles,
                                  const std::vector<std::vector<RelationVector>>& spaces) {
  if (oracles.size() != spaces.size()) throw std::invalid_argument("one space per oracle expected");
  const std::string at = "k=" + std::to_string(k) + " ";
  CheckReport report;
  const int expected = expected_relation_count(k);
  for (std::size_t i = 0; i < oracles.size(); ++i) {
    const auto& space = spaces[i];
    const int got = static_cast<int>(space.size());
    report.add(at + oracle_name(oracles[i]) + " count", got == expected,
               "got " + std::to_string(got) + ", expected " + std::to_string(expected));
    const auto failing = std::count_if(space.begin(), space.end(), [](const RelationVector& r) { return !schneps_check(r); });
    report.add(at + oracle_name(oracles[i]) + " schneps", failing == 0,
               std::to_string(space.size() - static_cast<std::size_t>(failing)) + "/" + std::to_string(space.size()) +
                   " vectors pass");
  }
  for (std::size_t i = 1; i < oracles.size(); ++i) {
    const bool same = same_span(relation_rows(spaces[0]), relation_rows(spaces[i]));
    report.add(at + "span " + oracle_name(oracles[0]) + " = " + oracle_name(oracles[i]), same);
  }
  return report;
}

CheckReport schneps_negative_sample(int k, int samples, std::uint64_t seed) {
  const int m = relation_index_count(k);
  const auto basis = relation_rows(relation_space(k));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  int tested = 0, rejected = 0, failures = 0;
  while (tested < samples) {
    DenseVec v(static_cast<std::size_t>(m));
    for (auto& c : v) c = coef(rng);
    if (is_zero(v) || in_span(v, basis)) {
      ++rejected;
      continue;
    }
    ++tested;
    if (schneps_check(RelationVector{k, v})) ++failures;
  }
  CheckReport report;
  report.add("k=" + std::to_string(k) + " non-kernel vectors fail schneps", failures == 0,
             std::to_string(tested - failures) + "/" + std::to_string(tested) + " fail as required, " +
                 std::to_string(rejected) + " in-span draws skipped");
  return report;
}

const char* graph_check_name(GraphCheck c) {
  switch (c) {
    case GraphCheck::DSquared: return "d-squared";
    case GraphCheck::Encoding: return "encoding";
    case GraphCheck::Bowtie: return "bowtie";
    case GraphCheck::Filtration: return "filtration";
    case GraphCheck::ThetaIdentity: return "theta-identity";
  }
  return "?";
}

std::vector<ThetaShape> theta_shapes(int grade, int max_weight) {
  std::vector<ThetaShape> out;
  for (int n = 0; n <= max_weight - 2 + grade; ++n) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        const Monomial3 m{a, b, n - a - b};
        if (std::count(m.begin(), m.end(), 0) > 1) continue;
        out.push_back(ThetaShape{grade, m, theta_graph(grade, m)});
      }
    }
  }
  return out;
}

namespace {

constexpr int kThetaMaxWeight = 9;

std::string shape_label(const ThetaShape& s) {
  const int n = s.exponents[0] + s.exponents[1] + s.exponents[2];
  return "grade " + std::to_string(s.grade) + " weight " + std::to_string(theta_weight(s.grade, n));
}

bool sign_lemma_zero(int grade, const Monomial3& m) {
  const int n = m[0] + m[1] + m[2];
  if (grade == 0 && n % 2 == 0) return true;
  return m[0] == m[1] || m[1] == m[2] || m[0] == m[2];
}

// Runs f on every theta shape with at most size_cap vertices and groups the
// outcomes per (grade, weight).
template <class F>
CheckReport per_shape(const char* what, int size_cap, F&& f) {
  CheckReport report;
  for (int grade = 0; grade <= 1; ++grade) {
    const auto shapes = theta_shapes(grade, kThetaMaxWeight);
    std::vector<std::string> failure(shapes.size());
    parallel_for(shapes.size(), [&](std::size_t i) {
      if (shapes[i].graph.vertex_count() <= size_cap) failure[i] = f(shapes[i]);
    });
    std::size_t i = 0;
    while (i < shapes.size()) {
      const std::string label = shape_label(shapes[i]);
      int total = 0, skipped = 0;
      std::string first_failure;
      int failed = 0;
      for (; i < shapes.size() && shape_label(shapes[i]) == label; ++i) {
        ++total;
        if (shapes[i].graph.vertex_count() > size_cap) ++skipped;
        else if (!failure[i].empty()) {
          ++failed;
          if (first_failure.empty()) first_failure = failure[i];
        }
      }
      std::string detail = std::to_string(total - skipped - failed) + "/" + std::to_string(total - skipped) + " shapes";
      if (skipped > 0) detail += ", " + std::to_string(skipped) + " over size cap";
      if (!first_failure.empty()) detail += "; " + first_failure;
      report.add(std::string(what) + " " + label, failed == 0, detail);
    }
  }
  return report;
}

std::string encoding_failure(const ThetaShape& shape) {
  const int grade = shape.grade;
  const Monomial3& m = shape.exponents;
  const Graph& g = shape.graph;
  const std::string name = to_string(Poly3::monomial(m, 1));
  const bool expect_zero = sign_lemma_zero(grade, m);
  const auto cf = canonical_form(g);
  if (expect_zero != !cf.has_value()) {
    return name + (expect_zero ? " should vanish but does not" : " vanishes unexpectedly");
  }
  if (expect_zero) {
    const int n = m[0] + m[1] + m[2];
    const bool in_complex = grade == 1 || n % 2 == 1;
    if (in_complex && !ThetaElement::make(grade, Poly3::monomial(m, 1)).value.is_zero()) {
      return name + " vanishes as a graph but not as a polynomial";
    }
    return {};
  }
  const GraphSum s = GraphSum::single(g, GraphKind::ICG);
  const ThetaElement e = theta_graph_encode(s);
  if (e.value != ThetaElement::make(grade, Poly3::monomial(m, 1)).value) return name + " encodes incorrectly";
  const ThetaElement lhs = theta_graph_encode(icg_differential(s, true));
  const ThetaElement rhs = d0_theta(e);
  if (lhs.value != rhs.value) return name + ": graph d0 gives " + to_string(lhs.value) + ", polynomial d0 gives " + to_string(rhs.value);
  return {};
}

std::string d_squared_failure(const ThetaShape& shape) {
  const GraphSum s = GraphSum::single(shape.graph, GraphKind::ICG);
  const GraphSum dd = icg_differential(icg_differential(s, false), false);
  if (!dd.is_zero()) return to_string(Poly3::monomial(shape.exponents, 1)) + " has " + std::to_string(dd.size()) + " surviving terms";
  return {};
}

int min_level(const GraphSum& s) {
  int level = std::numeric_limits<int>::max();
  for (const auto& [g, c] : s.terms()) level = std::min(level, filtration_value(g));
  return level;
}

std::string wheel_name(int n) { return "w" + std::to_string(n); }

void check_bracket_levels(CheckReport& report, int a, int b, int size_cap) {
  const std::string name = "[" + wheel_name(a) + "," + wheel_name(b) + "] terms at level >= 2";
  if (b + 1 > size_cap || a + 1 > size_cap) {
    report.add(name, true, "skipped: over size cap");
    return;
  }
  const GraphSum br = gc2_bracket(wheel(a), wheel(b));
  const int level = min_level(br);
  report.add(name, !br.is_zero() && level >= 2,
             std::to_string(br.size()) + " terms, minimal level " + (br.is_zero() ? std::string("none") : std::to_string(level)));
}

// Coefficient c with s = c * t, if any.
std::optional<Rational> proportionality(const GraphSum& s, const GraphSum& t) {
  if (s.is_zero() || t.is_zero()) return std::nullopt;
  const auto& [g, c] = *t.terms().begin();
  const Rational ratio = s.coefficient(g) / c;
  if (grt2::is_zero(ratio) || !(s == ratio * t)) return std::nullopt;
  return ratio;
}

Graph marked(const Graph& g, int v) {
  Graph h = g;
  h.external[static_cast<std::size_t>(v)] = 1;
  return h;
}

CheckReport bowtie_check(int size_cap) {
  CheckReport report;
  if (6 > size_cap) {
    report.add("bowtie", true, "skipped: over size cap");
    return report;
  }
  const GraphSum br = gc2_bracket(wheel(3), wheel(5));
  const GraphSum level1 = level_projection(br, 1);
  report.add("[w3,w5] has no level-1 terms", level1.is_zero(), std::to_string(level1.size()) + " level-1 terms");
  const auto [b1, b2] = bowtie_graphs_3_5();
  const GraphSum bowtie = GraphSum::single(b1, GraphKind::GC2) - GraphSum::single(b2, GraphKind::GC2);
  report.add("bowtie representatives are distinct nonzero classes", bowtie.size() == 2);
  const GraphSum level2 = level_projection(br, 2);
  const auto c = proportionality(level2, bowtie);
  report.add("level-2 projection of [w3,w5] = c (B1 - B2)", c.has_value(),
             c ? "c = " + to_string(*c) : std::to_string(level2.size()) + " level-2 terms, not proportional");

  // Marking: two internal loops iff the marked vertex has maximal valence.
  int bad = 0, two_loop = 0;
  for (const auto& [g, coef] : level2.terms()) {
    const auto val = g.valences();
    const int top = *std::max_element(val.begin(), val.end());
    for (int v = 0; v < g.vertex_count(); ++v) {
      const Graph h = marked(g, v);
      if (admissibility_violation(h, GraphKind::ICG)) continue;
      const bool loops2 = internal_loop_count(h) == 2;
      two_loop += loops2;
      if (loops2 != (val[static_cast<std::size_t>(v)] == top)) ++bad;
    }
  }
  report.add("marking a level-2 term gives two loops only at maximal valence", bad == 0 && two_loop > 0,
             std::to_string(two_loop) + " two-loop markings, " + std::to_string(bad) + " violations");

  const GraphSum d35 = loop_projection(mark_one_external(level2), 2);
  const auto hub_marked = canonicalize(marked(b1, 3), GraphKind::ICG);
  const bool contains_hub = hub_marked && !grt2::is_zero(d35.coefficient(hub_marked->graph));
  report.add("marked bowtie difference D35 is two two-loop classes", d35.size() == 2 && contains_hub,
             std::to_string(d35.size()) + " classes" + (contains_hub ? ", including B1 marked at its hub" : ""));
  return report;
}

CheckReport filtration_check(int size_cap) {
  CheckReport report;
  for (int n : {3, 5, 7}) {
    if (n + 1 > size_cap) {
      report.add("filtration " + wheel_name(n) + " = 1", true, "skipped: over size cap");
      continue;
    }
    const int f = filtration_value(wheel_graph(n));
    report.add("filtration " + wheel_name(n) + " = 1", f == 1, "value " + std::to_string(f));
  }
  check_bracket_levels(report, 3, 5, size_cap);
  check_bracket_levels(report, 3, 7, size_cap);
  return report;
}

CheckReport d_squared_check(int size_cap) {
  CheckReport report = per_shape("d^2 = 0 on theta shapes", size_cap, d_squared_failure);
  for (int n : {3, 5}) {
    const std::string name = "d^2 = 0 on (" + wheel_name(n) + ")_1";
    if (n + 1 > size_cap) {
      report.add(name, true, "skipped: over size cap");
      continue;
    }
    const GraphSum m = mark_one_external(wheel(n));
    const GraphSum dd = icg_differential(icg_differential(m, false), false);
    report.add(name, !m.is_zero() && dd.is_zero(),
               std::to_string(m.size()) + " marked classes, " + std::to_string(dd.size()) + " terms in d^2");
  }
  return report;
}

CheckReport theta_identity_check(int size_cap) {
  CheckReport report;
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const std::string name = "d0 E(" + std::to_string(2 * i) + "," + std::to_string(2 * j) + ") = D(" +
                             std::to_string(2 * i + 1) + "," + std::to_string(2 * j + 1) + ") + 4 theta";
    if (figure_eight_graph(2 * i, 2 * j).vertex_count() > size_cap) {
      report.add(name, true, "skipped: over size cap");
      continue;
    }
    const ThetaIdentity t = theta_identity(i, j);
    const bool ok = t.theta_coefficient == 4 && t.figure_eight_terms.is_zero() && t.lambda.has_value();
    std::string detail = "theta coefficient " + to_string(t.theta_coefficient) + ", " +
                         std::to_string(t.figure_eight_terms.size()) + " figure-eight terms, ";
    detail += t.lambda ? "remainder = " + to_string(*t.lambda) + " * marked bowtie projection"
                       : "remainder not proportional to the marked bowtie projection";
    report.add(name, ok, detail);
  }
  return report;
}

bool is_figure_eight_shape(const Graph& g) {
  std::vector<int> internal_degree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& [a, b] : g.edges) {
    if (g.is_external(a) || g.is_external(b)) continue;
    ++internal_degree[static_cast<std::size_t>(a)];
    ++internal_degree[static_cast<std::size_t>(b)];
  }
  return std::count(internal_degree.begin(), internal_degree.end(), 4) == 1;
}

}  // namespace

ThetaIdentity theta_identity(int i, int j) {
  ThetaIdentity t;
  const GraphSum e = GraphSum::single(figure_eight_graph(2 * i, 2 * j), GraphKind::ICG);
  const GraphSum de = icg_differential(e, true);
  const auto theta = canonicalize(theta_graph(1, {2 * i, 2 * j, 0}), GraphKind::ICG);
  if (!theta) throw std::logic_error("theta graph with distinct exponents vanished");
  t.theta_coefficient = de.coefficient(theta->graph) * theta->sign;
  t.figure_eight_terms = GraphSum(GraphKind::ICG);
  for (const auto& [g, c] : de.terms()) {
    if (is_figure_eight_shape(g)) t.figure_eight_terms.add_canonical(g, c);
  }
  t.remainder = de - Rational(4) * GraphSum::single(theta_graph(1, {2 * i, 2 * j, 0}), GraphKind::ICG);
  const GraphSum bracket = gc2_bracket(wheel(2 * i + 1), wheel(2 * j + 1), 2);
  t.marked_bowtie = loop_projection(mark_one_external(level_projection(bracket, 2)), 2);
  t.lambda = proportionality(t.remainder, t.marked_bowtie);
  return t;
}

CheckReport run_graph_check(GraphCheck c, int size_cap) {
  switch (c) {
    case GraphCheck::DSquared: return d_squared_check(size_cap);
    case GraphCheck::Encoding: return per_shape("encoding commutes with d0", size_cap, encoding_failure);
    case GraphCheck::Bowtie: return bowtie_check(size_cap);
    case GraphCheck::Filtration: return filtration_check(size_cap);
    case GraphCheck::ThetaIdentity: return theta_identity_check(size_cap);
  }
  throw std::invalid_argument("unknown graph check");
}

}  // namespace grt2
