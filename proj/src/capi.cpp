#include "grt2/grt2.h"

#include "grt2/graph.hpp"
#include "grt2/graph_ops.hpp"
#include "grt2/parallel.hpp"
#include "grt2/verify.hpp"

#include <json.hpp>

#include <limits>
#include <new>
#include <stdexcept>
#include <string>

using json = nlohmann::ordered_json;

struct grt2_report {
  bool passed = false;
  std::string text;
};

struct grt2_graph {
  grt2::Graph graph;
  std::string text;
};

namespace {

thread_local std::string last_error;

// Runs f, translating exceptions into status codes and the thread's last
// error message.
template <class F>
grt2_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return GRT2_OK;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return GRT2_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return GRT2_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GRT2_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GRT2_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Integers that fit in 64 bits as numbers, larger ones as decimal strings.
json integer_json(const grt2::Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return grt2::to_string(z);
}

json rational_json(const grt2::Rational& q) {
  return json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

json vectors_json(const std::vector<grt2::RelationVector>& rels) {
  json out = json::array();
  for (const auto& r : rels) {
    json v = json::array();
    for (const auto& c : r.coefficients) v.push_back(rational_json(c));
    out.push_back(v);
  }
  return out;
}

json checks_json(const grt2::CheckReport& report) {
  json out = json::array();
  for (const auto& line : report.lines) {
    out.push_back({{"name", line.name}, {"passed", line.passed}, {"detail", line.detail}});
  }
  return out;
}

grt2_report* make_report(const char* command, json parameters, bool passed, json payload) {
  json record = {{"schema", 1},
                 {"command", command},
                 {"parameters", std::move(parameters)},
                 {"status", passed ? "pass" : "fail"},
                 {"payload", std::move(payload)}};
  auto* r = new grt2_report;
  r->passed = passed;
  r->text = record.dump();
  return r;
}

grt2_graph* make_graph(const grt2::Graph& g) {
  auto* h = new grt2_graph;
  h->graph = g;
  h->text = grt2::format_graph(g);
  return h;
}

grt2::GraphCheck to_check(grt2_graph_check c) {
  switch (c) {
    case GRT2_CHECK_D_SQUARED: return grt2::GraphCheck::DSquared;
    case GRT2_CHECK_ENCODING: return grt2::GraphCheck::Encoding;
    case GRT2_CHECK_BOWTIE: return grt2::GraphCheck::Bowtie;
    case GRT2_CHECK_FILTRATION: return grt2::GraphCheck::Filtration;
    case GRT2_CHECK_THETA_IDENTITY: return grt2::GraphCheck::ThetaIdentity;
  }
  throw std::invalid_argument("unknown graph check");
}

grt2::GraphKind to_kind(grt2_graph_kind k) {
  switch (k) {
    case GRT2_KIND_ICG: return grt2::GraphKind::ICG;
    case GRT2_KIND_ADMISSIBLE: return grt2::GraphKind::Admissible;
    case GRT2_KIND_GC2: return grt2::GraphKind::GC2;
  }
  throw std::invalid_argument("unknown graph kind");
}

constexpr int kMaxSizeCap = 12;

}  // namespace

extern "C" {

const char* grt2_version(void) { return "0.1.0"; }

const char* grt2_status_string(grt2_status status) {
  switch (status) {
    case GRT2_OK: return "ok";
    case GRT2_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GRT2_ERR_IO: return "i/o error";
    case GRT2_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* grt2_last_error(void) { return last_error.c_str(); }

int grt2_thread_count(void) { return grt2::thread_count(); }

grt2_status grt2_dims(int degree, int max_weight, grt2_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    const auto rows = grt2::dims_table(degree, max_weight);
    json table = json::array();
    bool all = true;
    for (const auto& r : rows) {
      table.push_back({{"weight", r.weight}, {"degree", r.degree}, {"dim", r.dim}, {"closed_form", r.closed_form}, {"match", r.match}});
      all = all && r.match;
    }
    *out = make_report("dims", {{"degree", degree}, {"max_weight", max_weight}}, all, {{"rows", table}});
  });
}

grt2_status grt2_relations(int weight, unsigned oracles, grt2_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    require(oracles != 0 && (oracles & ~unsigned{GRT2_ORACLE_ALL}) == 0, "oracle mask must be a nonempty subset of psi|rank|ihara");
    std::vector<grt2::Oracle> selected;
    if (oracles & GRT2_ORACLE_PSI) selected.push_back(grt2::Oracle::Psi);
    if (oracles & GRT2_ORACLE_RANK) selected.push_back(grt2::Oracle::Rank);
    if (oracles & GRT2_ORACLE_IHARA) selected.push_back(grt2::Oracle::Ihara);
    const auto spaces = grt2::relation_spaces(weight, selected);
    const auto report = grt2::check_relation_spaces(weight, selected, spaces);
    json names = json::array(), per_oracle = json::object();
    for (std::size_t i = 0; i < selected.size(); ++i) {
      names.push_back(grt2::oracle_name(selected[i]));
      per_oracle[grt2::oracle_name(selected[i])] = vectors_json(spaces[i]);
    }
    json payload = {{"weight", weight},
                    {"index_count", grt2::relation_index_count(weight)},
                    {"expected_count", grt2::expected_relation_count(weight)},
                    {"vectors", per_oracle},
                    {"checks", checks_json(report)}};
    *out = make_report("relations", {{"weight", weight}, {"oracles", names}}, report.passed(), std::move(payload));
  });
}

grt2_status grt2_schneps_sample(int weight, int samples, uint64_t seed, grt2_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    require(samples > 0, "sample count must be positive");
    const auto report = grt2::schneps_negative_sample(weight, samples, seed);
    *out = make_report("schneps-sample", {{"weight", weight}, {"samples", samples}, {"seed", seed}}, report.passed(),
                       {{"checks", checks_json(report)}});
  });
}

grt2_status grt2_graph_check_run(grt2_graph_check check, int size_cap, grt2_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    require(size_cap >= 1 && size_cap <= kMaxSizeCap, "size cap must lie in 1..12");
    const grt2::GraphCheck c = to_check(check);
    const auto report = grt2::run_graph_check(c, size_cap);
    *out = make_report("graphs", {{"check", grt2::graph_check_name(c)}, {"size_cap", size_cap}}, report.passed(),
                       {{"checks", checks_json(report)}});
  });
}

int grt2_report_passed(const grt2_report* report) { return report != nullptr && report->passed ? 1 : 0; }

const char* grt2_report_json(const grt2_report* report) { return report != nullptr ? report->text.c_str() : ""; }

void grt2_report_free(grt2_report* report) { delete report; }

grt2_status grt2_graph_theta(int grade, int k1, int k2, int k3, grt2_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    *out = make_graph(grt2::theta_graph(grade, {k1, k2, k3}));
  });
}

grt2_status grt2_graph_wheel(int spokes, grt2_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    *out = make_graph(grt2::wheel_graph(spokes));
  });
}

grt2_status grt2_graph_figure_eight(int two_i, int two_j, grt2_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    *out = make_graph(grt2::figure_eight_graph(two_i, two_j));
  });
}

grt2_status grt2_graph_parse(const char* text, grt2_graph** out) {
  return guarded([&] {
    require(out != nullptr && text != nullptr, "null pointer argument");
    *out = nullptr;
    *out = make_graph(grt2::parse_graph(text));
  });
}

grt2_status grt2_graph_canonicalize(const grt2_graph* graph, grt2_graph_kind kind, int* sign, grt2_graph** out) {
  return guarded([&] {
    require(graph != nullptr && sign != nullptr && out != nullptr, "null pointer argument");
    *out = nullptr;
    *sign = 0;
    const auto cf = grt2::canonicalize(graph->graph, to_kind(kind));
    if (!cf) return;
    *sign = cf->sign;
    *out = make_graph(cf->graph);
  });
}

const char* grt2_graph_text(const grt2_graph* graph) { return graph != nullptr ? graph->text.c_str() : ""; }

int grt2_graph_vertex_count(const grt2_graph* graph) { return graph != nullptr ? graph->graph.vertex_count() : 0; }

int grt2_graph_edge_count(const grt2_graph* graph) { return graph != nullptr ? graph->graph.edge_count() : 0; }

void grt2_graph_free(grt2_graph* graph) { delete graph; }

}  // extern "C"
