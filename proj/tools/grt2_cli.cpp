// Command-line front end over the C API.
//
//   grt2 dims --max-weight 51 --degree 1 --format text
//   grt2 relations --weight 12 --oracle all
//   grt2 graphs --check theta-identity
//   grt2 export --what graph --graph theta:1:2,4,0 --out theta24.txt
//
// Exit status: 0 when every asserted identity holds, 1 when one fails, 2 on
// usage, argument or I/O errors.

#include "grt2/grt2.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct ApiError : std::runtime_error {
  grt2_status status;
  ApiError(grt2_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(grt2_status s) {
  if (s != GRT2_OK) throw ApiError(s, std::string(grt2_status_string(s)) + ": " + grt2_last_error());
}

struct ReportDeleter {
  void operator()(grt2_report* r) const { grt2_report_free(r); }
};
struct GraphDeleter {
  void operator()(grt2_graph* g) const { grt2_graph_free(g); }
};
using Report = std::unique_ptr<grt2_report, ReportDeleter>;
using GraphHandle = std::unique_ptr<grt2_graph, GraphDeleter>;

template <class F>
Report make_report(F&& call) {
  grt2_report* raw = nullptr;
  check(call(&raw));
  return Report(raw);
}

json record(const Report& r) { return json::parse(grt2_report_json(r.get())); }

std::string rational_text(const json& q) {
  auto part = [](const json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::int64_t>()); };
  const std::string num = part(q[0]), den = part(q[1]);
  return den == "1" ? num : num + "/" + den;
}

std::string vector_text(const json& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + rational_text(v[i]);
  return out + ")";
}

void print_checks(std::ostream& os, const json& checks) {
  for (const auto& c : checks) {
    os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    const auto detail = c["detail"].get<std::string>();
    if (!detail.empty()) os << " -- " << detail;
    os << '\n';
  }
}

// Writes through a temporary file in the target directory so that a failed
// export leaves no partial file behind.
void write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ApiError(GRT2_ERR_IO, "cannot open " + tmp.string() + " for writing");
    out << content;
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ApiError(GRT2_ERR_IO, "write failed for " + target.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ApiError(GRT2_ERR_IO, "cannot move output into place at " + target.string() + ": " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiError(GRT2_ERR_IO, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- dims ----

struct DimsOptions {
  int max_weight = 51;
  int degree = 1;
  std::string format = "text";
};

std::string dims_csv(const json& rec) {
  std::string out = "weight,degree,dim,closed_form,match\n";
  for (const auto& r : rec["payload"]["rows"]) {
    out += std::to_string(r["weight"].get<int>()) + "," + std::to_string(r["degree"].get<int>()) + "," +
           std::to_string(r["dim"].get<int>()) + "," + std::to_string(r["closed_form"].get<int>()) + "," +
           (r["match"].get<bool>() ? "true" : "false") + "\n";
  }
  return out;
}

int run_dims(const DimsOptions& o) {
  const Report rep = make_report([&](grt2_report** out) { return grt2_dims(o.degree, o.max_weight, out); });
  const json rec = record(rep);
  if (o.format == "json") {
    std::cout << rec.dump(2) << '\n';
  } else if (o.format == "csv") {
    std::cout << dims_csv(rec);
  } else {
    std::cout << "dim H^" << o.degree << " of the theta complex, weights 1.." << o.max_weight << '\n';
    std::cout << "weight  dim  closed_form  match\n";
    for (const auto& r : rec["payload"]["rows"]) {
      char line[64];
      std::snprintf(line, sizeof line, "%6d  %3d  %11d  %s\n", r["weight"].get<int>(), r["dim"].get<int>(),
                    r["closed_form"].get<int>(), r["match"].get<bool>() ? "yes" : "NO");
      std::cout << line;
    }
    std::cout << (grt2_report_passed(rep.get()) ? "PASS" : "FAIL") << " all rows match the closed form\n";
  }
  return grt2_report_passed(rep.get()) ? 0 : kExitFail;
}

// ---- relations ----

struct RelationsOptions {
  std::optional<int> weight;
  int max_weight = 28;
  std::string oracle = "all";
  int negative_samples = 0;
  std::uint64_t seed = 1;
  std::string format = "text";
};

unsigned oracle_mask(const std::string& name) {
  if (name == "psi") return GRT2_ORACLE_PSI;
  if (name == "rank") return GRT2_ORACLE_RANK;
  if (name == "ihara") return GRT2_ORACLE_IHARA;
  return GRT2_ORACLE_ALL;
}

std::vector<int> relation_weights(const RelationsOptions& o) {
  if (o.weight) return {*o.weight};
  std::vector<int> ks;
  for (int k = 8; k <= o.max_weight; k += 2) ks.push_back(k);
  return ks;
}

int run_relations(const RelationsOptions& o) {
  json records = json::array();
  bool passed = true;
  for (int k : relation_weights(o)) {
    const Report rep = make_report([&](grt2_report** out) { return grt2_relations(k, oracle_mask(o.oracle), out); });
    passed = passed && grt2_report_passed(rep.get());
    json rec = record(rep);
    if (o.negative_samples > 0) {
      const Report neg = make_report(
          [&](grt2_report** out) { return grt2_schneps_sample(k, o.negative_samples, o.seed, out); });
      passed = passed && grt2_report_passed(neg.get());
      const json neg_rec = record(neg);
      for (const auto& c : neg_rec["payload"]["checks"]) rec["payload"]["checks"].push_back(c);
      if (!grt2_report_passed(neg.get())) rec["status"] = "fail";
    }
    records.push_back(std::move(rec));
  }
  if (o.format == "json") {
    std::cout << records.dump(2) << '\n';
  } else {
    for (const auto& rec : records) {
      const auto& p = rec["payload"];
      const int k = p["weight"].get<int>(), m = p["index_count"].get<int>();
      std::cout << "weight " << k << ": brackets {s3,s" << k - 3 << "}";
      if (m > 1) std::cout << " .. {s" << 2 * m + 1 << ",s" << k - 1 - 2 * m << "}";
      std::cout << ", " << p["expected_count"].get<int>() << " expected relation(s)\n";
      for (const auto& [name, vectors] : p["vectors"].items()) {
        std::cout << "  " << name << ":";
        if (vectors.empty()) std::cout << " none";
        std::cout << '\n';
        for (const auto& v : vectors) std::cout << "    " << vector_text(v) << '\n';
      }
      std::ostringstream checks;
      print_checks(checks, p["checks"]);
      std::istringstream lines(checks.str());
      for (std::string line; std::getline(lines, line);) std::cout << "  " << line << '\n';
    }
  }
  return passed ? 0 : kExitFail;
}

// ---- graphs ----

struct GraphsOptions {
  std::string check = "all";
  int size_cap = 12;
  std::string format = "text";
};

const std::vector<std::pair<std::string, grt2_graph_check>>& graph_checks() {
  static const std::vector<std::pair<std::string, grt2_graph_check>> checks = {
      {"d-squared", GRT2_CHECK_D_SQUARED},   {"encoding", GRT2_CHECK_ENCODING},
      {"bowtie", GRT2_CHECK_BOWTIE},         {"filtration", GRT2_CHECK_FILTRATION},
      {"theta-identity", GRT2_CHECK_THETA_IDENTITY}};
  return checks;
}

int run_graphs(const GraphsOptions& o) {
  json records = json::array();
  bool passed = true;
  for (const auto& [name, id] : graph_checks()) {
    if (o.check != "all" && o.check != name) continue;
    const Report rep = make_report([&, id = id](grt2_report** out) { return grt2_graph_check_run(id, o.size_cap, out); });
    passed = passed && grt2_report_passed(rep.get());
    records.push_back(record(rep));
  }
  if (o.format == "json") {
    std::cout << records.dump(2) << '\n';
  } else {
    for (const auto& rec : records) {
      std::cout << rec["parameters"]["check"].get<std::string>() << " (size cap " << o.size_cap << ")\n";
      std::ostringstream checks;
      print_checks(checks, rec["payload"]["checks"]);
      std::istringstream lines(checks.str());
      for (std::string line; std::getline(lines, line);) std::cout << "  " << line << '\n';
    }
  }
  return passed ? 0 : kExitFail;
}

// ---- export ----

struct ExportOptions {
  std::string what;
  std::string out;
  std::string format;
  int weight = 12;
  std::string oracle = "all";
  int max_weight = 51;
  int degree = 1;
  std::string graph = "theta:1:2,4,0";
  std::string in;
  bool canonical = false;
};

std::vector<int> parse_ints(const std::string& text, std::size_t count, const std::string& spec) {
  std::vector<int> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw ApiError(GRT2_ERR_INVALID_ARGUMENT, "bad number '" + item + "' in " + spec);
    values.push_back(v);
  }
  if (values.size() != count) throw ApiError(GRT2_ERR_INVALID_ARGUMENT, "wrong number of values in " + spec);
  return values;
}

// theta:GRADE:K1,K2,K3 | wheel:N | figure8:2I,2J
GraphHandle build_graph(const std::string& spec, grt2_graph_kind& kind) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  grt2_graph* raw = nullptr;
  if (family == "theta") {
    const auto second = rest.find(':');
    if (second == std::string::npos) throw ApiError(GRT2_ERR_INVALID_ARGUMENT, "expected theta:GRADE:K1,K2,K3");
    const int grade = parse_ints(rest.substr(0, second), 1, spec)[0];
    const auto k = parse_ints(rest.substr(second + 1), 3, spec);
    check(grt2_graph_theta(grade, k[0], k[1], k[2], &raw));
    kind = GRT2_KIND_ICG;
  } else if (family == "wheel") {
    check(grt2_graph_wheel(parse_ints(rest, 1, spec)[0], &raw));
    kind = GRT2_KIND_GC2;
  } else if (family == "figure8") {
    const auto ij = parse_ints(rest, 2, spec);
    check(grt2_graph_figure_eight(ij[0], ij[1], &raw));
    kind = GRT2_KIND_ICG;
  } else {
    throw ApiError(GRT2_ERR_INVALID_ARGUMENT, "unknown graph family '" + family + "' (theta, wheel, figure8)");
  }
  return GraphHandle(raw);
}

std::string export_graph(const ExportOptions& o) {
  if (o.format != "graphtext") throw ApiError(GRT2_ERR_INVALID_ARGUMENT, "graphs export as graphtext");
  grt2_graph_kind kind = GRT2_KIND_ICG;
  GraphHandle g;
  if (!o.in.empty()) {
    grt2_graph* raw = nullptr;
    check(grt2_graph_parse(read_file(o.in).c_str(), &raw));
    g.reset(raw);
    // Graphs without external vertices are read as GC2 graphs.
    kind = std::string(grt2_graph_text(g.get())).find(" ext") == std::string::npos ? GRT2_KIND_GC2 : GRT2_KIND_ICG;
  } else {
    g = build_graph(o.graph, kind);
  }
  if (!o.canonical) return grt2_graph_text(g.get());
  int sign = 0;
  grt2_graph* raw = nullptr;
  check(grt2_graph_canonicalize(g.get(), kind, &sign, &raw));
  const GraphHandle c(raw);
  if (sign == 0) return "coef 0\n";
  return std::string("coef ") + (sign > 0 ? "1" : "-1") + "\n" + grt2_graph_text(c.get());
}

std::string export_relations(const ExportOptions& o) {
  if (o.format != "json") throw ApiError(GRT2_ERR_INVALID_ARGUMENT, "relations export as json");
  const Report rep = make_report([&](grt2_report** out) { return grt2_relations(o.weight, oracle_mask(o.oracle), out); });
  if (!grt2_report_passed(rep.get())) throw ApiError(GRT2_ERR_INTERNAL, "relation checks failed; nothing exported");
  const json rec = record(rep);
  const auto& vectors = rec["payload"]["vectors"];
  json doc = {{"schema", 1}, {"weight", o.weight}, {"vectors", vectors.begin().value()}};
  return doc.dump() + "\n";
}

std::string export_dims(const ExportOptions& o) {
  const Report rep = make_report([&](grt2_report** out) { return grt2_dims(o.degree, o.max_weight, out); });
  const json rec = record(rep);
  if (o.format == "csv") return dims_csv(rec);
  if (o.format == "json") return rec.dump(2) + "\n";
  throw ApiError(GRT2_ERR_INVALID_ARGUMENT, "dims export as csv or json");
}

int run_export(ExportOptions o) {
  if (o.format.empty()) o.format = o.what == "graph" ? "graphtext" : o.what == "dims" ? "csv" : "json";
  std::string content;
  if (o.what == "graph") content = export_graph(o);
  else if (o.what == "relations") content = export_relations(o);
  else content = export_dims(o);
  write_file(o.out, content);
  std::cout << "wrote " << o.out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of depth-2 relations in grt and the two-loop hairy graph complex"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(grt2_version()));

  const std::vector<std::string> formats_dims = {"text", "csv", "json"};
  const std::vector<std::string> formats_text_json = {"text", "json"};
  const std::vector<std::string> oracles = {"psi", "rank", "ihara", "all"};

  DimsOptions dims;
  auto* dims_cmd = app.add_subcommand("dims", "Cohomology dimensions of the theta complex against the closed form");
  dims_cmd->add_option("--max-weight", dims.max_weight, "Largest weight")->check(CLI::Range(1, 200))->capture_default_str();
  dims_cmd->add_option("--degree", dims.degree, "Cohomological degree")->check(CLI::IsMember({0, 1, 2}))->capture_default_str();
  dims_cmd->add_option("--format", dims.format, "Output format")->check(CLI::IsMember(formats_dims))->capture_default_str();

  RelationsOptions rel;
  auto* rel_cmd = app.add_subcommand("relations", "Depth-2 relations among brackets of generators");
  auto* weight_opt = rel_cmd->add_option("--weight", rel.weight, "Single even weight >= 8");
  rel_cmd->add_option("--max-weight", rel.max_weight, "All even weights 8..K")->excludes(weight_opt)->capture_default_str();
  rel_cmd->add_option("--oracle", rel.oracle, "Relation oracle")->check(CLI::IsMember(oracles))->capture_default_str();
  rel_cmd->add_option("--negative-samples", rel.negative_samples, "Random non-relations that must fail the Schneps check")
      ->check(CLI::NonNegativeNumber);
  rel_cmd->add_option("--seed", rel.seed, "Seed for --negative-samples")->capture_default_str();
  rel_cmd->add_option("--format", rel.format, "Output format")->check(CLI::IsMember(formats_text_json))->capture_default_str();

  GraphsOptions graphs;
  auto* graphs_cmd = app.add_subcommand("graphs", "Graph complex identity suites");
  std::vector<std::string> check_names = {"all"};
  for (const auto& [name, id] : graph_checks()) check_names.push_back(name);
  graphs_cmd->add_option("--check", graphs.check, "Suite to run")->check(CLI::IsMember(check_names))->capture_default_str();
  graphs_cmd->add_option("--size-cap", graphs.size_cap, "Largest starting graph, in vertices")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  graphs_cmd->add_option("--format", graphs.format, "Output format")->check(CLI::IsMember(formats_text_json))->capture_default_str();

  ExportOptions ex;
  auto* export_cmd = app.add_subcommand("export", "Write relations, dimension tables or graphs to a file");
  export_cmd->add_option("--what", ex.what, "Artifact")->required()->check(CLI::IsMember({"relations", "dims", "graph"}));
  export_cmd->add_option("--out", ex.out, "Output path")->required();
  export_cmd->add_option("--format", ex.format, "json, csv or graphtext (default by artifact)")
      ->check(CLI::IsMember({"json", "csv", "graphtext"}));
  export_cmd->add_option("--weight", ex.weight, "Relations: weight")->capture_default_str();
  export_cmd->add_option("--oracle", ex.oracle, "Relations: oracle")->check(CLI::IsMember(oracles))->capture_default_str();
  export_cmd->add_option("--max-weight", ex.max_weight, "Dims: largest weight")->check(CLI::Range(1, 200))->capture_default_str();
  export_cmd->add_option("--degree", ex.degree, "Dims: degree")->check(CLI::IsMember({0, 1, 2}))->capture_default_str();
  export_cmd->add_option("--graph", ex.graph, "Graph: theta:GRADE:K1,K2,K3 | wheel:N | figure8:2I,2J")->capture_default_str();
  export_cmd->add_option("--in", ex.in, "Graph: read graphtext instead of --graph")->check(CLI::ExistingFile);
  export_cmd->add_flag("--canonical", ex.canonical, "Graph: write the canonical representative with its sign");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (dims_cmd->parsed()) return run_dims(dims);
    if (rel_cmd->parsed()) return run_relations(rel);
    if (graphs_cmd->parsed()) return run_graphs(graphs);
    if (export_cmd->parsed()) return run_export(ex);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
