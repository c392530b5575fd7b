#include "skewopt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skewopt/census.hpp"
#include "skewopt/classify.hpp"
#include "skewopt/families.hpp"
#include "skewopt/formats.hpp"
#include "skewopt/search.hpp"
#include "skewopt/spectra.hpp"
#include "skewopt/verify.hpp"

namespace skewopt::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string family;
  bool oriented = false;
  std::string format;
  std::string input;
  std::string output;
  std::optional<int> k;
  int max_n = 0;
  int workers = 1;
  bool strict = false;
};

class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Energies are reported with 12 significant digits.
double rounded(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json arcs_json(const OrientedGraph& g) {
  Json arcs = Json::array();
  for (const Arc& a : g.sorted_arcs()) arcs.push_back({a.tail, a.head});
  return arcs;
}

Json parity_json(const NeighborhoodReport& report) {
  Json out = Json::array();
  for (const auto& v : report.violations) {
    out.push_back({{"u", v.u}, {"v", v.v}, {"common", v.common}, {"adjacent", v.adjacent}});
  }
  return out;
}

std::string read_input(const std::string& path) {
  if (path.empty()) throw InvalidArgument("an input file is required");
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_k(int k) {
  if (k < 1 || k > 8) throw InvalidArgument("--k must lie in 1..8");
}


void check_k(std::optional<int> k) {
  if (!k) throw InvalidArgument("--k is required");
  check_k(*k);
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (format == f) return;
  throw InvalidArgument("unsupported --format " + format);
}

// Fields shared by every report on one oriented graph.
Json oriented_report(const OrientedGraph& g, int k) {
  const Graph& base = g.base();
  Json j;
  j["n"] = g.order();
  j["k"] = k;
  j["is_regular"] = is_regular(base, k);
  j["is_connected"] = is_connected(base);
  j["gram_is_kI"] = is_optimum(g, k);
  const SpectralSummary spectrum = skew_energy(g);
  j["skew_energy"] = rounded(spectrum.skew_energy);
  j["upper_bound"] = rounded(spectrum.upper_bound);
  return j;
}

void add_classification(Json& j, const Graph& g) {
  if (is_regular(g, 4) && is_connected(g)) j["classification"] = classify(g).name();
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const auto label = FamilyLabel::parse(cfg.family);
  if (!label) throw InvalidArgument("unknown family " + cfg.family);
  const std::string format = cfg.format.empty() ? (cfg.oriented ? "arcs" : "graph6") : cfg.format;
  check_format(format, {"graph6", "arcs", "json"});
  if (format == "arcs" && !cfg.oriented) throw InvalidArgument("--format arcs needs --oriented");

  const Graph g = build_family(*label);
  if (format == "graph6") {
    out << emit_graph6(g) << '\n';
    return kOk;
  }
  if (format == "arcs") {
    out << emit_arclist(orient_family(*label));
    return kOk;
  }
  const int k = family_degree(*label);
  Json j;
  if (cfg.oriented) {
    const OrientedGraph og = orient_family(*label);
    j = oriented_report(og, k);
    j["classification"] = label->name();
    j["arcs"] = arcs_json(og);
  } else {
    j["n"] = g.order();
    j["k"] = k;
    j["is_regular"] = is_regular(g, k);
    j["is_connected"] = is_connected(g);
    j["classification"] = label->name();
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = edges;
  }
  out << j.dump() << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const OrientedGraph g = parse_arclist(read_input(cfg.input));
  const int k = cfg.k.value_or(g.base().max_degree());
  check_k(k);
  check_format(cfg.format.empty() ? "json" : cfg.format, {"json"});

  Json j = oriented_report(g, k);
  const bool regular = is_regular(g.base(), k);
  j["optimum"] = j["gram_is_kI"];
  if (regular) j["two_walk_balanced"] = two_walk_balanced(g);
  add_classification(j, g.base());
  j["violations"] = parity_json(neighbor_parity_report(
      g.base(), k == 4 && regular ? ParityMode::FourRegular : ParityMode::GeneralEven));
  out << j.dump() << '\n';
  return cfg.strict && !j["optimum"].get<bool>() ? kNegative : kOk;
}

int cmd_energy(const RunConfig& cfg, std::ostream& out) {
  const OrientedGraph g = parse_arclist(read_input(cfg.input));
  check_format(cfg.format.empty() ? "json" : cfg.format, {"json"});
  const int k = cfg.k.value_or(std::max(1, g.base().max_degree()));
  check_k(k);
  Json j = oriented_report(g, k);
  Json eig = Json::array();
  for (double mu : skew_energy(g).gram_eigenvalues) eig.push_back(rounded(mu));
  j["gram_eigenvalues"] = eig;
  out << j.dump() << '\n';
  return kOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  check_k(cfg.k);
  const int k = *cfg.k;
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  check_format(format, {"json", "arcs"});
  const auto graphs = parse_graph6_corpus(read_input(cfg.input));
  if (graphs.empty()) throw InvalidArgument("no graphs in input");
  if (format == "arcs" && graphs.size() != 1) throw InvalidArgument("--format arcs takes exactly one graph");

  bool all_found = true;
  for (const Graph& g : graphs) {
    if (!is_regular(g, k) || !is_connected(g)) {
      throw InvalidArgument("input is not a connected " + std::to_string(k) + "-regular graph");
    }
    const auto witness = find_optimum_orientation(g, k, cfg.workers);
    all_found = all_found && witness.has_value();
    if (format == "arcs") {
      if (witness) out << emit_arclist(*witness);
      continue;
    }
    Json j;
    j["n"] = g.order();
    j["k"] = k;
    j["is_regular"] = true;
    j["is_connected"] = true;
    j["graph6"] = emit_graph6(g);
    j["optimum_orientation"] = witness ? arcs_json(*witness) : Json(nullptr);
    out << j.dump() << '\n';
  }
  return cfg.strict && !all_found ? kNegative : kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg.format.empty() ? "json" : cfg.format, {"json"});
  const auto graphs = parse_graph6_corpus(read_input(cfg.input));
  if (graphs.empty()) throw InvalidArgument("no graphs in input");
  bool all_in = true;
  for (const Graph& g : graphs) {
    const Classification c = classify(g);
    all_in = all_in && c.in_family();
    Json j;
    j["n"] = g.order();
    j["k"] = 4;
    j["is_regular"] = true;
    j["is_connected"] = true;
    j["classification"] = c.name();
    if (c.in_family()) j["certificate"] = c.certificate;
    out << j.dump() << '\n';
  }
  return cfg.strict && !all_in ? kNegative : kOk;
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
  check_k(cfg.k);
  const int k = *cfg.k;
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  check_format(format, {"json", "graph6"});
  if ((cfg.max_n > 0) == !cfg.input.empty()) throw InvalidArgument("census needs exactly one of --max-n and --input");

  std::vector<Graph> inputs;
  if (cfg.max_n > 0) {
    if (cfg.max_n > enumeration_cap(k)) {
      throw InvalidArgument("--max-n exceeds the built-in enumerator limit of " +
                            std::to_string(enumeration_cap(k)) + " for k=" + std::to_string(k) +
                            "; pass a graph6 corpus with --input instead");
    }
    for (int n = 1; n <= cfg.max_n; ++n) {
      auto batch = enumerate_connected_k_regular(n, k);
      inputs.insert(inputs.end(), batch.begin(), batch.end());
    }
  } else {
    inputs = parse_graph6_corpus(read_input(cfg.input));
  }
  const CensusReport report = census(inputs, k, cfg.workers);

  if (format == "graph6") {
    for (const auto& r : report.records)
      if (r.skipped.empty()) out << r.graph6 << '\n';
    return cfg.strict && report.violations > 0 ? kNegative : kOk;
  }

  Json j;
  j["k"] = k;
  Json totals = Json::object();
  for (const auto& [n, t] : report.totals) {
    totals[std::to_string(n)] = {{"graphs", t.graphs}, {"with_optimum", t.with_optimum}};
  }
  j["totals"] = totals;
  Json records = Json::array();
  Json violations = Json::array();
  for (const auto& r : report.records) {
    Json rec;
    rec["graph6"] = r.graph6;
    rec["n"] = r.order;
    if (!r.skipped.empty()) {
      rec["status"] = "skipped: " + r.skipped;
      records.push_back(rec);
      continue;
    }
    rec["has_optimum"] = r.has_optimum;
    if (r.classification) rec["classification"] = r.classification->name();
    rec["witness"] = r.witness ? arcs_json(*r.witness) : Json(nullptr);
    rec["status"] = r.violation ? "THEOREM VIOLATION" : "ok";
    if (r.violation) violations.push_back(r.graph6);
    records.push_back(rec);
  }
  j["records"] = records;
  j["violations"] = violations;
  out << j.dump() << '\n';
  return cfg.strict && report.violations > 0 ? kNegative : kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Optimum skew energy orientations of regular graphs", "skewopt"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub, bool input, bool k, bool workers) {
    sub->add_option("--format", cfg.format, "Output format: graph6, arcs or json");
    sub->add_option("--output", cfg.output, "Write the report to this file");
    sub->add_flag("--strict", cfg.strict, "Exit with 1 when the answer is negative");
    if (input) sub->add_option("input,--input", cfg.input, "Input file, or - for stdin");
    if (k) sub->add_option("--k", cfg.k, "Degree k (1..8)");
    if (workers) sub->add_option("--workers", cfg.workers, "Worker threads");
  };

  auto* generate = app.add_subcommand("generate", "Emit a family member");
  generate->add_option("--family", cfg.family, "g1, g2, g3, q4, gi<i>, hj<j>, k2, c4, k4, q3")->required();
  generate->add_flag("--oriented", cfg.oriented, "Emit the optimum orientation");
  add_common(generate, false, false, false);

  auto* verify = app.add_subcommand("verify", "Check S^T S = kI for an arc list");
  add_common(verify, true, true, false);
  auto* energy = app.add_subcommand("energy", "Skew energy of an arc list");
  add_common(energy, true, true, false);
  auto* search = app.add_subcommand("search", "Search optimum orientations of graph6 inputs");
  add_common(search, true, true, true);
  auto* classify_cmd = app.add_subcommand("classify", "Classify connected 4-regular graph6 inputs");
  add_common(classify_cmd, true, false, false);
  auto* census_cmd = app.add_subcommand("census", "Search and classify every connected k-regular graph");
  add_common(census_cmd, true, true, true);
  census_cmd->add_option("--max-n", cfg.max_n, "Enumerate all orders up to this bound");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    if (cfg.workers < 1) throw InvalidArgument("--workers must be >= 1");
    if (!cfg.output.empty()) {
      file.open(cfg.output, std::ios::binary);
      if (!file) throw InvalidArgument("cannot write " + cfg.output);
      sink = &file;
    }
    if (generate->parsed()) return cmd_generate(cfg, *sink);
    if (verify->parsed()) return cmd_verify(cfg, *sink);
    if (energy->parsed()) return cmd_energy(cfg, *sink);
    if (search->parsed()) return cmd_search(cfg, *sink);
    if (classify_cmd->parsed()) return cmd_classify(cfg, *sink);
    return cmd_census(cfg, *sink);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  }
}

}  // namespace skewopt::cli
