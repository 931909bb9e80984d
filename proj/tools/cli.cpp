#include "cli.hpp"

#include "motif/closed_forms.hpp"
#include "motif/counting.hpp"
#include "motif/error.hpp"
#include "motif/euler.hpp"
#include "motif/extraction.hpp"
#include "motif/fixed_point.hpp"
#include "motif/hom_basis.hpp"
#include "motif/parallel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace motif::cli {

using motif::to_json;

namespace {

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), "residue list"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Json range_json(const std::optional<IntRange>& r) {
  if (!r) return Json();
  Json out;
  out["first"] = std::to_string(r->first);
  out["last"] = std::to_string(r->last);
  return out;
}

std::optional<IntRange> range_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return IntRange{std::stoi(j.at("first").get<std::string>()), std::stoi(j.at("last").get<std::string>())};
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(std::to_string(*v)) : Json();
}

std::optional<std::int64_t> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return std::stoll(j.get<std::string>());
}

int thread_count(const RunConfig& config) {
  return config.threads > 0 ? config.threads : default_thread_count();
}

Graph load_graph(const std::string& source) {
  if (is_graph_name(source)) return named_graph(source);
  return read_graph_file(source);
}

Graph load_pattern(const std::string& source) {
  if (source.starts_with("g6=")) return from_graph6(source.substr(3));
  return load_graph(source);
}

int single(const std::optional<IntRange>& r, const char* flag) {
  if (!r || r->first != r->last) throw UsageError(std::string(flag) + " takes a single value here");
  return r->first;
}

// Rows of decimal strings rendered as CSV or as an aligned table.
class Rows {
 public:
  explicit Rows(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render(const std::string& format) const {
    std::ostringstream out;
    if (format == "csv") {
      for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
      }
      return out.str();
    }
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) line += "  ";
        line += std::string(width[i] - row[i].size(), ' ') + row[i];
      }
      out << line << '\n';
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string run_euler(const RunConfig& config) {
  const auto spec = PropertySpec::parse(config.property);
  EulerOptions options;
  options.threads = thread_count(config);
  options.allow_k8 = config.allow_k8;
  Json reports = Json::array();
  Rows rows({"k", "sum", "chi", "chi_hat", "monotone_checked"});
  for (int k = config.k->first; k <= config.k->last; ++k) {
    const auto report = alternating_sum(spec, k, options);
    reports.push_back(to_json(report));
    rows.add({std::to_string(k), to_decimal(report.sum), report.chi ? to_decimal(*report.chi) : "",
              report.chi_hat ? to_decimal(*report.chi_hat) : "", report.monotone_checked ? "true" : "false"});
  }
  return config.format == "json" ? dump(reports) : rows.render(config.format);
}

std::string run_basis(const RunConfig& config) {
  BasisOptions options;
  options.threads = thread_count(config);
  options.allow_k7 = config.allow_k8;
  return dump(to_json(indsub_to_hom_basis(PropertySpec::parse(config.property), config.k->first, options)));
}

std::string run_evaluate(const RunConfig& config) {
  std::ifstream in(config.basis);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open basis file " + config.basis);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("basis file is not JSON: ") + e.what());
  }
  const auto basis = basis_from_json(j);
  const auto value = evaluate_basis(basis, load_graph(config.graph));
  if (config.format != "json") return to_decimal(value) + "\n";
  Json out;
  out["property"] = basis.property;
  out["k"] = std::to_string(basis.k);
  out["value"] = to_json(value);
  return dump(out);
}

std::string run_smith(const RunConfig& config) {
  const auto spec = PropertySpec::parse(config.property);
  FixedPointOptions options;
  options.threads = thread_count(config);
  options.full = config.full == "on" ? FullSide::On : config.full == "off" ? FullSide::Off : FullSide::Auto;
  Json reports = Json::array();
  for (int p = config.p->first; p <= config.p->last; ++p) {
    if (p < 3 || !is_prime(p)) {
      if (config.p->first != config.p->last) continue;
    }
    reports.push_back(to_json(fixed_point_complex(spec, p, options)));
  }
  if (config.p->first == config.p->last) return dump(reports.front());
  return dump(reports);
}

std::string run_closedform(const RunConfig& config) {
  Rows rows({""});
  Json out = Json::array();
  const std::string& form = config.form;
  if (form == "mod") {
    if (config.n) {
      rows = Rows({"n", "k", "S(n)", "S(n+1)", "S(n+2)"});
      for (const auto& w : mod_window_sweep(*config.q, config.residues, config.n->first, config.n->last)) {
        out.push_back(to_json(w));
        rows.add({std::to_string(w.n), w.k ? std::to_string(*w.k) : "empty", to_decimal(w.values[0]),
                  to_decimal(w.values[1]), to_decimal(w.values[2])});
      }
      if (config.n->first == config.n->last && config.format == "json") return dump(out.front());
    } else if (config.m) {
      const auto state = mod_s_vector(*config.q, *config.m);
      const auto value = mod_s_Q(*config.q, config.residues, *config.m);
      Json entry;
      entry["q"] = std::to_string(*config.q);
      entry["Q"] = Json::array();
      for (int a : config.residues) entry["Q"].push_back(std::to_string(a));
      entry["m"] = std::to_string(*config.m);
      entry["s"] = Json::array();
      for (const auto& s : state.s) entry["s"].push_back(to_json(s));
      entry["S_Q"] = to_json(value);
      rows = Rows({"m", "S_Q"});
      rows.add({std::to_string(*config.m), to_decimal(value)});
      if (config.format == "json") return dump(entry);
    } else {
      rows = Rows({"k", "m", "S_Q"});
      for (int k = config.k->first; k <= config.k->last; ++k) {
        const std::int64_t m = std::int64_t{k} * (k - 1) / 2;
        const auto value = mod_s_Q(*config.q, config.residues, m);
        Json entry;
        entry["k"] = std::to_string(k);
        entry["m"] = std::to_string(m);
        entry["S_Q"] = to_json(value);
        out.push_back(entry);
        rows.add({std::to_string(k), std::to_string(m), to_decimal(value)});
      }
    }
  } else if (form == "iso") {
    const Graph pattern = load_pattern(config.pattern);
    rows = Rows({"k", "S_k"});
    for (int k = config.k->first; k <= config.k->last; ++k) {
      const auto value = iso_s_closed_form(pattern, k);
      Json entry;
      entry["k"] = std::to_string(k);
      entry["S_k"] = to_json(value);
      out.push_back(entry);
      rows.add({std::to_string(k), to_decimal(value)});
    }
  } else {
    rows = Rows({"p", "chi_hat"});
    int threshold = 0;
    if (form == "antihole") {
      threshold = config.threshold ? *config.threshold
                                   : default_antihole_threshold(PropertySpec::parse(config.property));
    }
    for (int p = config.p->first; p <= config.p->last; ++p) {
      if (p < 3 || !is_prime(p)) {
        if (config.p->first != config.p->last) continue;
      }
      BigInt value;
      if (form == "edgeconn") {
        value = closed_form_edge_connectivity(*config.c, p);
      } else {
        value = closed_form_odd_cycle_antihole(
            form == "oddcycle" ? CycleAntiholeCase::OddCycleFalse : CycleAntiholeCase::AntiHoleTrue, p, threshold);
      }
      Json entry;
      entry["p"] = std::to_string(p);
      entry["chi_hat"] = to_json(value);
      out.push_back(entry);
      rows.add({std::to_string(p), to_decimal(value)});
    }
  }
  return config.format == "json" ? dump(out) : rows.render(config.format);
}

std::string run_extract(const RunConfig& config) {
  const auto spec = PropertySpec::parse(config.property);
  const int k = config.k->first;
  const Graph g = load_graph(config.graph);
  Json out;
  out["property"] = spec.name();
  out["k"] = std::to_string(k);
  if (config.cliques) {
    const auto result = clique_count_via_property_oracle(spec, k, g, thread_count(config));
    out["clique_coefficient"] = to_json(result.clique_coefficient);
    out["cliques"] = to_json(result.cliques);
    out["ledger"] = to_json(result.ledger);
    return dump(out);
  }
  BasisOptions options;
  options.threads = thread_count(config);
  const auto basis = indsub_to_hom_basis(spec, k, options);
  const auto extracted = extract_all(property_oracle(spec, basis), g);
  Json products = Json::array();
  for (std::size_t i = 0; i < basis.terms.size(); ++i) {
    const auto& term = basis.terms[i];
    Json entry;
    entry["graph"] = to_text(term.graph.canon);
    entry["coeff"] = to_json(term.coeff);
    entry["product"] = to_json(extracted.products[i]);
    entry["hom"] = to_json(Rational(extracted.products[i] / term.coeff));
    products.push_back(entry);
  }
  out["products"] = products;
  out["max_query_vertices"] = std::to_string(extracted.ledger.max_query_vertices);
  out["ledger"] = to_json(extracted.ledger);
  return dump(out);
}

std::string run_count(const RunConfig& config) {
  const auto spec = PropertySpec::parse(config.property);
  const auto value = count_induced_with_property(spec, config.k->first, load_graph(config.graph));
  if (config.format != "json") return to_decimal(value) + "\n";
  Json out;
  out["property"] = spec.name();
  out["k"] = std::to_string(config.k->first);
  out["count"] = to_json(value);
  return dump(out);
}

std::string run_audit(const RunConfig& config) {
  const auto spec = PropertySpec::parse(config.property);
  const int k = config.k->first;
  return dump(to_json(audit_monotone(spec, k, thread_count(config)), k, spec.name()));
}

std::string run_parity(const RunConfig& config) {
  EulerOptions options;
  options.threads = thread_count(config);
  options.allow_k8 = config.allow_k8;
  return dump(to_json(chi_hat_parity_check(load_pattern(config.pattern), config.k->first, options)));
}

std::string run_gen(const RunConfig& config) {
  const Graph g = random_graph(config.vertices, config.density, config.seed);
  return config.format == "graph6" ? to_graph6(g) + "\n" : to_text(g);
}

}  // namespace

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  IntRange r{parse_int(text.substr(0, dots), "range start"), parse_int(text.substr(dots + 2), "range end")};
  if (r.first > r.last) throw UsageError("empty range '" + std::string(text) + "'");
  return r;
}

Json to_json(const RunConfig& config) {
  Json out;
  out["command"] = config.command;
  out["form"] = config.form;
  out["property"] = config.property;
  out["k"] = range_json(config.k);
  out["p"] = range_json(config.p);
  out["n"] = range_json(config.n);
  out["q"] = optional_json(config.q);
  out["Q"] = Json::array();
  for (int a : config.residues) out["Q"].push_back(std::to_string(a));
  out["m"] = optional_json(config.m);
  out["c"] = optional_json(config.c);
  out["threshold"] = optional_json(config.threshold);
  out["pattern"] = config.pattern;
  out["graph"] = config.graph;
  out["basis"] = config.basis;
  out["output"] = config.output;
  out["format"] = config.format;
  out["seed"] = std::to_string(config.seed);
  out["threads"] = std::to_string(config.threads);
  out["allow_k8"] = config.allow_k8;
  out["full"] = config.full;
  out["cliques"] = config.cliques;
  out["vertices"] = std::to_string(config.vertices);
  std::ostringstream density;
  density << config.density;
  out["density"] = density.str();
  return out;
}

RunConfig run_config_from_json(const Json& j) {
  try {
    RunConfig config;
    config.command = j.at("command").get<std::string>();
    config.form = j.at("form").get<std::string>();
    config.property = j.at("property").get<std::string>();
    config.k = range_from(j.at("k"));
    config.p = range_from(j.at("p"));
    config.n = range_from(j.at("n"));
    if (auto q = optional_from(j.at("q"))) config.q = static_cast<int>(*q);
    for (const auto& a : j.at("Q")) config.residues.push_back(std::stoi(a.get<std::string>()));
    config.m = optional_from(j.at("m"));
    if (auto c = optional_from(j.at("c"))) config.c = static_cast<int>(*c);
    if (auto t = optional_from(j.at("threshold"))) config.threshold = static_cast<int>(*t);
    config.pattern = j.at("pattern").get<std::string>();
    config.graph = j.at("graph").get<std::string>();
    config.basis = j.at("basis").get<std::string>();
    config.output = j.at("output").get<std::string>();
    config.format = j.at("format").get<std::string>();
    config.seed = std::stoull(j.at("seed").get<std::string>());
    config.threads = std::stoi(j.at("threads").get<std::string>());
    config.allow_k8 = j.at("allow_k8").get<bool>();
    config.full = j.at("full").get<std::string>();
    config.cliques = j.at("cliques").get<bool>();
    config.vertices = std::stoi(j.at("vertices").get<std::string>());
    config.density = std::stod(j.at("density").get<std::string>());
    return config;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad run config: ") + e.what());
  }
}

void validate(const RunConfig& config) {
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw UsageError(config.command + " needs " + what);
  };
  auto formats = [&](std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
      if (config.format == f) return;
    }
    throw UsageError("format '" + config.format + "' is not available for " + config.command);
  };
  if (config.threads < 0) throw UsageError("--threads must be nonnegative");
  if (config.full != "auto" && config.full != "on" && config.full != "off") {
    throw UsageError("--full must be auto, on or off");
  }
  const std::string& c = config.command;
  if (c == "euler") {
    need(!config.property.empty(), "--property");
    need(config.k.has_value(), "--k");
    formats({"json", "csv", "table"});
  } else if (c == "basis" || c == "audit") {
    need(!config.property.empty(), "--property");
    single(config.k, "--k");
    formats({"json"});
  } else if (c == "evaluate") {
    need(!config.basis.empty(), "--basis");
    need(!config.graph.empty(), "--graph");
    formats({"json", "table"});
  } else if (c == "smith") {
    need(!config.property.empty(), "--property");
    need(config.p.has_value(), "--p");
    formats({"json"});
  } else if (c == "closedform") {
    const std::string& f = config.form;
    if (f == "mod") {
      need(config.q.has_value(), "--q");
      need(!config.residues.empty(), "--Q");
      const int modes = int(config.n.has_value()) + int(config.m.has_value()) + int(config.k.has_value());
      need(modes == 1, "exactly one of --n, --m, --k");
      if (config.m && *config.m < 0) throw UsageError("--m must be nonnegative");
    } else if (f == "iso") {
      need(!config.pattern.empty(), "--pattern");
      need(config.k.has_value(), "--k");
    } else if (f == "edgeconn") {
      need(config.c.has_value(), "--c");
      need(config.p.has_value(), "--p");
    } else if (f == "oddcycle") {
      need(config.p.has_value(), "--p");
    } else if (f == "antihole") {
      need(config.p.has_value(), "--p");
      need(config.threshold.has_value() || !config.property.empty(), "--threshold or --property");
    } else {
      throw UsageError("closedform needs one of mod, iso, edgeconn, oddcycle, antihole");
    }
    formats({"json", "csv", "table"});
  } else if (c == "extract") {
    need(!config.property.empty(), "--property");
    need(!config.graph.empty(), "--graph");
    single(config.k, "--k");
    formats({"json"});
  } else if (c == "count") {
    need(!config.property.empty(), "--property");
    need(!config.graph.empty(), "--graph");
    single(config.k, "--k");
    formats({"json", "table"});
  } else if (c == "parity") {
    need(!config.pattern.empty(), "--pattern");
    single(config.k, "--k");
    formats({"json"});
  } else if (c == "gen") {
    need(config.vertices >= 1, "--vertices >= 1");
    if (config.density < 0.0 || config.density > 1.0) throw UsageError("--density must lie in [0, 1]");
    formats({"json", "text", "graph6"});
  } else {
    throw UsageError("unknown command '" + c + "'");
  }
}

std::string execute(const RunConfig& config) {
  validate(config);
  const std::string& c = config.command;
  if (c == "euler") return run_euler(config);
  if (c == "basis") return run_basis(config);
  if (c == "evaluate") return run_evaluate(config);
  if (c == "smith") return run_smith(config);
  if (c == "closedform") return run_closedform(config);
  if (c == "extract") return run_extract(config);
  if (c == "count") return run_count(config);
  if (c == "audit") return run_audit(config);
  if (c == "parity") return run_parity(config);
  return run_gen(config);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string k, p, n, residues, config_file;
  std::optional<int> q, c, threshold;
  std::optional<std::int64_t> m;
  bool dump_config = false;

  CLI::App app{"Graph motif parameters, graph complexes and their Euler characteristics", "motif"};
  app.add_option("--config", config_file, "Run a configuration written by --dump-config");
  app.add_flag("--dump-config", dump_config, "Print the parsed configuration as JSON and exit");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "json, csv or table")->capture_default_str();
    sub->add_option("--threads", config.threads, "Worker threads (0: all available)");
    sub->add_option("--output", config.output, "Write the report to this file");
    sub->add_option("--seed", config.seed, "Random seed");
  };
  auto property = [&](CLI::App* sub) { sub->add_option("--property", config.property, "Property spec"); };
  auto krange = [&](CLI::App* sub) { sub->add_option("--k", k, "k or a..b"); };

  auto* euler = app.add_subcommand("euler", "Alternating sums and Euler characteristics over E^Phi_k");
  property(euler);
  krange(euler);
  euler->add_flag("--allow-k8", config.allow_k8, "Permit k = 8");
  common(euler);

  auto* basis = app.add_subcommand("basis", "Homomorphism basis of the induced-subgraph count");
  property(basis);
  krange(basis);
  basis->add_flag("--allow-k8,--allow-k7", config.allow_k8, "Permit k = 7");
  common(basis);

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a saved basis on a graph");
  evaluate->add_option("--basis", config.basis, "Basis JSON file");
  evaluate->add_option("--graph", config.graph, "Graph file or name");
  common(evaluate);

  auto* smith = app.add_subcommand("smith", "Fixed-point complex under the Z_p shift");
  property(smith);
  smith->add_option("--p", p, "p or a..b");
  smith->add_option("--full", config.full, "Full complex: auto, on or off");
  common(smith);

  auto* closedform = app.add_subcommand("closedform", "Closed-form reduced Euler characteristics");
  closedform->add_option("form", config.form, "mod, iso, edgeconn, oddcycle or antihole")->required();
  closedform->add_option("--q", q, "Prime modulus");
  closedform->add_option("--Q", residues, "Residues, comma separated");
  closedform->add_option("--m", m, "Edge-slot count");
  closedform->add_option("--n", n, "Window start n or a..b");
  krange(closedform);
  closedform->add_option("--pattern,--F", config.pattern, "Connected pattern F");
  closedform->add_option("--c", c, "Edge connectivity parameter");
  closedform->add_option("--p", p, "p or a..b");
  closedform->add_option("--threshold", threshold, "Triviality threshold N");
  property(closedform);
  common(closedform);

  auto* extract = app.add_subcommand("extract", "Recover a(H) Hom(H, G) from the induced-subgraph oracle");
  property(extract);
  krange(extract);
  extract->add_option("--graph", config.graph, "Graph file or name");
  extract->add_flag("--cliques", config.cliques, "Recover the k-clique count instead");
  common(extract);

  auto* count = app.add_subcommand("count", "Brute-force number of k-subsets inducing the property");
  property(count);
  krange(count);
  count->add_option("--graph", config.graph, "Graph file or name");
  common(count);

  auto* audit = app.add_subcommand("audit", "Exhaustive monotonicity audit");
  property(audit);
  krange(audit);
  common(audit);

  auto* parity = app.add_subcommand("parity", "Parity of chi_hat for homfree:F at k = 1 mod T_F");
  parity->add_option("--pattern,--F", config.pattern, "Pattern F");
  krange(parity);
  parity->add_flag("--allow-k8", config.allow_k8, "Permit k = 8");
  common(parity);

  auto* gen = app.add_subcommand("gen", "Seeded random graph in the text format");
  gen->add_option("--vertices", config.vertices, "Vertex count");
  gen->add_option("--density", config.density, "Edge probability");
  common(gen);

  // --config runs without a subcommand
  app.require_subcommand(0, 1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw UsageError("cannot open config file " + config_file);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const std::exception& e) {
        throw UsageError(std::string("config file is not JSON: ") + e.what());
      }
      config = run_config_from_json(j);
    } else {
      if (app.get_subcommands().empty()) throw UsageError("a subcommand is required; see --help");
      config.command = app.get_subcommands().front()->get_name();
      if (!k.empty()) config.k = parse_range(k);
      if (!p.empty()) config.p = parse_range(p);
      if (!n.empty()) config.n = parse_range(n);
      if (!residues.empty()) config.residues = parse_int_list(residues);
      config.q = q;
      config.c = c;
      config.m = m;
      config.threshold = threshold;
      if (config.command == "gen" && config.format == "json") config.format = "text";
    }
    validate(config);
    if (dump_config) {
      out << dump(to_json(config));
      return kSuccess;
    }
    const std::string report = execute(config);
    if (config.output.empty()) {
      out << report;
    } else {
      std::ofstream file(config.output);
      if (!file) throw UsageError("cannot write " + config.output);
      file << report;
    }
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_internal(e.kind()) ? kInternal : kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace motif::cli
