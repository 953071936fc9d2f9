#include "scimap/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <openssl/evp.h>

#include "scimap/correlate.hpp"
#include "scimap/csv.hpp"
#include "scimap/corpus.hpp"
#include "scimap/error.hpp"
#include "scimap/factor.hpp"
#include "scimap/graph.hpp"
#include "scimap/local.hpp"
#include "scimap/mds.hpp"
#include "scimap/pajek.hpp"
#include "scimap/report.hpp"

namespace fs = std::filesystem;

namespace scimap::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 digest failed");
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

namespace {

struct RunConfig {
  std::string command;
  std::string registry;
  std::string edges;
  std::string out_dir;
  bool auto_register = false;
  unsigned threads = 0;
  std::string diagonal = "kept";
  std::string axis = "citing-rows";
  std::string format = "text";
  bool export_matrix = false;
  double floor = 0.2;
  double threshold_start = 0.2;
  double step = 0.1;
  double threshold_stop = 0.9;
  std::size_t min_size = 3;
  std::optional<std::size_t> k;
  double suppress = 0.1;
  double tol = 1e-7;
  int max_sweeps = 100;
  std::optional<std::size_t> top;
  bool no_kaiser_normalization = false;
  std::string seed;
  double fraction = 0.01;
  double complexity_floor = 0.1;
  std::size_t dim = 2;
  std::string dissimilarity = "one-minus-r";
  bool letters = false;
  bool factor_plot = false;
  std::size_t f1 = 1;
  std::size_t f2 = 2;
  std::optional<double> threshold;
};

struct Input {
  std::string path;
  std::string bytes;
};

Input read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open {} file '{}'", what, path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return {path, ss.str()};
}

/// Everything a run's outputs must echo to be auditable.
class Provenance {
 public:
  Provenance(std::string command, std::vector<std::pair<std::string, std::string>> config,
             std::vector<Input> const& inputs)
      : command_(std::move(command)), config_(std::move(config)) {
    for (const auto& in : inputs) digests_.emplace_back(in.path, sha256_hex(in.bytes));
  }

  std::string comment(std::string_view open, std::string_view close = {}) const {
    std::string s;
    auto line = [&](const std::string& text) {
      s += fmt::format("{}{}{}\n", open, text, close);
    };
    line(fmt::format("scimap {} {}", kVersion, command_));
    std::string cfg;
    for (const auto& [key, value] : config_) cfg += fmt::format(" {}={}", key, value);
    line("config:" + cfg);
    for (const auto& [path, digest] : digests_) line(fmt::format("input {} sha256={}", path, digest));
    return s;
  }

  nlohmann::ordered_json json() const {
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [key, value] : config_) cfg[key] = value;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
    for (const auto& [path, digest] : digests_) inputs.push_back({{"path", path}, {"sha256", digest}});
    return {{"tool", "scimap"}, {"version", kVersion}, {"command", command_}, {"config", cfg},
            {"inputs", inputs}};
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> config_;
  std::vector<std::pair<std::string, std::string>> digests_;
};

class Outputs {
 public:
  Outputs(std::string dir, const Provenance& prov) : dir_(std::move(dir)), prov_(prov) {
    if (dir_.empty()) throw Error("--out is required for this command");
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error(fmt::format("cannot create output directory '{}': {}", dir_, ec.message()));
  }

  void text(const std::string& name, const std::function<void(std::ostream&)>& body) {
    write(name, prov_.comment("# "), body);
  }
  void pajek(const std::string& name, const std::function<void(std::ostream&)>& body) {
    write(name, prov_.comment("% "), body);
  }
  void svg(const std::string& name, const std::function<void(std::ostream&)>& body) {
    write(name, prov_.comment("<!-- ", " -->"), body);
  }
  void json(const std::string& name, const nlohmann::ordered_json& payload) {
    nlohmann::ordered_json doc = {{"provenance", prov_.json()}};
    for (const auto& [key, value] : payload.items()) doc[key] = value;
    write(name, "", [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  }

  const std::vector<std::string>& written() const { return written_; }

 private:
  void write(const std::string& name, const std::string& header,
             const std::function<void(std::ostream&)>& body) {
    const auto path = fs::path(dir_) / name;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(fmt::format("cannot write '{}'", path.string()));
    os << header;
    body(os);
    if (!os) throw Error(fmt::format("error writing '{}'", path.string()));
    written_.push_back(path.string());
  }

  std::string dir_;
  const Provenance& prov_;
  std::vector<std::string> written_;
};

std::string num(double v) { return fmt::format("{}", v); }

struct Loaded {
  std::vector<Input> inputs;
  CitationMatrix matrix;
};

Loaded load(const RunConfig& cfg) {
  if (cfg.registry.empty()) throw Error("--registry is required");
  if (cfg.edges.empty()) throw Error("--edges is required");
  Loaded l;
  l.inputs.push_back(read_file(cfg.registry, "registry"));
  l.inputs.push_back(read_file(cfg.edges, "edges"));
  std::istringstream reg_in(l.inputs[0].bytes);
  JournalRegistry registry = ingest_registry(reg_in);
  std::istringstream edge_in(l.inputs[1].bytes);
  l.matrix = ingest_edges(edge_in, std::move(registry), {cfg.auto_register});
  return l;
}

CorrelationOptions correlation_options(const RunConfig& cfg) {
  return {parse_axis(cfg.axis), parse_diagonal_policy(cfg.diagonal), cfg.threads};
}

VarimaxOptions rotation_options(const RunConfig& cfg) {
  return {!cfg.no_kaiser_normalization, cfg.tol, cfg.max_sweeps};
}

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

ConfigEcho correlation_echo(const RunConfig& cfg) {
  return {{"axis", cfg.axis}, {"diagonal", cfg.diagonal},
          {"auto-register", cfg.auto_register ? "true" : "false"}};
}

ConfigEcho factor_echo(const RunConfig& cfg) {
  return {{"k", cfg.k ? std::to_string(*cfg.k) : "kaiser"},
          {"suppress", num(cfg.suppress)},
          {"tol", num(cfg.tol)},
          {"max-sweeps", std::to_string(cfg.max_sweeps)},
          {"kaiser-normalization", cfg.no_kaiser_normalization ? "false" : "true"},
          {"top", cfg.top ? std::to_string(*cfg.top) : "all"}};
}

template <typename... Parts>
ConfigEcho concat(Parts&&... parts) {
  ConfigEcho out;
  (out.insert(out.end(), parts.begin(), parts.end()), ...);
  return out;
}

void validate(const RunConfig& cfg) {
  auto in_range = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
  if (!in_range(cfg.floor, 0.0, 1.0)) throw Error("--floor must be in [0, 1]");
  if (!in_range(cfg.threshold_start, -1.0, 1.0) || !in_range(cfg.threshold_stop, -1.0, 1.0))
    throw Error("sweep thresholds must be in [-1, 1]");
  if (!(cfg.step > 0.0)) throw Error("--step must be positive");
  if (cfg.threshold_start > cfg.threshold_stop)
    throw Error("--threshold-start must not exceed --threshold-stop");
  if (cfg.min_size < 2) throw Error("--min-size must be at least 2");
  if (cfg.k && *cfg.k < 1) throw Error("--k must be at least 1");
  if (!in_range(cfg.suppress, 0.0, 1.0)) throw Error("--suppress must be in [0, 1]");
  if (!(cfg.tol > 0.0)) throw Error("--tol must be positive");
  if (cfg.max_sweeps < 1) throw Error("--max-sweeps must be at least 1");
  if (!(cfg.fraction >= 0.0 && cfg.fraction < 1.0)) throw Error("--fraction must be in [0, 1)");
  if (!in_range(cfg.complexity_floor, 0.0, 1.0)) throw Error("--complexity-floor must be in [0, 1]");
  if (cfg.dim < 1) throw Error("--dim must be at least 1");
  if (cfg.threshold && !in_range(*cfg.threshold, -1.0, 1.0))
    throw Error("--threshold must be in [-1, 1]");
  if (cfg.format != "text" && cfg.format != "json") throw Error("--format must be text or json");
  parse_axis(cfg.axis);
  parse_diagonal_policy(cfg.diagonal);
  parse_dissimilarity(cfg.dissimilarity);
}

void cmd_density(const RunConfig& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  const DensityReport rep = density(l.matrix);
  if (cfg.format == "json") {
    out << to_json(rep).dump(2) << '\n';
  } else {
    out << fmt::format("journals           {}\n", rep.n)
        << fmt::format("possible relations {}\n", rep.possible)
        << fmt::format("nonzero relations  {}\n", rep.nonzero)
        << fmt::format("single relations   {}\n", rep.singles)
        << fmt::format("density            {} ({:.6f})\n", rep.density_percent(), rep.density)
        << fmt::format("corrected density  {} ({:.6f})\n", rep.corrected_percent(),
                       rep.corrected_density);
  }
  if (cfg.out_dir.empty()) return;
  const Provenance prov("density", {{"auto-register", cfg.auto_register ? "true" : "false"}},
                        l.inputs);
  Outputs files(cfg.out_dir, prov);
  files.json("density.json", to_json(rep));
  if (cfg.export_matrix) {
    files.text("registry.csv", [&](std::ostream& os) { write_registry(os, l.matrix.journals()); });
    files.text("matrix.csv", [&](std::ostream& os) { write_edges(os, l.matrix); });
  }
}

void cmd_correlate(const RunConfig& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  const auto corr = citing_correlation(l.matrix, correlation_options(cfg));
  const Provenance prov("correlate", concat(correlation_echo(cfg), ConfigEcho{{"floor", num(cfg.floor)}}),
                        l.inputs);
  Outputs files(cfg.out_dir, prov);
  files.text("correlations.csv",
             [&](std::ostream& os) { write_correlation_pairs(os, corr, cfg.floor); });
  nlohmann::ordered_json invalid = nlohmann::ordered_json::array();
  for (std::size_t i : corr.invalid_indices()) invalid.push_back(corr.journals.id(i));
  files.json("correlation_summary.json",
             {{"axis", std::string(to_string(corr.axis))},
              {"diagonal", std::string(to_string(corr.diagonal))},
              {"journals", corr.n()},
              {"invalid", invalid}});
  out << fmt::format("{} journals correlated ({} zero-variance); axis={} diagonal={}\n", corr.n(),
                     invalid.size(), to_string(corr.axis), to_string(corr.diagonal));
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  const auto corr = citing_correlation(l.matrix, correlation_options(cfg));
  SweepOptions opt{cfg.threshold_start, cfg.step, cfg.threshold_stop, cfg.min_size, cfg.threads};
  const SweepReport report = threshold_sweep(corr, opt);
  const Provenance prov("sweep",
                        concat(correlation_echo(cfg),
                               ConfigEcho{{"threshold-start", num(cfg.threshold_start)},
                                          {"step", num(cfg.step)},
                                          {"threshold-stop", num(cfg.threshold_stop)},
                                          {"min-size", std::to_string(cfg.min_size)}}),
                        l.inputs);
  Outputs files(cfg.out_dir, prov);
  files.text("sweep_summary.txt", [&](std::ostream& os) { write_sweep_summary(os, report); });
  files.text("sweep_summary.csv", [&](std::ostream& os) { write_sweep_summary_csv(os, report); });
  files.text("components.csv", [&](std::ostream& os) { write_components_csv(os, report.levels); });
  files.json("components.json", to_json(report));
  write_sweep_summary(out, report);
}

void write_factor_files(Outputs& files, const std::string& stem, const FactorModel& model,
                        const RunConfig& cfg) {
  const LoadingTable table = loading_table(model, cfg.suppress, cfg.top);
  files.json(stem + ".json", to_json(model));
  files.text(stem + "_loadings.csv", [&](std::ostream& os) { write_loading_csv(os, table); });
  files.text(stem + "_loadings.txt", [&](std::ostream& os) {
    os << "Rotated Component Matrix\n";
    write_loading_text(os, table);
    os << fmt::format(
        "Extraction: principal components. Rotation: {}{}; converged in {} iterations.\n",
        model.rotation.method == RotationMethod::Varimax ? "varimax" : "none",
        model.rotation.kaiser_normalized ? " with Kaiser normalization" : "",
        model.rotation.iterations);
  });
}

void print_model(std::ostream& out, const FactorModel& model) {
  out << fmt::format("{} journals, {} factors retained, explained variance {:.2f}%\n", model.n(),
                     model.k, 100.0 * model.explained_variance);
  out << fmt::format("rotation {} ({} iterations, {})\n", to_string(model.rotation.method),
                     model.rotation.iterations,
                     model.rotation.converged ? "converged" : "not converged");
  if (!model.excluded.empty())
    out << fmt::format("excluded zero-variance journals: {}\n", model.excluded.size());
  for (const auto& w : model.warnings) out << "warning: " << w << '\n';
}

void cmd_factors(const RunConfig& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  const auto corr = citing_correlation(l.matrix, correlation_options(cfg));
  const FactorModel model = varimax(extract(corr, cfg.k), rotation_options(cfg));
  const Provenance prov("factors", concat(correlation_echo(cfg), factor_echo(cfg)), l.inputs);
  Outputs files(cfg.out_dir, prov);
  write_factor_files(files, "factors", model, cfg);
  print_model(out, model);
}

void cmd_local(const RunConfig& cfg, std::ostream& out) {
  if (cfg.seed.empty()) throw Error("--seed is required for local");
  const Loaded l = load(cfg);
  const LocalEnvironment env = local_environment(l.matrix, cfg.seed, cfg.fraction);
  LocalAnalysisOptions opt{cfg.k, correlation_options(cfg), rotation_options(cfg)};
  const FactorModel model = local_factor_analysis(env, opt);
  const ComplexityReport complexity = interfactorial_complexity(model, cfg.complexity_floor);

  const Provenance prov("local",
                        concat(correlation_echo(cfg),
                               ConfigEcho{{"seed", cfg.seed},
                                          {"fraction", num(cfg.fraction)},
                                          {"complexity-floor", num(cfg.complexity_floor)}},
                               factor_echo(cfg)),
                        l.inputs);
  Outputs files(cfg.out_dir, prov);
  files.json("environment.json", to_json(env));
  write_factor_files(files, "local_factors", model, cfg);
  files.json("complexity.json", to_json(complexity));
  files.text("complexity.csv", [&](std::ostream& os) {
    os << "journal_id,factors_at_or_above_floor\n";
    for (std::size_t i = 0; i < complexity.journals.size(); ++i)
      os << csv::quote(complexity.journals[i]) << ',' << complexity.counts[i] << '\n';
  });
  out << fmt::format("environment of {}: {} journals including seed (fraction {})\n", env.seed,
                     env.size(), env.fraction);
  print_model(out, model);
  out << fmt::format("loading fill ratio at |loading| >= {}: {:.3f}\n", complexity.floor,
                     complexity.fill_ratio);
}

void cmd_mds(const RunConfig& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  std::optional<LocalEnvironment> env;
  if (!cfg.seed.empty()) env = local_environment(l.matrix, cfg.seed, cfg.fraction);
  const CitationMatrix& m = env ? env->submatrix : l.matrix;
  const auto corr = citing_correlation(m, correlation_options(cfg));
  const auto dist = correlation_to_distance(corr, parse_dissimilarity(cfg.dissimilarity));
  const Layout layout = classical_mds(dist, cfg.dim);

  ConfigEcho echo = concat(correlation_echo(cfg),
                           ConfigEcho{{"dim", std::to_string(cfg.dim)},
                                      {"dissimilarity", cfg.dissimilarity},
                                      {"method", "classical-mds"},
                                      {"letters", cfg.letters ? "true" : "false"}});
  if (env) echo = concat(echo, ConfigEcho{{"seed", cfg.seed}, {"fraction", num(cfg.fraction)}});
  if (cfg.factor_plot)
    echo = concat(echo, factor_echo(cfg),
                  ConfigEcho{{"f1", std::to_string(cfg.f1)}, {"f2", std::to_string(cfg.f2)}});
  const Provenance prov("mds", echo, l.inputs);
  Outputs files(cfg.out_dir, prov);

  SvgOptions svg{cfg.letters, 640,
                 env ? fmt::format("Multidimensional scaling of {} journals around {}",
                                   layout.size(), cfg.seed)
                     : fmt::format("Multidimensional scaling of {} journals", layout.size())};
  files.text("layout.csv", [&](std::ostream& os) { write_layout_csv(os, layout); });
  files.svg("layout.svg", [&](std::ostream& os) { write_layout_svg(os, layout, svg); });
  files.json("layout.json", to_json(layout));
  out << fmt::format("{} journals placed, stress {:.4f}, negative eigenvalue mass {:.4g}\n",
                     layout.size(), layout.stress, layout.negative_mass);

  if (cfg.factor_plot) {
    const FactorModel model =
        env ? local_factor_analysis(*env, {cfg.k, correlation_options(cfg), rotation_options(cfg)})
            : varimax(extract(corr, cfg.k), rotation_options(cfg));
    const Layout plot = factor_plot(model, cfg.f1, cfg.f2);
    SvgOptions psvg{cfg.letters, 640,
                    fmt::format("Factor plot of components {} and {}", cfg.f1, cfg.f2)};
    files.text("factor_plot.csv", [&](std::ostream& os) { write_layout_csv(os, plot); });
    files.svg("factor_plot.svg", [&](std::ostream& os) { write_layout_svg(os, plot, psvg); });
    out << fmt::format("factor plot of components {} and {} written ({} factors)\n", cfg.f1,
                       cfg.f2, model.k);
  }
}

void cmd_export_pajek(const RunConfig& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  ConfigEcho echo{{"auto-register", cfg.auto_register ? "true" : "false"}};
  if (cfg.threshold)
    echo = concat(correlation_echo(cfg), ConfigEcho{{"threshold", num(*cfg.threshold)}});
  const Provenance prov("export-pajek", echo, l.inputs);
  Outputs files(cfg.out_dir, prov);
  files.pajek("citations.net",
              [&](std::ostream& os) { pajek::write_citation_network(os, l.matrix); });
  out << fmt::format("citation network: {} vertices, {} arcs\n", l.matrix.n(),
                     l.matrix.nonzero());
  if (cfg.threshold) {
    const auto corr = citing_correlation(l.matrix, correlation_options(cfg));
    const auto graph = threshold_graph(corr, *cfg.threshold);
    files.pajek("threshold_graph.net",
                [&](std::ostream& os) { pajek::write_threshold_graph(os, graph, corr); });
    out << fmt::format("threshold graph at r >= {}: {} edges\n", *cfg.threshold,
                       graph.edge_count());
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Structure maps of aggregated journal-journal citation data", "scimap"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Key-value config file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--registry", cfg.registry, "Registry CSV (id,title,english_original)");
  app.add_option("--edges", cfg.edges, "Edge CSV (citing_id,cited_id,count)");
  app.add_option("--out", cfg.out_dir, "Output directory");
  app.add_flag("--auto-register", cfg.auto_register, "Register unknown ids found in the edges");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware); never changes output");
  app.add_option("--diagonal", cfg.diagonal, "Self-citation policy: kept | zeroed")
      ->capture_default_str();
  app.add_option("--axis", cfg.axis, "Patterns to correlate: citing-rows | cited-columns")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "density stdout format: text | json")->capture_default_str();
  app.add_flag("--export-matrix", cfg.export_matrix,
               "density: also write the ingested registry and sorted matrix");
  app.add_option("--floor", cfg.floor, "correlate: dump pairs with |r| above this")
      ->capture_default_str();
  app.add_option("--threshold-start", cfg.threshold_start, "sweep: first threshold")
      ->capture_default_str();
  app.add_option("--step", cfg.step, "sweep: threshold increment")->capture_default_str();
  app.add_option("--threshold-stop", cfg.threshold_stop, "sweep: last threshold")
      ->capture_default_str();
  app.add_option("--min-size", cfg.min_size, "sweep: smallest reported component")
      ->capture_default_str();
  app.add_option("--k", cfg.k, "Number of factors (default: eigenvalues > 1)");
  app.add_option("--suppress", cfg.suppress, "Blank loadings below this magnitude")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Varimax relative convergence tolerance")->capture_default_str();
  app.add_option("--max-sweeps", cfg.max_sweeps, "Varimax sweep limit")->capture_default_str();
  app.add_option("--top", cfg.top, "Keep at most this many journals per factor in tables");
  app.add_flag("--no-kaiser-normalization", cfg.no_kaiser_normalization,
               "Rotate raw rather than communality-normalized loadings");
  app.add_option("--seed", cfg.seed, "Seed journal id for local environments");
  app.add_option("--fraction", cfg.fraction, "Local selection fraction of seed totals")
      ->capture_default_str();
  app.add_option("--complexity-floor", cfg.complexity_floor,
                 "local: loading magnitude counted as a secondary loading")
      ->capture_default_str();
  app.add_option("--dim", cfg.dim, "mds: embedding dimension")->capture_default_str();
  app.add_option("--dissimilarity", cfg.dissimilarity,
                 "mds: one-minus-r | sqrt-two-one-minus-r")
      ->capture_default_str();
  app.add_flag("--letters", cfg.letters, "mds: label points A, B, ... with a legend");
  app.add_flag("--factor-plot", cfg.factor_plot, "mds: also write a two-factor plot");
  app.add_option("--f1", cfg.f1, "mds: horizontal factor of the factor plot")->capture_default_str();
  app.add_option("--f2", cfg.f2, "mds: vertical factor of the factor plot")->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "export-pajek: also export the graph at r >= this");

  const std::vector<std::pair<std::string, std::function<void(const RunConfig&, std::ostream&)>>>
      commands = {
          {"density", cmd_density},
          {"correlate", cmd_correlate},
          {"sweep", cmd_sweep},
          {"factors", cmd_factors},
          {"local", cmd_local},
          {"mds", cmd_mds},
          {"export-pajek", cmd_export_pajek},
      };
  const std::map<std::string, std::string> help = {
      {"density", "Report matrix density and single-citation-corrected density"},
      {"correlate", "Pearson correlations of citing patterns"},
      {"sweep", "Bi-connected components over a threshold sweep"},
      {"factors", "System-level factor analysis with varimax rotation"},
      {"local", "Seed-journal environment and its factor analysis"},
      {"mds", "Classical MDS layout (optionally of a local environment) and factor plot"},
      {"export-pajek", "Pajek export of the citation network and a threshold graph"},
  };
  for (const auto& [name, fn] : commands)
    app.add_subcommand(name, help.at(name))->callback([&cfg, name = name] { cfg.command = name; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    validate(cfg);
    for (const auto& [name, fn] : commands)
      if (name == cfg.command) fn(cfg, out);
  } catch (const std::exception& e) {
    err << "scimap " << cfg.command << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"scimap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace scimap::cli
