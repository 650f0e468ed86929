#include "qchrom/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qchrom/bounds.hpp"
#include "qchrom/cert_io.hpp"
#include "qchrom/errors.hpp"
#include "qchrom/exact.hpp"
#include "qchrom/generators.hpp"
#include "qchrom/graph6.hpp"
#include "qchrom/pinching.hpp"
#include "qchrom/quantum_cert.hpp"
#include "qchrom/random.hpp"

#ifndef QCHROM_DEFAULT_DATA_DIR
#define QCHROM_DEFAULT_DATA_DIR "data"
#endif

namespace qchrom::cli {

namespace {

using nlohmann::json;

enum class Format { kTable, kJson, kCsv };

struct RunConfig {
  std::string gen;
  std::string g6;
  std::string file;
  Format format = Format::kTable;
  std::string weights;
  std::optional<double> budget;
  std::uint64_t seed = 1;
  std::string cert;
  std::string data_dir;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  return {};
}

Graph load_graph_file(const std::string& path) {
  const std::string text = read_file(path);
  if (std::filesystem::path(path).extension() == ".g6") {
    return parse_graph6(first_line(text))
        .with_name(std::filesystem::path(path).stem().string());
  }
  return parse_edge_list(text).with_name(
      std::filesystem::path(path).filename().string());
}

Graph load_graph(const RunConfig& cfg) {
  if (!cfg.gen.empty()) return gen::from_spec(cfg.gen);
  if (!cfg.g6.empty()) return parse_graph6(cfg.g6).with_name(cfg.g6);
  return load_graph_file(cfg.file);
}

exact::Seconds budget_of(const RunConfig& cfg) {
  if (cfg.budget) return exact::Seconds(*cfg.budget);
  if (const char* env = std::getenv("QCHROM_BUDGET")) {
    char* end = nullptr;
    const double secs = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(secs > 0)) {
      throw ParseError(std::string("QCHROM_BUDGET: invalid value '") + env +
                       "'");
    }
    return exact::Seconds(secs);
  }
  return exact::kDefaultBudget;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string display_name(const Graph& g) {
  return g.name().empty() ? std::string("input") : g.name();
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

// ---------------------------------------------------------------- bounds --

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  std::optional<bounds::WeightMatrix> w;
  if (!cfg.weights.empty()) {
    w = cert::read_weight_matrix(read_file(cfg.weights));
  }
  const auto report = bounds::all_bounds(g, w);

  switch (cfg.format) {
    case Format::kJson: {
      json j;
      j["graph"] = display_name(g);
      j["n"] = g.order();
      j["m"] = g.size();
      j["weighted"] = report.weighted;
      for (auto kind : bounds::kAllBounds) {
        const auto& e = report[kind];
        j["bounds"][std::string(bounds::to_string(kind))] = {
            {"value", e.value},
            {"status", std::string(bounds::to_string(e.status))}};
      }
      j["best"] = report.best;
      j["best_ceil"] = report.best_ceil;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "field,value,status\n";
      out << "n," << g.order() << ",\n";
      out << "m," << g.size() << ",\n";
      for (auto kind : bounds::kAllBounds) {
        const auto& e = report[kind];
        out << bounds::to_string(kind) << "," << full(e.value) << ","
            << bounds::to_string(e.status) << "\n";
      }
      out << "best," << full(report.best) << ",\n";
      out << "best_ceil," << report.best_ceil << ",\n";
      break;
    case Format::kTable:
      out << "graph      " << display_name(g) << "\n";
      out << "n          " << g.order() << "\n";
      out << "m          " << g.size() << "\n";
      out << "mode       " << (report.weighted ? "weighted" : "unweighted")
          << "\n\n";
      out << std::left << std::setw(12) << "bound" << std::right
          << std::setw(8) << "value" << "  status\n";
      for (auto kind : bounds::kAllBounds) {
        const auto& e = report[kind];
        out << std::left << std::setw(12) << bounds::to_string(kind)
            << std::right << std::setw(8) << fixed(e.value, 2) << "  "
            << bounds::to_string(e.status) << "\n";
      }
      out << std::left << std::setw(12) << "best" << std::right
          << std::setw(8) << fixed(report.best, 2) << "\n";
      out << std::left << std::setw(12) << "best_ceil" << std::right
          << std::setw(8) << report.best_ceil << "\n";
      break;
  }
  return kOk;
}

// ----------------------------------------------------------------- exact --

std::string chi_text(const exact::ChromaticResult& r) {
  if (r.status == exact::Status::kComplete) return std::to_string(r.upper);
  return "[" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const auto r = exact::solve(g, budget_of(cfg));
  switch (cfg.format) {
    case Format::kJson: {
      json j;
      j["graph"] = display_name(g);
      j["n"] = g.order();
      j["m"] = g.size();
      j["status"] = std::string(exact::to_string(r.status()));
      j["chromatic"] = r.chromatic.upper;
      j["chromatic_lower"] = r.chromatic.lower;
      j["chromatic_upper"] = r.chromatic.upper;
      j["clique"] = r.clique.clique;
      j["coloring"] = r.chromatic.coloring;
      j["clique_witness"] = r.clique.witness;
      j["nodes"] = r.chromatic.nodes;
      j["elapsed_seconds"] = r.chromatic.elapsed.count();
      out << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "field,value\n";
      out << "n," << g.order() << "\n";
      out << "m," << g.size() << "\n";
      out << "status," << exact::to_string(r.status()) << "\n";
      out << "chromatic_lower," << r.chromatic.lower << "\n";
      out << "chromatic_upper," << r.chromatic.upper << "\n";
      out << "clique," << r.clique.clique << "\n";
      out << "nodes," << r.chromatic.nodes << "\n";
      out << "elapsed_seconds," << full(r.chromatic.elapsed.count()) << "\n";
      break;
    case Format::kTable:
      out << "graph      " << display_name(g) << "\n";
      out << "n          " << g.order() << "\n";
      out << "m          " << g.size() << "\n";
      out << "chi        " << chi_text(r.chromatic) << "\n";
      out << "omega      " << r.clique.clique << "\n";
      out << "status     " << exact::to_string(r.status()) << "\n";
      out << "nodes      " << r.chromatic.nodes << "\n";
      out << "elapsed    " << fixed(r.chromatic.elapsed.count(), 3) << " s\n";
      out << "coloring   " << join(r.chromatic.coloring) << "\n";
      out << "clique     " << join(r.clique.witness) << "\n";
      break;
  }
  return kOk;
}

// ----------------------------------------------------------- cert-verify --

json verification_json(const cert::VerificationReport& r) {
  json j;
  j["verdict"] = r.accepted ? "accept" : "reject";
  j["tolerance"] = r.tolerance;
  j["worst_projector"] = r.worst_projector;
  j["worst_completeness"] = r.worst_completeness;
  j["worst_orthogonality"] = r.worst_orthogonality;
  if (const auto* w = r.worst_orthogonality_check()) {
    j["worst_edge"] = {{"v", w->v}, {"w", w->w}, {"color", w->k}};
  }
  json ranks = json::array();
  for (const auto& p : r.projectors) {
    ranks.push_back({{"v", p.v}, {"k", p.k}, {"rank", p.rank}});
  }
  j["ranks"] = std::move(ranks);
  json violations = json::array();
  for (const auto& o : r.orthogonality) {
    if (!(o.residual <= r.tolerance)) {
      violations.push_back(
          {{"v", o.v}, {"w", o.w}, {"color", o.k}, {"residual", o.residual}});
    }
  }
  j["orthogonality_violations"] = std::move(violations);
  return j;
}

void print_verification(const cert::VerificationReport& r, Format format,
                        std::ostream& out) {
  const auto* worst = r.worst_orthogonality_check();
  switch (format) {
    case Format::kJson:
      out << verification_json(r).dump(2) << "\n";
      break;
    case Format::kCsv:
      out << "condition,worst_residual\n";
      out << "projector," << full(r.worst_projector) << "\n";
      out << "completeness," << full(r.worst_completeness) << "\n";
      out << "orthogonality," << full(r.worst_orthogonality) << "\n";
      out << "verdict," << (r.accepted ? "accept" : "reject") << "\n";
      break;
    case Format::kTable:
      out << "verdict        " << (r.accepted ? "accept" : "reject") << "\n";
      out << "projector      " << sci(r.worst_projector) << "\n";
      out << "completeness   " << sci(r.worst_completeness) << "\n";
      out << "orthogonality  " << sci(r.worst_orthogonality);
      if (worst && !(worst->residual <= r.tolerance)) {
        out << "  edge (" << worst->v << "," << worst->w << ") color "
            << worst->k;
      }
      out << "\n";
      out << "tolerance      " << sci(r.tolerance) << "\n";
      break;
  }
}

int cmd_cert_verify(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const auto c = cert::read_certificate(read_file(cfg.cert));
  const auto report = cert::verify_certificate(g, c);
  print_verification(report, cfg.format, out);
  return report.accepted ? kOk : kRejected;
}

// ------------------------------------------------------- cert-lift-check --

struct LiftCheck {
  std::string name;
  double residual;
  double tolerance;
  bool ok() const { return residual <= tolerance; }
};

int cmd_cert_lift_check(const RunConfig& cfg, std::ostream& out) {
  constexpr int kProbes = 5;
  const Graph g = load_graph(cfg);
  const auto c = cert::read_certificate(read_file(cfg.cert));
  const auto report = cert::verify_certificate(g, c);
  if (!report.accepted) {
    print_verification(report, cfg.format, out);
    return kRejected;
  }

  const auto lifted = cert::lift(g, c);
  const auto& family = lifted.family();
  const auto d = static_cast<Eigen::Index>(c.dim());
  const CMatrix a = kron_identity(adjacency(g), d);
  const auto u = pinching::twirling_unitary(family);
  const double tol = pinching::kTolerance;

  std::vector<LiftCheck> checks;
  checks.push_back({"resolution",
                    pinching::diagnose(family.projectors()).resolution,
                    tol * std::sqrt(static_cast<double>(g.order()))});
  checks.push_back({"annihilation", pinching::annihilation_residual(family, a),
                    tol * (1.0 + a.norm())});

  double agreement = (pinching::pinch(family, a) - pinching::twirl(u, a)).norm();
  double agreement_tol = tol * (1.0 + a.norm());
  random::Rng rng(cfg.seed);
  for (int i = 0; i < kProbes; ++i) {
    const CMatrix x = random::hermitian(family.dim(), rng);
    const double r = (pinching::pinch(family, x) - pinching::twirl(u, x)).norm();
    const double t = tol * (1.0 + x.norm());
    if (r / t > agreement / agreement_tol) {
      agreement = r;
      agreement_tol = t;
    }
  }
  checks.push_back({"pinch_vs_twirl", agreement, agreement_tol});
  checks.push_back({"fixed_point",
                    cert::fixed_point_residual(family, g.order(), c.dim()),
                    tol});
  checks.push_back({"lima_identity", cert::lima_identity_residual(g, c),
                    cert::lima_identity_tolerance(g, c.colors())});

  bool all_ok = true;
  for (const auto& ch : checks) all_ok = all_ok && ch.ok();

  switch (cfg.format) {
    case Format::kJson: {
      json j;
      j["verdict"] = all_ok ? "pass" : "fail";
      for (const auto& ch : checks) {
        j["checks"][ch.name] = {{"residual", ch.residual},
                                {"tolerance", ch.tolerance},
                                {"ok", ch.ok()}};
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "check,residual,tolerance,ok\n";
      for (const auto& ch : checks) {
        out << ch.name << "," << full(ch.residual) << ","
            << full(ch.tolerance) << "," << (ch.ok() ? "true" : "false")
            << "\n";
      }
      break;
    case Format::kTable:
      out << std::left << std::setw(16) << "check" << std::setw(12)
          << "residual" << std::setw(12) << "tolerance" << "ok\n";
      for (const auto& ch : checks) {
        out << std::left << std::setw(16) << ch.name << std::setw(12)
            << sci(ch.residual) << std::setw(12) << sci(ch.tolerance)
            << (ch.ok() ? "yes" : "NO") << "\n";
      }
      out << "verdict         " << (all_ok ? "pass" : "fail") << "\n";
      break;
  }
  return all_ok ? kOk : kRejected;
}

// ---------------------------------------------------------------- table1 --

struct Table1Row {
  std::string label;
  Graph graph;
  bounds::BoundsReport bounds;
  exact::ExactReport exact;
};

std::string data_dir_of(const RunConfig& cfg) {
  if (!cfg.data_dir.empty()) return cfg.data_dir;
  if (const char* env = std::getenv("QCHROM_DATA_DIR")) return env;
  return QCHROM_DEFAULT_DATA_DIR;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::pair<std::string, Graph>> inputs = {
      {"Cyclotomic(13)", gen::cyclotomic13()},
      {"Clebsch", gen::clebsch()},
      {"GQ(2,4)", gen::gq24()},
  };
  const auto fixture =
      std::filesystem::path(data_dir_of(cfg)) / "noncayley28_3.g6";
  if (std::filesystem::exists(fixture)) {
    inputs.emplace_back("Non-Cayley transitive(28,3)",
                        load_graph_file(fixture.string()));
  }

  const auto budget = budget_of(cfg);
  std::vector<std::future<Table1Row>> pending;
  for (const auto& [label, graph] : inputs) {
    pending.push_back(std::async(std::launch::async, [=] {
      return Table1Row{label, graph, bounds::all_bounds(graph),
                       exact::solve(graph, budget)};
    }));
  }
  std::vector<Table1Row> rows;
  for (auto& f : pending) rows.push_back(f.get());

  switch (cfg.format) {
    case Format::kJson: {
      json j = json::array();
      for (const auto& r : rows) {
        j.push_back({{"graph", r.label},
                     {"n", r.graph.order()},
                     {"chi", r.exact.chromatic.upper},
                     {"chi_lower", r.exact.chromatic.lower},
                     {"chi_upper", r.exact.chromatic.upper},
                     {"status", std::string(exact::to_string(r.exact.status()))},
                     {"inertia", r.bounds.inertia.value},
                     {"hoffman", r.bounds.hoffman.value},
                     {"omega", r.exact.clique.clique},
                     {"best", r.bounds.best},
                     {"best_ceil", r.bounds.best_ceil}});
      }
      out << json{{"rows", j}}.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "graph,n,chi_lower,chi_upper,status,inertia,hoffman,omega,best,"
             "best_ceil\n";
      for (const auto& r : rows) {
        out << '"' << r.label << "\"," << r.graph.order() << ","
            << r.exact.chromatic.lower << "," << r.exact.chromatic.upper << ","
            << exact::to_string(r.exact.status()) << ","
            << full(r.bounds.inertia.value) << ","
            << full(r.bounds.hoffman.value) << "," << r.exact.clique.clique
            << "," << full(r.bounds.best) << "," << r.bounds.best_ceil << "\n";
      }
      break;
    case Format::kTable:
      out << std::left << std::setw(30) << "Graph" << std::right
          << std::setw(4) << "n" << std::setw(8) << "chi" << std::setw(9)
          << "Inertia" << std::setw(9) << "Hoffman" << std::setw(7) << "omega"
          << std::setw(9) << "chi_q>=" << "\n";
      for (const auto& r : rows) {
        out << std::left << std::setw(30) << r.label << std::right
            << std::setw(4) << r.graph.order() << std::setw(8)
            << chi_text(r.exact.chromatic) << std::setw(9)
            << fixed(r.bounds.inertia.value, 2) << std::setw(9)
            << fixed(r.bounds.hoffman.value, 2) << std::setw(7)
            << r.exact.clique.clique << std::setw(9) << r.bounds.best_ceil
            << "\n";
      }
      break;
  }
  return kOk;
}

// ------------------------------------------------------------------ main --

void add_input(CLI::App* sub, RunConfig& cfg) {
  auto* group = sub->add_option_group("input", "graph source (exactly one)");
  group->add_option("--gen", cfg.gen, "generator spec, e.g. clebsch, complete:4");
  group->add_option("--g6", cfg.g6, "graph6 string");
  group->add_option("--file", cfg.file,
                    "graph file (.g6 = graph6, otherwise edge list)");
  group->require_option(1);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  static const std::map<std::string, Format> kFormats = {
      {"table", Format::kTable}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  sub->add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
      ->option_text("table|json|csv");
  sub->add_option("--budget", cfg.budget,
                  "time budget in seconds for exact solving (default 60, "
                  "env QCHROM_BUDGET)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "seed for randomized probes");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Spectral lower bounds on the (quantum) chromatic number and "
               "quantum-coloring certificate checks",
               "qchrom"};
  app.require_subcommand(1);

  auto* bounds_cmd = app.add_subcommand("bounds", "five spectral lower bounds");
  add_input(bounds_cmd, cfg);
  add_common(bounds_cmd, cfg);
  bounds_cmd->add_option("--weights", cfg.weights,
                         "JSON Hermitian weight matrix W (analyzes W∘A)");

  auto* exact_cmd = app.add_subcommand("exact", "exact chromatic and clique number");
  add_input(exact_cmd, cfg);
  add_common(exact_cmd, cfg);

  auto* verify_cmd =
      app.add_subcommand("cert-verify", "verify a quantum coloring certificate");
  add_input(verify_cmd, cfg);
  add_common(verify_cmd, cfg);
  verify_cmd->add_option("--cert", cfg.cert, "certificate JSON")->required();

  auto* lift_cmd = app.add_subcommand(
      "cert-lift-check", "check the lifted pinching/twirling identities");
  add_input(lift_cmd, cfg);
  add_common(lift_cmd, cfg);
  lift_cmd->add_option("--cert", cfg.cert, "certificate JSON")->required();

  auto* table_cmd = app.add_subcommand("table1", "inertia vs Hoffman table");
  add_common(table_cmd, cfg);
  table_cmd->add_option("--data-dir", cfg.data_dir,
                        "directory holding optional graph fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*bounds_cmd) return cmd_bounds(cfg, out);
    if (*exact_cmd) return cmd_exact(cfg, out);
    if (*verify_cmd) return cmd_cert_verify(cfg, out);
    if (*lift_cmd) return cmd_cert_lift_check(cfg, out);
    if (*table_cmd) return cmd_table1(cfg, out);
  } catch (const RefusalError& e) {
    err << "rejected: " << e.what() << "\n";
    return kRejected;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("qchrom");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qchrom::cli
