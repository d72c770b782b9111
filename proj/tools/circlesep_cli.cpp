#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "circlesep/circles.hpp"
#include "circlesep/dynamics.hpp"
#include "circlesep/error.hpp"
#include "circlesep/io.hpp"
#include "circlesep/verify.hpp"
#include "circlesep/voronoi.hpp"

using namespace circlesep;

namespace {

enum Exit : int {
  kOk = 0,
  kOther = 1,
  kNotGeneralPosition = 2,
  kMismatch = 3,
  kNotSemigeneral = 4,
  kIo = 5,
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotGeneralPosition: return kNotGeneralPosition;
    case ErrorCode::NotSemigeneral:
    case ErrorCode::RetriesExhausted: return kNotSemigeneral;
    case ErrorCode::Parse:
    case ErrorCode::Io: return kIo;
    default: return kOther;
  }
}

struct Options {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::string input, input_b, out, dot, svg;
  int max_retries = 8;
  std::string grid = "4:10:5";
  std::string corrupt;
  bool serial = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_text(o.out, text);
}

// Cocircular input is reported with the offending quadruple before anything else runs.
std::optional<int> reject_uncertified(const Options& o, const DotConfig& config) {
  const auto report = is_general_position(config);
  if (report.certified()) return std::nullopt;
  const auto& q = *report.violation;
  emit(o, dump(Json{{"error", "NotGeneralPosition"}, {"quadruple", {q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1}}}));
  std::cerr << "error: dots " << q[0] + 1 << "," << q[1] + 1 << "," << q[2] + 1 << "," << q[3] + 1
            << " are cocircular\n";
  return kNotGeneralPosition;
}

void require_k(const DotConfig& c, int k) {
  if (c.size() < 4) throw Error(ErrorCode::UnsupportedSize, "need at least 4 dots");
  if (k <= 0 || k >= c.size()) throw Error(ErrorCode::IndexOutOfRange, "--k must satisfy 0 < k < n");
}

int cmd_generate(const Options& o) {
  if (o.n < 1) throw Error(ErrorCode::UnsupportedSize, "--n must be at least 1");
  emit(o, dump(config_to_json(random_config(o.n, o.seed))));
  return kOk;
}

int cmd_counts(const Options& o) {
  const auto config = read_config(o.input);
  if (config.size() < 3) throw Error(ErrorCode::UnsupportedSize, "counts needs at least 3 dots");
  if (auto bad = reject_uncertified(o, config)) return *bad;
  const auto report = counts_report(config);
  emit(o, dump(report));
  return report_formula_match(report) ? kOk : kMismatch;
}

int cmd_voronoi(const Options& o) {
  const auto config = read_config(o.input);
  if (auto bad = reject_uncertified(o, config)) return *bad;
  require_k(config, o.k);
  const auto graph = build_graph(config, o.k);
  const auto doc = graph_to_json(config, graph);
  emit(o, dump(doc));
  if (!o.dot.empty()) write_text(o.dot, graph_to_dot(graph));
  if (!o.svg.empty()) write_text(o.svg, graph_to_svg(config, graph));
  const bool ok = doc["formula_match"].get<bool>() && doc["euler_characteristic"] == 2 && doc["connected"].get<bool>() &&
                  (doc["antipodal_check"].is_null() || doc["antipodal_check"].get<bool>()) &&
                  (doc["gluing"].is_null() || doc["gluing"]["holds"].get<bool>());
  return ok ? kOk : kMismatch;
}

int cmd_family(const Options& o) {
  const auto a = read_config(o.input);
  const auto b = read_config(o.input_b);
  if (auto bad = reject_uncertified(o, a)) return *bad;
  if (auto bad = reject_uncertified(o, b)) return *bad;
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "configurations differ in size");
  require_k(a, o.k);
  const auto log = move_sequence_with_retry(a, b, o.k, o.max_retries, o.seed);
  emit(o, dump(move_log_to_json(log, a.size(), o.k)));
  return log.endpoints_match ? kOk : kMismatch;
}

VerifyGrid parse_grid(const Options& o) {
  VerifyGrid g;
  g.seed_base = o.seed;
  g.parallel = !o.serial;
  int seeds = 5;
  char c1 = 0, c2 = 0;
  std::istringstream is(o.grid);
  is >> g.n_min >> c1 >> g.n_max;
  if (!is || c1 != ':') throw Error(ErrorCode::Parse, "--grid expects NMIN:NMAX[:SEEDS]");
  if (is >> c2) {
    if (c2 != ':' || !(is >> seeds)) throw Error(ErrorCode::Parse, "--grid expects NMIN:NMAX[:SEEDS]");
  }
  g.seeds = seeds;
  if (!o.corrupt.empty()) {
    SideFault f;
    char sep = 0;
    std::istringstream cs(o.corrupt);
    if (!(cs >> f.triple_index >> sep >> f.dot) || sep != ':') throw Error(ErrorCode::Parse, "--corrupt expects TRIPLE:DOT");
    g.fault = f;
  }
  return g;
}

int cmd_verify(const Options& o) {
  const auto report = verify_all(parse_grid(o));
  emit(o, dump(verify_report_json(report)));
  for (const auto& c : report.checks)
    if (!c.pass) std::cerr << "FAIL " << c.name << " n=" << c.n << " seed=" << c.seed << ": " << c.detail << "\n";
  return report.all_pass() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circles through dots on the sphere: counts, higher-order Voronoi graphs, moves."};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "Write a seeded configuration in general position");
  gen->add_option("--n", o.n, "Number of dots")->required();
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* counts = app.add_subcommand("counts", "Side-count and avoidant histograms against the closed forms");
  counts->add_option("--input", o.input, "Configuration JSON")->required();
  counts->add_option("--out", o.out, "Report file (default stdout)");

  auto* vor = app.add_subcommand("voronoi", "Order-k Voronoi graph of a configuration");
  vor->add_option("--input", o.input, "Configuration JSON")->required();
  vor->add_option("--k", o.k, "Order")->required();
  vor->add_option("--out", o.out, "Graph JSON (default stdout)");
  vor->add_option("--dot", o.dot, "Also write Graphviz DOT here");
  vor->add_option("--svg", o.svg, "Also write an SVG drawing here");

  auto* fam = app.add_subcommand("family", "Moves along the straight-line family between two configurations");
  fam->add_option("--input", o.input, "Start configuration")->required();
  fam->add_option("--input-b", o.input_b, "End configuration")->required();
  fam->add_option("--k", o.k, "Order")->required();
  fam->add_option("--max-retries", o.max_retries, "Path splits allowed on simultaneous walls")->check(CLI::NonNegativeNumber);
  fam->add_option("--seed", o.seed, "Seed for the split-point jitter");
  fam->add_option("--out", o.out, "Move log JSON (default stdout)");

  auto* ver = app.add_subcommand("verify-all", "Run every invariant over a grid of seeded configurations");
  ver->add_option("--grid", o.grid, "NMIN:NMAX[:SEEDS]")->capture_default_str();
  ver->add_option("--seed", o.seed, "First seed");
  ver->add_option("--out", o.out, "Summary JSON (default stdout)");
  ver->add_option("--corrupt", o.corrupt, "Flip one recorded side, TRIPLE:DOT (harness self-test)");
  ver->add_flag("--serial", o.serial, "Run grid cells one at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kOther;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*counts) return cmd_counts(o);
    if (*vor) return cmd_voronoi(o);
    if (*fam) return cmd_family(o);
    return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
}
