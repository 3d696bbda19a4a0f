/*
 * Copyright 2026 The fbsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fbsim/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbsim/duality.hpp"
#include "fbsim/error.hpp"
#include "fbsim/first_quantization.hpp"
#include "fbsim/fock.hpp"
#include "fbsim/permanent.hpp"
#include "fbsim/scattershot.hpp"
#include "fbsim/unitary.hpp"
#include "fbsim/verify.hpp"

namespace fbsim::cli {

namespace {

using nlohmann::json;

/// A verify suite or normalization check exceeded its tolerance.
struct SuiteFailure {
  std::string message;
  double deviation;
};

struct CommonOptions {
  std::optional<int> modes;
  std::optional<int> particles;
  std::uint64_t seed = 1;
  std::string output;
  std::string format;  // resolved per subcommand when not given
};

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ComplexMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read matrix file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("matrix file '" + path + "' is not valid JSON: " + e.what());
  }
  return matrix_from_json(j);
}

void write_artifact(const CommonOptions& common, const std::string& text, std::ostream& out) {
  if (common.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.output, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file '" + common.output + "'");
  file << text;
  if (!file) throw InvalidArgument("failed writing output file '" + common.output + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// "start:stop:step", inclusive of stop up to rounding.
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidArgument("malformed grid '" + spec + "' (expected start:stop:step)");
    }
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
    throw InvalidArgument("malformed grid '" + spec + "' (expected start:stop:step, step > 0)");
  }
  const auto steps = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
  if (steps > 100000) throw CapExceeded("grid has more than 100000 points");
  std::vector<double> grid;
  for (long i = 0; i <= steps; ++i) grid.push_back(std::min(parts[0] + i * parts[2], parts[1]));
  return grid;
}

void check_consistency(const CommonOptions& common, int modes, int particles) {
  if (common.modes && *common.modes != modes) {
    throw InvalidArgument("--modes " + std::to_string(*common.modes) +
                          " disagrees with the network/input (" + std::to_string(modes) + ")");
  }
  if (common.particles && *common.particles != particles) {
    throw InvalidArgument("--particles " + std::to_string(*common.particles) +
                          " disagrees with the input (" + std::to_string(particles) + ")");
  }
}

std::string emit_distribution(const CommonOptions& common, const OutputDistribution& d) {
  d.check_normalized();
  return common.format == "csv" ? distribution_to_csv(d) : dump(distribution_to_json(d));
}

// --- permanent -------------------------------------------------------------

struct PermanentOptions {
  std::string matrix;
  bool naive = false;
};

std::string run_permanent(const CommonOptions& common, const PermanentOptions& opt) {
  const ComplexMatrix m = read_matrix(opt.matrix);
  if (m.rows() != m.cols()) throw InvalidArgument("permanent needs a square matrix");
  const Complex value = opt.naive ? permanent_naive(m) : permanent(m);
  if (common.format == "csv") {
    return "re,im\n" + format_double(value.real() + 0.0) + "," + format_double(value.imag() + 0.0) + "\n";
  }
  return dump({{"N", m.rows()},
               {"method", opt.naive ? "permutation-sum" : "ryser"},
               {"permanent", {value.real() + 0.0, value.imag() + 0.0}}});
}

// --- distribution ----------------------------------------------------------

struct DistributionOptions {
  std::string matrix;
  std::string input;
  std::string statistics = "bosonic";
};

std::string run_distribution(const CommonOptions& common, const DistributionOptions& opt) {
  const Statistics stats = parse_statistics(opt.statistics);
  if (stats == Statistics::general) {
    throw InvalidArgument("--statistics must be bosonic or fermionic");
  }
  const ComplexMatrix u = read_matrix(opt.matrix);
  const OccupationVector n = OccupationVector::parse(opt.input);
  check_consistency(common, static_cast<int>(u.rows()), n.total());
  return emit_distribution(common, output_distribution_fast(u, n, stats));
}

// --- duality ---------------------------------------------------------------

struct DualityOptions {
  std::string eps1;
  std::string eps2;
  std::string matrix;
  bool haar = false;
  std::string input;
  std::optional<double> overlap;
};

std::string run_duality(const CommonOptions& common, const DualityOptions& opt) {
  const Symmetry eps1 = parse_symmetry(opt.eps1);
  const Symmetry eps2 = parse_symmetry(opt.eps2);

  std::optional<ComplexMatrix> u;
  if (!opt.matrix.empty()) u = read_matrix(opt.matrix);

  std::optional<OccupationVector> n;
  if (!opt.input.empty()) n = OccupationVector::parse(opt.input);

  int modes = 0;
  if (u) {
    modes = static_cast<int>(u->rows());
  } else if (n) {
    modes = static_cast<int>(n->mode_count());
  } else if (common.modes) {
    modes = *common.modes;
  } else {
    throw InvalidArgument("duality needs --modes, --input or --matrix");
  }
  if (!n) {
    if (!common.particles) throw InvalidArgument("duality needs --particles or --input");
    const int particles = *common.particles;
    if (particles < 1 || particles > modes) {
      throw InvalidArgument(
          "default input occupies the first N modes once; pass --input when N > M");
    }
    std::vector<int> counts(modes, 0);
    std::fill(counts.begin(), counts.begin() + particles, 1);
    n = OccupationVector(counts);
  }
  check_consistency(common, modes, n->total());
  if (!u) {
    u = opt.haar ? haar_random_unitary(modes, common.seed) : fourier_row_network(modes);
  }

  InternalStateSet internal = InternalStateSet::orthonormal(n->total());
  if (opt.overlap) {
    if (n->total() != 2) throw InvalidArgument("--overlap applies to two particles only");
    if (!(*opt.overlap >= 0.0 && *opt.overlap <= 1.0)) {
      throw InvalidArgument("--overlap must lie in [0, 1]");
    }
    internal = InternalStateSet::pairwise_overlap(*opt.overlap);
  }

  const DualityReport report = run_duality_check(eps1, eps2, *n, internal, *u);
  report.fast.check_normalized();
  report.oracle.check_normalized();
  if (common.format == "csv") {
    std::string csv;
    for (std::size_t k = 1; k <= n->mode_count(); ++k) csv += "m_" + std::to_string(k) + ",";
    csv += "fast,oracle\n";
    auto configs = enumerate_configurations(modes, n->total(), false);
    for (const auto& m : configs) {
      for (int c : m.counts()) csv += std::to_string(c) + ",";
      csv += format_double(report.fast.probability(m)) + "," +
             format_double(report.oracle.probability(m)) + "\n";
    }
    return csv;
  }
  return dump(duality_report_to_json(report));
}

// --- hom -------------------------------------------------------------------

struct HomOptions {
  std::string grid = "0:1:0.05";
  std::string eps1 = "S";
  std::string eps2;
};

std::string run_hom(const CommonOptions& common, const HomOptions& opt) {
  const Symmetry eps1 = parse_symmetry(opt.eps1);
  std::optional<Symmetry> only;
  if (!opt.eps2.empty()) only = parse_symmetry(opt.eps2);
  const auto grid = parse_grid(opt.grid);
  const auto points = hom_curve(grid, eps1);
  const bool show_s = !only || *only == Symmetry::S;
  const bool show_a = !only || *only == Symmetry::A;

  if (common.format == "csv") {
    std::string csv = "g,unentangled";
    if (show_s) csv += ",eps2_S";
    if (show_a) csv += ",eps2_A";
    csv += "\n";
    for (const auto& p : points) {
      csv += format_double(p.overlap) + "," + format_double(p.unentangled);
      if (show_s) csv += "," + (p.symmetric ? format_double(*p.symmetric) : std::string());
      if (show_a) csv += "," + (p.antisymmetric ? format_double(*p.antisymmetric) : std::string());
      csv += "\n";
    }
    return csv;
  }
  json j = hom_curve_to_json(eps1, points);
  for (auto& row : j["points"]) {
    if (!show_s) {
      row.erase("eps2_S");
      row.erase("eps2_S_error");
    }
    if (!show_a) {
      row.erase("eps2_A");
      row.erase("eps2_A_error");
    }
  }
  return dump(j);
}

// --- scattershot -----------------------------------------------------------

struct ScattershotOptions {
  std::uint64_t trials = 10000;
  std::string log;
};

std::string run_scattershot_command(const CommonOptions& common, const ScattershotOptions& opt) {
  if (!common.modes || !common.particles) {
    throw InvalidArgument("scattershot needs --modes and --particles");
  }
  const auto config =
      ScattershotConfig::standard(*common.modes, *common.particles, opt.trials, common.seed);
  config.validate();
  const ScattershotRun run = run_scattershot(config);
  for (const auto& h : run.heralds) h.exact.check_normalized();
  if (!opt.log.empty()) {
    std::ofstream log(opt.log, std::ios::binary);
    if (!log) throw InvalidArgument("cannot open log file '" + opt.log + "'");
    log << run_log_jsonl(run);
  }
  if (common.format == "csv") {
    std::string csv;
    for (int k = 1; k <= config.modes; ++k) csv += "n_" + std::to_string(k) + ",";
    csv += "count,tv_distance\n";
    for (const auto& h : run.heralds) {
      for (int c : h.herald.counts()) csv += std::to_string(c) + ",";
      csv += std::to_string(h.count) + "," + format_double(h.tv_distance) + "\n";
    }
    return csv;
  }
  return dump(run_summary_json(config, run));
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
};

std::string run_verify(const CommonOptions& common, const VerifyOptions& opt, std::ostream& out,
                       std::vector<SuiteFailure>& failures) {
  std::vector<const VerifySuite*> selected;
  if (opt.suite == "all") {
    for (const auto& s : verify_suites()) selected.push_back(&s);
  } else {
    selected.push_back(&find_suite(opt.suite));
  }
  json rows = json::array();
  std::string csv = "suite,max_deviation,tolerance,cases,passed\n";
  double worst = 0.0;
  for (const VerifySuite* suite : selected) {
    const SuiteResult r = suite->run();
    worst = std::max(worst, r.deviation);
    rows.push_back({{"suite", r.name},
                    {"description", suite->description},
                    {"max_deviation", r.deviation},
                    {"tolerance", r.tolerance},
                    {"cases", r.cases},
                    {"passed", r.passed()}});
    csv += r.name + "," + format_double(r.deviation) + "," + format_double(r.tolerance) + "," +
           std::to_string(r.cases) + "," + (r.passed() ? "true" : "false") + "\n";
    if (!common.output.empty()) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name
          << " max deviation = " << format_double(r.deviation)
          << " (tolerance " << format_double(r.tolerance) << ")\n";
    }
    if (!r.passed()) {
      failures.push_back({"suite " + r.name + " deviation " + format_double(r.deviation) +
                              " exceeds tolerance " + format_double(r.tolerance),
                          r.deviation});
    }
  }
  if (common.format == "csv") return csv;
  return dump({{"max_deviation", worst}, {"suites", rows}});
}

// --- bench -----------------------------------------------------------------

struct BenchOptions {
  int min = 8;
  int max = 18;
};

std::string run_bench(const CommonOptions& common, const BenchOptions& opt) {
  if (opt.min < 1 || opt.max < opt.min) throw InvalidArgument("bench needs 1 <= --min <= --max");
  if (opt.max > kPermanentCap) {
    throw CapExceeded("bench --max " + std::to_string(opt.max) + " exceeds the permanent cap " +
                      std::to_string(kPermanentCap));
  }
  json rows = json::array();
  std::string csv = "N,seconds,abs_permanent\n";
  for (int n = opt.min; n <= opt.max; ++n) {
    const ComplexMatrix u = haar_random_unitary(n, common.seed);
    const auto start = std::chrono::steady_clock::now();
    const Complex value = permanent(u);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    rows.push_back({{"N", n}, {"seconds", elapsed.count()}, {"abs_permanent", std::abs(value)}});
    csv += std::to_string(n) + "," + format_double(elapsed.count()) + "," +
           format_double(std::abs(value)) + "\n";
  }
  if (common.format == "json") return dump({{"kernel", "ryser"}, {"rows", rows}});
  return csv;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boson/fermion duality simulator"};
  app.name("fbsim");
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  app.add_option("--modes", common.modes, "Number of modes M")->check(CLI::PositiveNumber);
  app.add_option("--particles", common.particles, "Number of particles N")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "Master RNG seed");
  app.add_option("--output", common.output, "Write the artifact to this path");
  app.add_option("--format", common.format, "Artifact format (bench defaults to csv)")
      ->check(CLI::IsMember({"json", "csv"}));

  PermanentOptions perm;
  auto* perm_cmd = app.add_subcommand("permanent", "Permanent of a square matrix");
  perm_cmd->add_option("--matrix", perm.matrix, "Matrix JSON file")->required();
  perm_cmd->add_flag("--naive", perm.naive, "Use the permutation-sum oracle");

  DistributionOptions dist;
  auto* dist_cmd = app.add_subcommand("distribution", "Exact output distribution of a network");
  dist_cmd->add_option("--matrix", dist.matrix, "Unitary JSON file")->required();
  dist_cmd->add_option("--input", dist.input, "Input occupation, e.g. 1,1,0")->required();
  dist_cmd->add_option("--statistics", dist.statistics, "bosonic or fermionic")
      ->check(CLI::IsMember({"bosonic", "fermionic"}));

  DualityOptions dual;
  auto* dual_cmd = app.add_subcommand("duality", "Compare the labeled-particle oracle with the "
                                                 "bosonic/fermionic fast path");
  dual_cmd->add_option("--eps1", dual.eps1, "Total symmetry S or A")
      ->required()
      ->check(CLI::IsMember({"S", "A"}));
  dual_cmd->add_option("--eps2", dual.eps2, "Internal symmetry S or A")
      ->required()
      ->check(CLI::IsMember({"S", "A"}));
  auto* matrix_opt = dual_cmd->add_option("--matrix", dual.matrix, "Unitary JSON file");
  auto* haar_opt = dual_cmd->add_flag("--haar", dual.haar, "Use a Haar-random unitary (--seed)");
  matrix_opt->excludes(haar_opt);
  dual_cmd->add_option("--input", dual.input, "Input occupation, e.g. 1,1");
  dual_cmd->add_option("--overlap", dual.overlap, "Internal-state overlap g (N = 2)");

  HomOptions hom;
  auto* hom_cmd = app.add_subcommand("hom", "Two-particle beam-splitter coincidence curve");
  hom_cmd->add_option("--grid", hom.grid, "Overlap grid start:stop:step");
  hom_cmd->add_option("--eps1", hom.eps1, "Total symmetry S or A")
      ->check(CLI::IsMember({"S", "A"}));
  hom_cmd->add_option("--eps2", hom.eps2, "Only report this internal symmetry")
      ->check(CLI::IsMember({"S", "A"}));

  ScattershotOptions shot;
  auto* shot_cmd = app.add_subcommand("scattershot", "Heralded fermionic scattershot sampling");
  shot_cmd->add_option("--trials", shot.trials, "Number of trials");
  shot_cmd->add_option("--log", shot.log, "Per-trial JSON-lines log file");

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run named identity checks");
  verify_cmd->add_option("--suite", ver.suite, "Suite name or all");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the permanent kernel");
  bench_cmd->add_option("--min", bench.min, "Smallest matrix order");
  bench_cmd->add_option("--max", bench.max, "Largest matrix order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (common.format.empty()) common.format = bench_cmd->parsed() ? "csv" : "json";
    std::vector<SuiteFailure> failures;
    std::string artifact;
    if (perm_cmd->parsed()) {
      artifact = run_permanent(common, perm);
    } else if (dist_cmd->parsed()) {
      artifact = run_distribution(common, dist);
    } else if (dual_cmd->parsed()) {
      artifact = run_duality(common, dual);
    } else if (hom_cmd->parsed()) {
      artifact = run_hom(common, hom);
    } else if (shot_cmd->parsed()) {
      artifact = run_scattershot_command(common, shot);
    } else if (verify_cmd->parsed()) {
      artifact = run_verify(common, ver, out, failures);
    } else if (bench_cmd->parsed()) {
      artifact = run_bench(common, bench);
    }
    write_artifact(common, artifact, out);
    if (!failures.empty()) {
      for (const auto& f : failures) err << "contract violation: " << f.message << "\n";
      return kExitContractViolation;
    }
    return kExitSuccess;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << " (deviation " << format_double(e.deviation())
        << ")\n";
    return kExitContractViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace fbsim::cli
