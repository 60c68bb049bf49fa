// Copyright 2026 The Supercat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: convertibility checks, catalyst ranges, gains,
// gain sweeps, the epsilon family and the four worked examples.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "supercat/io.hpp"
#include "supercat/supercat.hpp"

namespace fs = std::filesystem;
using supercat::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerifyFailed = 3;

constexpr double kIntervalOracleTol = 1e-6;
constexpr double kGainOracleTol = 1e-5;

struct Options {
  std::string a;
  std::string b;
  std::string c;
  std::string input;
  std::string out;
  std::vector<std::string> eps = {"1e-2", "1e-3", "1e-4"};
  std::size_t points = 200;
  bool exact = false;
  bool verify = false;
  bool threshold = false;
};

struct Example {
  const char* name;
  const char* a;
  const char* b;
};

constexpr Example kExamples[] = {
    {"example1", "0.4,0.4,0.1,0.1", "0.5,0.25,0.25,0"},
    {"example2", "0.4,0.36,0.14,0.1", "0.5,0.25,0.25,0"},
    {"example3", "0.41,0.38,0.12,0.09", "0.5,0.25,0.25,0"},
    {"example4", "0.88,0.08,0.02,0.02", "0.9,0.05,0.05,0"},
};

class VerifyFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

supercat::ComparisonPolicy policy_for(const Options& opt) {
  return opt.exact ? supercat::ComparisonPolicy::exact() : supercat::ComparisonPolicy{};
}

// Vectors come from --a/--b/--c or from the same keys of an --input JSON file.
template <supercat::Scalar T>
std::optional<supercat::BasicSchmidtVector<T>> read_vector(const Options& opt, const std::string& flag_value,
                                                           const char* key) {
  const auto policy = policy_for(opt);
  if (!flag_value.empty()) return supercat::parse_schmidt<T>(flag_value, policy);
  if (!opt.input.empty()) {
    std::ifstream in(opt.input);
    if (!in) throw supercat::InputError("cannot open " + opt.input);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw supercat::InputError(std::string("bad JSON input: ") + e.what());
    }
    if (j.contains(key)) return supercat::io::schmidt_from_json<T>(j.at(key), policy);
  }
  return std::nullopt;
}

template <supercat::Scalar T>
supercat::BasicSchmidtVector<T> require_vector(const Options& opt, const std::string& flag_value, const char* key) {
  auto v = read_vector<T>(opt, flag_value, key);
  if (!v) throw supercat::InputError(std::string("missing --") + key);
  return *v;
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw supercat::InputError("cannot write " + path.string());
  os << content;
}

supercat::io::RunManifest manifest_for(const std::string& command, const Options& opt) {
  supercat::io::RunManifest m;
  m.command = command;
  m.policy = policy_for(opt);
  m.inputs = json::object();
  if (!opt.a.empty()) m.inputs["a"] = opt.a;
  if (!opt.b.empty()) m.inputs["b"] = opt.b;
  if (!opt.c.empty()) m.inputs["c"] = opt.c;
  if (!opt.input.empty()) m.inputs["input"] = opt.input;
  m.inputs["points"] = opt.points;
  m.inputs["exact"] = opt.exact;
  m.inputs["verify"] = opt.verify;
  return m;
}

template <supercat::Scalar T>
int convert_check(const Options& opt) {
  const auto policy = policy_for(opt);
  const auto a = require_vector<T>(opt, opt.a, "a");
  const auto b = require_vector<T>(opt, opt.b, "b");
  const std::size_t n = std::max(a.size(), b.size());
  const auto fa = supercat::partial_sums(a, n);
  const auto fb = supercat::partial_sums(b, n);
  json rows = json::array();
  std::vector<std::size_t> violated;
  std::cout << "k  f_k(a)  f_k(b)  ok\n";
  for (std::size_t k = 0; k < n; ++k) {
    const bool ok = supercat::leq(fa[k], fb[k], policy);
    if (!ok) violated.push_back(k + 1);
    std::cout << k + 1 << "  " << supercat::format_double(supercat::to_double(fa[k])) << "  "
              << supercat::format_double(supercat::to_double(fb[k])) << "  " << (ok ? "yes" : "NO") << '\n';
    rows.push_back({{"k", k + 1},
                    {"f_a", supercat::to_double(fa[k])},
                    {"f_b", supercat::to_double(fb[k])},
                    {"ok", ok}});
  }
  const bool convertible = violated.empty();
  if (convertible) {
    std::cout << "convertible\n";
  } else {
    std::cout << "not convertible, violated at k=" << violated.front() << '\n';
  }
  json verdict = {{"convertible", convertible}, {"violated_at", violated}, {"partial_sums", rows}};
  std::cout << verdict.dump() << '\n';
  if (!opt.out.empty()) write_file(opt.out, verdict.dump(2) + "\n");
  return kExitOk;
}

template <supercat::Scalar T>
supercat::BasicCatalyticPair<T> read_pair(const Options& opt) {
  return supercat::make_catalytic_pair(require_vector<T>(opt, opt.a, "a"), require_vector<T>(opt, opt.b, "b"),
                                       policy_for(opt));
}

template <supercat::Scalar T>
json verify_interval(const supercat::BasicCatalyticPair<T>& pair, const supercat::BasicCatalystInterval<T>& closed) {
  json report = {{"tolerance", kIntervalOracleTol}};
  try {
    const auto grid = supercat::oracle::grid_catalyst_interval(pair);
    report["grid"] = supercat::io::to_json(grid);
    const bool agree = closed.nonempty && std::abs(grid.x_min - supercat::to_double(closed.x_min)) <= kIntervalOracleTol &&
                       std::abs(grid.x_max - supercat::to_double(closed.x_max)) <= kIntervalOracleTol;
    report["agree"] = agree;
  } catch (const supercat::EmptyCatalystSet&) {
    report["grid"] = nullptr;
    report["agree"] = !closed.nonempty;
  }
  return report;
}

template <supercat::Scalar T>
int catalyst_range(const Options& opt) {
  const auto pair = read_pair<T>(opt);
  const auto interval = supercat::rank2_catalyst_interval(pair);
  json out = supercat::io::to_json(interval);
  if constexpr (supercat::is_exact_v<T>) {
    out["x_min_exact"] = supercat::format_rational(interval.x_min);
    out["x_max_exact"] = supercat::format_rational(interval.x_max);
  }
  bool ok = true;
  if (opt.verify) {
    out["oracle"] = verify_interval(pair, interval);
    ok = out["oracle"]["agree"].get<bool>();
  }
  std::cout << out.dump() << '\n';
  if (!opt.out.empty()) write_file(opt.out, out.dump(2) + "\n");
  if (!ok) throw VerifyFailed("closed-form interval disagrees with the grid oracle");
  return kExitOk;
}

template <supercat::Scalar T>
int gain_for_c(const Options& opt) {
  const auto pair = read_pair<T>(opt);
  const auto c = require_vector<T>(opt, opt.c, "c");
  const auto result = supercat::gmax_given_c(pair, c);
  json out = supercat::io::to_json(result);
  out["bound"] = supercat::bound_gmax(pair, c);
  bool ok = true;
  if (opt.verify && c.size() == 2 && result.returned_rank_bound == 2) {
    const auto grid =
        supercat::oracle::grid_gmax_rank2(supercat::make_catalytic_pair(pair.a.template cast<double>(),
                                                                        pair.b.template cast<double>()),
                                          c.template cast<double>());
    ok = std::abs(grid.gain - result.gain) <= kGainOracleTol;
    out["oracle"] = {{"grid_gain", grid.gain}, {"tolerance", kGainOracleTol}, {"agree", ok}};
  }
  std::cout << out.dump() << '\n';
  if (!opt.out.empty()) write_file(opt.out, out.dump(2) + "\n");
  if (!ok) throw VerifyFailed("exact gain disagrees with the grid oracle");
  return kExitOk;
}

// Runs the sweep and writes `<csv>`, `<csv stem>.summary.json` and
// `<csv stem>.manifest.json`. Returns the summary.
template <supercat::Scalar T>
json run_sweep(const supercat::BasicCatalyticPair<T>& pair, const Options& opt, const std::string& command,
               const std::optional<fs::path>& csv_path) {
  const auto sweep = supercat::tilde_gmax_sweep(pair, opt.points);
  json summary = supercat::io::summary_json(sweep);
  summary["a"] = supercat::io::to_json(pair.a);
  summary["b"] = supercat::io::to_json(pair.b);
  bool bound_ok = true;
  for (const auto& p : sweep.points) bound_ok = bound_ok && p.gmax <= p.bound + pair.policy.tol_eq;
  summary["gmax_within_bound"] = bound_ok;

  bool ok = true;
  if (opt.verify) {
    const auto interval = supercat::rank2_catalyst_interval(pair);
    json report = {{"interval", verify_interval(pair, interval)}};
    ok = report["interval"]["agree"].get<bool>();
    const auto float_pair =
        supercat::make_catalytic_pair(pair.a.template cast<double>(), pair.b.template cast<double>());
    double worst = 0.0;
    for (const auto& p : sweep.points) {
      const auto g = supercat::oracle::grid_gmax_rank2(float_pair, supercat::SchmidtVector::from_sorted({p.x, 1.0 - p.x}));
      worst = std::max(worst, std::abs(g.gain - p.gmax));
    }
    report["gain_max_abs_diff"] = worst;
    report["gain_tolerance"] = kGainOracleTol;
    ok = ok && worst <= kGainOracleTol;
    report["agree"] = ok;
    summary["oracle"] = report;
  }

  std::ostringstream csv;
  supercat::io::write_sweep_csv(csv, sweep);
  if (csv_path) {
    fs::path base = *csv_path;
    base.replace_extension();
    const fs::path summary_path = base.string() + ".summary.json";
    const fs::path manifest_path = base.string() + ".manifest.json";
    auto manifest = manifest_for(command, opt);
    manifest.inputs["a"] = supercat::io::to_json(pair.a);
    manifest.inputs["b"] = supercat::io::to_json(pair.b);
    manifest.outputs = {csv_path->string(), summary_path.string(), manifest_path.string()};
    write_file(*csv_path, csv.str());
    write_file(summary_path, summary.dump(2) + "\n");
    write_file(manifest_path, manifest.to_json().dump(2) + "\n");
  } else {
    std::cout << csv.str();
  }
  if (!ok) throw VerifyFailed("sweep disagrees with the grid oracle");
  return summary;
}

template <supercat::Scalar T>
int gain_sweep(const Options& opt) {
  const auto pair = read_pair<T>(opt);
  const auto csv = opt.out.empty() ? std::nullopt : std::optional<fs::path>(opt.out);
  const json summary = run_sweep(pair, opt, "gain-sweep", csv);
  (csv ? std::cout : std::cerr) << summary.dump() << '\n';
  return kExitOk;
}

int epsilon_family(const Options& opt) {
  json out = json::array();
  int code = kExitOk;
  for (const auto& text : opt.eps) {
    const double eps = supercat::parse_double(text);
    try {
      out.push_back(supercat::io::to_json(supercat::verify_epsilon_family(supercat::epsilon_family(eps))));
    } catch (const supercat::InvalidEpsilon& e) {
      out.push_back({{"eps", eps}, {"error", "InvalidEpsilon"}, {"message", e.what()}, {"valid", false}});
      code = kExitPrecondition;
    }
  }
  json doc = {{"verdicts", out}};
  if (opt.threshold) doc["empirical_threshold"] = supercat::empirical_epsilon_threshold();
  std::cout << doc.dump() << '\n';
  if (!opt.out.empty()) {
    write_file(opt.out, doc.dump(2) + "\n");
    auto manifest = manifest_for("epsilon-family", opt);
    manifest.inputs["eps"] = opt.eps;
    fs::path m = opt.out;
    m.replace_extension(".manifest.json");
    manifest.outputs = {opt.out, m.string()};
    write_file(m, manifest.to_json().dump(2) + "\n");
  }
  return code;
}

template <supercat::Scalar T>
int examples(const Options& opt) {
  const fs::path dir = opt.out.empty() ? fs::path("examples_out") : fs::path(opt.out);
  json all = json::array();
  for (const auto& ex : kExamples) {
    const auto policy = policy_for(opt);
    const auto pair = supercat::make_catalytic_pair(supercat::parse_schmidt<T>(ex.a, policy),
                                                    supercat::parse_schmidt<T>(ex.b, policy), policy);
    json summary = run_sweep(pair, opt, std::string("examples ") + ex.name, dir / (std::string(ex.name) + ".csv"));
    summary["name"] = ex.name;
    all.push_back(summary);
  }
  std::cout << all.dump() << '\n';
  return kExitOk;
}

template <supercat::Scalar T>
int dispatch(const std::string& command, const Options& opt) {
  if (command == "convert-check") return convert_check<T>(opt);
  if (command == "catalyst-range") return catalyst_range<T>(opt);
  if (command == "gain") return gain_for_c<T>(opt);
  if (command == "gain-sweep") return gain_sweep<T>(opt);
  if (command == "examples") return examples<T>(opt);
  return epsilon_family(opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supercat: entanglement catalysis and supercatalysis at the Schmidt-vector level"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--exact", opt.exact, "Use exact rational arithmetic");
    sub->add_option("--out", opt.out, "Output file (or directory for `examples`)");
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--a", opt.a, "Input state, e.g. 0.4,0.4,0.1,0.1 or 2/5,2/5,1/10,1/10");
    sub->add_option("--b", opt.b, "Target state");
    sub->add_option("--input", opt.input, "JSON file with keys a, b and optionally c");
  };

  auto* convert = app.add_subcommand("convert-check", "Nielsen convertibility with the partial-sum table");
  add_pair(convert);
  add_common(convert);

  auto* range = app.add_subcommand("catalyst-range", "Interval of Schmidt-rank-2 catalysts");
  add_pair(range);
  add_common(range);
  range->add_flag("--verify", opt.verify, "Cross-check against the grid oracle");

  auto* gain = app.add_subcommand("gain", "Maximal gain for a fixed borrowed state");
  add_pair(gain);
  add_common(gain);
  gain->add_option("--c", opt.c, "Borrowed state");
  gain->add_flag("--verify", opt.verify, "Cross-check against the grid oracle");

  auto* sweep = app.add_subcommand("gain-sweep", "Gain and bound over the rank-2 catalyst interval");
  add_pair(sweep);
  add_common(sweep);
  sweep->add_option("--points", opt.points, "Number of uniformly spaced borrowed states")->check(CLI::Range(2, 100000));
  sweep->add_flag("--verify", opt.verify, "Cross-check against the grid oracles");

  auto* eps = app.add_subcommand("epsilon-family", "Verify the near-maximal-gain family");
  eps->add_option("--eps", opt.eps, "Comma-separated eps values")->delimiter(',');
  eps->add_flag("--threshold", opt.threshold, "Also report the empirical validity threshold");
  eps->add_option("--out", opt.out, "Output JSON file");

  auto* ex = app.add_subcommand("examples", "Run the four worked examples and write CSV/JSON artifacts");
  add_common(ex);
  ex->add_option("--points", opt.points, "Sweep points per example")->check(CLI::Range(2, 100000));
  ex->add_flag("--verify", opt.verify, "Cross-check against the grid oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return opt.exact ? dispatch<supercat::Rational>(command, opt) : dispatch<double>(command, opt);
  } catch (const VerifyFailed& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const supercat::PreconditionViolated& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const supercat::InputError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
}
