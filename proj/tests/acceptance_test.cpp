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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "supercat/epsilon_family.hpp"
#include "supercat/oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace supercat;
using testing::exact_pair;
using testing::float_pair;
using testing::kExamples;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string fmt(double x) { return format_double(x); }

const SweepResult& example_sweep(int i) {
  static std::vector<SweepResult> cache = [] {
    std::vector<SweepResult> out;
    for (const auto& ex : kExamples) out.push_back(tilde_gmax_sweep(exact_pair(ex), 200));
    return out;
  }();
  return cache[static_cast<std::size_t>(i)];
}

Outcome interval_oracle_equivalence() {
  Outcome r;
  const oracle::GridSpec spec{1e-3, 1e-9, 0};
  auto check = [&](const ExactCatalyticPair& pair, const std::string& label) {
    const auto closed = rank2_catalyst_interval(pair);
    r.require(closed.nonempty, label + ": closed form empty");
    const auto grid = oracle::grid_catalyst_interval(pair, spec);
    r.require(std::abs(grid.x_min - to_double(closed.x_min)) <= 1e-6, label + ": x_min differs from grid");
    r.require(std::abs(grid.x_max - to_double(closed.x_max)) <= 1e-6, label + ": x_max differs from grid");
    r.require(is_catalyst(pair, qubit_state(closed.x_min)), label + ": x_min fails exact catalyst check");
    r.require(is_catalyst(pair, qubit_state(closed.x_max)), label + ": x_max fails exact catalyst check");
  };
  for (const auto& ex : kExamples) check(exact_pair(ex), ex.name);
  std::mt19937_64 rng(1);
  int n = 0;
  while (n < 120) {
    const auto pair = testing::random_catalytic_pair(rng);
    // A grid cannot see an interval narrower than its finest step.
    if (to_double(Rational(rank2_catalyst_interval(pair).x_max - rank2_catalyst_interval(pair).x_min)) < 1e-6) {
      continue;
    }
    check(pair, "random pair " + std::to_string(n++));
  }
  r.detail = r.ok ? "4 examples + " + std::to_string(n) + " random pairs within 1e-6" : r.detail;
  return r;
}

Outcome example1_tightness() {
  Outcome r;
  const auto pair = exact_pair(kExamples[0]);
  r.require(majorizes(kron(pair.b, parse_schmidt<Rational>("0.6,0.4")), kron(pair.a, parse_schmidt<Rational>("0.625,0.375")),
                      ComparisonPolicy::exact()),
            "b⊗(0.6,0.4) does not majorize a⊗(0.625,0.375)");
  const auto& s = example_sweep(0);
  const double bound_at_least = s.envelope;
  r.require(std::abs(s.tilde_gmax - bound_at_least) <= 1e-6, "sweep max differs from bound");
  r.require(std::abs(s.tilde_gmax - 0.0744231663777699) <= 1e-9, "sweep max is not 0.0744");
  r.require(std::abs(s.tilde_gmax - 0.1) <= 0.05, "sweep max outside 0.1 ± 0.05");
  if (r.ok) r.detail = "tilde_gmax " + fmt(s.tilde_gmax) + " = bound " + fmt(bound_at_least);
  return r;
}

Outcome example2_anchor() {
  Outcome r;
  const auto& s = example_sweep(1);
  r.require(s.tilde_gmax > 0.0 && s.tilde_gmax < 0.25, "tilde_gmax outside (0, 0.25)");
  r.require(s.tilde_gmax <= s.miserly_gain + 1e-12, "an interior point beats the least entangled catalyst");
  r.require(s.argmax_x == s.x_max, "argmax not at x_max");
  if (r.ok) r.detail = "tilde_gmax " + fmt(s.tilde_gmax) + " at x_max " + fmt(s.x_max);
  return r;
}

Outcome example3_interior() {
  Outcome r;
  const auto& s = example_sweep(2);
  bool interior_beats = false;
  for (std::size_t i = 1; i + 1 < s.points.size(); ++i) interior_beats |= s.points[i].gmax > s.miserly_gain;
  r.require(interior_beats, "no interior sweep point beats the least entangled catalyst");
  r.require(std::abs(s.tilde_gmax - 0.1) <= 0.05, "tilde_gmax outside 0.1 ± 0.05");
  if (r.ok) {
    r.detail = "interior max " + fmt(s.tilde_gmax) + " at x=" + fmt(s.argmax_x) + " > miserly " + fmt(s.miserly_gain);
  }
  return r;
}

Outcome example4_failure_and_recovery() {
  Outcome r;
  const auto pair = exact_pair(kExamples[3]);
  r.require(gmax_given_c(pair, least_entangled_rank2_catalyst(pair)).gain == 0.0, "gmax at x_max is not 0");
  r.require(gmax_given_c(pair, most_entangled_rank2_catalyst(pair)).gain == 0.0, "gmax at x_min is not 0");
  const auto& s = example_sweep(3);
  double interior = 0.0;
  for (std::size_t i = 1; i + 1 < s.points.size(); ++i) interior = std::max(interior, s.points[i].gmax);
  r.require(interior > 0.02, "interior maximum not above 0.02");
  r.require(std::abs(s.tilde_gmax - 0.1) <= 0.05, "tilde_gmax outside 0.1 ± 0.05");
  const auto grid = oracle::grid_gmax_rank2(float_pair(kExamples[3]), make_schmidt({s.argmax_x, 1 - s.argmax_x}),
                                            oracle::GridSpec{1e-5, 1e-10, 0});
  r.require(std::abs(grid.gain - s.tilde_gmax) <= 1e-5, "grid oracle disagrees at the argmax");
  if (r.ok) r.detail = "endpoints 0, interior max " + fmt(s.tilde_gmax) + " (grid " + fmt(grid.gain) + ")";
  return r;
}

Outcome most_entangled_zero_gain() {
  Outcome r;
  for (const auto& ex : kExamples) {
    const auto pair = exact_pair(ex);
    const auto g = gmax_given_c(pair, most_entangled_rank2_catalyst(pair));
    r.require(g.gain == 0.0, std::string(ex.name) + ": gain " + fmt(g.gain));
    r.require(g.returned_rank_bound == 2, std::string(ex.name) + ": returned rank bound is not 2");
  }
  if (r.ok) r.detail = "gain exactly 0 for all four examples";
  return r;
}

Outcome bound_dominance() {
  Outcome r;
  std::size_t points = 0;
  for (int i = 0; i < 4; ++i) {
    for (const auto& p : example_sweep(i).points) {
      ++points;
      r.require(p.gmax <= p.bound + 1e-12,
                std::string(kExamples[i].name) + ": gmax " + fmt(p.gmax) + " > bound " + fmt(p.bound));
    }
  }
  if (r.ok) r.detail = std::to_string(points) + " sweep points";
  return r;
}

Outcome sweep_max_below_one() {
  Outcome r;
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, example_sweep(i).tilde_gmax);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto s = tilde_gmax_sweep(testing::random_catalytic_pair(rng), 25);
    worst = std::max(worst, s.tilde_gmax);
  }
  r.require(worst < 1 - 1e-6, "a sweep maximum reaches " + fmt(worst));
  if (r.ok) r.detail = "largest tilde_gmax " + fmt(worst) + " over 104 pairs";
  return r;
}

Outcome epsilon_family_checks() {
  Outcome r;
  double previous = -1.0;
  std::string gains;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const auto v = verify_epsilon_family(epsilon_family(eps));
    const std::string tag = "eps=" + fmt(eps);
    r.require(v.conditions.supercatalytic() && !v.conditions.consistency_error(), tag + ": conditions fail");
    r.require(v.gain > previous, tag + ": gain not increasing");
    previous = v.gain;
    r.require(v.interval.nonempty, tag + ": empty interval");
    r.require(std::abs(v.interval.x_min - (1 + eps) / 2) <= 1e-10, tag + ": x_min mismatch");
    r.require(std::abs(v.interval.x_max - (1 - 2 * eps - eps * eps) / (1 - eps)) <= 1e-10, tag + ": x_max mismatch");
    gains += (gains.empty() ? "" : ", ") + fmt(v.gain);
  }
  r.require(previous > 0.99, "gain at 1e-4 not above 0.99");
  if (r.ok) r.detail = "gains " + gains;
  return r;
}

Outcome swap_construction() {
  Outcome r;
  const auto pair = exact_pair(kExamples[0]);
  const auto swap = trivial_swap_construction(pair, parse_schmidt<Rational>("0.6,0.4"));
  r.require(kron(pair.a, swap.borrowed) == kron(pair.b, swap.returned), "sorted products differ");
  const auto v = check_supercatalytic(pair.a, pair.b, swap.borrowed, swap.returned, pair.policy);
  r.require(v.supercatalytic(), "swap quadruple fails a condition");
  // Products agree exactly; the gain itself is a ratio of floating-point logs.
  const double g = gain(pair.a, pair.b, swap.borrowed, swap.returned, pair.policy);
  r.require(std::abs(g - 1.0) <= 1e-12, "gain " + fmt(g));
  if (r.ok) r.detail = "products equal exactly, gain " + fmt(g);
  return r;
}

Outcome rank_reduction_chains() {
  Outcome r;
  const auto policy = ComparisonPolicy::exact();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> pick(0, 999);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rank = 3 + t % 3;
    ExactSchmidtVector d;
    do d = testing::random_exact_schmidt(rng, rank, 1009);
    while (schmidt_rank(d, policy) != rank);
    const Rational floor = std::max(d[0], Rational(1, 2));
    const Rational c1 = floor + (1 - floor) * Rational(pick(rng), 1000);
    const auto c = ExactSchmidtVector::from_sorted({c1, Rational(1 - c1)});
    const auto reduced = rank_reduce_returned(d, c, policy);
    r.require(nielsen_convertible(d, reduced, policy), "d -> d' fails at trial " + std::to_string(t));
    r.require(nielsen_convertible(reduced, c, policy), "d' -> c fails at trial " + std::to_string(t));
  }
  if (r.ok) r.detail = "1000 random (d, c) pairs, exact arithmetic";
  return r;
}

Outcome property_suites() {
  Outcome r;
  std::mt19937_64 rng(12);
  int configs = 0;
  for (int t = 0; t < 40; ++t) {
    const auto pair = testing::random_catalytic_pair(rng);
    const auto in = rank2_catalyst_interval(pair);
    for (int j = 0; j <= 4; ++j) {
      const auto c = qubit_state(Rational(in.x_min + (in.x_max - in.x_min) * Rational(j, 4)));
      const auto g = gmax_given_c(pair, c);
      if (g.gain == 0.0) continue;
      const double direct = gain(pair.a, pair.b, c, g.returned_state, pair.policy);
      r.require(direct >= 0.0 && direct <= 1.0, "gain " + fmt(direct) + " outside [0, 1]");
      ++configs;
    }
  }
  for (int t = 0; t < 300; ++t) {
    const auto u = testing::random_schmidt(rng, 1 + t % 5);
    const auto v = testing::random_schmidt(rng, 1 + t % 4);
    r.require(std::abs(entropy(kron(u, v)) - entropy(u) - entropy(v)) <= 1e-10, "entropy not additive");
    r.require(schmidt_rank(kron(u, v)) == schmidt_rank(u) * schmidt_rank(v), "rank not multiplicative");
  }
  for (int t = 0; t < 100; ++t) {
    const auto pair = testing::random_candidate_pair(rng);
    for (std::size_t k = 2; k <= 4; ++k) {
      r.require(!is_catalyst(pair, uniform_state<Rational>(k)), "maximally entangled state catalyzes");
    }
  }
  for (int t = 0; t < 200; ++t) {
    const auto u = testing::random_schmidt(rng, 4);
    const auto c = testing::random_schmidt(rng, 2);
    const auto uc = kron(u, c);
    for (std::size_t k = 1; k <= 8; ++k) {
      bool attained = false;
      for (std::size_t k2 = 0; 2 * k2 <= k; ++k2) {
        if (k - k2 > 4) continue;
        const double s = split_partial_sum(u, c, k - k2, k2);
        r.require(s <= partial_sum(uc, k) + 1e-12, "split sum exceeds f_k");
        attained |= std::abs(s - partial_sum(uc, k)) <= 1e-12;
      }
      r.require(attained, "no split attains f_k");
    }
  }
  if (r.ok) r.detail = std::to_string(configs) + " valid configurations, 300 products, 300 uniform states, 200 splits";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"closed-form catalyst interval matches grid oracle", interval_oracle_equivalence},
      {"example 1 bound is attained", example1_tightness},
      {"example 2 stays below 1/4, miserly optimal", example2_anchor},
      {"example 3 interior optimum", example3_interior},
      {"example 4 endpoints fail, interior gains", example4_failure_and_recovery},
      {"most entangled loan gains nothing", most_entangled_zero_gain},
      {"gmax never exceeds the bound", bound_dominance},
      {"two-level sweeps stay below 1", sweep_max_below_one},
      {"epsilon family", epsilon_family_checks},
      {"register swap reaches unit gain", swap_construction},
      {"rank reduction chains", rank_reduction_chains},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %-48s %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                secs);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
