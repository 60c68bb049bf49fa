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

#pragma once

#include <cstdint>
#include <optional>

#include "supercat/catalysis.hpp"
#include "supercat/error.hpp"
#include "supercat/majorization.hpp"
#include "supercat/supercatalysis.hpp"

// Brute-force verifiers. They only use kron and majorization checks, so they
// stay independent of the closed-form interval and the breakpoint optimizer
// they are used to certify.

namespace supercat::oracle {

struct GridSpec {
  double resolution = 1e-3;
  double refinement_tol = 1e-9;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(refinement_tol > 0.0) || !(refinement_tol <= resolution)) {
      throw InputError("grid spec needs 0 < refinement_tol <= resolution");
    }
  }
};

namespace detail {

// Bisects a verdict change between `good` and `bad` down to `tol`.
template <class Pred>
double bisect(double good, double bad, double tol, Pred&& pred) {
  while (std::abs(bad - good) > tol) {
    const double mid = 0.5 * (good + bad);
    (pred(mid) ? good : bad) = mid;
  }
  return good;
}

}  // namespace detail

/// Scans x over [1/2, 1] for catalysts (x, 1 - x) and bisects the first and
/// last verdict changes. When no grid point passes, the grid is refined tenfold
/// (down to 1e-6) before giving up.
inline CatalystInterval grid_catalyst_interval(const CatalyticPair& pair, const GridSpec& spec = {}) {
  spec.validate();
  ::supercat::detail::require_small_nontrivial(pair, "grid_catalyst_interval");
  auto passes = [&](double x) { return is_catalyst(pair, SchmidtVector::from_sorted({x, 1.0 - x})); };

  for (double res = spec.resolution; res >= 1e-6 * (1 - 1e-9); res /= 10) {
    const auto steps = static_cast<long>(std::ceil(0.5 / res));
    auto x_at = [&](long i) { return i >= steps ? 1.0 : 0.5 + static_cast<double>(i) * res; };
    long first = -1;
    long last = -1;
    for (long i = 0; i <= steps; ++i) {
      if (passes(x_at(i))) {
        if (first < 0) first = i;
        last = i;
      }
    }
    if (first < 0) continue;
    const double lo = first == 0 ? 0.5 : detail::bisect(x_at(first), x_at(first - 1), spec.refinement_tol, passes);
    const double hi = last == steps ? 1.0 : detail::bisect(x_at(last), x_at(last + 1), spec.refinement_tol, passes);
    return {lo, hi, true};
  }
  throw EmptyCatalystSet("grid scan found no Schmidt-rank-2 catalyst");
}

inline CatalystInterval grid_catalyst_interval(const ExactCatalyticPair& pair, const GridSpec& spec = {}) {
  return grid_catalyst_interval(make_catalytic_pair(pair.a.cast<double>(), pair.b.cast<double>(), ComparisonPolicy{}),
                                spec);
}

/// Scans y upward from 1/2 to c1 for the first two-level returned state d with
/// b ⊗ d ≻ a ⊗ c, bisecting back to the feasibility boundary. Gain 0 with
/// d = c when no y below c1 is feasible.
inline GainResult grid_gmax_rank2(const CatalyticPair& pair, const SchmidtVector& c, const GridSpec& spec = {}) {
  spec.validate();
  GainResult out;
  out.method = GainMethod::kGridApproximate;
  out.returned_state = c;
  out.feasible = true;
  out.returned_rank_bound = returned_rank_bound(pair, c);
  if (c.size() < 2 || schmidt_rank(c, pair.policy) > 2) return out;

  const auto ac = kron(pair.a, c);
  auto feasible = [&](double y) { return majorizes(kron(pair.b, SchmidtVector::from_sorted({y, 1.0 - y})), ac, pair.policy); };
  const double c1 = c[0];
  const auto steps = static_cast<long>(std::ceil((c1 - 0.5) / spec.resolution));
  double y_best = c1;
  for (long i = 0; i <= steps; ++i) {
    const double y = i >= steps ? c1 : 0.5 + static_cast<double>(i) * spec.resolution;
    if (feasible(y)) {
      y_best = i == 0 ? y : detail::bisect(y, 0.5 + static_cast<double>(i - 1) * spec.resolution, spec.refinement_tol, feasible);
      break;
    }
  }
  if (y_best < c1) {
    out.returned_state = SchmidtVector::from_sorted({y_best, 1.0 - y_best});
    out.gain = (entropy(out.returned_state) - entropy(c)) / (entropy(pair.a) - entropy(pair.b));
  }
  return out;
}

}  // namespace supercat::oracle
