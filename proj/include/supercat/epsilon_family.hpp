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

#include <cmath>
#include <string>
#include <vector>

#include "supercat/catalysis.hpp"
#include "supercat/error.hpp"
#include "supercat/majorization.hpp"
#include "supercat/supercatalysis.hpp"

namespace supercat {

/// Minimal supercatalytic family whose gain tends to 1 as eps -> 0:
///   a = (1/2, 1/2 - eps, eps/2, eps/2)
///   b = (1 - 2eps - eps^2, eps + eps^2/2, eps - eps^2/2, eps^2)
///   c = ((1 - 2eps - eps^2)/(1 - eps), (eps + eps^2)/(1 - eps))
///   d = (1/2 + sqrt(eps), 1/2 - sqrt(eps))
/// c is the least entangled two-level catalyst of (a, b).
struct EpsilonFamily {
  double eps = 0.0;
  SchmidtVector a;
  SchmidtVector b;
  SchmidtVector c;
  SchmidtVector d;
};

namespace detail {

inline SchmidtVector ordered_or_throw(std::vector<double> raw, const char* name, double eps) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const bool bad = raw[i] < 0.0 || (i + 1 < raw.size() && raw[i] < raw[i + 1]);
    if (bad) {
      throw InvalidEpsilon("eps = " + format_double(eps) + " leaves " + name + " outside the ordered simplex");
    }
  }
  return make_schmidt(std::move(raw));
}

}  // namespace detail

inline EpsilonFamily epsilon_family(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidEpsilon("eps must be positive");
  if (eps >= 1.0) throw InvalidEpsilon("eps must be below 1");
  const double e2 = eps * eps;
  const double root = std::sqrt(eps);
  EpsilonFamily f;
  f.eps = eps;
  f.a = detail::ordered_or_throw({0.5, 0.5 - eps, eps / 2, eps / 2}, "a", eps);
  f.b = detail::ordered_or_throw({1 - 2 * eps - e2, eps + e2 / 2, eps - e2 / 2, e2}, "b", eps);
  f.c = detail::ordered_or_throw({(1 - 2 * eps - e2) / (1 - eps), (eps + e2) / (1 - eps)}, "c", eps);
  f.d = detail::ordered_or_throw({0.5 + root, 0.5 - root}, "d", eps);
  return f;
}

struct EpsilonVerdict {
  double eps = 0.0;
  SupercatalysisVerdict conditions;
  /// f2(a) - f2(b); positive means a does not convert to b.
  double f2_gap = 0.0;
  CatalystInterval interval;
  /// Only meaningful when `conditions.supercatalytic()`.
  double gain = 0.0;

  bool valid() const { return conditions.supercatalytic() && !conditions.consistency_error(); }
};

inline EpsilonVerdict verify_epsilon_family(const EpsilonFamily& f, const ComparisonPolicy& policy = {}) {
  EpsilonVerdict v;
  v.eps = f.eps;
  v.conditions = check_supercatalytic(f.a, f.b, f.c, f.d, policy);
  v.f2_gap = partial_sum(f.a, 2) - partial_sum(f.b, 2);
  const auto pair = make_catalytic_pair(f.a, f.b, policy);
  v.interval = pair.nontrivial ? rank2_catalyst_interval(pair) : CatalystInterval{1.0, 0.5, false};
  if (v.conditions.supercatalytic()) v.gain = (entropy(f.d) - entropy(f.c)) / (entropy(f.a) - entropy(f.b));
  return v;
}

/// Largest eps on a log grid over [min_eps, max_eps] below which every grid
/// point yields a valid supercatalytic quadruple. Returns 0 if even min_eps fails.
inline double empirical_epsilon_threshold(double min_eps = 1e-5, double max_eps = 0.25, int points_per_decade = 50,
                                          const ComparisonPolicy& policy = {}) {
  if (!(min_eps > 0.0) || !(max_eps > min_eps) || points_per_decade < 1) {
    throw InputError("invalid epsilon scan range");
  }
  const double step = std::pow(10.0, 1.0 / points_per_decade);
  double threshold = 0.0;
  for (double eps = min_eps; eps <= max_eps * (1 + 1e-12); eps *= step) {
    bool ok = false;
    try {
      ok = verify_epsilon_family(epsilon_family(eps), policy).valid();
    } catch (const InvalidEpsilon&) {
      ok = false;
    }
    if (!ok) break;
    threshold = eps;
  }
  return threshold;
}

}  // namespace supercat
