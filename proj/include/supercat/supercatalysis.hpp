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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "supercat/catalysis.hpp"
#include "supercat/detail/simplex_search.hpp"
#include "supercat/error.hpp"
#include "supercat/majorization.hpp"
#include "supercat/schmidt_vector.hpp"

namespace supercat {

/// Per-condition verdict for a candidate supercatalytic quadruple (a, b, c, d).
struct SupercatalysisVerdict {
  bool a_not_convertible = false;
  bool states_differ = false;
  bool main_conversion = false;    // a ⊗ c -> b ⊗ d
  bool returned_converts = false;  // d -> c
  bool borrowed_is_catalyst = false;
  bool returned_is_catalyst = false;
  /// First k with f_k(a ⊗ c) > f_k(b ⊗ d), when the main conversion fails.
  std::optional<std::size_t> main_violation_k;

  bool supercatalytic() const { return a_not_convertible && states_differ && main_conversion && returned_converts; }

  /// A valid quadruple whose borrowed or returned state is not a catalyst
  /// would contradict the chain a⊗d -> a⊗c -> b⊗d -> b⊗c.
  bool consistency_error() const { return supercatalytic() && !(borrowed_is_catalyst && returned_is_catalyst); }
};

template <Scalar T>
SupercatalysisVerdict check_supercatalytic(const BasicSchmidtVector<T>& a, const BasicSchmidtVector<T>& b,
                                           const BasicSchmidtVector<T>& c, const BasicSchmidtVector<T>& d,
                                           const ComparisonPolicy& policy = {}) {
  const auto pair = make_catalytic_pair(a, b, policy);
  SupercatalysisVerdict v;
  v.a_not_convertible = pair.nontrivial;
  v.states_differ = !same_ordered_vector(c, d, policy);
  v.main_violation_k = first_majorization_violation(kron(pair.b, d), kron(pair.a, c), policy);
  v.main_conversion = !v.main_violation_k.has_value();
  v.returned_converts = nielsen_convertible(d, c, policy);
  v.borrowed_is_catalyst = is_catalyst(pair, c);
  v.returned_is_catalyst = is_catalyst(pair, d);
  return v;
}

/// G = (E(d) - E(c)) / (E(a) - E(b)) for a valid configuration.
///
/// d = c is accepted and gives 0, the ordinary catalytic case.
template <Scalar T>
double gain(const BasicSchmidtVector<T>& a, const BasicSchmidtVector<T>& b, const BasicSchmidtVector<T>& c,
            const BasicSchmidtVector<T>& d, const ComparisonPolicy& policy = {}) {
  const auto v = check_supercatalytic(a, b, c, d, policy);
  std::string failed;
  if (!v.a_not_convertible) failed += " a->b already holds;";
  if (!v.main_conversion) failed += " a⊗c -> b⊗d fails at k=" + std::to_string(*v.main_violation_k) + ";";
  if (!v.returned_converts) failed += " d -> c fails;";
  if (!failed.empty()) throw InvalidConfiguration("invalid supercatalytic configuration:" + failed);
  const double denominator = entropy(a) - entropy(b);
  if (!(denominator > policy.strict_margin<T>()) || denominator <= 0.0) {
    throw ZeroDenominator("E(a) - E(b) is not positive");
  }
  return (entropy(d) - entropy(c)) / denominator;
}

enum class GainMethod { kExactPiecewiseLinear, kGridApproximate };

inline const char* to_string(GainMethod m) {
  return m == GainMethod::kExactPiecewiseLinear ? "exact-piecewise-linear" : "grid-approximate";
}

template <Scalar T>
struct BasicGainResult {
  double gain = 0.0;
  BasicSchmidtVector<T> returned_state;
  bool feasible = false;
  GainMethod method = GainMethod::kExactPiecewiseLinear;
  std::size_t returned_rank_bound = 0;
};

using GainResult = BasicGainResult<double>;

namespace detail {

template <Scalar T>
void require_gain_inputs(const BasicCatalyticPair<T>& pair, const BasicSchmidtVector<T>& c, const char* op) {
  if (!pair.nontrivial) throw PreconditionViolated(std::string(op) + ": a already converts to b");
  if (!is_catalyst(pair, c)) throw NotACatalyst(std::string(op) + ": the borrowed state is not a catalyst");
  if (!(entropy(pair.a) - entropy(pair.b) > pair.policy.template strict_margin<T>())) {
    throw ZeroDenominator(std::string(op) + ": E(a) - E(b) is not positive");
  }
}

// g_k(y) = f_k(b ⊗ (y, 1-y)) - f_k(a ⊗ c) for k = 1..n.
template <Scalar T>
std::vector<T> rank2_slack(const BasicSchmidtVector<T>& b, const T& y, const std::vector<T>& target) {
  const auto bd = kron(b, BasicSchmidtVector<T>::from_sorted({y, T(T(1) - y)}));
  auto f = partial_sums(bd, target.size());
  for (std::size_t k = 0; k < f.size(); ++k) f[k] -= target[k];
  return f;
}

}  // namespace detail

/// Smallest y in [1/2, c1] with b ⊗ (y, 1-y) ≻ a ⊗ c, i.e. the most entangled
/// two-level returned state.
///
/// The entries of b ⊗ (y, 1-y) only change order where b_i y = b_j (1-y), so
/// between consecutive breakpoints every partial sum is affine in y. On each
/// such segment the feasible set is an intersection of half-lines; segments
/// are visited left to right and the first non-empty one yields the optimum.
/// Roots are computed exactly for rational input.
template <Scalar T>
std::optional<T> min_feasible_rank2_returned(const BasicCatalyticPair<T>& pair, const BasicSchmidtVector<T>& c) {
  if (schmidt_rank(c, pair.policy) > 2) return std::nullopt;
  const ComparisonPolicy& policy = pair.policy;
  const double tol = policy.eq_tolerance<T>();
  auto nonnegative = [tol](const T& g) {
    if constexpr (is_exact_v<T>) {
      return g >= 0;
    } else {
      return g >= -tol;
    }
  };
  const T lo = T(1) / 2;
  const T hi = c[0];

  const auto ac = kron(pair.a, c);
  const std::size_t n = std::max(ac.size(), 2 * pair.b.size());
  const auto target = partial_sums(ac, n);

  std::set<T> breaks{lo, hi};
  for (const T& bi : pair.b) {
    for (const T& bj : pair.b) {
      const T s = bi + bj;
      if (s <= 0) continue;
      const T y = bj / s;
      if (y > lo && y < hi) breaks.insert(y);
    }
  }
  const std::vector<T> pts(breaks.begin(), breaks.end());

  auto feasible_at = [&](const T& y) {
    return majorizes(kron(pair.b, BasicSchmidtVector<T>::from_sorted({y, T(T(1) - y)})), ac, policy);
  };
  if (pts.size() == 1) return feasible_at(pts[0]) ? std::optional<T>(pts[0]) : std::nullopt;

  for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
    const T& p = pts[s];
    const T& q = pts[s + 1];
    const auto gp = detail::rank2_slack(pair.b, p, target);
    const auto gq = detail::rank2_slack(pair.b, q, target);
    T left = p;
    T right = q;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      const bool p_ok = nonnegative(gp[k]);
      const bool q_ok = nonnegative(gq[k]);
      if (p_ok && q_ok) continue;
      if (!p_ok && !q_ok) {
        ok = false;
        break;
      }
      // Exactly one end violates, so gq != gp.
      T root = T(p + (q - p) * (T(-gp[k]) / T(gq[k] - gp[k])));
      root = std::clamp(root, p, q);
      if (!p_ok) {
        left = std::max(left, root);
      } else {
        right = std::min(right, root);
      }
    }
    if (!ok) continue;
    if (left > right) {
      if constexpr (is_exact_v<T>) continue;
      if (to_double(left) - to_double(right) > 1e-15) continue;
      left = right;
    }
    if (feasible_at(left)) return left;
  }
  // c itself is always feasible.
  return feasible_at(hi) ? std::optional<T>(hi) : std::nullopt;
}

/// G_max(a, b, c): best gain over returned states d with SR(d) bounded by
/// floor(SR(a) SR(c) / SR(b)), b ⊗ d ≻ a ⊗ c and d -> c.
///
/// Two-level returned states are handled exactly. A larger rank bound adds an
/// ordered-simplex search (seeded with the exact two-level answer) and marks
/// the result grid-approximate. When nothing beats c the gain is 0 with d = c.
template <Scalar T>
BasicGainResult<T> gmax_given_c(const BasicCatalyticPair<T>& pair, const BasicSchmidtVector<T>& c,
                                const SimplexSearch& budget = {}) {
  detail::require_gain_inputs(pair, c, "gmax_given_c");
  const ComparisonPolicy& policy = pair.policy;
  const double denominator = entropy(pair.a) - entropy(pair.b);
  const double entropy_c = entropy(c);
  const std::size_t rank_bound = returned_rank_bound(pair, c);

  BasicGainResult<T> result;
  result.returned_rank_bound = rank_bound;
  result.feasible = true;
  result.returned_state = c;
  result.method = GainMethod::kExactPiecewiseLinear;

  std::optional<BasicSchmidtVector<T>> best;
  if (rank_bound >= 2) {
    if (auto y = min_feasible_rank2_returned(pair, c)) {
      best = BasicSchmidtVector<T>::from_sorted({*y, T(T(1) - *y)});
    }
  }
  if (rank_bound >= 3) {
    const auto ac = kron(pair.a, c);
    std::vector<BasicSchmidtVector<T>> seeds{c};
    if (best) seeds.push_back(*best);
    auto found = detail::search_ordered_simplex<T>(
        rank_bound, budget,
        [&](const BasicSchmidtVector<T>& d) {
          return nielsen_convertible(d, c, policy) && majorizes(kron(pair.b, d), ac, policy);
        },
        [](const BasicSchmidtVector<T>& d) { return entropy(d); }, std::span<const BasicSchmidtVector<T>>(seeds));
    if (found && (!best || entropy(*found) > entropy(*best))) best = found;
    result.method = GainMethod::kGridApproximate;
  }
  if (best && entropy(*best) > entropy_c && !same_ordered_vector(*best, c, policy)) {
    result.returned_state = *best;
    result.gain = (entropy(*best) - entropy_c) / denominator;
  }
  return result;
}

/// Upper bound on G_max(a, b, c): (E_r'(a, b) - E(c)) / (E(a) - E(b)) with r'
/// the returned-rank bound. With r' = 2 on a 4-dimensional pair this is
/// (h(x_min) - E(c)) / (E(a) - E(b)).
template <Scalar T>
double bound_gmax(const BasicCatalyticPair<T>& pair, const BasicSchmidtVector<T>& c,
                  const SimplexSearch& budget = {}) {
  detail::require_gain_inputs(pair, c, "bound_gmax");
  const std::size_t r = returned_rank_bound(pair, c);
  const double e_r = max_catalyst_entropy(pair, r, budget).bits;
  return (e_r - entropy(c)) / (entropy(pair.a) - entropy(pair.b));
}

/// One borrowed state (x, 1-x) of a sweep over the rank-2 catalyst interval.
struct SweepPoint {
  double x = 0.0;
  double entropy_c = 0.0;
  double gmax = 0.0;
  double bound = 0.0;
};

struct SweepOptions {
  /// Zoom rounds around the best sweep point.
  int refine_rounds = 4;
  /// Evaluations per zoom round.
  int refine_points = 21;
  SimplexSearch budget;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double x_min = 0.0;
  double x_max = 0.0;
  /// Largest gain found, refinement included.
  double tilde_gmax = 0.0;
  double argmax_x = 0.0;
  /// Gain when lending the least entangled catalyst.
  double miserly_gain = 0.0;
  /// (h(x_min) - h(x_max)) / (E(a) - E(b)), the upper envelope.
  double envelope = 0.0;
  GainMethod method = GainMethod::kExactPiecewiseLinear;
  SweepOptions options;
};

/// Samples G_max(a, b, (x, 1-x)) and its bound at `n_points` uniform x values
/// over [x_min, x_max], endpoints included, then zooms in on the best point.
/// The maximum is a certified lower bound on the minimal-scenario optimum.
template <Scalar T>
SweepResult tilde_gmax_sweep(const BasicCatalyticPair<T>& pair, std::size_t n_points,
                             const SweepOptions& options = {}) {
  if (n_points < 2) throw InputError("a sweep needs at least two points");
  const auto interval = rank2_catalyst_interval(pair);
  if (!interval.nonempty) throw EmptyCatalystSet("no Schmidt-rank-2 catalyst exists for this pair");

  SweepResult out;
  out.options = options;
  out.x_min = to_double(interval.x_min);
  out.x_max = to_double(interval.x_max);
  const double denominator = entropy(pair.a) - entropy(pair.b);
  out.envelope = (binary_entropy(out.x_min) - binary_entropy(out.x_max)) / denominator;

  auto evaluate = [&](const T& x) {
    const auto c = qubit_state(x);
    const auto g = gmax_given_c(pair, c, options.budget);
    if (g.method == GainMethod::kGridApproximate) out.method = GainMethod::kGridApproximate;
    return SweepPoint{to_double(x), entropy(c), g.gain, bound_gmax(pair, c, options.budget)};
  };
  auto x_at = [](const T& lo, const T& hi, std::size_t i, std::size_t n) {
    return T(lo + (hi - lo) * T(static_cast<long>(i)) / T(static_cast<long>(n - 1)));
  };

  std::vector<T> xs;
  for (std::size_t i = 0; i < n_points; ++i) {
    xs.push_back(i + 1 == n_points ? interval.x_max : x_at(interval.x_min, interval.x_max, i, n_points));
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < n_points; ++i) {
    out.points.push_back(evaluate(xs[i]));
    if (out.points[i].gmax > out.points[best].gmax) best = i;
  }
  out.miserly_gain = out.points.back().gmax;
  out.tilde_gmax = out.points[best].gmax;
  out.argmax_x = out.points[best].x;

  T lo = xs[best == 0 ? 0 : best - 1];
  T hi = xs[std::min(best + 1, n_points - 1)];
  const auto m = static_cast<std::size_t>(std::max(options.refine_points, 3));
  for (int round = 0; round < options.refine_rounds && lo < hi; ++round) {
    std::vector<T> local_xs;
    std::vector<double> local_gain;
    for (std::size_t i = 0; i < m; ++i) {
      local_xs.push_back(i + 1 == m ? hi : x_at(lo, hi, i, m));
      const auto pt = evaluate(local_xs.back());
      local_gain.push_back(pt.gmax);
      if (pt.gmax > out.tilde_gmax) {
        out.tilde_gmax = pt.gmax;
        out.argmax_x = pt.x;
      }
    }
    const auto local = static_cast<std::size_t>(std::max_element(local_gain.begin(), local_gain.end()) -
                                                local_gain.begin());
    lo = local_xs[local == 0 ? 0 : local - 1];
    hi = local_xs[std::min(local + 1, m - 1)];
  }
  return out;
}

/// Replaces a returned state of rank >= 3 by the rank-3 state
/// (c1, (1-c1)/2 + alpha, (1-c1)/2 - alpha), alpha = max{0, d1 + d2 - c1/2 - 1/2},
/// which satisfies d -> d' -> c.
template <Scalar T>
BasicSchmidtVector<T> rank_reduce_returned(const BasicSchmidtVector<T>& d, const BasicSchmidtVector<T>& c,
                                           const ComparisonPolicy& policy = {}) {
  if (schmidt_rank(d, policy) < 3) throw PreconditionViolated("rank_reduce_returned: d needs Schmidt rank >= 3");
  if (schmidt_rank(c, policy) != 2) throw PreconditionViolated("rank_reduce_returned: c needs Schmidt rank 2");
  if (!nielsen_convertible(d, c, policy)) throw PreconditionViolated("rank_reduce_returned: d does not convert to c");
  const T c1 = c[0];
  const T alpha = std::max(T(0), T(d[0] + d[1] - c1 / 2 - T(1) / 2));
  const T half_rest = (T(1) - c1) / 2;
  return BasicSchmidtVector<T>::from_sorted({c1, T(half_rest + alpha), T(half_rest - alpha)});
}

/// Borrowed and returned states of the register-swap protocol.
template <Scalar T>
struct SwapConstruction {
  BasicSchmidtVector<T> borrowed;  // c ⊗ b
  BasicSchmidtVector<T> returned;  // c ⊗ a
};

/// Lending c ⊗ b and receiving c ⊗ a: a local swap of the main register with
/// the b factor, which recovers all the entanglement lost by the main system.
template <Scalar T>
SwapConstruction<T> trivial_swap_construction(const BasicCatalyticPair<T>& pair, const BasicSchmidtVector<T>& c) {
  if (!is_catalyst(pair, c)) throw NotACatalyst("trivial_swap_construction: c is not a catalyst");
  return {kron(c, pair.b), kron(c, pair.a)};
}

}  // namespace supercat
