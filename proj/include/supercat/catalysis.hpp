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
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "supercat/detail/simplex_search.hpp"
#include "supercat/error.hpp"
#include "supercat/majorization.hpp"
#include "supercat/schmidt_vector.hpp"

namespace supercat {

/// The main-system states of a transformation a -> b, padded to equal length.
template <Scalar T>
struct BasicCatalyticPair {
  BasicSchmidtVector<T> a;
  BasicSchmidtVector<T> b;
  ComparisonPolicy policy;
  /// a does not convert to b without help.
  bool nontrivial = false;
};

using CatalyticPair = BasicCatalyticPair<double>;
using ExactCatalyticPair = BasicCatalyticPair<Rational>;

template <Scalar T>
BasicCatalyticPair<T> make_catalytic_pair(const BasicSchmidtVector<T>& a, const BasicSchmidtVector<T>& b,
                                          const ComparisonPolicy& policy = {}) {
  policy.validate();
  const std::size_t n = std::max(a.size(), b.size());
  BasicCatalyticPair<T> pair{a.padded(n), b.padded(n), policy, false};
  pair.nontrivial = !nielsen_convertible(pair.a, pair.b, policy);
  return pair;
}

/// Range [x_min, x_max] of x such that (x, 1 - x) catalyzes a 4-dimensional pair.
template <Scalar T>
struct BasicCatalystInterval {
  T x_min;
  T x_max;
  bool nonempty = false;
};

using CatalystInterval = BasicCatalystInterval<double>;

/// c ∈ C(a, b): b ⊗ c ≻ a ⊗ c.
template <Scalar T>
bool is_catalyst(const BasicCatalyticPair<T>& pair, const BasicSchmidtVector<T>& c) {
  return majorizes(kron(pair.b, c), kron(pair.a, c), pair.policy);
}

namespace detail {

template <Scalar T>
void require_small_nontrivial(const BasicCatalyticPair<T>& pair, const char* op) {
  if (!pair.nontrivial) {
    throw PreconditionViolated(std::string(op) + ": a already converts to b, the transformation is trivial");
  }
  if (schmidt_rank(pair.a, pair.policy) > 4 || schmidt_rank(pair.b, pair.policy) > 4) {
    throw PreconditionViolated(std::string(op) + ": needs Schmidt ranks of a and b at most 4");
  }
}

template <Scalar T>
std::array<T, 4> first_four(const BasicSchmidtVector<T>& v) {
  return {v.entry(0), v.entry(1), v.entry(2), v.entry(3)};
}

}  // namespace detail

/// f1(a) <= f1(b), f2(a) > f2(b), f3(a) <= f3(b): necessary for any catalyst
/// when both ranks are at most 4.
template <Scalar T>
bool necessary_conditions_4d(const BasicCatalyticPair<T>& pair) {
  detail::require_small_nontrivial(pair, "necessary_conditions_4d");
  const auto a = detail::first_four(pair.a);
  const auto b = detail::first_four(pair.b);
  const ComparisonPolicy& p = pair.policy;
  return leq(a[0], b[0], p) && strictly_greater(T(a[0] + a[1]), T(b[0] + b[1]), p) &&
         leq(T(a[0] + a[1] + a[2]), T(b[0] + b[1] + b[2]), p);
}

/// Closed-form interval of rank-2 catalysts (x, 1 - x), x in [1/2, 1].
///
/// x_min = max{(a1+a2-b1)/(b2+b3), 1-(a4-b4)/(b3-a3)}
/// x_max = min{b1/(a1+a2), (b1-a1)/(a2-b2), 1-b4/(a3+a4)}
///
/// A zero or negative denominator turns its term into a sign condition: the
/// term is dropped when its numerator allows every x and empties the interval
/// otherwise. When the three necessary conditions fail the canonical empty
/// interval [1, 1/2] is returned.
template <Scalar T>
BasicCatalystInterval<T> rank2_catalyst_interval(const BasicCatalyticPair<T>& pair) {
  BasicCatalystInterval<T> empty{T(1), T(1) / 2, false};
  if (!necessary_conditions_4d(pair)) return empty;
  const auto a = detail::first_four(pair.a);
  const auto b = detail::first_four(pair.b);

  T lo = T(1) / 2;
  T hi = T(1);
  bool possible = true;

  if (b[1] + b[2] > 0) lo = std::max(lo, T((a[0] + a[1] - b[0]) / (b[1] + b[2])));
  if (const T den = b[2] - a[2]; den > 0) {
    lo = std::max(lo, T(T(1) - (a[3] - b[3]) / den));
  } else if (a[3] < b[3]) {
    possible = false;
  }

  if (a[0] + a[1] > 0) hi = std::min(hi, T(b[0] / (a[0] + a[1])));
  if (const T den = a[1] - b[1]; den > 0) {
    hi = std::min(hi, T((b[0] - a[0]) / den));
  } else if (b[0] < a[0]) {
    possible = false;
  }
  if (const T den = a[2] + a[3]; den > 0) {
    hi = std::min(hi, T(T(1) - b[3] / den));
  } else {
    // a has rank 2 while b has rank 3 or more: no catalyst can raise the rank.
    possible = false;
  }

  const bool nonempty = possible && lo <= hi;
  // Reported endpoints stay inside [1/2, 1] even when the interval is empty.
  return {lo, std::max(hi, T(T(1) / 2)), nonempty};
}

template <Scalar T>
BasicSchmidtVector<T> least_entangled_rank2_catalyst(const BasicCatalyticPair<T>& pair) {
  const auto interval = rank2_catalyst_interval(pair);
  if (!interval.nonempty) throw EmptyCatalystSet("no Schmidt-rank-2 catalyst exists for this pair");
  return qubit_state(interval.x_max);
}

template <Scalar T>
BasicSchmidtVector<T> most_entangled_rank2_catalyst(const BasicCatalyticPair<T>& pair) {
  const auto interval = rank2_catalyst_interval(pair);
  if (!interval.nonempty) throw EmptyCatalystSet("no Schmidt-rank-2 catalyst exists for this pair");
  return qubit_state(interval.x_min);
}

/// E_r(a, b) together with a catalyst attaining (or, when approximate,
/// approaching from below) it.
template <Scalar T>
struct BasicCatalystEntropy {
  double bits = 0.0;
  BasicSchmidtVector<T> certificate;
  /// True when the value comes from a search and is only a lower bound.
  bool approximate = false;
  SimplexSearch budget;
};

/// Largest entanglement entropy among catalysts of Schmidt rank at most r.
///
/// For r = 2 and ranks of a and b at most 4 this is h(x_min). Otherwise the
/// ordered simplex of dimension r is searched, seeded with the rank-2 answer
/// when one exists, and the result is flagged approximate.
template <Scalar T>
BasicCatalystEntropy<T> max_catalyst_entropy(const BasicCatalyticPair<T>& pair, std::size_t r,
                                             const SimplexSearch& budget = {}) {
  if (!pair.nontrivial) throw PreconditionViolated("max_catalyst_entropy: a already converts to b");
  if (r == 0) throw InputError("catalyst rank must be positive");
  // A separable catalyst changes nothing.
  if (r == 1) throw EmptyCatalystSet("no Schmidt-rank-1 catalyst exists for a nontrivial pair");

  const bool small = schmidt_rank(pair.a, pair.policy) <= 4 && schmidt_rank(pair.b, pair.policy) <= 4;
  std::vector<BasicSchmidtVector<T>> seeds;
  if (small) {
    const auto interval = rank2_catalyst_interval(pair);
    if (interval.nonempty) {
      const auto most = qubit_state(interval.x_min);
      if (r == 2) return {binary_entropy(to_double(interval.x_min)), most, false, budget};
      seeds.push_back(most);
    } else if (r == 2) {
      throw EmptyCatalystSet("no Schmidt-rank-2 catalyst exists for this pair");
    }
  }
  auto found = detail::search_ordered_simplex<T>(
      r, budget, [&](const BasicSchmidtVector<T>& c) { return is_catalyst(pair, c); },
      [](const BasicSchmidtVector<T>& c) { return entropy(c); }, std::span<const BasicSchmidtVector<T>>(seeds));
  if (!found) {
    throw EmptyCatalystSet("search found no catalyst of Schmidt rank <= " + std::to_string(r));
  }
  return {entropy(*found), *found, true, budget};
}

/// floor(SR(a) SR(c) / SR(b)): the largest Schmidt rank a returned state can have.
template <Scalar T>
std::size_t returned_rank_bound(const BasicCatalyticPair<T>& pair, const BasicSchmidtVector<T>& c) {
  const std::size_t rb = schmidt_rank(pair.b, pair.policy);
  if (rb == 0) throw InputError("b has no positive entries");
  return schmidt_rank(pair.a, pair.policy) * schmidt_rank(c, pair.policy) / rb;
}

}  // namespace supercat
