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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supercat/error.hpp"
#include "supercat/schmidt_vector.hpp"

namespace supercat {

/// f_k(v): sum of the k largest entries.
template <Scalar T>
T partial_sum(const BasicSchmidtVector<T>& v, std::size_t k) {
  if (k < 1 || k > v.size()) {
    throw IndexOutOfRange("partial sum index " + std::to_string(k) + " outside [1, " + std::to_string(v.size()) +
                          "]");
  }
  if (k == v.size()) return T(1);
  T s(0);
  for (std::size_t i = 0; i < k; ++i) s += v[i];
  return s;
}

/// All partial sums f_1..f_n of v zero-padded to length n.
template <Scalar T>
std::vector<T> partial_sums(const BasicSchmidtVector<T>& v, std::size_t n) {
  std::vector<T> out(n);
  T s(0);
  for (std::size_t i = 0; i < n; ++i) {
    s += v.entry(i);
    out[i] = s;
  }
  // Renormalization fixes the total exactly.
  if (n >= v.size()) out[n - 1] = T(1);
  return out;
}

/// First index k (1-based) with f_k(a) > f_k(b), if any.
template <Scalar T>
std::optional<std::size_t> first_majorization_violation(const BasicSchmidtVector<T>& b, const BasicSchmidtVector<T>& a,
                                                        const ComparisonPolicy& policy = {}) {
  const std::size_t n = std::max(a.size(), b.size());
  const auto fa = partial_sums(a, n);
  const auto fb = partial_sums(b, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!leq(fa[k], fb[k], policy)) return k + 1;
  }
  return std::nullopt;
}

/// b ≻ a: f_k(a) <= f_k(b) for every k, after zero-padding to a common length.
template <Scalar T>
bool majorizes(const BasicSchmidtVector<T>& b, const BasicSchmidtVector<T>& a, const ComparisonPolicy& policy = {}) {
  return !first_majorization_violation(b, a, policy).has_value();
}

/// a -> b under LOCC iff b ≻ a.
template <Scalar T>
bool nielsen_convertible(const BasicSchmidtVector<T>& a, const BasicSchmidtVector<T>& b,
                         const ComparisonPolicy& policy = {}) {
  return majorizes(b, a, policy);
}

/// (u ⊗ v) sorted non-increasingly.
template <Scalar T>
BasicSchmidtVector<T> kron(const BasicSchmidtVector<T>& u, const BasicSchmidtVector<T>& v) {
  std::vector<T> out;
  out.reserve(u.size() * v.size());
  for (const T& x : u) {
    for (const T& y : v) out.push_back(x * y);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return BasicSchmidtVector<T>::from_sorted(std::move(out));
}

/// Entanglement entropy in bits, with 0 log 0 = 0.
template <Scalar T>
double entropy(const BasicSchmidtVector<T>& v) {
  double e = 0.0;
  for (const T& x : v) {
    const double p = to_double(x);
    if (p > 0.0) e -= p * std::log2(p);
  }
  return e;
}

/// Binary entropy h(x) in bits.
inline double binary_entropy(double x, double tolerance = 1e-12) {
  if (!(x >= -tolerance && x <= 1.0 + tolerance)) {
    throw DomainError("binary entropy argument " + format_double(x) + " outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

/// Number of entries above `tol_eq` (strictly positive in exact mode).
template <Scalar T>
std::size_t schmidt_rank(const BasicSchmidtVector<T>& v, const ComparisonPolicy& policy = {}) {
  std::size_t r = 0;
  for (const T& x : v) {
    if constexpr (is_exact_v<T>) {
      if (x > 0) ++r;
    } else {
      if (x > policy.eq_tolerance<T>()) ++r;
    }
  }
  return r;
}

/// c_1 * f_{k1}(u) + c_2 * f_{k2}(u) for a two-entry c, with f_0 = 0.
///
/// For every k, f_k(u ⊗ c) is the maximum of this quantity over splits
/// k1 + k2 = k with k1 >= k2.
template <Scalar T>
T split_partial_sum(const BasicSchmidtVector<T>& u, const BasicSchmidtVector<T>& c, std::size_t k1, std::size_t k2) {
  if (c.size() != 2) throw InputError("split partial sums need a two-entry vector");
  if (k1 < k2 || k1 > u.size()) {
    throw IndexOutOfRange("split (" + std::to_string(k1) + ", " + std::to_string(k2) + ") invalid for dimension " +
                          std::to_string(u.size()));
  }
  T s1(0);
  T s2(0);
  for (std::size_t i = 0; i < k1; ++i) {
    s1 += u[i];
    if (i < k2) s2 += u[i];
  }
  return c[0] * s1 + c[1] * s2;
}

/// Entrywise equality of the ordered vectors after zero-padding.
template <Scalar T>
bool same_ordered_vector(const BasicSchmidtVector<T>& u, const BasicSchmidtVector<T>& v,
                         const ComparisonPolicy& policy = {}) {
  const std::size_t n = std::max(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!approx_equal(u.entry(i), v.entry(i), policy)) return false;
  }
  return true;
}

/// The maximally entangled Schmidt vector of rank r.
template <Scalar T>
BasicSchmidtVector<T> uniform_state(std::size_t r) {
  if (r == 0) throw InputError("rank must be positive");
  return BasicSchmidtVector<T>::from_sorted(std::vector<T>(r, T(1) / T(static_cast<long>(r))));
}

}  // namespace supercat
