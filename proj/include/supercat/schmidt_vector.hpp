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
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercat/error.hpp"
#include "supercat/scalar.hpp"

namespace supercat {

/// How partial sums are compared.
///
/// In float mode two sums are equal when they differ by at most `tol_eq`, and a
/// strict inequality needs a margin of `tol_strict`. In exact mode, or whenever
/// the scalar type is `Rational`, both tolerances are ignored. `tau_norm` only
/// governs construction of Schmidt vectors.
struct ComparisonPolicy {
  enum class Mode { kFloatWithTolerance, kExactRational };

  Mode mode = Mode::kFloatWithTolerance;
  double tau_norm = 1e-9;
  double tol_eq = 1e-12;
  double tol_strict = 1e-9;

  static ComparisonPolicy exact() {
    ComparisonPolicy p;
    p.mode = Mode::kExactRational;
    return p;
  }

  bool is_exact() const { return mode == Mode::kExactRational; }

  void validate() const {
    if (!(tau_norm >= 0.0) || !(tol_eq >= 0.0) || !(tol_strict >= 0.0)) {
      throw InputError("comparison tolerances must be non-negative");
    }
  }

  template <Scalar T>
  double eq_tolerance() const {
    return (is_exact_v<T> || is_exact()) ? 0.0 : tol_eq;
  }

  template <Scalar T>
  double strict_margin() const {
    return (is_exact_v<T> || is_exact()) ? 0.0 : tol_strict;
  }
};

/// x <= y, allowing `tol_eq` of slack in float mode.
template <Scalar T>
bool leq(const T& x, const T& y, const ComparisonPolicy& policy) {
  if constexpr (is_exact_v<T>) {
    return x <= y;
  } else {
    return x <= y + policy.eq_tolerance<T>();
  }
}

/// x > y by more than `tol_strict` in float mode.
template <Scalar T>
bool strictly_greater(const T& x, const T& y, const ComparisonPolicy& policy) {
  if constexpr (is_exact_v<T>) {
    return x > y;
  } else {
    return x > y + policy.strict_margin<T>();
  }
}

template <Scalar T>
bool approx_equal(const T& x, const T& y, const ComparisonPolicy& policy) {
  return leq(x, y, policy) && leq(y, x, policy);
}

/// Ordered Schmidt vector: non-negative, non-increasing, summing to one.
///
/// Instances are immutable once built; every constructor path goes through
/// `make_schmidt`, `kron` or a cast, all of which establish the invariants.
template <Scalar T>
class BasicSchmidtVector {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  /// The separable state (1).
  BasicSchmidtVector() : coeffs_{T(1)} {}

  std::size_t size() const { return coeffs_.size(); }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  const_iterator begin() const { return coeffs_.begin(); }
  const_iterator end() const { return coeffs_.end(); }
  std::span<const T> coefficients() const { return coeffs_; }

  /// Entry i, or zero past the end (the zero-padding convention).
  T entry(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  BasicSchmidtVector padded(std::size_t n) const {
    BasicSchmidtVector out = *this;
    if (n > out.coeffs_.size()) out.coeffs_.resize(n, T(0));
    return out;
  }

  std::vector<double> to_doubles() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const T& v : coeffs_) out.push_back(to_double(v));
    return out;
  }

  template <Scalar U>
  BasicSchmidtVector<U> cast() const {
    if constexpr (std::same_as<U, T>) {
      return *this;
    } else {
      std::vector<U> raw;
      raw.reserve(coeffs_.size());
      U sum(0);
      for (const T& v : coeffs_) {
        if constexpr (is_exact_v<U>) {
          raw.emplace_back(v);
        } else {
          raw.push_back(to_double(v));
        }
        sum += raw.back();
      }
      if constexpr (is_exact_v<U>) {
        for (U& v : raw) v /= sum;
      }
      return BasicSchmidtVector<U>::from_sorted(std::move(raw));
    }
  }

  /// Wraps a vector that already satisfies every invariant.
  static BasicSchmidtVector from_sorted(std::vector<T> coeffs) {
    BasicSchmidtVector out;
    out.coeffs_ = std::move(coeffs);
    return out;
  }

  friend bool operator==(const BasicSchmidtVector&, const BasicSchmidtVector&) = default;

 private:
  std::vector<T> coeffs_;
};

using SchmidtVector = BasicSchmidtVector<double>;
using ExactSchmidtVector = BasicSchmidtVector<Rational>;

/// Sorts descending, clamps entries in [-tau_norm, 0) to zero, and
/// renormalizes to unit sum.
template <Scalar T>
BasicSchmidtVector<T> make_schmidt(std::vector<T> raw, const ComparisonPolicy& policy = {}) {
  policy.validate();
  if (raw.empty()) throw InputError("Schmidt vector must have at least one entry");
  T sum(0);
  for (T& v : raw) {
    if (to_double(v) < -policy.tau_norm) {
      throw NegativeEntry("negative Schmidt coefficient " + format_double(to_double(v)));
    }
    if (v < T(0)) v = T(0);
    if constexpr (!is_exact_v<T>) {
      if (!std::isfinite(v)) throw InputError("non-finite Schmidt coefficient");
    }
    sum += v;
  }
  if (std::abs(to_double(sum) - 1.0) > policy.tau_norm) {
    throw NotNormalized("Schmidt coefficients sum to " + format_double(to_double(sum)) + ", not 1");
  }
  for (T& v : raw) v /= sum;
  std::sort(raw.begin(), raw.end(), std::greater<>());
  return BasicSchmidtVector<T>::from_sorted(std::move(raw));
}

inline SchmidtVector make_schmidt(std::initializer_list<double> raw, const ComparisonPolicy& policy = {}) {
  return make_schmidt(std::vector<double>(raw), policy);
}

/// Parses a comma-separated list of decimals or "p/q" rationals.
template <Scalar T>
BasicSchmidtVector<T> parse_schmidt(std::string_view text, const ComparisonPolicy& policy = {}) {
  std::vector<T> raw;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    raw.push_back(parse_scalar<T>(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return make_schmidt(std::move(raw), policy);
}

/// (x, 1 - x) for x in [1/2, 1].
template <Scalar T>
BasicSchmidtVector<T> qubit_state(const T& x) {
  if (x < T(1) / 2 || x > T(1)) {
    throw DomainError("qubit Schmidt parameter " + format_double(to_double(x)) + " outside [1/2, 1]");
  }
  return BasicSchmidtVector<T>::from_sorted({x, T(1) - x});
}

}  // namespace supercat
