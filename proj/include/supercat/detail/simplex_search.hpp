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
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "supercat/schmidt_vector.hpp"

namespace supercat {

/// Budget for the ordered-simplex searches used where no closed form exists.
///
/// The coarse stage enumerates every vector in the ordered simplex whose
/// entries are multiples of 1/resolution (the resolution is lowered until the
/// point count fits `max_points`). The best feasible point is then improved by
/// pairwise mass transfers whose size halves whenever no move helps.
struct SimplexSearch {
  int resolution = 200;
  int refine_rounds = 40;
  std::size_t max_points = 400000;
};

namespace detail {

// Partitions of n into at most k parts, saturating at `cap`.
inline std::size_t count_partitions(int n, int k, std::size_t cap) {
  std::vector<std::vector<std::size_t>> p(static_cast<std::size_t>(n) + 1,
                                          std::vector<std::size_t>(static_cast<std::size_t>(k) + 1, 0));
  for (int j = 0; j <= k; ++j) p[0][static_cast<std::size_t>(j)] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) {
      std::size_t v = p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      if (i >= j) v += p[static_cast<std::size_t>(i - j)][static_cast<std::size_t>(j)];
      p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(v, cap);
    }
  }
  return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

template <class Visit>
void for_each_partition(int remaining, int max_part, std::size_t slots, std::vector<int>& parts, Visit& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  if (slots == 0) return;
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    // The remaining slots cannot absorb more than slots * v.
    if (static_cast<std::size_t>(v) * slots < static_cast<std::size_t>(remaining)) break;
    parts.push_back(v);
    for_each_partition(remaining - v, v, slots - 1, parts, visit);
    parts.pop_back();
  }
}

/// Maximizes `objective` over ordered Schmidt vectors of length `rank` that
/// satisfy `feasible`. Seeds are evaluated first and compete with the grid.
template <Scalar T, class Feasible, class Objective>
std::optional<BasicSchmidtVector<T>> search_ordered_simplex(std::size_t rank, const SimplexSearch& budget,
                                                            Feasible&& feasible, Objective&& objective,
                                                            std::span<const BasicSchmidtVector<T>> seeds = {}) {
  if (rank == 0 || budget.resolution < 1) throw InputError("simplex search needs rank >= 1 and resolution >= 1");
  std::optional<BasicSchmidtVector<T>> best;
  double best_value = 0.0;
  auto offer = [&](const BasicSchmidtVector<T>& v) {
    if (!feasible(v)) return;
    const double value = objective(v);
    if (!best || value > best_value) {
      best = v;
      best_value = value;
    }
  };
  for (const auto& s : seeds) offer(s.padded(rank));

  int n = budget.resolution;
  while (n > 1 && count_partitions(n, static_cast<int>(rank), budget.max_points + 1) > budget.max_points) n = n * 3 / 4;

  std::vector<int> parts;
  auto visit = [&](const std::vector<int>& p) {
    std::vector<T> coeffs(rank, T(0));
    for (std::size_t i = 0; i < p.size(); ++i) coeffs[i] = T(p[i]) / T(n);
    offer(BasicSchmidtVector<T>::from_sorted(std::move(coeffs)));
  };
  for_each_partition(n, n, rank, parts, visit);
  if (!best) return best;

  T step = T(1) / T(n);
  for (int round = 0; round < budget.refine_rounds; ++round) {
    bool improved = false;
    const std::vector<T> base(best->begin(), best->end());
    for (std::size_t from = 0; from < rank && !improved; ++from) {
      if (base[from] < step) continue;
      for (std::size_t to = 0; to < rank; ++to) {
        if (to == from) continue;
        std::vector<T> moved = base;
        moved[from] -= step;
        moved[to] += step;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        const auto candidate = BasicSchmidtVector<T>::from_sorted(std::move(moved));
        if (feasible(candidate) && objective(candidate) > best_value) {
          best = candidate;
          best_value = objective(candidate);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step /= 2;
  }
  return best;
}

}  // namespace detail
}  // namespace supercat
