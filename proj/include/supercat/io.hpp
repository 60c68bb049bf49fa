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

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "supercat/catalysis.hpp"
#include "supercat/epsilon_family.hpp"
#include "supercat/oracle.hpp"
#include "supercat/schmidt_vector.hpp"
#include "supercat/supercatalysis.hpp"

// JSON and CSV encodings. Float vectors are arrays of numbers, exact vectors
// arrays of "p/q" strings.

namespace supercat::io {

using nlohmann::json;

inline json to_json(const SchmidtVector& v) { return json(v.to_doubles()); }

inline json to_json(const ExactSchmidtVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

/// Accepts numbers or strings ("0.25", "1/4") in any mix.
template <Scalar T>
BasicSchmidtVector<T> schmidt_from_json(const json& j, const ComparisonPolicy& policy = {}) {
  if (!j.is_array()) throw InputError("Schmidt vector JSON must be an array");
  std::vector<T> raw;
  for (const auto& e : j) {
    if (e.is_string()) {
      raw.push_back(parse_scalar<T>(e.get<std::string>()));
    } else if (e.is_number()) {
      // Numbers go through their shortest decimal form so 0.1 stays 1/10.
      raw.push_back(parse_scalar<T>(e.is_number_float() ? format_double(e.get<double>()) : e.dump()));
    } else {
      throw InputError("Schmidt vector entries must be numbers or strings");
    }
  }
  return make_schmidt(std::move(raw), policy);
}

template <Scalar T>
json to_json(const BasicCatalystInterval<T>& i) {
  return {{"x_min", to_double(i.x_min)}, {"x_max", to_double(i.x_max)}, {"nonempty", i.nonempty}};
}

inline json to_json(const ComparisonPolicy& p) {
  return {{"mode", p.is_exact() ? "exact-rational" : "float-with-tolerance"},
          {"tau_norm", p.tau_norm},
          {"tol_eq", p.tol_eq},
          {"tol_strict", p.tol_strict}};
}

inline json to_json(const SupercatalysisVerdict& v) {
  json out = {{"a_not_convertible", v.a_not_convertible},
              {"states_differ", v.states_differ},
              {"main_conversion", v.main_conversion},
              {"returned_converts", v.returned_converts},
              {"borrowed_is_catalyst", v.borrowed_is_catalyst},
              {"returned_is_catalyst", v.returned_is_catalyst},
              {"supercatalytic", v.supercatalytic()},
              {"consistency_error", v.consistency_error()}};
  if (v.main_violation_k) out["main_violation_k"] = *v.main_violation_k;
  return out;
}

template <Scalar T>
json to_json(const BasicGainResult<T>& g) {
  return {{"gain", g.gain},
          {"returned_state", to_json(g.returned_state)},
          {"feasible", g.feasible},
          {"method", to_string(g.method)},
          {"returned_rank_bound", g.returned_rank_bound}};
}

inline json to_json(const SweepPoint& p) {
  return {{"x", p.x}, {"entropy_c_bits", p.entropy_c}, {"gmax", p.gmax}, {"bound", p.bound}};
}

inline json summary_json(const SweepResult& s) {
  return {{"x_min", s.x_min},
          {"x_max", s.x_max},
          {"n_points", s.points.size()},
          {"tilde_gmax", s.tilde_gmax},
          {"argmax_x", s.argmax_x},
          {"miserly_gain", s.miserly_gain},
          {"interior_optimum", s.tilde_gmax > s.miserly_gain && s.argmax_x < s.x_max},
          {"envelope", s.envelope},
          {"method", to_string(s.method)},
          {"refine_rounds", s.options.refine_rounds},
          {"refine_points", s.options.refine_points}};
}

inline json to_json(const SweepResult& s) {
  json out = summary_json(s);
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back(to_json(p));
  out["points"] = std::move(pts);
  return out;
}

inline json to_json(const EpsilonVerdict& v) {
  return {{"eps", v.eps},
          {"conditions", to_json(v.conditions)},
          {"f2_gap", v.f2_gap},
          {"interval", to_json(v.interval)},
          {"gain", v.gain},
          {"valid", v.valid()}};
}

inline json to_json(const oracle::GridSpec& g) {
  return {{"resolution", g.resolution}, {"refinement_tol", g.refinement_tol}, {"seed", g.seed}};
}

inline constexpr const char* kSweepCsvHeader = "x,entropy_c_bits,gmax,bound";

/// Header `x,entropy_c_bits,gmax,bound`, one row per point, shortest
/// round-trip decimals so identical inputs give identical bytes.
inline void write_sweep_csv(std::ostream& os, const SweepResult& s) {
  os << kSweepCsvHeader << '\n';
  for (const auto& p : s.points) {
    os << format_double(p.x) << ',' << format_double(p.entropy_c) << ',' << format_double(p.gmax) << ','
       << format_double(p.bound) << '\n';
  }
}

/// Provenance record written next to every numeric output.
struct RunManifest {
  std::string command;
  json inputs = json::object();
  ComparisonPolicy policy;
  oracle::GridSpec sweep;
  std::vector<std::string> outputs;

  json to_json() const {
    return {{"command", command},
            {"inputs", inputs},
            {"policy", io::to_json(policy)},
            {"sweep", io::to_json(sweep)},
            {"outputs", outputs}};
  }
};

}  // namespace supercat::io
