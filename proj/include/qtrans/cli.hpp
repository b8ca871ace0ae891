// Copyright 2026 The Authors.
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

// Command dispatch for the qtrans tool. Kept in the header so tests can call
// the same code path as the binary without spawning it.
//
// Instance file (schema 1):
//   {"schema": 1, "q": 2, "dim": 2,
//    "family": [["10"], ["01"]],           subspace family
//    "subspace": ["01"],                   optional T
//    "ext_degree": 4,                      optional
//    "matroid": {...},                     optional rank table
//    "representation": {...},              optional
//    "set_family": {"ground", "members"},  classical commands
//    "subset": ["a", "b"],                 classical T
//    "classical_matroid": {"type": "free" | "zero" | "linear", "columns"},
//    "scan": {"kind": ..., config}}        scan command

#ifndef QTRANS_CLI_HPP_
#define QTRANS_CLI_HPP_

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qtrans/classical.hpp"
#include "qtrans/conjecture_lab.hpp"
#include "qtrans/errors.hpp"
#include "qtrans/q_transversal.hpp"
#include "qtrans/qmatroid.hpp"
#include "qtrans/representation.hpp"
#include "qtrans/serialize.hpp"

namespace qtrans::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitInvariant = 4;

inline constexpr std::array<std::string_view, 11> kCommands = {
    "hall",         "rado",           "q-hall",           "check-transversal",
    "check-q-transversal", "build-matroid", "reduce-presentation", "check-minimal",
    "represent-aligned",   "verify-representation", "scan"};

struct Options {
  bool oracle = false;             // check-q-transversal: definitional path
  bool timing = false;             // scan: include elapsed_ms
  bool smallest = false;           // represent-aligned: least working degree
  std::optional<int> shards;       // scan: override parallel_shards
  std::uint64_t max_injections = 256;  // witness cap for check-q-transversal
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasibleScale:
    case ErrorCode::kExtensionTooLarge:
      return kExitInfeasible;
    case ErrorCode::kInvariantViolation:
      return kExitInvariant;
    default:
      return kExitMalformed;
  }
}

inline json error_to_json(const Error& e) {
  json out = {{"error", std::string(error_name(e.code()))},
              {"message", e.what()},
              {"exit_code", exit_code_for(e.code())}};
  if (e.code() == ErrorCode::kInvariantViolation) {
    out["diagnosis"] =
        "a theorem-level self-check failed on this input: either an implementation bug or a "
        "counterexample to the checked statement; the message names the check";
  }
  return out;
}

namespace detail {

inline void check_schema(const json& in) {
  if (!in.is_object()) fail(ErrorCode::kMalformedInput, "instance must be a JSON object");
  if (in.contains("schema") && in.at("schema") != 1) {
    fail(ErrorCode::kMalformedInput, "unsupported schema version");
  }
}

inline VectorSpaceSpec space_of(const json& in) {
  if (!in.contains("dim")) fail(ErrorCode::kMalformedInput, "missing field 'dim'");
  return space_from_json(in);
}

inline SubspaceFamily family_of(const VectorSpaceSpec& spec, const json& in) {
  if (!in.contains("family")) fail(ErrorCode::kMalformedInput, "missing field 'family'");
  return family_from_json(spec, in.at("family"));
}

inline Subspace subspace_of(const VectorSpaceSpec& spec, const json& in) {
  if (!in.contains("subspace")) fail(ErrorCode::kMalformedInput, "missing field 'subspace'");
  return subspace_from_json(spec, in.at("subspace"));
}

inline json instance_echo(const VectorSpaceSpec& spec, const SubspaceFamily& fam) {
  json out = {{"schema", 1}, {"q", spec.q()}, {"dim", spec.dim}, {"family", family_to_json(fam)}};
  if (spec.field->degree() > 1) out["field"] = field_to_json(*spec.field);
  return out;
}

inline ClassicalMatroid classical_matroid_of(const json& in, const SetFamily& fam) {
  if (!in.contains("classical_matroid")) return ClassicalMatroid::free(fam.ground_size());
  const json& m = in.at("classical_matroid");
  const auto type = ::qtrans::detail::get_or_fail<std::string>(m, "type");
  if (type == "free") return ClassicalMatroid::free(fam.ground_size());
  if (type == "zero") return ClassicalMatroid::zero(fam.ground_size());
  if (type == "linear") {
    const Field f = field_of_order(::qtrans::detail::get_or_fail<std::uint64_t>(m, "q"));
    const auto cols = ::qtrans::detail::get_or_fail<json>(m, "columns");
    if (!cols.is_array() || cols.empty()) fail(ErrorCode::kMalformedInput, "'columns' must be a nonempty list");
    std::vector<Row> columns;
    std::optional<std::size_t> len;
    for (const auto& c : cols) {
      if (!c.is_string()) fail(ErrorCode::kMalformedInput, "column must be a string");
      const auto s = c.get<std::string>();
      const auto entries = f->degree() == 1 ? s.size()
                                            : static_cast<std::size_t>(std::count(s.begin(), s.end(), '.')) + 1;
      Row r = row_from_string(*f, s, static_cast<int>(entries));
      if (len && r.size() != *len) fail(ErrorCode::kMalformedInput, "columns differ in length");
      len = r.size();
      columns.push_back(std::move(r));
    }
    if (static_cast<int>(columns.size()) != fam.ground_size()) {
      fail(ErrorCode::kGroundMismatch, "one column per ground element is required");
    }
    return ClassicalMatroid::linear(f, columns);
  }
  fail(ErrorCode::kMalformedInput, "unknown classical matroid type '" + type + "'");
}

inline json injection_to_json(const SetFamily& fam, const std::vector<int>& inj) {
  json out = json::array();
  for (int x : inj) out.push_back(fam.ground[x]);
  return out;
}

inline json cmd_hall(const json& in) {
  const auto fam = set_family_from_json(::qtrans::detail::get_or_fail<json>(in, "set_family"));
  const auto check = hall_check(fam);
  const auto trans = find_transversal(fam);
  if (check.holds != trans.has_value()) {
    fail(ErrorCode::kInvariantViolation, "Hall condition and matching search disagree");
  }
  json out = {{"verdict", check.holds}};
  if (check.violating_j) {
    out["witness_J"] = index_set_to_json(*check.violating_j);
    out["union_size"] = popcount(family_union(fam, *check.violating_j));
  } else {
    out["transversal"] = injection_to_json(fam, *trans);
  }
  return out;
}

inline json cmd_rado(const json& in) {
  const auto fam = set_family_from_json(::qtrans::detail::get_or_fail<json>(in, "set_family"));
  const auto m = classical_matroid_of(in, fam);
  const auto check = rado_check(m, fam);
  json out = {{"verdict", check.holds}, {"matroid", m.provenance()}};
  if (check.violating_j) {
    out["witness_J"] = index_set_to_json(*check.violating_j);
    out["union_rank"] = m.rank(family_union(fam, *check.violating_j));
    return out;
  }
  const auto trans = rado_brute_force(m, fam);
  if (!trans) fail(ErrorCode::kInvariantViolation, "Rado condition holds but no independent transversal exists");
  out["transversal"] = injection_to_json(fam, *trans);
  return out;
}

// Partial avoiding transversal of the family (members are the sets to
// avoid); with a classical matroid block, the avoidance form of Rado.
inline json cmd_check_transversal(const json& in) {
  const auto fam = set_family_from_json(::qtrans::detail::get_or_fail<json>(in, "set_family"));
  if (!in.contains("subset")) {
    const auto m = classical_matroid_of(in, fam);
    const auto check = avoid_rado_check(m, fam);
    json out = {{"verdict", check.holds}, {"matroid", m.provenance()}, {"mode", "avoid-rado"}};
    if (check.violating_j) {
      out["witness_J"] = index_set_to_json(*check.violating_j);
      out["co_nullity"] = co_nullity(m, family_intersection(fam, *check.violating_j));
      out["co_nullity_ground"] = co_nullity(m, fam.ground_mask());
    }
    return out;
  }
  const Mask t = fam.mask_of(in.at("subset").get<std::vector<std::string>>());
  const auto check = avoiding_transversal_check(t, fam);
  const auto inj = find_avoiding_injection(t, fam);
  if (check.holds != inj.has_value()) {
    fail(ErrorCode::kInvariantViolation, "avoiding-transversal condition and injection search disagree");
  }
  json out = {{"verdict", check.holds}, {"mode", "avoiding"}};
  if (check.violating_j) {
    out["witness_J"] = index_set_to_json(*check.violating_j);
    out["intersection_size"] = popcount(t & family_intersection(fam, *check.violating_j));
  } else {
    // Each element of T, in ground order, with the member it avoids.
    json assign = json::array();
    std::size_t k = 0;
    for (int x = 0; x < fam.ground_size(); ++x) {
      if ((t >> x) & 1) assign.push_back({fam.ground[x], (*inj)[k++] + 1});
    }
    out["injection"] = assign;
  }
  return out;
}

// Some n-dimensional subspace that is a q-transversal, if any.
inline std::optional<Subspace> find_q_transversal(const SubspaceFamily& fam) {
  const int n = static_cast<int>(fam.size());
  if (n > fam.spec.dim) return std::nullopt;
  for (const auto& t : enumerate_subspaces(fam.spec, std::nullopt, n)) {
    if (is_partial_q_transversal(t, fam).verdict) return t;
  }
  return std::nullopt;
}

inline json cmd_q_hall(const json& in) {
  const auto spec = space_of(in);
  const auto fam = family_of(spec, in);
  const auto check = q_hall(fam);
  json out = {{"verdict", check.holds}};
  if (check.violating_j) {
    out["witness_J"] = index_set_to_json(*check.violating_j);
    out["meet_dim"] = family_meet(fam, *check.violating_j).dim();
  }
  const auto t = find_q_transversal(fam);
  if (t.has_value() != check.holds) {
    fail(ErrorCode::kInvariantViolation, "q-Hall condition and q-transversal search disagree");
  }
  if (t) out["transversal"] = subspace_to_json(*t);
  const int rank = presentation_matroid(fam).rank();
  if ((rank == static_cast<int>(fam.size())) != check.holds) {
    fail(ErrorCode::kInvariantViolation, "q-Hall verdict differs from full rank of the presentation");
  }
  out["presentation_rank"] = rank;
  out["instance"] = instance_echo(spec, fam);
  return out;
}

inline json cmd_check_q_transversal(const json& in, const Options& opt) {
  const auto spec = space_of(in);
  const auto fam = family_of(spec, in);
  const auto t = subspace_of(spec, in);
  json out;
  if (opt.oracle) {
    const bool verdict = q_transversal_by_definition(t, fam);
    out = {{"verdict", verdict}, {"method", "definition"}};
  } else {
    const bool witnesses = basis_count(t.dim(), spec.q()) <= opt.max_injections;
    const auto cert = is_partial_q_transversal(t, fam, witnesses);
    out = {{"verdict", cert.verdict}, {"method", "dimension-test"}};
    if (cert.violating_j) {
      out["witness_J"] = index_set_to_json(*cert.violating_j);
      out["meet_dim"] = cert.meet_dim;
    } else if (witnesses) {
      json inj = json::array();
      for (const auto& b : cert.injections) {
        json members = json::array();
        for (int m : b.members) members.push_back(m + 1);
        inj.push_back({{"basis", rows_to_json(*spec.field, b.basis)}, {"members", members}});
      }
      out["injections"] = inj;
    } else {
      out["injections_omitted"] = "more vector bases than the witness cap";
    }
    const bool independent = is_independent(presentation_matroid(fam), t);
    if (independent != cert.verdict) {
      fail(ErrorCode::kInvariantViolation, "dimension test differs from presentation-matroid independence");
    }
  }
  out["subspace"] = subspace_to_json(t);
  out["instance"] = instance_echo(spec, fam);
  return out;
}

inline json cmd_build_matroid(const json& in) {
  const auto spec = space_of(in);
  const auto fam = family_of(spec, in);
  const QMatroid m = presentation_matroid(fam);
  if (const auto v = check_rank_axioms(m)) {
    fail(ErrorCode::kInvariantViolation, "presentation matroid violates the " + v->axiom + " axiom");
  }
  json flats = json::array();
  for (const auto& x : fam.members) flats.push_back(is_flat(m, x));
  json out = {{"rank", m.rank()},
              {"loop_space", subspace_to_json(loop_space(m))},
              {"members_are_flats", flats},
              {"matroid", matroid_to_json(m)}};
  if (in.contains("subspace")) {
    const auto t = subspace_of(spec, in);
    out["subspace_rank"] = m.rank(t);
    out["subspace_independent"] = is_independent(m, t);
  }
  out["instance"] = instance_echo(spec, fam);
  return out;
}

inline json cmd_reduce_presentation(const json& in) {
  const auto spec = space_of(in);
  const auto fam = family_of(spec, in);
  const auto reduced = reduce_presentation(fam);
  const int rank = presentation_matroid(fam).rank();
  return {{"rank", rank},
          {"reduced", family_to_json(reduced)},
          {"members", reduced.size()},
          {"same_matroid", true},
          {"instance", instance_echo(spec, fam)}};
}

inline json cmd_check_minimal(const json& in) {
  const auto spec = space_of(in);
  const auto fam = family_of(spec, in);
  const auto res = is_minimal_presentation(fam);
  json out = {{"verdict", res.verdict}};
  if (!res.verdict) {
    out["member"] = *res.index + 1;
    out["shrunk_member"] = subspace_to_json(*res.shrunk);
    auto shrunk = fam;
    shrunk.members[*res.index] = *res.shrunk;
    out["shrunk_family"] = family_to_json(shrunk);
  }
  out["instance"] = instance_echo(spec, fam);
  return out;
}

inline json cmd_represent_aligned(const json& in, const Options& opt) {
  const auto spec = space_of(in);
  const auto fam = family_of(spec, in);
  const auto aligned = as_aligned(fam);
  if (!aligned) fail(ErrorCode::kMalformedInput, "family is not aligned (members must be coordinate subspaces)");
  const QMatroid target = presentation_matroid(fam);
  std::optional<QRepresentation> rep;
  if (in.contains("ext_degree")) {
    rep = aligned_representation_at_degree(*aligned, in.at("ext_degree").get<unsigned>());
  } else if (opt.smallest) {
    rep = smallest_aligned_representation(*aligned);
  } else {
    rep = build_aligned_representation(*aligned);
  }
  const auto check = verify_representation(*rep, target);
  json out = {{"verified", check.ok},
              {"degree", rep->relative_degree()},
              {"representation", representation_to_json(*rep)}};
  if (!check.ok) {
    out["first_mismatch"] = subspace_to_json(*check.first_mismatch);
    out["expected"] = check.expected;
    out["actual"] = check.actual;
  }
  out["instance"] = instance_echo(spec, fam);
  return out;
}

inline json cmd_verify_representation(const json& in) {
  const QRepresentation rep = representation_from_json(::qtrans::detail::get_or_fail<json>(in, "representation"));
  std::optional<QMatroid> target;
  if (in.contains("matroid")) {
    target = matroid_from_json(in.at("matroid"));
  } else {
    target = presentation_matroid(family_from_json(rep.base(), ::qtrans::detail::get_or_fail<json>(in, "family")));
  }
  const auto check = verify_representation(rep, *target);
  json out = {{"verdict", check.ok}, {"degree", rep.relative_degree()}};
  if (!check.ok) {
    out["first_mismatch"] = subspace_to_json(*check.first_mismatch);
    out["expected"] = check.expected;
    out["actual"] = check.actual;
  }
  return out;
}

inline json cmd_scan(const json& in, const Options& opt) {
  const json block = ::qtrans::detail::get_or_fail<json>(in, "scan");
  json cfg_json = block;
  if (opt.shards) cfg_json["parallel_shards"] = *opt.shards;
  const auto kind = ::qtrans::detail::get_or_fail<std::string>(block, "kind");
  cfg_json.erase("kind");
  const ScanConfig cfg = config_from_json(cfg_json);
  ScanReport report;
  if (kind == "q-rado") report = scan_q_rado(cfg);
  else if (kind == "minimal-uniqueness") report = scan_minimal_uniqueness(cfg);
  else if (kind == "representability") report = scan_representability(cfg);
  else fail(ErrorCode::kMalformedInput, "unknown scan kind '" + kind + "'");
  return report_to_json(report, opt.timing);
}

}  // namespace detail

inline bool is_command(std::string_view cmd) {
  return std::find(kCommands.begin(), kCommands.end(), cmd) != kCommands.end();
}

// Runs one command. `out` receives the result or the error document.
inline int run_command(std::string_view cmd, const json& input, const Options& opt, json& out) {
  try {
    detail::check_schema(input);
    if (cmd == "hall") out = detail::cmd_hall(input);
    else if (cmd == "rado") out = detail::cmd_rado(input);
    else if (cmd == "q-hall") out = detail::cmd_q_hall(input);
    else if (cmd == "check-transversal") out = detail::cmd_check_transversal(input);
    else if (cmd == "check-q-transversal") out = detail::cmd_check_q_transversal(input, opt);
    else if (cmd == "build-matroid") out = detail::cmd_build_matroid(input);
    else if (cmd == "reduce-presentation") out = detail::cmd_reduce_presentation(input);
    else if (cmd == "check-minimal") out = detail::cmd_check_minimal(input);
    else if (cmd == "represent-aligned") out = detail::cmd_represent_aligned(input, opt);
    else if (cmd == "verify-representation") out = detail::cmd_verify_representation(input);
    else if (cmd == "scan") out = detail::cmd_scan(input, opt);
    else fail(ErrorCode::kMalformedInput, "unknown command '" + std::string(cmd) + "'");
    out["command"] = std::string(cmd);
    return kExitOk;
  } catch (const Error& e) {
    out = error_to_json(e);
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    out = error_to_json(Error(ErrorCode::kMalformedInput, e.what()));
    return kExitMalformed;
  }
}

}  // namespace qtrans::cli

#endif  // QTRANS_CLI_HPP_
