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

// Instance scanners for three open statements about q-transversals:
//   q-rado             a family has a q-transversal independent in M iff
//                      barn(X(J)) + |J| <= barn(V) for every J,
//   minimal-uniqueness minimal presentations of one matroid are unique,
//   representability   every presentation matroid is representable.
//
// Each scan enumerates its instances in a fixed order, evaluates them in
// independent shards and merges the per-instance results by index, so the
// report does not depend on the shard count. Every reported counterexample
// carries enough data to be replayed from its JSON alone.

#ifndef QTRANS_CONJECTURE_LAB_HPP_
#define QTRANS_CONJECTURE_LAB_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qtrans/errors.hpp"
#include "qtrans/lattice.hpp"
#include "qtrans/q_transversal.hpp"
#include "qtrans/qmatroid.hpp"
#include "qtrans/representation.hpp"
#include "qtrans/serialize.hpp"

namespace qtrans {

enum class ScanMode { kExhaustive, kRandom };

struct ScanConfig {
  std::uint64_t q = 2;
  int max_dim = 2;
  int max_family = 2;
  ScanMode mode = ScanMode::kExhaustive;
  std::optional<std::uint64_t> seed;  // required in random mode
  std::uint64_t count = 0;            // random mode sample size
  int parallel_shards = 1;
  // Representability search.
  int max_ext_degree = 4;
  std::uint64_t search_budget = std::uint64_t{1} << 16;
  // q-Rado matroid source: unions of up to this many rank-1 matroids.
  int max_union = 2;
};

inline constexpr std::uint64_t kMaxScanAmbient = 1u << 8;  // q^dim
inline constexpr int kMaxScanFamily = 4;
inline constexpr std::uint64_t kMaxScanInstances = 5'000'000;

inline void validate(const ScanConfig& cfg) {
  if (cfg.max_dim < 1) fail(ErrorCode::kMalformedInput, "max_dim must be >= 1");
  if (cfg.max_family < 0) fail(ErrorCode::kMalformedInput, "max_family must be >= 0");
  if (cfg.parallel_shards < 1) fail(ErrorCode::kMalformedInput, "parallel_shards must be >= 1");
  if (cfg.mode == ScanMode::kRandom && !cfg.seed) {
    fail(ErrorCode::kMalformedInput, "random mode requires an explicit seed");
  }
  if (cfg.max_family > kMaxScanFamily) fail(ErrorCode::kInfeasibleScale, "max_family above scan cap");
  if (detail::saturating_pow(cfg.q, cfg.max_dim) > kMaxScanAmbient) {
    fail(ErrorCode::kInfeasibleScale, "q^max_dim above scan cap");
  }
  field_of_order(cfg.q);
}

inline json config_to_json(const ScanConfig& cfg) {
  json j = {{"q", cfg.q},
            {"max_dim", cfg.max_dim},
            {"max_family", cfg.max_family},
            {"mode", cfg.mode == ScanMode::kExhaustive ? "exhaustive" : "random"},
            {"parallel_shards", cfg.parallel_shards},
            {"max_ext_degree", cfg.max_ext_degree},
            {"search_budget", cfg.search_budget},
            {"max_union", cfg.max_union}};
  if (cfg.seed) j["seed"] = *cfg.seed;
  if (cfg.mode == ScanMode::kRandom) j["count"] = cfg.count;
  return j;
}

inline ScanConfig config_from_json(const json& j) {
  ScanConfig cfg;
  if (!j.is_object()) fail(ErrorCode::kMalformedInput, "scan config must be an object");
  try {
    if (j.contains("q")) cfg.q = j.at("q").get<std::uint64_t>();
    if (j.contains("max_dim")) cfg.max_dim = j.at("max_dim").get<int>();
    if (j.contains("max_family")) cfg.max_family = j.at("max_family").get<int>();
    if (j.contains("mode")) {
      const auto mode = j.at("mode").get<std::string>();
      if (mode == "exhaustive") cfg.mode = ScanMode::kExhaustive;
      else if (mode == "random") cfg.mode = ScanMode::kRandom;
      else fail(ErrorCode::kMalformedInput, "unknown scan mode '" + mode + "'");
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("count")) cfg.count = j.at("count").get<std::uint64_t>();
    if (j.contains("parallel_shards")) cfg.parallel_shards = j.at("parallel_shards").get<int>();
    if (j.contains("max_ext_degree")) cfg.max_ext_degree = j.at("max_ext_degree").get<int>();
    if (j.contains("search_budget")) cfg.search_budget = j.at("search_budget").get<std::uint64_t>();
    if (j.contains("max_union")) cfg.max_union = j.at("max_union").get<int>();
  } catch (const json::exception& e) {
    fail(ErrorCode::kMalformedInput, std::string("scan config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

struct ScanReport {
  std::string kind;
  ScanConfig config;
  std::uint64_t instances_checked = 0;
  std::vector<json> counterexamples;
  std::vector<json> entries;  // per-instance results, when the scan has them
  std::uint64_t soundness_failures = 0;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};
};

// Timing is left out by default so equal configs give byte-identical JSON.
inline json report_to_json(const ScanReport& r, bool include_timing = false) {
  json j = {{"kind", r.kind},
            {"config", config_to_json(r.config)},
            {"instances_checked", r.instances_checked},
            {"counterexamples", r.counterexamples},
            {"soundness_failures", r.soundness_failures},
            {"notes", r.notes}};
  if (!r.entries.empty()) j["entries"] = r.entries;
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

namespace detail {

using IndexFamily = std::vector<Index>;

// All ordered families of 0..max_size lattice indices, shortest first, each
// length in lexicographic index order.
inline std::vector<IndexFamily> all_index_families(std::size_t lattice_size, int max_size) {
  std::vector<IndexFamily> out{{}};
  std::vector<IndexFamily> layer{{}};
  for (int k = 1; k <= max_size; ++k) {
    std::vector<IndexFamily> next;
    for (const auto& f : layer) {
      for (Index i = 0; i < lattice_size; ++i) {
        auto g = f;
        g.push_back(i);
        next.push_back(std::move(g));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline SubspaceFamily to_family(const SubspaceLattice& lat, const IndexFamily& f) {
  SubspaceFamily fam{lat.spec(), {}};
  for (Index i : f) fam.members.push_back(lat.at(i));
  return fam;
}

// Instance indices to evaluate: all of them, or a seeded sample.
inline std::vector<std::size_t> select_instances(const ScanConfig& cfg, std::size_t total) {
  std::vector<std::size_t> out;
  if (cfg.mode == ScanMode::kExhaustive) {
    out.resize(total);
    for (std::size_t i = 0; i < total; ++i) out[i] = i;
    return out;
  }
  if (total == 0) return out;
  std::mt19937_64 rng(*cfg.seed);
  for (std::uint64_t c = 0; c < cfg.count; ++c) out.push_back(rng() % total);
  return out;
}

// Runs work(k) for every k in [0, n), shard s taking k = s mod shards.
// Results land in slot k, so the merge order is the index order.
template <typename Result>
std::vector<Result> run_sharded(std::size_t n, int shards,
                                const std::function<Result(std::size_t)>& work) {
  std::vector<Result> results(n);
  const auto shard_body = [&](int s) {
    for (std::size_t k = static_cast<std::size_t>(s); k < n; k += static_cast<std::size_t>(shards)) {
      results[k] = work(k);
    }
  };
  if (shards <= 1) {
    shard_body(0);
    return results;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(shards);
  for (int s = 0; s < shards; ++s) {
    pool.emplace_back([&, s] {
      try {
        shard_body(s);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// q-Rado

struct QRadoEvaluation {
  bool lhs = false;  // some n-dim q-transversal is independent in M
  std::optional<Subspace> lhs_witness;
  bool rhs = true;  // bar-nullity condition holds for every J
  std::optional<IndexSet> rhs_violation;
};

inline QRadoEvaluation evaluate_q_rado(const QMatroid& m, const SubspaceFamily& fam) {
  require_same(m.spec(), fam.spec);
  const auto& lat = *m.lattice();
  const int n = static_cast<int>(fam.size());
  QRadoEvaluation ev;
  for (Index t : lat.of_dim(n)) {
    if (is_independent_at(m, t) && is_partial_q_transversal(lat.at(t), fam).verdict) {
      ev.lhs = true;
      ev.lhs_witness = lat.at(t);
      break;
    }
  }
  const int total = bar_nullity_at(m, lat.top());
  for (IndexSet j = 0; j < (IndexSet{1} << n); ++j) {
    const Index x = lat.index_of(family_meet(fam, j));
    if (bar_nullity_at(m, x) + std::popcount(j) > total) {
      ev.rhs = false;
      ev.rhs_violation = j;
      break;
    }
  }
  return ev;
}

inline json q_rado_certificate(const QMatroid& m, const SubspaceFamily& fam, const QRadoEvaluation& ev) {
  json c = {{"matroid", matroid_to_json(m)},
            {"family", family_to_json(fam)},
            {"lhs", ev.lhs},
            {"rhs", ev.rhs}};
  if (ev.lhs_witness) c["lhs_witness_T"] = subspace_to_json(*ev.lhs_witness);
  if (ev.rhs_violation) c["violating_J"] = index_set_to_json(*ev.rhs_violation);
  return c;
}

// Re-derives the mismatch from the certificate's JSON alone.
inline bool replay_q_rado(const json& cert) {
  const QMatroid m = matroid_from_json(cert.at("matroid"));
  if (check_rank_axioms(m)) return false;
  const auto fam = family_from_json(m.spec(), cert.at("family"));
  const auto ev = evaluate_q_rado(m, fam);
  return ev.lhs != ev.rhs && ev.lhs == cert.at("lhs").get<bool>() &&
         ev.rhs == cert.at("rhs").get<bool>();
}

// Free matroid, every rank-1 matroid, and every union of up to max_union
// rank-1 matroids, deduplicated by rank table in first-seen order.
inline std::vector<QMatroid> default_matroid_source(const Lattice& lat, int max_union) {
  std::vector<QMatroid> out;
  const auto add = [&](QMatroid m) {
    for (const auto& seen : out) {
      if (seen == m) return;
    }
    out.push_back(std::move(m));
  };
  add(free_matroid(lat->spec()));
  for (const auto& f : detail::all_index_families(lat->size(), max_union)) {
    if (f.empty()) continue;
    if (!std::is_sorted(f.begin(), f.end())) continue;  // unions are unordered
    const QMatroid m = presentation_matroid(detail::to_family(*lat, f));
    add(QMatroid(m.lattice(), m.ranks(), f.size() == 1 ? "rank-1" : "union"));
  }
  return out;
}

using MatroidSource = std::function<std::vector<QMatroid>(const Lattice&)>;

inline ScanReport scan_q_rado(const ScanConfig& cfg, const MatroidSource& source = {}) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.kind = "q-rado";
  report.config = cfg;
  const Field field = field_of_order(cfg.q);
  struct Instance {
    Lattice lat;
    std::size_t matroid;
    std::size_t family;
  };
  std::vector<std::vector<QMatroid>> matroids;
  std::vector<std::vector<detail::IndexFamily>> families;
  std::vector<Instance> instances;
  for (int dim = 1; dim <= cfg.max_dim; ++dim) {
    const Lattice lat = lattice_for(make_space(field, dim));
    matroids.push_back(source ? source(lat) : default_matroid_source(lat, cfg.max_union));
    families.push_back(detail::all_index_families(lat->size(), cfg.max_family));
    for (std::size_t mi = 0; mi < matroids.back().size(); ++mi) {
      for (std::size_t fi = 0; fi < families.back().size(); ++fi) instances.push_back({lat, mi, fi});
    }
  }
  if (instances.size() > kMaxScanInstances) fail(ErrorCode::kInfeasibleScale, "too many instances");
  const auto chosen = detail::select_instances(cfg, instances.size());
  const auto results = detail::run_sharded<std::optional<json>>(
      chosen.size(), cfg.parallel_shards, [&](std::size_t k) -> std::optional<json> {
        const Instance& inst = instances[chosen[k]];
        const std::size_t d = static_cast<std::size_t>(inst.lat->spec().dim - 1);
        const QMatroid& m = matroids[d][inst.matroid];
        const auto fam = detail::to_family(*inst.lat, families[d][inst.family]);
        const auto ev = evaluate_q_rado(m, fam);
        if (ev.lhs == ev.rhs) return std::nullopt;
        return q_rado_certificate(m, fam, ev);
      });
  report.instances_checked = chosen.size();
  for (const auto& r : results) {
    if (!r) continue;
    if (!replay_q_rado(*r)) ++report.soundness_failures;
    report.counterexamples.push_back(*r);
  }
  report.notes.push_back("lhs: brute force over n-dim subspaces; rhs: bar nullity over all J including J = {}");
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

// ---------------------------------------------------------------------------
// Uniqueness of minimal presentations

inline std::vector<Index> member_multiset(const SubspaceLattice& lat, const SubspaceFamily& fam) {
  std::vector<Index> out;
  for (const auto& m : fam.members) out.push_back(lat.index_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

// Both families present `matroid`, both are minimal, and they differ as
// multisets of members.
inline bool replay_minimal_uniqueness(const json& cert) {
  const QMatroid m = matroid_from_json(cert.at("matroid"));
  const auto& presentations = cert.at("presentations");
  if (presentations.size() < 2) return false;
  std::set<std::vector<Index>> distinct;
  for (const auto& p : presentations) {
    const auto fam = family_from_json(m.spec(), p);
    if (!(presentation_matroid(fam) == m)) return false;
    if (!is_minimal_presentation(fam).verdict) return false;
    if (static_cast<int>(fam.size()) != cert.at("size").get<int>()) return false;
    distinct.insert(member_multiset(*m.lattice(), fam));
  }
  return distinct.size() == presentations.size();
}

inline ScanReport scan_minimal_uniqueness(const ScanConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.kind = "minimal-uniqueness";
  report.config = cfg;
  const Field field = field_of_order(cfg.q);
  struct Instance {
    Lattice lat;
    detail::IndexFamily family;
  };
  std::vector<Instance> instances;
  for (int dim = 1; dim <= cfg.max_dim; ++dim) {
    const Lattice lat = lattice_for(make_space(field, dim));
    for (auto& f : detail::all_index_families(lat->size(), cfg.max_family)) instances.push_back({lat, std::move(f)});
  }
  if (instances.size() > kMaxScanInstances) fail(ErrorCode::kInfeasibleScale, "too many instances");
  const auto chosen = detail::select_instances(cfg, instances.size());
  struct Outcome {
    std::vector<int> ranks;
    bool minimal = false;
  };
  const auto results = detail::run_sharded<Outcome>(
      chosen.size(), cfg.parallel_shards, [&](std::size_t k) {
        const Instance& inst = instances[chosen[k]];
        const auto fam = detail::to_family(*inst.lat, inst.family);
        return Outcome{presentation_matroid(fam).ranks(), is_minimal_presentation(fam).verdict};
      });
  // (dim, size, rank table) -> distinct minimal member multisets, in order.
  std::map<std::tuple<int, std::size_t, std::vector<int>>, std::vector<std::vector<Index>>> groups;
  std::vector<std::tuple<int, std::size_t, std::vector<int>>> group_order;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    if (!results[k].minimal) continue;
    const Instance& inst = instances[chosen[k]];
    const auto key = std::make_tuple(inst.lat->spec().dim, inst.family.size(), results[k].ranks);
    auto ms = inst.family;
    std::sort(ms.begin(), ms.end());
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) group_order.push_back(key);
    if (std::find(it->second.begin(), it->second.end(), ms) == it->second.end()) it->second.push_back(ms);
  }
  report.instances_checked = chosen.size();
  for (const auto& key : group_order) {
    const auto& found = groups.at(key);
    if (found.size() < 2) continue;
    const Lattice lat = lattice_for(make_space(field, std::get<0>(key)));
    json presentations = json::array();
    for (const auto& ms : found) presentations.push_back(family_to_json(detail::to_family(*lat, ms)));
    json cert = {{"matroid", matroid_to_json(QMatroid(lat, std::get<2>(key), "presentation"))},
                 {"size", std::get<1>(key)},
                 {"presentations", presentations}};
    if (!replay_minimal_uniqueness(cert)) ++report.soundness_failures;
    report.counterexamples.push_back(std::move(cert));
  }
  report.notes.push_back(
      "presentations are compared as unordered multisets of members, among families with the same "
      "number of members");
  report.notes.push_back("distinct minimal-presentation groups: " + std::to_string(groups.size()));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

// ---------------------------------------------------------------------------
// Representability

// The stored representation re-verifies against the stored matroid.
inline bool replay_representation_entry(const json& entry) {
  if (entry.at("status") != "found") return true;
  const QMatroid m = matroid_from_json(entry.at("matroid"));
  const QRepresentation rep = representation_from_json(entry.at("representation"));
  if (!(presentation_matroid(family_from_json(m.spec(), entry.at("presented_by"))) == m)) return false;
  return verify_representation(rep, m).ok;
}

inline ScanReport scan_representability(const ScanConfig& cfg) {
  validate(cfg);
  if (cfg.max_ext_degree < 1) fail(ErrorCode::kMalformedInput, "max_ext_degree must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.kind = "representability";
  report.config = cfg;
  const Field field = field_of_order(cfg.q);
  struct Instance {
    Lattice lat;
    QMatroid matroid;
    detail::IndexFamily first_family;
    std::optional<detail::IndexFamily> aligned_family;
  };
  std::vector<Instance> instances;
  for (int dim = 1; dim <= cfg.max_dim; ++dim) {
    const Lattice lat = lattice_for(make_space(field, dim));
    std::map<std::vector<int>, std::size_t> seen;
    for (const auto& f : detail::all_index_families(lat->size(), cfg.max_family)) {
      const auto fam = detail::to_family(*lat, f);
      const QMatroid m = presentation_matroid(fam);
      auto [it, fresh] = seen.try_emplace(m.ranks(), instances.size());
      if (fresh) instances.push_back({lat, m, f, std::nullopt});
      Instance& inst = instances[it->second];
      if (!inst.aligned_family && as_aligned(fam)) inst.aligned_family = f;
    }
  }
  const auto chosen = detail::select_instances(cfg, instances.size());
  const std::uint64_t base_seed = cfg.seed.value_or(0);
  const auto results = detail::run_sharded<json>(chosen.size(), cfg.parallel_shards, [&](std::size_t k) {
    const Instance& inst = instances[chosen[k]];
    json entry = {{"matroid", matroid_to_json(inst.matroid)}, {"rank", inst.matroid.rank()}};
    std::optional<QRepresentation> rep;
    std::string method;
    detail::IndexFamily presented_by = inst.first_family;
    if (inst.matroid.rank() == 0) {
      rep = QRepresentation(inst.lat->spec(), inst.lat->spec().field, {Row(inst.lat->spec().dim, 0)});
      method = "zero";
    } else if (inst.aligned_family) {
      const auto aligned = *as_aligned(detail::to_family(*inst.lat, *inst.aligned_family));
      rep = build_aligned_representation(aligned);
      method = "aligned-construction";
      presented_by = *inst.aligned_family;
    } else {
      for (int d = 1; d <= cfg.max_ext_degree && !rep; ++d) {
        rep = search_representation(inst.matroid, static_cast<unsigned>(d), cfg.search_budget,
                                    base_seed + 1000003u * chosen[k] + static_cast<std::uint64_t>(d));
      }
      method = "search";
    }
    entry["presented_by"] = family_to_json(detail::to_family(*inst.lat, presented_by));
    entry["aligned"] = inst.aligned_family.has_value();
    entry["method"] = method;
    if (rep) {
      entry["status"] = "found";
      entry["degree"] = rep->relative_degree();
      entry["representation"] = representation_to_json(*rep);
    } else {
      entry["status"] = "not-found";
    }
    return entry;
  });
  report.instances_checked = chosen.size();
  std::uint64_t found = 0;
  for (const auto& e : results) {
    if (!replay_representation_entry(e)) ++report.soundness_failures;
    if (e.at("status") == "found") ++found;
    report.entries.push_back(e);
  }
  report.notes.push_back("not-found means the bounded search failed; it is inconclusive and never a counterexample");
  report.notes.push_back("found " + std::to_string(found) + " of " + std::to_string(chosen.size()) +
                         " distinct presentation matroids");
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace qtrans

#endif  // QTRANS_CONJECTURE_LAB_HPP_
