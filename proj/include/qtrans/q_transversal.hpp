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

// q-transversals of a family of subspaces (X_1, ..., X_n).
//
// A subspace T is a partial q-transversal when every vector basis of T can
// be injected into the member indices with each vector avoiding the member
// it is assigned to. Three routes to the same verdict live here:
//   * independence in the presentation matroid (union of the rank-1
//     q-matroids whose loop spaces are the members),
//   * the dimension test dim(T meet X(J)) + |J| <= n over all J,
//   * the definition itself, by enumerating every vector basis of T.
// Disagreement between them is raised, never reconciled.

#ifndef QTRANS_Q_TRANSVERSAL_HPP_
#define QTRANS_Q_TRANSVERSAL_HPP_

#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtrans/classical.hpp"
#include "qtrans/errors.hpp"
#include "qtrans/lattice.hpp"
#include "qtrans/qmatroid.hpp"
#include "qtrans/subspace.hpp"

namespace qtrans {

// X(J) as an iterated meet, with X(empty) = V.
inline Subspace family_meet(const SubspaceFamily& fam, IndexSet j) {
  Subspace acc = Subspace::whole(fam.spec);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if ((j >> i) & 1) acc = meet(acc, fam.members[i]);
  }
  return acc;
}

inline QMatroid presentation_matroid(const SubspaceFamily& fam) {
  if (fam.members.empty()) return zero_matroid(fam.spec);
  std::vector<QMatroid> parts;
  parts.reserve(fam.size());
  for (const auto& x : fam.members) {
    require_same(fam.spec, x.spec());
    parts.push_back(rank_one(x));
  }
  QMatroid m = matroid_union(parts);
  return QMatroid(m.lattice(), m.ranks(), "presentation");
}

// dim X(J) + |J| <= dim V for every nonempty J.
inline SubsetCheck q_hall(const SubspaceFamily& fam) {
  const int n = static_cast<int>(fam.size());
  detail::require_members(n);
  for (IndexSet j = 1; j < (IndexSet{1} << n); ++j) {
    if (family_meet(fam, j).dim() + std::popcount(j) > fam.spec.dim) return {false, j};
  }
  return {};
}

// One vector basis of T with the member index each vector avoids.
struct BasisInjection {
  std::vector<Row> basis;
  std::vector<int> members;
};

struct QTransversalCertificate {
  bool verdict = true;
  std::optional<IndexSet> violating_j;
  int meet_dim = 0;  // dim(T meet X(J)) at the violating J
  std::vector<BasisInjection> injections;
};

namespace detail {

// Which basis vectors lie in each member: the classical avoidance family
// whose ground set is the basis itself.
inline SetFamily membership_pattern(std::span<const Row> basis, const SubspaceFamily& fam) {
  SetFamily pattern;
  for (std::size_t b = 0; b < basis.size(); ++b) pattern.ground.push_back("b" + std::to_string(b + 1));
  for (const auto& x : fam.members) {
    Mask m = 0;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (x.contains(basis[b])) m |= Mask{1} << b;
    }
    pattern.members.push_back(m);
  }
  return pattern;
}

}  // namespace detail

// Partial q-transversal test by dimensions over all J (J = empty included).
// With `with_injections`, a positive verdict also carries an avoiding
// injection for every vector basis of T.
inline QTransversalCertificate is_partial_q_transversal(const Subspace& t, const SubspaceFamily& fam,
                                                        bool with_injections = false,
                                                        const ScaleCaps& caps = {}) {
  require_same(fam.spec, t.spec());
  const int n = static_cast<int>(fam.size());
  detail::require_members(n);
  QTransversalCertificate cert;
  for (IndexSet j = 0; j < (IndexSet{1} << n); ++j) {
    const int d = meet(t, family_meet(fam, j)).dim();
    if (d + std::popcount(j) > n) {
      cert.verdict = false;
      cert.violating_j = j;
      cert.meet_dim = d;
      return cert;
    }
  }
  if (with_injections) {
    for_each_basis(
        t,
        [&](std::span<const Row> basis) {
          const auto pattern = detail::membership_pattern(basis, fam);
          const auto inj = find_avoiding_injection(pattern.ground_mask(), pattern);
          if (!inj) {
            fail(ErrorCode::kInvariantViolation,
                 "dimension test accepted T but a vector basis has no avoiding injection");
          }
          cert.injections.push_back({{basis.begin(), basis.end()}, *inj});
          return true;
        },
        caps);
  }
  return cert;
}

// The definition: every vector basis of T is a partial avoiding transversal.
inline bool q_transversal_by_definition(const Subspace& t, const SubspaceFamily& fam,
                                        const ScaleCaps& caps = {}) {
  require_same(fam.spec, t.spec());
  return for_each_basis(
      t,
      [&](std::span<const Row> basis) {
        const auto pattern = detail::membership_pattern(basis, fam);
        return avoiding_transversal_check(pattern.ground_mask(), pattern).holds;
      },
      caps);
}

inline SubspaceFamily subfamily(const SubspaceFamily& fam, IndexSet j) {
  SubspaceFamily out{fam.spec, {}};
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if ((j >> i) & 1) out.members.push_back(fam.members[i]);
  }
  return out;
}

// Greedy left-to-right: keep a member only if it raises the rank of the
// running union. The result presents the same matroid with rank-many members.
inline SubspaceFamily reduce_presentation(const SubspaceFamily& fam) {
  const Lattice lat = lattice_for(fam.spec);
  SubspaceFamily kept{fam.spec, {}};
  std::vector<int> sum(lat->size(), 0);
  int current_rank = 0;
  for (const auto& x : fam.members) {
    const QMatroid r1 = rank_one(x);
    std::vector<int> trial = sum;
    for (Index i = 0; i < lat->size(); ++i) trial[i] += r1.rank_at(i);
    const QMatroid candidate = induce({lat, trial});
    if (candidate.rank() > current_rank) {
      kept.members.push_back(x);
      sum = std::move(trial);
      current_rank = candidate.rank();
    }
  }
  if (!(presentation_matroid(kept) == presentation_matroid(fam))) {
    fail(ErrorCode::kInvariantViolation, "reduced family presents a different matroid");
  }
  return kept;
}

struct PartialEquivResult {
  bool verdict = false;
  std::optional<IndexSet> subsystem;  // members of the subsystem found
};

// T is a full q-transversal (by the definition) of some subsystem with
// exactly dim T members.
inline PartialEquivResult partial_equiv_check(const Subspace& t, const SubspaceFamily& fam,
                                              const ScaleCaps& caps = {}) {
  require_same(fam.spec, t.spec());
  const int n = static_cast<int>(fam.size());
  detail::require_members(n);
  for (IndexSet j = 0; j < (IndexSet{1} << n); ++j) {
    if (std::popcount(j) != t.dim()) continue;
    if (q_transversal_by_definition(t, subfamily(fam, j), caps)) return {true, j};
  }
  return {};
}

struct MinimalityResult {
  bool verdict = true;
  std::optional<std::size_t> index;  // first non-cyclic member (0-based)
  std::optional<Subspace> shrunk;    // join of the circuits below it
};

// Minimal iff every member is cyclic in the presentation matroid. A failing
// member is replaced by its cyclic part and the replacement is checked to
// present the same matroid before it is reported.
inline MinimalityResult is_minimal_presentation(const SubspaceFamily& fam) {
  const QMatroid m = presentation_matroid(fam);
  const auto& lat = *m.lattice();
  const auto cs = circuit_indices(m);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Index xi = lat.index_of(fam.members[i]);
    const Index core = cyclic_part_at(m, xi, cs);
    if (core == xi) continue;
    SubspaceFamily shrunk = fam;
    shrunk.members[i] = lat.at(core);
    if (!(presentation_matroid(shrunk) == m)) {
      fail(ErrorCode::kInvariantViolation,
           "replacing a non-cyclic member by its cyclic part changed the matroid");
    }
    return {false, i, lat.at(core)};
  }
  return {};
}

}  // namespace qtrans

#endif  // QTRANS_Q_TRANSVERSAL_HPP_
