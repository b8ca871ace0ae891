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

// Set-based transversal theory: Hall and Rado conditions, systems of distinct
// representatives by augmenting paths, the avoidance (complement) form and
// co-nullity. Subsets of the ground set are bit masks.

#ifndef QTRANS_CLASSICAL_HPP_
#define QTRANS_CLASSICAL_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qtrans/errors.hpp"
#include "qtrans/field.hpp"
#include "qtrans/subspace.hpp"

namespace qtrans {

using Mask = std::uint64_t;
using IndexSet = std::uint32_t;  // subsets J of member indices

inline constexpr int kMaxGround = 20;
inline constexpr int kMaxMembers = 24;

inline int popcount(Mask m) { return std::popcount(m); }

struct SetFamily {
  std::vector<std::string> ground;
  std::vector<Mask> members;

  int ground_size() const { return static_cast<int>(ground.size()); }
  int size() const { return static_cast<int>(members.size()); }
  Mask ground_mask() const {
    return ground.empty() ? 0 : (~Mask{0} >> (64 - ground.size()));
  }

  static SetFamily from_labels(std::vector<std::string> ground,
                               const std::vector<std::vector<std::string>>& members) {
    if (ground.size() > 63) fail(ErrorCode::kInfeasibleScale, "ground set above 63 elements");
    SetFamily fam{std::move(ground), {}};
    for (const auto& m : members) fam.members.push_back(fam.mask_of(m));
    return fam;
  }

  Mask mask_of(const std::vector<std::string>& labels) const {
    Mask out = 0;
    for (const auto& label : labels) {
      const auto it = std::find(ground.begin(), ground.end(), label);
      if (it == ground.end()) fail(ErrorCode::kMalformedInput, "unknown element '" + label + "'");
      out |= Mask{1} << (it - ground.begin());
    }
    return out;
  }
};

// Outcome of a condition quantified over all J; on failure, the first
// violating J in increasing bit-mask order.
struct SubsetCheck {
  bool holds = true;
  std::optional<IndexSet> violating_j;
};

namespace detail {

inline void require_members(int n) {
  if (n > kMaxMembers) fail(ErrorCode::kInfeasibleScale, "family too large for 2^n sweeps");
}

inline SubsetCheck sweep(int n, const std::function<bool(IndexSet)>& ok) {
  require_members(n);
  for (IndexSet j = 0; j < (IndexSet{1} << n); ++j) {
    if (!ok(j)) return {false, j};
  }
  return {};
}

}  // namespace detail

class ClassicalMatroid {
 public:
  static ClassicalMatroid free(int ground_size) {
    return from_oracle(ground_size, [](Mask x) { return popcount(x); }, "free");
  }

  static ClassicalMatroid zero(int ground_size) {
    return from_oracle(ground_size, [](Mask) { return 0; }, "rank-0");
  }

  // Column matroid of vectors over a finite field.
  static ClassicalMatroid linear(const Field& field, const std::vector<Row>& columns) {
    return from_oracle(
        static_cast<int>(columns.size()),
        [&](Mask x) {
          std::vector<Row> rows;
          for (std::size_t i = 0; i < columns.size(); ++i) {
            if ((x >> i) & 1) rows.push_back(columns[i]);
          }
          return static_cast<int>(detail::matrix_rank(*field, std::move(rows)));
        },
        "linear");
  }

  // Tabulates the oracle and verifies the rank axioms on every pair.
  static ClassicalMatroid from_oracle(int ground_size, const std::function<int(Mask)>& rank,
                                      std::string provenance) {
    if (ground_size < 0 || ground_size > kMaxGround) {
      fail(ErrorCode::kInfeasibleScale, "ground set above the tabulation cap");
    }
    ClassicalMatroid m;
    m.ground_size_ = ground_size;
    m.provenance_ = std::move(provenance);
    const Mask count = Mask{1} << ground_size;
    m.table_.resize(count);
    for (Mask x = 0; x < count; ++x) m.table_[x] = rank(x);
    if (ground_size <= 10) m.validate();
    return m;
  }

  int ground_size() const { return ground_size_; }
  const std::string& provenance() const { return provenance_; }
  int rank(Mask x) const { return table_.at(x); }
  int rank() const { return table_.back(); }

 private:
  void validate() const {
    const Mask count = table_.size();
    for (Mask x = 0; x < count; ++x) {
      if (table_[x] < 0 || table_[x] > popcount(x)) {
        fail(ErrorCode::kInvariantViolation, "rank out of bounds");
      }
      for (Mask y = 0; y < count; ++y) {
        if ((x & y) == x && table_[x] > table_[y]) {
          fail(ErrorCode::kInvariantViolation, "rank not monotone");
        }
        if (table_[x | y] + table_[x & y] > table_[x] + table_[y]) {
          fail(ErrorCode::kInvariantViolation, "rank not submodular");
        }
      }
    }
  }

  int ground_size_ = 0;
  std::vector<int> table_;
  std::string provenance_;
};

inline Mask family_union(const SetFamily& fam, IndexSet j) {
  Mask out = 0;
  for (int i = 0; i < fam.size(); ++i) {
    if ((j >> i) & 1) out |= fam.members[i];
  }
  return out;
}

// X(J), with X(empty) = S.
inline Mask family_intersection(const SetFamily& fam, IndexSet j) {
  Mask out = fam.ground_mask();
  for (int i = 0; i < fam.size(); ++i) {
    if ((j >> i) & 1) out &= fam.members[i];
  }
  return out;
}

// |A[J]| >= |J| for every J.
inline SubsetCheck hall_check(const SetFamily& fam) {
  return detail::sweep(fam.size(), [&](IndexSet j) {
    return popcount(family_union(fam, j)) >= std::popcount(j);
  });
}

// System of distinct representatives by augmenting paths: element index
// chosen for each member, or nullopt.
inline std::optional<std::vector<int>> find_transversal(const SetFamily& fam) {
  const int n = fam.size();
  const int s = fam.ground_size();
  std::vector<int> owner(s, -1);
  std::vector<int> pick(n, -1);
  std::vector<bool> seen;
  std::function<bool(int)> augment = [&](int member) -> bool {
    for (int x = 0; x < s; ++x) {
      if (!((fam.members[member] >> x) & 1) || seen[x]) continue;
      seen[x] = true;
      if (owner[x] < 0 || augment(owner[x])) {
        owner[x] = member;
        pick[member] = x;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    seen.assign(s, false);
    if (!augment(i)) return std::nullopt;
  }
  return pick;
}

inline void require_ground(const ClassicalMatroid& m, const SetFamily& fam) {
  if (m.ground_size() != fam.ground_size()) {
    fail(ErrorCode::kGroundMismatch, "matroid and family have different ground sets");
  }
}

// rho(A[J]) >= |J| for every J.
inline SubsetCheck rado_check(const ClassicalMatroid& m, const SetFamily& fam) {
  require_ground(m, fam);
  return detail::sweep(fam.size(), [&](IndexSet j) {
    return m.rank(family_union(fam, j)) >= std::popcount(j);
  });
}

// Exhaustive search for a transversal independent in m.
inline std::optional<std::vector<int>> rado_brute_force(const ClassicalMatroid& m,
                                                        const SetFamily& fam) {
  require_ground(m, fam);
  const int n = fam.size();
  std::vector<int> pick(n, -1);
  std::function<bool(int, Mask)> go = [&](int i, Mask used) -> bool {
    if (i == n) return m.rank(used) == n;
    for (int x = 0; x < fam.ground_size(); ++x) {
      if (!((fam.members[i] >> x) & 1) || ((used >> x) & 1)) continue;
      pick[i] = x;
      if (go(i + 1, used | (Mask{1} << x))) return true;
    }
    return false;
  };
  if (go(0, 0)) return pick;
  return std::nullopt;
}

// T is a partial avoiding transversal of (X_1..X_n) iff
// |T cap X(J)| + |J| <= n for every J.
inline SubsetCheck avoiding_transversal_check(Mask t, const SetFamily& fam) {
  const int n = fam.size();
  return detail::sweep(n, [&](IndexSet j) {
    return popcount(t & family_intersection(fam, j)) + std::popcount(j) <= n;
  });
}

// Brute-force injection: for each element of T (increasing order), the
// member index it avoids; all indices distinct.
inline std::optional<std::vector<int>> find_avoiding_injection(Mask t, const SetFamily& fam) {
  std::vector<int> elems;
  for (int x = 0; x < fam.ground_size(); ++x) {
    if ((t >> x) & 1) elems.push_back(x);
  }
  const int n = fam.size();
  if (static_cast<int>(elems.size()) > n) return std::nullopt;
  std::vector<int> assign(elems.size(), -1);
  std::function<bool(std::size_t, IndexSet)> go = [&](std::size_t k, IndexSet used) -> bool {
    if (k == elems.size()) return true;
    for (int i = 0; i < n; ++i) {
      if (((used >> i) & 1) || ((fam.members[i] >> elems[k]) & 1)) continue;
      assign[k] = i;
      if (go(k + 1, used | (IndexSet{1} << i))) return true;
    }
    return false;
  };
  if (go(0, 0)) return assign;
  return std::nullopt;
}

// All bases of m by brute force over subsets.
inline std::vector<Mask> classical_bases(const ClassicalMatroid& m) {
  std::vector<Mask> out;
  const int r = m.rank();
  for (Mask b = 0; b < (Mask{1} << m.ground_size()); ++b) {
    if (popcount(b) == r && m.rank(b) == r) out.push_back(b);
  }
  return out;
}

// nu*(X) = min over bases B of |X cap B|.
inline int co_nullity(const ClassicalMatroid& m, Mask x) {
  int best = std::numeric_limits<int>::max();
  for (Mask b : classical_bases(m)) best = std::min(best, popcount(x & b));
  return best;
}

// nu*(X(J)) + |J| <= nu*(S) for every J.
inline SubsetCheck avoid_rado_check(const ClassicalMatroid& m, const SetFamily& fam) {
  require_ground(m, fam);
  const auto bases = classical_bases(m);
  const auto conull = [&](Mask x) {
    int best = std::numeric_limits<int>::max();
    for (Mask b : bases) best = std::min(best, popcount(x & b));
    return best;
  };
  const int total = conull(fam.ground_mask());
  return detail::sweep(fam.size(), [&](IndexSet j) {
    return conull(family_intersection(fam, j)) + std::popcount(j) <= total;
  });
}

// A_i = S \ X_i.
inline SetFamily complement_family(const SetFamily& fam) {
  SetFamily out{fam.ground, {}};
  for (Mask m : fam.members) out.members.push_back(fam.ground_mask() & ~m);
  return out;
}

}  // namespace qtrans

#endif  // QTRANS_CLASSICAL_HPP_
