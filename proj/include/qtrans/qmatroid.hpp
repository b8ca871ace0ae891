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

// q-matroids given by a fully materialized rank table over the subspace
// lattice, plus the derived notions used by transversal theory: induction
// from submodular functions, union, circuits, closure, nullity, bar nullity,
// fundamental circuits and cyclic subspaces.

#ifndef QTRANS_QMATROID_HPP_
#define QTRANS_QMATROID_HPP_

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtrans/errors.hpp"
#include "qtrans/lattice.hpp"
#include "qtrans/subspace.hpp"

namespace qtrans {

using Index = SubspaceLattice::Index;

class QMatroid {
 public:
  QMatroid(Lattice lattice, std::vector<int> ranks, std::string provenance)
      : lattice_(std::move(lattice)), ranks_(std::move(ranks)), provenance_(std::move(provenance)) {
    if (ranks_.size() != lattice_->size()) {
      fail(ErrorCode::kIncompleteTable, "rank table does not cover the lattice");
    }
  }

  const Lattice& lattice() const { return lattice_; }
  const VectorSpaceSpec& spec() const { return lattice_->spec(); }
  const std::string& provenance() const { return provenance_; }
  const std::vector<int>& ranks() const { return ranks_; }

  int rank_at(Index i) const { return ranks_[i]; }
  int rank(const Subspace& a) const { return ranks_[lattice_->index_of(a)]; }
  // Rank of the whole space.
  int rank() const { return ranks_.back(); }

  friend bool operator==(const QMatroid& a, const QMatroid& b) {
    return a.spec() == b.spec() && a.ranks_ == b.ranks_;
  }

 private:
  Lattice lattice_;
  std::vector<int> ranks_;
  std::string provenance_;
};

// A violated axiom: which one, and the offending element or pair.
struct AxiomViolation {
  std::string axiom;  // "bottom", "bounded", "monotone" or "submodular"
  Index a = 0;
  Index b = 0;
};

struct SubmodularFn {
  Lattice lattice;
  std::vector<int> values;

  static SubmodularFn from_map(Lattice lattice,
                               const std::unordered_map<Subspace, int, SubspaceHash>& map) {
    std::vector<int> values(lattice->size());
    for (Index i = 0; i < lattice->size(); ++i) {
      const auto it = map.find(lattice->at(i));
      if (it == map.end()) fail(ErrorCode::kIncompleteTable, "value missing for a subspace");
      values[i] = it->second;
    }
    return {std::move(lattice), std::move(values)};
  }
};

namespace detail {

inline std::optional<AxiomViolation> check_order_axioms(const SubspaceLattice& lat,
                                                        const std::vector<int>& v) {
  const Index n = static_cast<Index>(lat.size());
  for (Index b = 0; b < n; ++b) {
    for (Index a : lat.below(b)) {
      if (v[a] > v[b]) return AxiomViolation{"monotone", a, b};
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (v[lat.join(a, b)] + v[lat.meet(a, b)] > v[a] + v[b]) {
        return AxiomViolation{"submodular", a, b};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Bottom value zero, monotone, submodular.
inline std::optional<AxiomViolation> check_submodular(const SubmodularFn& f) {
  if (f.values.size() != f.lattice->size()) {
    fail(ErrorCode::kIncompleteTable, "function does not cover the lattice");
  }
  if (f.values[f.lattice->bottom()] != 0) {
    return AxiomViolation{"bottom", f.lattice->bottom(), f.lattice->bottom()};
  }
  return detail::check_order_axioms(*f.lattice, f.values);
}

// 0 <= r(A) <= dim A, monotone, submodular.
inline std::optional<AxiomViolation> check_rank_axioms(const QMatroid& m) {
  const auto& lat = *m.lattice();
  for (Index a = 0; a < lat.size(); ++a) {
    if (m.rank_at(a) < 0 || m.rank_at(a) > lat.dim(a)) return AxiomViolation{"bounded", a, a};
  }
  return detail::check_order_axioms(lat, m.ranks());
}

inline QMatroid free_matroid(const VectorSpaceSpec& spec) {
  auto lat = lattice_for(spec);
  std::vector<int> r(lat->size());
  for (Index i = 0; i < lat->size(); ++i) r[i] = lat->dim(i);
  return QMatroid(lat, std::move(r), "free");
}

inline QMatroid zero_matroid(const VectorSpaceSpec& spec) {
  auto lat = lattice_for(spec);
  return QMatroid(lat, std::vector<int>(lat->size(), 0), "rank-0");
}

// Rank-1 q-matroid with the given loop space (rank 0 if the loop space is V).
inline QMatroid rank_one(const Subspace& loop_space) {
  auto lat = lattice_for(loop_space.spec());
  const Index l = lat->index_of(loop_space);
  std::vector<int> r(lat->size());
  for (Index i = 0; i < lat->size(); ++i) r[i] = lat->leq(i, l) ? 0 : 1;
  return QMatroid(lat, std::move(r), "rank-1");
}

// r(A) = min over B <= A of f(B) + dim A - dim B.
inline QMatroid induce(const SubmodularFn& f, std::string provenance = "induced") {
  if (auto v = check_submodular(f)) {
    fail(ErrorCode::kNotSubmodular, "axiom '" + v->axiom + "' fails");
  }
  const auto& lat = *f.lattice;
  std::vector<int> r(lat.size());
  for (Index a = 0; a < lat.size(); ++a) {
    int best = std::numeric_limits<int>::max();
    for (Index b : lat.below(a)) {
      best = std::min(best, f.values[b] + lat.dim(a) - lat.dim(b));
    }
    r[a] = best;
  }
  return QMatroid(f.lattice, std::move(r), std::move(provenance));
}

// One-step union: induced from the sum of all member rank functions.
inline QMatroid matroid_union(std::span<const QMatroid> members) {
  if (members.empty()) fail(ErrorCode::kOutOfRange, "union of an empty list");
  const Lattice& lat = members.front().lattice();
  std::vector<int> sum(lat->size(), 0);
  for (const auto& m : members) {
    require_same(lat->spec(), m.spec());
    for (Index i = 0; i < lat->size(); ++i) sum[i] += m.rank_at(i);
  }
  return induce({lat, std::move(sum)}, "union");
}

inline QMatroid matroid_union(const QMatroid& a, const QMatroid& b) {
  const QMatroid pair[] = {a, b};
  return matroid_union(pair);
}

inline bool is_independent_at(const QMatroid& m, Index a) {
  return m.rank_at(a) == m.lattice()->dim(a);
}

inline bool is_independent(const QMatroid& m, const Subspace& a) {
  return is_independent_at(m, m.lattice()->index_of(a));
}

inline int nullity(const QMatroid& m, const Subspace& x) {
  const Index i = m.lattice()->index_of(x);
  return m.lattice()->dim(i) - m.rank_at(i);
}

// Minimal dependent subspaces, in enumeration order.
inline std::vector<Index> circuit_indices(const QMatroid& m) {
  const auto& lat = *m.lattice();
  std::vector<Index> out;
  for (Index a = 0; a < lat.size(); ++a) {
    if (is_independent_at(m, a)) continue;
    bool minimal = true;
    for (Index b : lat.below(a)) {
      if (b != a && !is_independent_at(m, b)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

inline std::vector<Subspace> circuits(const QMatroid& m) {
  std::vector<Subspace> out;
  for (Index i : circuit_indices(m)) out.push_back(m.lattice()->at(i));
  return out;
}

inline Index closure_at(const QMatroid& m, Index a) {
  const auto& lat = *m.lattice();
  Index acc = a;
  for (Index atom : lat.atoms()) {
    if (m.rank_at(lat.join(a, atom)) == m.rank_at(a)) acc = lat.join(acc, atom);
  }
  return acc;
}

inline Subspace closure(const QMatroid& m, const Subspace& a) {
  return m.lattice()->at(closure_at(m, m.lattice()->index_of(a)));
}

inline bool is_flat(const QMatroid& m, const Subspace& x) { return closure(m, x) == x; }

inline Subspace loop_space(const QMatroid& m) {
  return m.lattice()->at(closure_at(m, m.lattice()->bottom()));
}

// Matroid bases: independent subspaces of dimension r(V).
inline std::vector<Index> basis_indices(const QMatroid& m) {
  std::vector<Index> out;
  for (Index b : m.lattice()->of_dim(m.rank())) {
    if (is_independent_at(m, b)) out.push_back(b);
  }
  return out;
}

inline int bar_nullity_at(const QMatroid& m, Index x) {
  const auto& lat = *m.lattice();
  int best = std::numeric_limits<int>::max();
  for (Index b : basis_indices(m)) best = std::min(best, lat.dim(lat.meet(b, x)));
  return best;
}

inline int bar_nullity(const QMatroid& m, const Subspace& x) {
  return bar_nullity_at(m, m.lattice()->index_of(x));
}

// The unique circuit inside a nullity-1 subspace S: the meet of every
// nullity-1 subspace of S. The nullity dichotomy on subspaces of S is
// re-checked and a failure raised as an invariant violation.
inline Index fundamental_circuit_at(const QMatroid& m, Index s) {
  const auto& lat = *m.lattice();
  const auto null_at = [&](Index i) { return lat.dim(i) - m.rank_at(i); };
  if (null_at(s) != 1) {
    fail(ErrorCode::kWrongNullity,
         "subspace has nullity " + std::to_string(null_at(s)) + ", expected 1");
  }
  Index c = s;
  for (Index t : lat.below(s)) {
    if (null_at(t) == 1) c = lat.meet(c, t);
  }
  for (Index t : lat.below(s)) {
    const int expected = lat.leq(c, t) ? 1 : 0;
    if (null_at(t) != expected) {
      fail(ErrorCode::kInvariantViolation, "fundamental-circuit nullity dichotomy fails");
    }
  }
  return c;
}

inline Subspace fundamental_circuit(const QMatroid& m, const Subspace& s) {
  return m.lattice()->at(fundamental_circuit_at(m, m.lattice()->index_of(s)));
}

// Join of all circuits contained in x (bottom if there are none).
inline Index cyclic_part_at(const QMatroid& m, Index x, std::span<const Index> all_circuits) {
  const auto& lat = *m.lattice();
  Index acc = lat.bottom();
  for (Index c : all_circuits) {
    if (lat.leq(c, x)) acc = lat.join(acc, c);
  }
  return acc;
}

inline bool is_cyclic(const QMatroid& m, const Subspace& x) {
  const Index i = m.lattice()->index_of(x);
  const auto cs = circuit_indices(m);
  return cyclic_part_at(m, i, cs) == i;
}

}  // namespace qtrans

#endif  // QTRANS_QMATROID_HPP_
