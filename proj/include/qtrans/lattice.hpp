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

#ifndef QTRANS_LATTICE_HPP_
#define QTRANS_LATTICE_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtrans/errors.hpp"
#include "qtrans/subspace.hpp"

namespace qtrans {

// The full subspace lattice of a small space, materialized once: every
// subspace gets an index (its position in enumeration order) and meet, join
// and containment become table lookups. Immutable after construction.
class SubspaceLattice {
 public:
  using Index = std::uint32_t;

  explicit SubspaceLattice(VectorSpaceSpec spec, const ScaleCaps& caps = {})
      : spec_(std::move(spec)) {
    elements_ = enumerate_subspaces(spec_, std::nullopt, std::nullopt, caps);
    const std::size_t n = elements_.size();
    if (n > caps.max_lattice) {
      fail(ErrorCode::kInfeasibleScale,
           "lattice of " + std::to_string(n) + " subspaces exceeds the table cap");
    }
    for (std::size_t i = 0; i < n; ++i) {
      index_.emplace(elements_[i], static_cast<Index>(i));
      by_dim_.resize(std::max<std::size_t>(by_dim_.size(), elements_[i].dim() + 1));
      by_dim_[elements_[i].dim()].push_back(static_cast<Index>(i));
    }
    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        const Index j = lookup(qtrans::join(elements_[a], elements_[b]));
        const Index m = lookup(qtrans::meet(elements_[a], elements_[b]));
        join_[a * n + b] = join_[b * n + a] = j;
        meet_[a * n + b] = meet_[b * n + a] = m;
      }
    }
    below_.resize(n);
    above_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (join_[a * n + b] == b) {  // a <= b
          below_[b].push_back(static_cast<Index>(a));
          above_[a].push_back(static_cast<Index>(b));
        }
      }
    }
  }

  const VectorSpaceSpec& spec() const { return spec_; }
  std::size_t size() const { return elements_.size(); }
  const Subspace& at(Index i) const { return elements_.at(i); }
  const std::vector<Subspace>& elements() const { return elements_; }
  int dim(Index i) const { return elements_[i].dim(); }

  Index index_of(const Subspace& s) const {
    require_same(spec_, s.spec());
    return lookup(s);
  }

  Index bottom() const { return 0; }
  Index top() const { return static_cast<Index>(elements_.size() - 1); }

  bool leq(Index a, Index b) const { return join_[a * size() + b] == b; }
  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }

  // All subspaces contained in (resp. containing) i, in enumeration order.
  const std::vector<Index>& below(Index i) const { return below_[i]; }
  const std::vector<Index>& above(Index i) const { return above_[i]; }

  const std::vector<Index>& of_dim(int k) const {
    static const std::vector<Index> kEmpty;
    if (k < 0 || static_cast<std::size_t>(k) >= by_dim_.size()) return kEmpty;
    return by_dim_[k];
  }
  const std::vector<Index>& atoms() const { return of_dim(1); }

 private:
  Index lookup(const Subspace& s) const {
    const auto it = index_.find(s);
    if (it == index_.end()) fail(ErrorCode::kSpecMismatch, "subspace not in lattice");
    return it->second;
  }

  VectorSpaceSpec spec_;
  std::vector<Subspace> elements_;
  std::unordered_map<Subspace, Index, SubspaceHash> index_;
  std::vector<std::vector<Index>> by_dim_;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  std::vector<std::vector<Index>> below_;
  std::vector<std::vector<Index>> above_;
};

using Lattice = std::shared_ptr<const SubspaceLattice>;

// Process-wide cache so every object over one space shares one lattice.
inline Lattice lattice_for(const VectorSpaceSpec& spec) {
  static std::mutex mu;
  static std::vector<Lattice> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& l : cache) {
    if (l->spec() == spec) return l;
  }
  cache.push_back(std::make_shared<const SubspaceLattice>(spec));
  return cache.back();
}

}  // namespace qtrans

#endif  // QTRANS_LATTICE_HPP_
