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

// Subspaces of GF(q)^n in reduced row-echelon form, the lattice operations
// on them, and exhaustive enumeration of subspaces and vector bases.

#ifndef QTRANS_SUBSPACE_HPP_
#define QTRANS_SUBSPACE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtrans/errors.hpp"
#include "qtrans/field.hpp"

namespace qtrans {

// Explicit limits for every exhaustive routine. Exceeding one raises
// InfeasibleScale instead of running for hours.
struct ScaleCaps {
  std::uint64_t max_ambient_size = std::uint64_t{1} << 20;  // q^n
  std::uint64_t max_subspaces = 1'000'000;
  std::uint64_t max_bases = 1'000'000;
  std::uint64_t max_lattice = 2048;  // materialized lattice tables
};

using Row = std::vector<FieldSpec::Value>;

namespace detail {

// In-place reduced row-echelon form; zero rows are dropped.
inline void rref(const FieldSpec& f, std::vector<Row>& rows) {
  if (rows.empty()) return;
  const std::size_t ncols = rows.front().size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    Row& prow = rows[lead];
    const auto scale = f.inv(prow[col]);
    for (auto& x : prow) x = f.mul(x, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      const auto factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        rows[r][c] = f.sub(rows[r][c], f.mul(factor, prow[c]));
      }
    }
    ++lead;
  }
  rows.resize(lead);
}

inline std::size_t matrix_rank(const FieldSpec& f, std::vector<Row> rows) {
  rref(f, rows);
  return rows.size();
}

inline std::size_t pivot_of(const Row& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) return c;
  }
  return row.size();
}

// v minus its projection onto the row space of an RREF matrix.
inline Row residual(const FieldSpec& f, const std::vector<Row>& basis, Row v) {
  for (const auto& row : basis) {
    const std::size_t pc = pivot_of(row);
    const auto factor = v[pc];
    if (factor == 0) continue;
    for (std::size_t c = pc; c < v.size(); ++c) {
      v[c] = f.sub(v[c], f.mul(factor, row[c]));
    }
  }
  return v;
}

inline bool is_zero(const Row& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

// q^n, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t q, int n) {
  unsigned __int128 r = 1;
  for (int i = 0; i < n; ++i) {
    r *= q;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

struct VectorSpaceSpec {
  Field field;
  int dim = 0;

  std::uint64_t q() const { return field->order(); }
  std::uint64_t ambient_size() const { return detail::saturating_pow(q(), dim); }

  friend bool operator==(const VectorSpaceSpec& a, const VectorSpaceSpec& b) {
    return a.dim == b.dim && same_field(a.field, b.field);
  }
};

inline VectorSpaceSpec make_space(Field field, int dim) {
  if (!field) fail(ErrorCode::kMalformedInput, "missing field");
  if (dim < 1) fail(ErrorCode::kOutOfRange, "ambient dimension must be >= 1");
  return {std::move(field), dim};
}

inline void require_same(const VectorSpaceSpec& a, const VectorSpaceSpec& b) {
  if (!(a == b)) fail(ErrorCode::kSpecMismatch, "subspaces of different spaces");
}

struct GFVector {
  VectorSpaceSpec spec;
  Row coords;
};

class Subspace {
 public:
  Subspace() = default;

  static Subspace bottom(const VectorSpaceSpec& spec) { return Subspace(spec, {}); }

  static Subspace whole(const VectorSpaceSpec& spec) {
    std::vector<Row> rows(spec.dim, Row(spec.dim, 0));
    for (int i = 0; i < spec.dim; ++i) rows[i][i] = 1;
    return Subspace(spec, std::move(rows));
  }

  // Canonical subspace spanned by arbitrary rows of the right length.
  static Subspace span(const VectorSpaceSpec& spec, std::vector<Row> rows) {
    for (const auto& r : rows) {
      if (r.size() != static_cast<std::size_t>(spec.dim)) {
        fail(ErrorCode::kDimensionMismatch, "row length differs from ambient dimension");
      }
      for (auto x : r) {
        if (!spec.field->contains(x)) fail(ErrorCode::kOutOfRange, "entry outside field");
      }
    }
    detail::rref(*spec.field, rows);
    return Subspace(spec, std::move(rows));
  }

  const VectorSpaceSpec& spec() const { return spec_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Row>& basis() const { return basis_; }
  bool is_bottom() const { return basis_.empty(); }

  std::vector<int> pivots() const {
    std::vector<int> out;
    for (const auto& r : basis_) out.push_back(static_cast<int>(detail::pivot_of(r)));
    return out;
  }

  bool contains(const Row& v) const {
    if (v.size() != static_cast<std::size_t>(spec_.dim)) {
      fail(ErrorCode::kDimensionMismatch, "vector length differs from ambient dimension");
    }
    return detail::is_zero(detail::residual(*spec_.field, basis_, v));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.spec_ == b.spec_ && a.basis_ == b.basis_;
  }

  // Enumeration order: dimension first, then the RREF matrix compared
  // row-major, entry by entry, as packed field values.
  friend bool enumeration_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis_ < b.basis_;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(spec_.dim);
    for (const auto& row : basis_) {
      for (auto x : row) h = h * 1000003u ^ std::hash<std::uint64_t>{}(x);
      h = h * 31u + 7u;
    }
    return h;
  }

 private:
  Subspace(VectorSpaceSpec spec, std::vector<Row> rref_rows)
      : spec_(std::move(spec)), basis_(std::move(rref_rows)) {}

  VectorSpaceSpec spec_;
  std::vector<Row> basis_;
};

bool enumeration_less(const Subspace& a, const Subspace& b);

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

// An ordered family (X_1, ..., X_n) of subspaces of one space.
struct SubspaceFamily {
  VectorSpaceSpec spec;
  std::vector<Subspace> members;

  std::size_t size() const { return members.size(); }

  static SubspaceFamily of(const VectorSpaceSpec& spec, std::vector<Subspace> members) {
    for (const auto& m : members) require_same(spec, m.spec());
    return {spec, std::move(members)};
  }
};

inline Subspace canonicalize(const VectorSpaceSpec& spec, std::span<const GFVector> vectors) {
  std::vector<Row> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (!(v.spec == spec) || v.coords.size() != static_cast<std::size_t>(spec.dim)) {
      fail(ErrorCode::kDimensionMismatch, "vector not in the ambient space");
    }
    rows.push_back(v.coords);
  }
  return Subspace::span(spec, std::move(rows));
}

inline Subspace join(const Subspace& a, const Subspace& b) {
  require_same(a.spec(), b.spec());
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  std::vector<Row> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.spec(), std::move(rows));
}

// Zassenhaus: reduce [[A | A], [B | 0]]; rows whose left half vanishes span
// the intersection in their right half.
inline Subspace meet(const Subspace& a, const Subspace& b) {
  require_same(a.spec(), b.spec());
  if (a.is_bottom() || b.is_bottom()) return Subspace::bottom(a.spec());
  const std::size_t n = static_cast<std::size_t>(a.spec().dim);
  std::vector<Row> block;
  for (const auto& r : a.basis()) {
    Row row(2 * n);
    std::copy(r.begin(), r.end(), row.begin());
    std::copy(r.begin(), r.end(), row.begin() + n);
    block.push_back(std::move(row));
  }
  for (const auto& r : b.basis()) {
    Row row(2 * n, 0);
    std::copy(r.begin(), r.end(), row.begin());
    block.push_back(std::move(row));
  }
  detail::rref(*a.spec().field, block);
  std::vector<Row> inter;
  for (const auto& row : block) {
    if (std::all_of(row.begin(), row.begin() + n, [](auto x) { return x == 0; })) {
      inter.emplace_back(row.begin() + n, row.end());
    }
  }
  return Subspace::span(a.spec(), std::move(inter));
}

inline bool leq(const Subspace& a, const Subspace& b) {
  require_same(a.spec(), b.spec());
  if (a.dim() > b.dim()) return false;
  for (const auto& r : a.basis()) {
    if (!b.contains(r)) return false;
  }
  return true;
}

// Number of k-dimensional subspaces of GF(q)^n.
inline std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
  if (n < 0 || k < 0 || k > n) fail(ErrorCode::kOutOfRange, "gaussian_binomial needs 0 <= k <= n");
  if (q < 2) fail(ErrorCode::kOutOfRange, "gaussian_binomial needs q >= 2");
  unsigned __int128 result = 1;
  for (int i = 0; i < k; ++i) {
    const unsigned __int128 num = detail::saturating_pow(q, n - i) - 1;
    const unsigned __int128 den = detail::saturating_pow(q, i + 1) - 1;
    if (detail::saturating_pow(q, n - i) == UINT64_MAX) {
      fail(ErrorCode::kOutOfRange, "gaussian_binomial overflow");
    }
    const unsigned __int128 prod = result * num;
    if (num != 0 && prod / num != result) fail(ErrorCode::kOutOfRange, "gaussian_binomial overflow");
    result = prod / den;
    if (result > UINT64_MAX) fail(ErrorCode::kOutOfRange, "gaussian_binomial overflow");
  }
  return static_cast<std::uint64_t>(result);
}

namespace detail {

// Every k-dim RREF matrix over GF(q)^m (unsorted), one per subspace.
inline void rref_matrices(const FieldSpec& f, int m, int k,
                          const std::function<void(const std::vector<Row>&)>& emit) {
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  const auto q = f.order();
  while (true) {
    std::vector<std::pair<int, int>> free_slots;
    std::vector<bool> is_pivot(m, false);
    for (int p : piv) is_pivot[p] = true;
    for (int r = 0; r < k; ++r) {
      for (int c = piv[r] + 1; c < m; ++c) {
        if (!is_pivot[c]) free_slots.emplace_back(r, c);
      }
    }
    std::vector<Row> mat(k, Row(m, 0));
    for (int r = 0; r < k; ++r) mat[r][piv[r]] = 1;
    std::vector<std::uint64_t> digit(free_slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < free_slots.size(); ++s) {
        mat[free_slots[s].first][free_slots[s].second] = digit[s];
      }
      emit(mat);
      std::size_t s = 0;
      while (s < digit.size() && ++digit[s] == q) digit[s++] = 0;
      if (s == digit.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && piv[i] == m - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace detail

// Every subspace of `of` (default: the whole space), optionally restricted to
// one dimension, each exactly once in enumeration order.
inline std::vector<Subspace> enumerate_subspaces(const VectorSpaceSpec& spec,
                                                 const std::optional<Subspace>& of = std::nullopt,
                                                 std::optional<int> dim = std::nullopt,
                                                 const ScaleCaps& caps = {}) {
  if (spec.ambient_size() > caps.max_ambient_size) {
    fail(ErrorCode::kInfeasibleScale, "q^n exceeds the ambient-size cap");
  }
  if (of) require_same(spec, of->spec());
  const int m = of ? of->dim() : spec.dim;
  int lo = 0, hi = m;
  if (dim) {
    if (*dim < 0 || *dim > m) return {};
    lo = hi = *dim;
  }
  std::uint64_t total = 0;
  for (int k = lo; k <= hi; ++k) total += gaussian_binomial(m, k, spec.q());
  if (total > caps.max_subspaces) {
    fail(ErrorCode::kInfeasibleScale, std::to_string(total) + " subspaces exceed the cap");
  }
  const FieldSpec& f = *spec.field;
  std::vector<Subspace> out;
  out.reserve(total);
  for (int k = lo; k <= hi; ++k) {
    const std::size_t start = out.size();
    if (k == 0) {
      out.push_back(Subspace::bottom(spec));
      continue;
    }
    detail::rref_matrices(f, m, k, [&](const std::vector<Row>& coeff) {
      if (!of) {
        out.push_back(Subspace::span(spec, coeff));
        return;
      }
      std::vector<Row> rows;
      for (const auto& c : coeff) {
        Row v(spec.dim, 0);
        for (int j = 0; j < m; ++j) {
          if (c[j] == 0) continue;
          for (int t = 0; t < spec.dim; ++t) {
            v[t] = f.add(v[t], f.mul(c[j], of->basis()[j][t]));
          }
        }
        rows.push_back(std::move(v));
      }
      out.push_back(Subspace::span(spec, std::move(rows)));
    });
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end(), enumeration_less);
  }
  return out;
}

// Every vector of a subspace, sorted by coordinates; zero first.
inline std::vector<Row> subspace_vectors(const Subspace& t) {
  const FieldSpec& f = *t.spec().field;
  const int k = t.dim();
  const auto q = f.order();
  std::vector<Row> out;
  std::vector<std::uint64_t> digit(k, 0);
  while (true) {
    Row v(t.spec().dim, 0);
    for (int j = 0; j < k; ++j) {
      if (digit[j] == 0) continue;
      for (int c = 0; c < t.spec().dim; ++c) {
        v[c] = f.add(v[c], f.mul(digit[j], t.basis()[j][c]));
      }
    }
    out.push_back(std::move(v));
    int s = 0;
    while (s < k && ++digit[s] == q) digit[s++] = 0;
    if (s == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of unordered vector bases of a k-dim space over GF(q), saturating.
inline std::uint64_t basis_count(int k, std::uint64_t q) {
  unsigned __int128 ordered = 1;
  const std::uint64_t qk = detail::saturating_pow(q, k);
  if (qk == UINT64_MAX) return UINT64_MAX;
  for (int i = 0; i < k; ++i) {
    ordered *= (qk - detail::saturating_pow(q, i));
    if (ordered > (static_cast<unsigned __int128>(1) << 100)) return UINT64_MAX;
  }
  for (int i = 2; i <= k; ++i) ordered /= i;
  return ordered > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(ordered);
}

// Visits every unordered vector basis of t exactly once (vectors listed in
// coordinate order, bases in lexicographic order of vector indices). The
// visitor returns false to stop early; the function returns false if stopped.
inline bool for_each_basis(const Subspace& t,
                           const std::function<bool(std::span<const Row>)>& visit,
                           const ScaleCaps& caps = {}) {
  const int k = t.dim();
  if (basis_count(k, t.spec().q()) > caps.max_bases) {
    fail(ErrorCode::kInfeasibleScale, "vector-basis count exceeds the cap");
  }
  if (k == 0) return visit({});
  const FieldSpec& f = *t.spec().field;
  std::vector<Row> vecs = subspace_vectors(t);
  vecs.erase(vecs.begin());  // zero vector
  std::vector<Row> chosen;
  std::vector<std::vector<Row>> echelon{{}};  // RREF of the chosen prefix
  std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == k) return visit(chosen);
    for (std::size_t i = from; i < vecs.size(); ++i) {
      const auto& span_so_far = echelon.back();
      if (detail::is_zero(detail::residual(f, span_so_far, vecs[i]))) continue;
      auto next = span_so_far;
      next.push_back(vecs[i]);
      detail::rref(f, next);
      chosen.push_back(vecs[i]);
      echelon.push_back(std::move(next));
      const bool go_on = extend(i + 1);
      chosen.pop_back();
      echelon.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return extend(0);
}

inline std::vector<std::vector<GFVector>> enumerate_bases(const Subspace& t,
                                                          const ScaleCaps& caps = {}) {
  std::vector<std::vector<GFVector>> out;
  for_each_basis(
      t,
      [&](std::span<const Row> basis) {
        std::vector<GFVector> b;
        for (const auto& r : basis) b.push_back({t.spec(), r});
        out.push_back(std::move(b));
        return true;
      },
      caps);
  return out;
}

}  // namespace qtrans

#endif  // QTRANS_SUBSPACE_HPP_
