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

// Representable q-matroids: a matrix G over an extension K of GF(q) assigns
// the subspace with basis matrix X the rank of G X^T over K.
//
// GF(q) = GF(p^e) is embedded in K = GF(p^(e d)) by sending the class of x in
// GF(q) to the numerically least root of the GF(q) modulus in K. For prime q
// this is the identity on constants.

#ifndef QTRANS_REPRESENTATION_HPP_
#define QTRANS_REPRESENTATION_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qtrans/errors.hpp"
#include "qtrans/field.hpp"
#include "qtrans/lattice.hpp"
#include "qtrans/q_transversal.hpp"
#include "qtrans/qmatroid.hpp"
#include "qtrans/subspace.hpp"

namespace qtrans {

inline constexpr unsigned kMaxExtensionDegree = 32;  // over the prime field

namespace detail {

inline FieldSpec::Value find_subfield_root(const FieldSpec& base, const FieldSpec& ext) {
  if (base.degree() == 1) return ext.one();
  if (ext.order() > (std::uint64_t{1} << 24)) {
    fail(ErrorCode::kExtensionTooLarge, "embedding search over a field above 2^24 elements");
  }
  const auto& mod = base.modulus();
  for (FieldSpec::Value y = 0; y < ext.order(); ++y) {
    FieldSpec::Value acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) {
      acc = ext.add(ext.mul(acc, y), ext.from_int(mod[i]));
    }
    if (acc == 0) return y;
  }
  fail(ErrorCode::kInvariantViolation, "base modulus has no root in the extension");
}

}  // namespace detail

class QRepresentation {
 public:
  QRepresentation(VectorSpaceSpec base, Field ext, std::vector<Row> g)
      : base_(std::move(base)), ext_(std::move(ext)), g_(std::move(g)) {
    const FieldSpec& bf = *base_.field;
    if (ext_->characteristic() != bf.characteristic() || ext_->degree() % bf.degree() != 0) {
      fail(ErrorCode::kSpecMismatch, "extension does not contain the base field");
    }
    for (const auto& row : g_) {
      if (row.size() != static_cast<std::size_t>(base_.dim)) {
        fail(ErrorCode::kDimensionMismatch, "G row length differs from ambient dimension");
      }
      for (auto x : row) {
        if (!ext_->contains(x)) fail(ErrorCode::kOutOfRange, "G entry outside the extension");
      }
    }
    root_ = detail::find_subfield_root(bf, *ext_);
    const auto q = bf.order();
    embedding_.resize(q);
    for (FieldSpec::Value v = 0; v < q; ++v) {
      const auto c = bf.coeffs(v);
      FieldSpec::Value acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) {
        acc = ext_->add(ext_->mul(acc, root_), ext_->from_int(c[i]));
      }
      embedding_[v] = acc;
    }
  }

  const VectorSpaceSpec& base() const { return base_; }
  const Field& ext() const { return ext_; }
  const std::vector<Row>& g() const { return g_; }
  // Image of the base field's generator in the extension.
  FieldSpec::Value embedding_root() const { return root_; }
  FieldSpec::Value embed(FieldSpec::Value v) const { return embedding_.at(v); }
  // Extension degree over GF(q).
  unsigned relative_degree() const { return ext_->degree() / base_.field->degree(); }

 private:
  VectorSpaceSpec base_;
  Field ext_;
  std::vector<Row> g_;
  FieldSpec::Value root_ = 1;
  std::vector<FieldSpec::Value> embedding_;
};

// rank of G X^T over the extension, where X is the basis matrix of x.
inline int represented_rank(const QRepresentation& rep, const Subspace& x) {
  require_same(rep.base(), x.spec());
  if (x.is_bottom() || rep.g().empty()) return 0;
  const FieldSpec& k = *rep.ext();
  std::vector<Row> h(rep.g().size(), Row(x.dim(), 0));
  for (std::size_t i = 0; i < rep.g().size(); ++i) {
    for (int j = 0; j < x.dim(); ++j) {
      FieldSpec::Value acc = 0;
      for (int l = 0; l < rep.base().dim; ++l) {
        const auto xv = x.basis()[j][l];
        if (xv == 0 || rep.g()[i][l] == 0) continue;
        acc = k.add(acc, k.mul(rep.g()[i][l], rep.embed(xv)));
      }
      h[i][j] = acc;
    }
  }
  return static_cast<int>(detail::matrix_rank(k, std::move(h)));
}

// Same computation from an arbitrary (not necessarily RREF) spanning basis.
inline int represented_rank_of_rows(const QRepresentation& rep, const std::vector<Row>& rows) {
  if (rows.empty() || rep.g().empty()) return 0;
  const FieldSpec& k = *rep.ext();
  std::vector<Row> h(rep.g().size(), Row(rows.size(), 0));
  for (std::size_t i = 0; i < rep.g().size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      FieldSpec::Value acc = 0;
      for (int l = 0; l < rep.base().dim; ++l) {
        acc = k.add(acc, k.mul(rep.g()[i][l], rep.embed(rows[j][l])));
      }
      h[i][j] = acc;
    }
  }
  return static_cast<int>(detail::matrix_rank(k, std::move(h)));
}

inline QMatroid represent(const QRepresentation& rep) {
  const Lattice lat = lattice_for(rep.base());
  std::vector<int> r(lat->size());
  for (Index i = 0; i < lat->size(); ++i) r[i] = represented_rank(rep, lat->at(i));
  return QMatroid(lat, std::move(r), "represented");
}

struct RepresentationCheck {
  bool ok = true;
  std::optional<Subspace> first_mismatch;
  int expected = 0;  // matroid rank at the mismatch
  int actual = 0;    // represented rank at the mismatch
};

inline RepresentationCheck verify_representation(const QRepresentation& rep, const QMatroid& m) {
  require_same(rep.base(), m.spec());
  const auto& lat = *m.lattice();
  for (Index i = 0; i < lat.size(); ++i) {
    const int got = represented_rank(rep, lat.at(i));
    if (got != m.rank_at(i)) return {false, lat.at(i), m.rank_at(i), got};
  }
  return {};
}

// Coordinate subspaces X_i = span{b_j : j in L_i} (1-based indices) of the
// standard basis.
struct AlignedFamily {
  VectorSpaceSpec spec;
  std::vector<std::vector<int>> index_sets;

  SubspaceFamily to_family() const {
    SubspaceFamily fam{spec, {}};
    for (const auto& l : index_sets) {
      std::vector<Row> rows;
      for (int j : l) {
        if (j < 1 || j > spec.dim) fail(ErrorCode::kOutOfRange, "aligned index out of range");
        Row r(spec.dim, 0);
        r[j - 1] = 1;
        rows.push_back(std::move(r));
      }
      fam.members.push_back(Subspace::span(spec, std::move(rows)));
    }
    return fam;
  }
};

// A member is a coordinate subspace iff its RREF rows are unit vectors.
inline std::optional<AlignedFamily> as_aligned(const SubspaceFamily& fam) {
  AlignedFamily out{fam.spec, {}};
  for (const auto& x : fam.members) {
    std::vector<int> l;
    for (const auto& row : x.basis()) {
      int nonzero = 0;
      for (auto v : row) nonzero += v != 0;
      if (nonzero != 1) return std::nullopt;
      l.push_back(static_cast<int>(detail::pivot_of(row)) + 1);
    }
    out.index_sets.push_back(std::move(l));
  }
  return out;
}

// G_ij = 0 if j in L_i, else alpha^(j n^(i-1)) (1-based i, j), over
// K = GF(q^degree) with alpha the generator of K over GF(q).
inline QRepresentation aligned_representation_at_degree(const AlignedFamily& fam, unsigned degree) {
  const FieldSpec& bf = *fam.spec.field;
  const unsigned total = bf.degree() * degree;
  if (degree < 1 || total > kMaxExtensionDegree) {
    fail(ErrorCode::kExtensionTooLarge,
         "extension degree " + std::to_string(total) + " over GF(" +
             std::to_string(bf.characteristic()) + ") exceeds the cap");
  }
  const Field ext = canonical_field(bf.characteristic(), total);
  const auto alpha = ext->generator();
  const std::uint64_t n = static_cast<std::uint64_t>(fam.spec.dim);
  std::vector<Row> g;
  std::uint64_t row_scale = 1;  // n^(i-1)
  for (const auto& l : fam.index_sets) {
    Row row(fam.spec.dim, 0);
    for (std::uint64_t j = 1; j <= n; ++j) {
      const bool loop = std::find(l.begin(), l.end(), static_cast<int>(j)) != l.end();
      row[j - 1] = loop ? 0 : ext->pow(alpha, j * row_scale);
    }
    g.push_back(std::move(row));
    row_scale *= n;
  }
  return QRepresentation(fam.spec, ext, std::move(g));
}

// Degree n^k extension; guaranteed to represent the presentation matroid of
// the induced coordinate family, and checked.
inline QRepresentation build_aligned_representation(const AlignedFamily& fam) {
  std::uint64_t degree = 1;
  for (std::size_t i = 0; i < fam.index_sets.size(); ++i) {
    degree *= static_cast<std::uint64_t>(fam.spec.dim);
    if (degree * fam.spec.field->degree() > kMaxExtensionDegree) {
      fail(ErrorCode::kExtensionTooLarge, "n^k extension exceeds the cap");
    }
  }
  auto rep = aligned_representation_at_degree(fam, static_cast<unsigned>(degree));
  if (!verify_representation(rep, presentation_matroid(fam.to_family())).ok) {
    fail(ErrorCode::kInvariantViolation, "aligned construction fails to represent its matroid");
  }
  return rep;
}

// Tries degrees 1, 2, ... and returns the first one whose construction
// verifies; falls back to the guaranteed degree n^k.
inline QRepresentation smallest_aligned_representation(const AlignedFamily& fam) {
  const QMatroid target = presentation_matroid(fam.to_family());
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < fam.index_sets.size(); ++i) bound *= static_cast<std::uint64_t>(fam.spec.dim);
  for (unsigned d = 1; d < bound; ++d) {
    if (d * fam.spec.field->degree() > kMaxExtensionDegree) break;
    auto rep = aligned_representation_at_degree(fam, d);
    if (verify_representation(rep, target).ok) return rep;
  }
  return build_aligned_representation(fam);
}

// Searches r x m matrices over GF(q^degree), r = max(rank, 1), for one that
// represents m. The whole space is enumerated when it has at most `budget`
// matrices; otherwise `budget` seeded random samples are tried.
inline std::optional<QRepresentation> search_representation(const QMatroid& m, unsigned degree,
                                                            std::uint64_t budget,
                                                            std::uint64_t seed) {
  const FieldSpec& bf = *m.spec().field;
  const unsigned total = bf.degree() * degree;
  if (degree < 1 || total > kMaxExtensionDegree) {
    fail(ErrorCode::kExtensionTooLarge, "search degree exceeds the cap");
  }
  const Field ext = canonical_field(bf.characteristic(), total);
  const int rows = std::max(m.rank(), 1);
  const int cols = m.spec().dim;
  const std::size_t cells = static_cast<std::size_t>(rows) * cols;
  const std::uint64_t space = detail::saturating_pow(ext->order(), static_cast<int>(cells));
  std::vector<Row> g(rows, Row(cols, 0));
  const auto try_current = [&]() -> std::optional<QRepresentation> {
    QRepresentation rep(m.spec(), ext, g);
    if (verify_representation(rep, m).ok) return rep;
    return std::nullopt;
  };
  if (m.rank() == 0) return try_current();
  if (space <= budget) {
    std::vector<FieldSpec::Value> digit(cells, 0);
    while (true) {
      for (std::size_t c = 0; c < cells; ++c) g[c / cols][c % cols] = digit[c];
      if (auto rep = try_current()) return rep;
      std::size_t s = 0;
      while (s < cells && ++digit[s] == ext->order()) digit[s++] = 0;
      if (s == cells) return std::nullopt;
    }
  }
  // Raw engine output reduced mod |K|: distributions are
  // implementation-defined, the engine sequence is not.
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < budget; ++t) {
    for (auto& row : g) {
      for (auto& x : row) x = rng() % ext->order();
    }
    if (auto rep = try_current()) return rep;
  }
  return std::nullopt;
}

}  // namespace qtrans

#endif  // QTRANS_REPRESENTATION_HPP_
