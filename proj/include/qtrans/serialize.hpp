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

// JSON forms of every value that crosses the CLI boundary.
//
//   field element   little-endian coefficient digits: GF(4) alpha+1 -> "11"
//   field           {"p": 2, "e": 2, "modulus": "111"}
//   vector / row    prime field: one digit per coordinate ("101");
//                   otherwise element digit strings joined by '.' ("10.01")
//   subspace        list of RREF row strings; the zero subspace is []
//   family          list of subspaces
//   q-matroid       {"space", "provenance", "ranks": [[subspace, r], ...]}
//                   in enumeration order
//   representation  {"base", "ext", "embedding_root", "g": [rows over K]}
//   set family      {"ground": [labels], "members": [[labels]]}

#ifndef QTRANS_SERIALIZE_HPP_
#define QTRANS_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "qtrans/classical.hpp"
#include "qtrans/errors.hpp"
#include "qtrans/field.hpp"
#include "qtrans/lattice.hpp"
#include "qtrans/qmatroid.hpp"
#include "qtrans/representation.hpp"
#include "qtrans/subspace.hpp"

namespace qtrans {

using json = nlohmann::json;

namespace detail {

template <typename T>
T get_or_fail(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorCode::kMalformedInput, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(ErrorCode::kMalformedInput, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace detail

inline json field_to_json(const FieldSpec& f) {
  return {{"p", f.characteristic()}, {"e", f.degree()}, {"modulus", f.modulus_digits()}};
}

inline Field field_from_json(const json& j) {
  const auto p = detail::get_or_fail<unsigned>(j, "p");
  const auto e = detail::get_or_fail<unsigned>(j, "e");
  if (!j.contains("modulus")) return canonical_field(p, e);
  const auto digits = detail::get_or_fail<std::string>(j, "modulus");
  std::vector<unsigned> mod;
  for (char c : digits) {
    const auto d = detail::char_digit(c);
    if (!d) fail(ErrorCode::kMalformedInput, "bad modulus digit");
    mod.push_back(*d);
  }
  return FieldSpec::make(p, e, mod);
}

inline std::string row_to_string(const FieldSpec& f, const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (f.degree() > 1 && i > 0) out.push_back('.');
    out += f.to_digits(row[i]);
  }
  return out;
}

inline Row row_from_string(const FieldSpec& f, const std::string& s, int dim) {
  Row row;
  if (f.degree() == 1) {
    for (char c : s) row.push_back(f.parse_digits(std::string(1, c)));
  } else {
    std::size_t start = 0;
    while (start <= s.size()) {
      const std::size_t dot = s.find('.', start);
      const std::size_t end = dot == std::string::npos ? s.size() : dot;
      row.push_back(f.parse_digits(s.substr(start, end - start)));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
  }
  if (static_cast<int>(row.size()) != dim) {
    fail(ErrorCode::kMalformedInput,
         "row '" + s + "' has " + std::to_string(row.size()) + " coordinates, expected " +
             std::to_string(dim));
  }
  return row;
}

inline json space_to_json(const VectorSpaceSpec& spec) {
  return {{"q", spec.q()}, {"dim", spec.dim}, {"field", field_to_json(*spec.field)}};
}

inline VectorSpaceSpec space_from_json(const json& j) {
  const int dim = detail::get_or_fail<int>(j, "dim");
  Field f = j.contains("field") ? field_from_json(j.at("field"))
                                : field_of_order(detail::get_or_fail<std::uint64_t>(j, "q"));
  if (j.contains("q") && detail::get_or_fail<std::uint64_t>(j, "q") != f->order()) {
    fail(ErrorCode::kMalformedInput, "'q' disagrees with the field block");
  }
  return make_space(std::move(f), dim);
}

inline json rows_to_json(const FieldSpec& f, const std::vector<Row>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(row_to_string(f, r));
  return out;
}

inline std::vector<Row> rows_from_json(const FieldSpec& f, const json& j, int dim) {
  if (!j.is_array()) fail(ErrorCode::kMalformedInput, "expected a list of row strings");
  std::vector<Row> rows;
  for (const auto& r : j) {
    if (!r.is_string()) fail(ErrorCode::kMalformedInput, "row must be a string");
    rows.push_back(row_from_string(f, r.get<std::string>(), dim));
  }
  return rows;
}

inline json subspace_to_json(const Subspace& s) { return rows_to_json(*s.spec().field, s.basis()); }

inline Subspace subspace_from_json(const VectorSpaceSpec& spec, const json& j) {
  return Subspace::span(spec, rows_from_json(*spec.field, j, spec.dim));
}

inline json family_to_json(const SubspaceFamily& fam) {
  json out = json::array();
  for (const auto& m : fam.members) out.push_back(subspace_to_json(m));
  return out;
}

inline SubspaceFamily family_from_json(const VectorSpaceSpec& spec, const json& j) {
  if (!j.is_array()) fail(ErrorCode::kMalformedInput, "family must be a list of subspaces");
  SubspaceFamily fam{spec, {}};
  for (const auto& m : j) fam.members.push_back(subspace_from_json(spec, m));
  return fam;
}

// 1-based member indices of an index set.
inline json index_set_to_json(IndexSet j) {
  json out = json::array();
  for (int i = 0; i < 32; ++i) {
    if ((j >> i) & 1) out.push_back(i + 1);
  }
  return out;
}

inline IndexSet index_set_from_json(const json& j, int n) {
  if (!j.is_array()) fail(ErrorCode::kMalformedInput, "index set must be a list");
  IndexSet out = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(ErrorCode::kMalformedInput, "index must be an integer");
    const int i = v.get<int>();
    if (i < 1 || i > n) fail(ErrorCode::kMalformedInput, "index out of range");
    out |= IndexSet{1} << (i - 1);
  }
  return out;
}

inline json matroid_to_json(const QMatroid& m) {
  json ranks = json::array();
  const auto& lat = *m.lattice();
  for (Index i = 0; i < lat.size(); ++i) ranks.push_back({subspace_to_json(lat.at(i)), m.rank_at(i)});
  return {{"space", space_to_json(m.spec())}, {"provenance", m.provenance()}, {"ranks", ranks}};
}

inline QMatroid matroid_from_json(const json& j) {
  const auto spec = space_from_json(detail::get_or_fail<json>(j, "space"));
  const Lattice lat = lattice_for(spec);
  const auto ranks = detail::get_or_fail<json>(j, "ranks");
  if (!ranks.is_array()) fail(ErrorCode::kMalformedInput, "'ranks' must be a list");
  std::vector<int> table(lat->size(), -1);
  for (const auto& entry : ranks) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_number_integer()) {
      fail(ErrorCode::kMalformedInput, "rank entry must be [subspace, rank]");
    }
    table[lat->index_of(subspace_from_json(spec, entry[0]))] = entry[1].get<int>();
  }
  for (int r : table) {
    if (r < 0) fail(ErrorCode::kIncompleteTable, "rank table misses a subspace");
  }
  const std::string prov = j.contains("provenance") ? j.at("provenance").get<std::string>() : "table";
  return QMatroid(lat, std::move(table), prov);
}

inline json representation_to_json(const QRepresentation& rep) {
  return {{"base", space_to_json(rep.base())},
          {"ext", field_to_json(*rep.ext())},
          {"embedding_root", rep.ext()->to_digits(rep.embedding_root())},
          {"g", rows_to_json(*rep.ext(), rep.g())}};
}

inline QRepresentation representation_from_json(const json& j) {
  const auto base = space_from_json(detail::get_or_fail<json>(j, "base"));
  const Field ext = field_from_json(detail::get_or_fail<json>(j, "ext"));
  std::vector<Row> g;
  if (j.contains("g")) g = rows_from_json(*ext, j.at("g"), base.dim);
  QRepresentation rep(base, ext, std::move(g));
  if (j.contains("embedding_root") &&
      ext->parse_digits(j.at("embedding_root").get<std::string>()) != rep.embedding_root()) {
    fail(ErrorCode::kMalformedInput, "embedding root differs from the canonical one");
  }
  return rep;
}

inline json mask_to_labels(const SetFamily& fam, Mask m) {
  json out = json::array();
  for (int x = 0; x < fam.ground_size(); ++x) {
    if ((m >> x) & 1) out.push_back(fam.ground[x]);
  }
  return out;
}

inline json set_family_to_json(const SetFamily& fam) {
  json members = json::array();
  for (Mask m : fam.members) members.push_back(mask_to_labels(fam, m));
  return {{"ground", fam.ground}, {"members", members}};
}

inline SetFamily set_family_from_json(const json& j) {
  return SetFamily::from_labels(
      detail::get_or_fail<std::vector<std::string>>(j, "ground"),
      detail::get_or_fail<std::vector<std::vector<std::string>>>(j, "members"));
}

}  // namespace qtrans

#endif  // QTRANS_SERIALIZE_HPP_
