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


#include <gtest/gtest.h>

#include "qtrans/q_transversal.hpp"
#include "qtrans/serialize.hpp"

namespace qtrans {
namespace {

TEST(Serialize, FieldAndRows) {
  const auto f = canonical_field(2, 2);
  EXPECT_EQ(field_to_json(*f), json::parse(R"({"p":2,"e":2,"modulus":"111"})"));
  EXPECT_TRUE(*field_from_json(field_to_json(*f)) == *f);
  EXPECT_EQ(row_to_string(*f, {3, 2}), "11.01");
  EXPECT_EQ(row_from_string(*f, "11.01", 2), (Row{3, 2}));
  const auto g = canonical_field(2, 1);
  EXPECT_EQ(row_to_string(*g, {1, 0, 1}), "101");
  EXPECT_THROW(row_from_string(*g, "10", 3), Error);
  EXPECT_THROW(row_from_string(*g, "12", 2), Error);
}

TEST(Serialize, SubspacesAndFamilies) {
  const auto v = make_space(canonical_field(2, 1), 2);
  EXPECT_EQ(subspace_to_json(Subspace::bottom(v)), json::array());
  const auto s = subspace_from_json(v, json::parse(R"(["11","01"])"));
  EXPECT_EQ(subspace_to_json(s), json::parse(R"(["10","01"])"));
  const auto fam = family_from_json(v, json::parse(R"([["10"],[]])"));
  EXPECT_EQ(family_to_json(fam), json::parse(R"([["10"],[]])"));
  EXPECT_THROW(family_from_json(v, json::parse(R"({"a":1})")), Error);
}

TEST(Serialize, IndexSets) {
  EXPECT_EQ(index_set_to_json(0b101), json::parse("[1,3]"));
  EXPECT_EQ(index_set_from_json(json::parse("[1,3]"), 3), IndexSet{0b101});
  EXPECT_THROW(index_set_from_json(json::parse("[4]"), 3), Error);
}

TEST(Serialize, MatroidRoundTrip) {
  const auto v = make_space(canonical_field(3, 1), 2);
  const auto m = presentation_matroid(SubspaceFamily::of(v, {Subspace::span(v, {{1, 2}})}));
  const auto j = matroid_to_json(m);
  EXPECT_EQ(j["ranks"].size(), m.lattice()->size());
  EXPECT_EQ(matroid_from_json(j), m);
  auto partial = j;
  partial["ranks"].erase(partial["ranks"].size() - 1);
  try {
    matroid_from_json(partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteTable);
  }
}

TEST(Serialize, RepresentationRoundTrip) {
  const auto v = make_space(canonical_field(2, 1), 2);
  const auto rep = build_aligned_representation({v, {{1}, {2}}});
  const auto j = representation_to_json(rep);
  const auto back = representation_from_json(j);
  EXPECT_EQ(back.g(), rep.g());
  EXPECT_EQ(represent(back), represent(rep));
}

TEST(Serialize, SetFamilies) {
  const auto j = json::parse(R"({"ground":["a","b"],"members":[["a","b"],["b"]]})");
  const auto f = set_family_from_json(j);
  EXPECT_EQ(f.members, (std::vector<Mask>{0b11, 0b10}));
  EXPECT_EQ(set_family_to_json(f), j);
  EXPECT_THROW(set_family_from_json(json::parse(R"({"ground":["a"],"members":[["z"]]})")), Error);
}

TEST(Serialize, SpaceAcceptsQOrField) {
  const auto a = space_from_json(json::parse(R"({"q":4,"dim":2})"));
  const auto b = space_from_json(json::parse(R"({"dim":2,"field":{"p":2,"e":2,"modulus":"111"}})"));
  EXPECT_EQ(a, b);
  EXPECT_THROW(space_from_json(json::parse(R"({"q":6,"dim":2})")), Error);
  EXPECT_THROW(space_from_json(json::parse(R"({"q":3,"dim":2,"field":{"p":2,"e":1}})")), Error);
}

}  // namespace
}  // namespace qtrans
