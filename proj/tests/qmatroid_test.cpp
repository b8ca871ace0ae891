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

#include <unordered_map>
#include <vector>

#include "oracle.hpp"
#include "qtrans/qmatroid.hpp"
#include "qtrans/q_transversal.hpp"

namespace qtrans {
namespace {

VectorSpaceSpec gf2(int n) { return make_space(canonical_field(2, 1), n); }
Subspace sub(const VectorSpaceSpec& s, std::vector<Row> rows) { return Subspace::span(s, std::move(rows)); }

struct Gf2Plane : ::testing::Test {
  VectorSpaceSpec v = gf2(2);
  Subspace bot = Subspace::bottom(v);
  Subspace e1 = sub(v, {{1, 0}});
  Subspace e2 = sub(v, {{0, 1}});
  Subspace d = sub(v, {{1, 1}});
  Subspace top = Subspace::whole(v);
};

TEST_F(Gf2Plane, RankOneExamples) {
  const auto m = rank_one(e1);
  EXPECT_EQ(m.rank(e2), 1);
  EXPECT_EQ(m.rank(e1), 0);
  EXPECT_EQ(m.rank(top), 1);
  const auto all_loops = rank_one(top);
  for (int r : all_loops.ranks()) EXPECT_EQ(r, 0);
  const auto no_loops = rank_one(bot);
  EXPECT_EQ(no_loops.ranks(), (std::vector<int>{0, 1, 1, 1, 1}));
}

TEST_F(Gf2Plane, CheckSubmodularExamples) {
  const auto lat = lattice_for(v);
  std::vector<int> dims;
  for (Index i = 0; i < lat->size(); ++i) dims.push_back(lat->dim(i));
  EXPECT_FALSE(check_submodular({lat, dims}));
  EXPECT_FALSE(check_submodular({lat, std::vector<int>(5, 0)}));
  const auto bad = check_submodular({lat, {0, 0, 0, 0, 1}});
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->axiom, "submodular");
  EXPECT_EQ(lat->dim(bad->a), 1);
  EXPECT_EQ(lat->dim(bad->b), 1);
  EXPECT_THROW(check_submodular({lat, {0, 1}}), Error);
  try {
    induce({lat, {0, 0, 0, 0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSubmodular);
  }
}

TEST_F(Gf2Plane, FromMapNeedsEveryValue) {
  const auto lat = lattice_for(v);
  std::unordered_map<Subspace, int, SubspaceHash> map{{bot, 0}, {e1, 1}};
  try {
    SubmodularFn::from_map(lat, map);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteTable);
  }
  map = {{bot, 0}, {e1, 1}, {e2, 1}, {d, 1}, {top, 2}};
  EXPECT_EQ(induce(SubmodularFn::from_map(lat, map)), free_matroid(v));
}

TEST_F(Gf2Plane, InduceExamples) {
  const auto lat = lattice_for(v);
  std::vector<int> dims;
  for (Index i = 0; i < lat->size(); ++i) dims.push_back(lat->dim(i));
  EXPECT_EQ(induce({lat, dims}), free_matroid(v));
  EXPECT_EQ(induce({lat, std::vector<int>(5, 0)}), zero_matroid(v));
  std::vector<int> sum(5);
  const auto r1 = rank_one(e1), r2 = rank_one(e2);
  for (Index i = 0; i < 5; ++i) sum[i] = r1.rank_at(i) + r2.rank_at(i);
  EXPECT_EQ(induce({lat, sum}).rank(), 2);
}

TEST_F(Gf2Plane, UnionExamples) {
  for (const auto& l : {bot, e1, e2, d, top}) {
    const auto m = rank_one(l);
    EXPECT_EQ(matroid_union(m, rank_one(top)), m);
  }
  EXPECT_EQ(matroid_union(rank_one(e1), rank_one(e2)), free_matroid(v));
  const QMatroid three[] = {rank_one(e1), rank_one(e2), rank_one(d)};
  EXPECT_EQ(matroid_union(matroid_union(three[0], three[1]), three[2]), matroid_union(three));
  EXPECT_THROW(matroid_union(rank_one(e1), rank_one(Subspace::bottom(gf2(3)))), Error);
}

TEST_F(Gf2Plane, IndependenceExamples) {
  EXPECT_TRUE(is_independent(rank_one(e1), bot));
  for (const auto& a : {bot, e1, e2, d, top}) EXPECT_TRUE(is_independent(free_matroid(v), a));
  EXPECT_FALSE(is_independent(rank_one(e1), e1));
  EXPECT_TRUE(is_independent(rank_one(e1), e2));
}

TEST_F(Gf2Plane, CircuitExamples) {
  EXPECT_TRUE(circuits(free_matroid(v)).empty());
  EXPECT_EQ(circuits(rank_one(bot)), std::vector<Subspace>{top});
  EXPECT_EQ(circuits(rank_one(e1)), std::vector<Subspace>{e1});
}

TEST_F(Gf2Plane, ClosureExamples) {
  for (const auto& l : {bot, e1, top}) EXPECT_EQ(closure(rank_one(l), bot), loop_space(rank_one(l)));
  EXPECT_EQ(loop_space(rank_one(e1)), e1);
  for (const auto& a : {bot, e1, e2, d, top}) EXPECT_EQ(closure(free_matroid(v), a), a);
  EXPECT_EQ(closure(rank_one(e1), e2), top);
}

TEST_F(Gf2Plane, NullityExamples) {
  const auto free = free_matroid(v);
  for (const auto& x : {bot, e1, e2, d, top}) {
    EXPECT_EQ(bar_nullity(free, x), x.dim());
    EXPECT_EQ(bar_nullity(zero_matroid(v), x), 0);
    EXPECT_EQ(nullity(free, x), 0);
  }
  EXPECT_EQ(bar_nullity(rank_one(bot), e1), 0);
  EXPECT_EQ(nullity(rank_one(bot), top), 1);
}

TEST_F(Gf2Plane, FundamentalCircuitExamples) {
  EXPECT_EQ(fundamental_circuit(rank_one(bot), top), top);
  EXPECT_EQ(fundamental_circuit(rank_one(e1), e1), e1);
  try {
    fundamental_circuit(free_matroid(v), top);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongNullity);
  }
}

TEST_F(Gf2Plane, CyclicExamples) {
  EXPECT_TRUE(is_cyclic(free_matroid(v), bot));
  for (const auto& x : {e1, e2, d, top}) EXPECT_FALSE(is_cyclic(free_matroid(v), x));
  EXPECT_TRUE(is_cyclic(rank_one(bot), top));
}

// Every union of up to three rank-1 matroids on GF(2)^2 and GF(2)^3.
std::vector<QMatroid> union_zoo(int dim) {
  const auto spec = gf2(dim);
  const auto lat = lattice_for(spec);
  std::vector<QMatroid> out{free_matroid(spec), zero_matroid(spec)};
  const Index n = static_cast<Index>(lat->size());
  for (Index a = 0; a < n; ++a) {
    out.push_back(rank_one(lat->at(a)));
    for (Index b = a; b < n; ++b) {
      out.push_back(matroid_union(rank_one(lat->at(a)), rank_one(lat->at(b))));
      if (dim > 2) continue;
      for (Index c = b; c < n; ++c) {
        const QMatroid ms[] = {rank_one(lat->at(a)), rank_one(lat->at(b)), rank_one(lat->at(c))};
        out.push_back(matroid_union(ms));
      }
    }
  }
  return out;
}

TEST(QMatroidProperties, RankAxiomsAndNullity) {
  for (int dim : {1, 2, 3}) {
    for (const auto& m : union_zoo(dim)) {
      EXPECT_FALSE(check_rank_axioms(m));
      const auto& lat = *m.lattice();
      const auto nul = [&](Index i) { return lat.dim(i) - m.rank_at(i); };
      for (Index a = 0; a < lat.size(); ++a) {
        EXPECT_GE(nul(a), 0);
        EXPECT_LE(nul(a), lat.dim(a));
        for (Index b = 0; b < lat.size(); ++b) {
          if (lat.leq(a, b)) {
            EXPECT_LE(nul(a), nul(b));
          }
          EXPECT_GE(nul(lat.join(a, b)) + nul(lat.meet(a, b)), nul(a) + nul(b));
          if (m.rank_at(a) == 0 && m.rank_at(b) == 0) {
            EXPECT_EQ(m.rank_at(lat.join(a, b)), 0);
          }
        }
      }
    }
  }
}

TEST(QMatroidProperties, InduceOfRankFunctionIsIdentity) {
  for (int dim : {2, 3}) {
    for (const auto& m : union_zoo(dim)) EXPECT_EQ(induce({m.lattice(), m.ranks()}), m);
  }
}

TEST(QMatroidProperties, InduceMatchesFormulaOracle) {
  for (int dim : {2, 3}) {
    const oracle::PrimeSpace sp{2, dim};
    const auto all = sp.all_subspaces();
    const auto lat = lattice_for(gf2(dim));
    for (Index a = 0; a < lat->size(); ++a) {
      for (Index b = a; b < lat->size(); ++b) {
        const auto m = matroid_union(rank_one(lat->at(a)), rank_one(lat->at(b)));
        const std::vector<oracle::VecSet> loops = {sp.of(lat->at(a)), sp.of(lat->at(b))};
        for (Index x = 0; x < lat->size(); ++x) {
          EXPECT_EQ(m.rank_at(x), oracle::presentation_rank(sp, all, loops, sp.of(lat->at(x))));
        }
      }
    }
  }
}

TEST(QMatroidProperties, ClosureMatchesDefinitionalScan) {
  for (int dim : {2, 3}) {
    for (const auto& m : union_zoo(dim)) {
      const auto& lat = *m.lattice();
      for (Index a = 0; a < lat.size(); ++a) {
        // Largest B >= A with r(B) = r(A), by scanning all B.
        std::optional<Index> best;
        for (Index b : lat.above(a)) {
          if (m.rank_at(b) == m.rank_at(a) && (!best || lat.dim(b) > lat.dim(*best))) best = b;
        }
        ASSERT_TRUE(best);
        for (Index b : lat.above(a)) {
          if (m.rank_at(b) == m.rank_at(a)) {
            EXPECT_TRUE(lat.leq(b, *best));
          }
        }
        EXPECT_EQ(closure_at(m, a), *best);
      }
    }
  }
}

TEST(QMatroidProperties, FundamentalCircuitDichotomy) {
  for (int dim : {2, 3}) {
    for (const auto& m : union_zoo(dim)) {
      const auto& lat = *m.lattice();
      const auto cs = circuit_indices(m);
      for (Index s = 0; s < lat.size(); ++s) {
        if (lat.dim(s) - m.rank_at(s) != 1) continue;
        const Index c = fundamental_circuit_at(m, s);
        EXPECT_NE(std::find(cs.begin(), cs.end(), c), cs.end());
        int below = 0;
        for (Index x : cs) below += lat.leq(x, s) ? 1 : 0;
        EXPECT_EQ(below, 1);
      }
    }
  }
}

TEST(QMatroidProperties, UnionSameRank) {
  const auto zoo = union_zoo(2);
  for (const auto& m : zoo) {
    for (const auto& n : zoo) {
      const auto u = matroid_union(m, n);
      if (u.rank() == m.rank()) {
        EXPECT_EQ(u, m);
      }
    }
  }
}

}  // namespace
}  // namespace qtrans
