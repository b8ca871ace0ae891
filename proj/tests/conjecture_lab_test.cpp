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

#include "qtrans/conjecture_lab.hpp"

namespace qtrans {
namespace {

ScanConfig small() {
  ScanConfig cfg;
  cfg.q = 2;
  cfg.max_dim = 2;
  cfg.max_family = 2;
  return cfg;
}

TEST(ScanConfig, Validation) {
  auto cfg = small();
  cfg.mode = ScanMode::kRandom;
  try {
    validate(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
  }
  cfg = small();
  cfg.max_dim = 9;
  try {
    validate(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleScale);
  }
  EXPECT_THROW(config_from_json(json::parse(R"({"mode":"sideways"})")), Error);
  const auto round = config_from_json(config_to_json(small()));
  EXPECT_EQ(config_to_json(round), config_to_json(small()));
}

TEST(QRadoScan, FreeMatroidReducesToQHall) {
  const auto report = scan_q_rado(small(), [](const Lattice& lat) {
    return std::vector<QMatroid>{free_matroid(lat->spec())};
  });
  EXPECT_TRUE(report.counterexamples.empty());
  EXPECT_EQ(report.soundness_failures, 0u);
  EXPECT_EQ(report.instances_checked, 7u + 31u);
}

TEST(QRadoScan, EmptyFamilyIsTrivial) {
  const auto v = make_space(canonical_field(2, 1), 2);
  for (const auto& m : default_matroid_source(lattice_for(v), 2)) {
    const auto ev = evaluate_q_rado(m, SubspaceFamily{v, {}});
    EXPECT_TRUE(ev.lhs);
    EXPECT_TRUE(ev.rhs);
  }
}

TEST(QRadoScan, DefaultSourceFindsNothingOnThePlane) {
  const auto report = scan_q_rado(small());
  EXPECT_TRUE(report.counterexamples.empty());
  EXPECT_EQ(report.soundness_failures, 0u);
}

TEST(QRadoScan, ReplayRejectsForgedCertificate) {
  const auto v = make_space(canonical_field(2, 1), 2);
  const auto m = free_matroid(v);
  const SubspaceFamily fam{v, {Subspace::whole(v)}};
  QRadoEvaluation forged = evaluate_q_rado(m, fam);
  forged.lhs = !forged.lhs;
  EXPECT_FALSE(replay_q_rado(q_rado_certificate(m, fam, forged)));
}

TEST(MinimalUniquenessScan, PlaneHasNoCounterexample) {
  const auto report = scan_minimal_uniqueness(small());
  EXPECT_TRUE(report.counterexamples.empty());
  EXPECT_EQ(report.soundness_failures, 0u);
}

TEST(MinimalUniquenessScan, PermutedFamilyIsTheSamePresentation) {
  const auto v = make_space(canonical_field(2, 1), 2);
  const auto lat = lattice_for(v);
  const auto a = SubspaceFamily::of(v, {lat->at(1), lat->at(2)});
  const auto b = SubspaceFamily::of(v, {lat->at(2), lat->at(1)});
  EXPECT_EQ(member_multiset(*lat, a), member_multiset(*lat, b));
}

TEST(RepresentabilityScan, EverythingFoundOnThePlane) {
  auto cfg = small();
  cfg.max_family = 3;
  const auto report = scan_representability(cfg);
  EXPECT_EQ(report.soundness_failures, 0u);
  ASSERT_FALSE(report.entries.empty());
  for (const auto& e : report.entries) {
    EXPECT_EQ(e["status"], "found");
    if (e["rank"] == 0) {
      EXPECT_EQ(e["method"], "zero");
    } else if (e["aligned"] == true) {
      EXPECT_EQ(e["method"], "aligned-construction");
    }
  }
  const auto j = report_to_json(report);
  EXPECT_NE(j["notes"][0].get<std::string>().find("inconclusive"), std::string::npos);
}

TEST(Scans, ShardInvarianceAndDeterminism) {
  auto one = small();
  auto four = small();
  four.parallel_shards = 4;
  const auto strip = [](json j) {
    j["config"].erase("parallel_shards");
    return j.dump();
  };
  EXPECT_EQ(strip(report_to_json(scan_q_rado(one))), strip(report_to_json(scan_q_rado(four))));
  EXPECT_EQ(strip(report_to_json(scan_minimal_uniqueness(one))),
            strip(report_to_json(scan_minimal_uniqueness(four))));
  EXPECT_EQ(strip(report_to_json(scan_representability(one))),
            strip(report_to_json(scan_representability(four))));
  EXPECT_EQ(report_to_json(scan_q_rado(one)).dump(), report_to_json(scan_q_rado(one)).dump());
}

TEST(Scans, RandomModeIsSeeded) {
  auto cfg = small();
  cfg.mode = ScanMode::kRandom;
  cfg.seed = 11;
  cfg.count = 40;
  const auto a = report_to_json(scan_q_rado(cfg));
  const auto b = report_to_json(scan_q_rado(cfg));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["instances_checked"], 40);
}

TEST(Scans, TimingOnlyWhenAsked) {
  const auto r = scan_q_rado(small());
  EXPECT_FALSE(report_to_json(r).contains("elapsed_ms"));
  EXPECT_TRUE(report_to_json(r, true).contains("elapsed_ms"));
}

}  // namespace
}  // namespace qtrans
