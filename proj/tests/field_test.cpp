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

#include <vector>

#include "qtrans/field.hpp"

namespace qtrans {
namespace {

// Schoolbook product of two GF(p) polynomials reduced by a monic modulus,
// written out independently of the library's packed arithmetic.
std::vector<unsigned> naive_mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                                const std::vector<unsigned>& mod, unsigned p) {
  const std::size_t e = mod.size() - 1;
  std::vector<unsigned> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t d = prod.size(); d-- > e;) {
    const unsigned c = prod[d];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= e; ++k) {
      prod[d - e + k] = (prod[d - e + k] + p * p - c * mod[k] % p) % p;
    }
  }
  prod.resize(e);
  return prod;
}

TEST(FieldMake, PrimeFieldsHaveLinearModulus) {
  const auto f = FieldSpec::make(2, 1);
  EXPECT_EQ(f->order(), 2u);
  EXPECT_EQ(f->modulus(), (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(FieldSpec::make(3, 1)->order(), 3u);
}

TEST(FieldMake, Gf4ModulusIsTheOnlyIrreducibleQuadratic) {
  // Monic quadratics over GF(2): x^2, x^2+1, x^2+x, x^2+x+1; only the last
  // has no root in {0, 1}.
  const auto f = FieldSpec::make(2, 2);
  EXPECT_EQ(f->modulus(), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(f->modulus_digits(), "111");
}

TEST(FieldMake, RejectsBadInput) {
  try {
    FieldSpec::make(4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPrimeCharacteristic);
  }
  try {
    FieldSpec::make(2, 2, std::vector<unsigned>{1, 0, 1});  // (x+1)^2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReducibleModulus);
  }
  EXPECT_THROW(FieldSpec::make(2, 1, std::vector<unsigned>{1, 1}), Error);
}

TEST(FieldMake, Deterministic) {
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned e = 1; e <= 4; ++e) {
      EXPECT_EQ(FieldSpec::make(p, e)->modulus(), FieldSpec::make(p, e)->modulus());
      EXPECT_EQ(canonical_field(p, e).get(), canonical_field(p, e).get());
    }
  }
}

TEST(FieldArith, Examples) {
  const auto gf2 = canonical_field(2, 1);
  EXPECT_TRUE((FieldElement::one(gf2) + FieldElement::one(gf2)).is_zero());

  const auto gf4 = canonical_field(2, 2);
  const auto alpha = FieldElement::from_coeffs(gf4, std::vector<unsigned>{0, 1});
  EXPECT_EQ((alpha * alpha).coeffs(), (std::vector<unsigned>{1, 1}));
  EXPECT_EQ((alpha * alpha).digits(), "11");

  const auto gf3 = canonical_field(3, 1);
  const FieldElement one{gf3, 1}, two{gf3, 2};
  EXPECT_EQ((one / two).value, 2u);
}

TEST(FieldArith, Errors) {
  const auto gf3 = canonical_field(3, 1);
  const auto gf2 = canonical_field(2, 1);
  try {
    (void)(FieldElement::one(gf3) / FieldElement::zero(gf3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
  try {
    (void)(FieldElement::one(gf3) + FieldElement::one(gf2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSpecMismatch);
  }
}

TEST(FieldPow, Examples) {
  const auto gf4 = canonical_field(2, 2);
  const FieldElement alpha{gf4, gf4->generator()};
  // Repeated multiplication as the oracle.
  FieldElement acc = FieldElement::one(gf4);
  for (int i = 0; i < 3; ++i) acc = acc * alpha;
  EXPECT_EQ(acc, FieldElement::one(gf4));
  EXPECT_EQ(field_pow(alpha, 3), FieldElement::one(gf4));
  EXPECT_EQ(field_pow(FieldElement::zero(gf4), 0), FieldElement::one(gf4));
  const auto gf3 = canonical_field(3, 1);
  EXPECT_EQ(field_pow(FieldElement{gf3, 2}, 2).value, 1u);
}

TEST(FieldPow, MatchesNaiveProduct) {
  for (auto [p, e] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 1u}}) {
    const auto f = canonical_field(p, e);
    for (FieldSpec::Value a = 0; a < f->order(); ++a) {
      FieldSpec::Value acc = 1;
      for (std::uint64_t m = 0; m < 20; ++m) {
        EXPECT_EQ(f->pow(a, m), acc);
        acc = f->mul(acc, a);
      }
    }
  }
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const auto [p, e] = GetParam();
  const auto f = canonical_field(p, e);
  const auto q = f->order();
  for (FieldSpec::Value a = 0; a < q; ++a) {
    EXPECT_EQ(f->add(a, 0), a);
    EXPECT_EQ(f->mul(a, 1), a);
    EXPECT_EQ(f->add(a, f->neg(a)), 0u);
    if (a != 0) {
      EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
    }
    for (FieldSpec::Value b = 0; b < q; ++b) {
      EXPECT_EQ(f->add(a, b), f->add(b, a));
      EXPECT_EQ(f->mul(a, b), f->mul(b, a));
      EXPECT_EQ(f->coeffs(f->mul(a, b)), naive_mul(f->coeffs(a), f->coeffs(b), f->modulus(), p));
      for (FieldSpec::Value c = 0; c < q; ++c) {
        EXPECT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
        EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
        EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u},
                                           std::pair{2u, 3u}));

TEST(FieldPow, FermatUpTo16) {
  for (std::uint64_t q = 2; q <= 16; ++q) {
    if (!prime_power(q)) continue;
    const auto f = field_of_order(q);
    for (FieldSpec::Value a = 1; a < q; ++a) EXPECT_EQ(f->pow(a, q - 1), 1u) << "q=" << q << " a=" << a;
  }
}

TEST(FieldDigits, RoundTrip) {
  const auto f = canonical_field(3, 2);
  for (FieldSpec::Value a = 0; a < f->order(); ++a) EXPECT_EQ(f->parse_digits(f->to_digits(a)), a);
  EXPECT_EQ(canonical_field(2, 2)->to_digits(3), "11");
  EXPECT_THROW(f->parse_digits("3"), Error);
  EXPECT_THROW(f->parse_digits("1"), Error);
}

TEST(FieldMake, Gf8UsesLeastModulusWithConstantTermFirst) {
  // Irreducible cubics over GF(2) are x^3+x+1 ("1101") and x^3+x^2+1
  // ("1011"); comparing coefficient vectors from the constant term up,
  // "1011" is the smaller.
  EXPECT_EQ(canonical_field(2, 3)->modulus_digits(), "1011");
}

}  // namespace
}  // namespace qtrans
