#include <gtest/gtest.h>

#include "corpus.hpp"
#include "naive.hpp"
#include "plumbtight/seifert.hpp"

namespace pt = plumbtight;
using pt::NegCF;
using pt::Rational;
using pt::SeifertData;

namespace {
Rational q(const char* s) { return Rational::parse(s); }
}  // namespace

TEST(NegCF, Examples) {
  EXPECT_EQ(pt::neg_cf_expand(q("1/2")).digits, (std::vector<int>{2}));
  EXPECT_EQ(pt::neg_cf_expand(q("2/3")).digits, (std::vector<int>{2, 2}));
  EXPECT_EQ(pt::neg_cf_expand(q("1/5")).digits, (std::vector<int>{5}));
  EXPECT_EQ(pt::neg_cf_expand(q("3/7")).digits, (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(pt::eval_cf(NegCF{{2}}), q("-2"));
  EXPECT_EQ(pt::eval_cf(NegCF{{2, 2, 2}}), q("-4/3"));
}

TEST(NegCF, Errors) {
  EXPECT_THROW(pt::neg_cf_expand(q("0")), std::domain_error);
  EXPECT_THROW(pt::neg_cf_expand(q("1")), std::domain_error);
  EXPECT_THROW(pt::neg_cf_expand(q("3/2")), std::domain_error);
  EXPECT_THROW(pt::eval_cf(NegCF{}), std::domain_error);
}

TEST(NegCF, RoundTripAndDigits) {
  for (int den = 2; den <= 40; ++den)
    for (int num = 1; num < den; ++num) {
      const Rational r{pt::Integer(num), pt::Integer(den)};
      const NegCF cf = pt::neg_cf_expand(r);
      for (int a : cf.digits) EXPECT_GE(a, 2);
      EXPECT_EQ(pt::eval_cf(cf), -r.reciprocal());
    }
}

TEST(NegCF, Monotone) {
  // -1/r is increasing in r, and so is the value of its expansion.
  for (int den = 3; den <= 20; ++den)
    for (int num = 1; num + 1 < den; ++num) {
      const Rational a{pt::Integer(num), pt::Integer(den)}, b{pt::Integer(num + 1), pt::Integer(den)};
      EXPECT_LT(pt::eval_cf(pt::neg_cf_expand(a)), pt::eval_cf(pt::neg_cf_expand(b)));
    }
}

TEST(Seifert, ParseNormalizes) {
  const auto s = SeifertData::parse("-1;1/5,2/3,3/4");
  EXPECT_EQ(s.e0, -1);
  EXPECT_EQ(s.r[0], q("3/4"));
  EXPECT_EQ(s.r[1], q("2/3"));
  EXPECT_EQ(s.r[2], q("1/5"));
  EXPECT_EQ(s.str(), "-1;3/4,2/3,1/5");
  EXPECT_THROW(SeifertData::parse("-1;1/2,1/2"), std::invalid_argument);
  EXPECT_THROW(SeifertData::parse("-1;1/2,1/2,1/2,1/2"), std::invalid_argument);
  EXPECT_THROW(SeifertData::parse("-1 1/2,1/2,1/2"), std::invalid_argument);
  EXPECT_THROW(SeifertData::parse("1/2;1/2,1/2,1/2"), std::invalid_argument);
  EXPECT_THROW(SeifertData::parse("-1;3/2,1/2,1/2"), std::domain_error);
}

TEST(Seifert, LSpaceExamples) {
  EXPECT_TRUE(pt::l_space_test(SeifertData::parse("-1;1/2,1/2,1/2")));
  EXPECT_FALSE(pt::l_space_test(SeifertData::parse("-1;1/3,1/3,1/3")));
  const auto pair = pt::realizing_pair(SeifertData::parse("-1;1/3,1/3,1/3"));
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->m, 2);
  EXPECT_EQ(pair->a, 1);
  EXPECT_EQ(pt::l_space_test(SeifertData::parse("-1;3/4,2/3,1/5")),
            !pt::testing::naive_realizable(SeifertData::parse("-1;3/4,2/3,1/5")));
  EXPECT_THROW(pt::realizing_pair(SeifertData::make(-2, {q("1/2"), q("1/2"), q("1/2")})), std::domain_error);
}

TEST(Seifert, LSpaceMatchesUnboundedSearch) {
  for (const auto& s : pt::testing::normalized_triples(7))
    EXPECT_EQ(pt::l_space_test(s), !pt::testing::naive_realizable(s)) << s.str();
}

TEST(Seifert, LSpaceNeedsLargeFirstCoefficient) {
  for (const auto& s : pt::testing::l_space_corpus(7)) EXPECT_GE(s.r[0], q("1/2")) << s.str();
}

TEST(Seifert, RealizingPairCertifies) {
  for (const auto& s : pt::testing::normalized_triples(6)) {
    const auto p = pt::realizing_pair(s);
    if (!p) continue;
    const Rational m(p->m), a(p->a);
    EXPECT_LT(s.r[0], a / m);
    EXPECT_LT(s.r[1], (m - a) / m);
    EXPECT_LT(s.r[2], Rational(1) / m);
  }
}

TEST(Seifert, Reflect) {
  const auto s = SeifertData::parse("-1;3/4,2/3,1/5");
  const auto r = pt::reflect(s);
  EXPECT_EQ(r.e0, -2);
  EXPECT_EQ(r.str(), "-2;4/5,1/3,1/4");
  EXPECT_EQ(pt::reflect(r), s);
}

TEST(Seifert, HomologyOrder) {
  EXPECT_EQ(pt::homology_order(SeifertData::parse("-1;1/2,1/2,1/2")), 4);
  EXPECT_EQ(pt::homology_order(SeifertData::parse("-1;1/3,1/3,1/3")), 0);
  EXPECT_EQ(pt::homology_order(SeifertData::parse("-1;1/2,1/3,1/5")), 1);  // Poincare sphere, reversed
  EXPECT_EQ(pt::homology_order(pt::reflect(SeifertData::parse("-1;1/2,1/3,1/5"))), 1);
}
