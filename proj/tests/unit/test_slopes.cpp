#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "plumbtight/slopes.hpp"

namespace pt = plumbtight;
using pt::NegCF;
using pt::Presentation;
using pt::Rational;
using pt::Slope;

namespace {

Presentation pres(std::vector<int> a, std::vector<int> b, std::vector<int> c) {
  return Presentation{{std::move(a), std::move(b), std::move(c)}};
}

Slope sl(const char* s) { return Slope(Rational::parse(s)); }

NegCF twos_then(int head, int twos) {
  NegCF cf{{head}};
  for (int i = 0; i < twos; ++i) cf.digits.push_back(2);
  return cf;
}

}  // namespace

TEST(Slopes, Matrices) {
  EXPECT_EQ(pt::digit_matrix(2), (pt::SlopeMatrix{-2, 1, -1, 0}));
  EXPECT_EQ(pt::cf_to_matrix(NegCF{{2}}), (pt::SlopeMatrix{-2, 1, -1, 0}));
  const NegCF cf{{3, 2, 5}};
  EXPECT_EQ(pt::cf_to_matrix(cf), pt::digit_matrix(5) * pt::digit_matrix(2) * pt::digit_matrix(3));
  for (int den = 2; den <= 30; ++den)
    for (int num = 1; num < den; ++num) {
      const NegCF c = pt::neg_cf_expand(Rational(pt::Integer(num), pt::Integer(den)));
      const auto m = pt::cf_to_matrix(c);
      EXPECT_EQ(m.det(), 1);
      EXPECT_EQ(Rational(m.a, m.b), pt::eval_cf(c));
      EXPECT_EQ(pt::first_row_slope(m), Slope(pt::eval_cf(c).reciprocal()));
    }
}

TEST(Slopes, FirstRowSlopeFormula) {
  EXPECT_EQ(pt::first_row_slope(pt::cf_to_matrix(NegCF{{3}})), sl("-1/3"));
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; l <= 5; ++l)
      EXPECT_EQ(pt::first_row_slope(pt::cf_to_matrix(twos_then(k + 2, l))),
                Slope(Rational(pt::Integer(-(l + 1)), pt::Integer((k + 1) * (l + 1) + 1))));
}

TEST(Slopes, PeeledSingleBlock) {
  for (int a0 = 2; a0 <= 8; ++a0)
    for (int m = 0; m <= a0; ++m)
      EXPECT_EQ(pt::peeled_slope(NegCF{{a0}}, 1, m), Slope(Rational(pt::Integer(-m), pt::Integer(1 - a0 * m))));
}

TEST(Slopes, PeeledTailIndependent) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> digit(2, 7);
  for (int t = 0; t < 300; ++t) {
    NegCF leg;
    const int len = 1 + t % 5;
    for (int i = 0; i < len; ++i) leg.digits.push_back(digit(rng));
    const std::size_t at = 1 + t % len;
    const int m = static_cast<int>(rng() % (leg.digits[at - 1] + 1));
    NegCF mutated = leg;
    for (std::size_t i = at; i < mutated.digits.size(); ++i) mutated.digits[i] = digit(rng);
    mutated.digits.push_back(digit(rng));
    EXPECT_EQ(pt::peeled_slope(leg, at, m), pt::peeled_slope(mutated, at, m));
  }
}

TEST(Slopes, PeeledErrors) {
  EXPECT_THROW(pt::peeled_slope(NegCF{{3}}, 0, 0), std::domain_error);
  EXPECT_THROW(pt::peeled_slope(NegCF{{3}}, 2, 0), std::domain_error);
  EXPECT_THROW(pt::peeled_slope(NegCF{{3}}, 1, 4), std::domain_error);
  EXPECT_THROW(pt::peeled_slope(NegCF{{3}}, 1, -1), std::domain_error);
  EXPECT_EQ(pt::peeled_slope(NegCF{{2, 5}}, 2, 1), sl("4/7"));
}

TEST(Slopes, CriticalSlope) {
  const auto s = pt::SeifertData::parse("-1;3/4,1/2,1/3");
  EXPECT_EQ(pt::critical_slope(s, 0), sl("1/4"));
  EXPECT_EQ(pt::critical_slope(s, 1), sl("-1/2"));
  EXPECT_EQ(pt::critical_slope(s, 2), sl("-1/3"));
  EXPECT_THROW(pt::critical_slope(s, 3), std::domain_error);
  // A first leg [2^k, a, ...] with a >= 3 has its critical slope strictly between 1/(k+2) and 1/(k+1).
  for (int den = 3; den <= 40; ++den)
    for (int num = den / 2 + 1; num < den; ++num) {
      const Rational r1{pt::Integer(num), pt::Integer(den)};
      if (r1.denominator() != den) continue;
      const NegCF cf = pt::neg_cf_expand(r1);
      std::size_t k = 0;
      while (k < cf.size() && cf[k] == 2) ++k;
      if (k == 0 || k == cf.size()) continue;
      const auto c = pt::critical_slope(pt::SeifertData::make(-1, {r1, Rational::parse("1/2"), Rational::parse("1/2")}), 0);
      EXPECT_GT(c.value(), Rational(pt::Integer(1), pt::Integer(static_cast<long>(k) + 2))) << r1;
      EXPECT_LT(c.value(), Rational(pt::Integer(1), pt::Integer(static_cast<long>(k) + 1))) << r1;
    }
}

TEST(Slopes, Farey) {
  for (int n = 1; n <= 10; ++n) {
    const Slope a(Rational(pt::Integer(-1), pt::Integer(n))), b(Rational(pt::Integer(-1), pt::Integer(n + 1)));
    EXPECT_TRUE(pt::is_basic_slice(a, b));
    for (int x = 1; x <= 6; ++x)
      EXPECT_TRUE(pt::is_basic_slice(Slope(Rational(pt::Integer(-x), pt::Integer(x * n + 1))), a));
  }
  EXPECT_FALSE(pt::is_basic_slice(sl("-1/2"), sl("-1/4")));
  EXPECT_TRUE(pt::is_basic_slice(Slope::infinity(), sl("3")));
  EXPECT_TRUE(pt::is_cf_block(sl("0"), sl("-1"), sl("-1/2")));
  EXPECT_FALSE(pt::is_cf_block(sl("0"), sl("-1"), sl("-2")));
  EXPECT_FALSE(pt::is_cf_block(sl("0"), sl("-1/2"), sl("-2/3")));
  EXPECT_TRUE(pt::is_cf_block(sl("0"), sl("-1/2"), sl("-1/3")));
  EXPECT_EQ(Slope::infinity().str(), "inf");
  EXPECT_THROW(Slope::infinity().value(), std::domain_error);
}

TEST(Slopes, OtCheckExamples) {
  const auto g = pt::build_gamma(pt::SeifertData::parse("-1;3/5,1/3,1/3"));  // [2,3],[3],[3]
  EXPECT_TRUE(pt::ot_check(pres({0, 1}, {2}, {2}), g));
  EXPECT_TRUE(pt::ot_check(pt::conjugate(g, pres({0, 1}, {2}, {2})), g));
  EXPECT_FALSE(pt::ot_check(pres({0, 0}, {0}, {0}), g));
  EXPECT_FALSE(pt::ot_check(pres({0, 0}, {2}, {1}), g));
  EXPECT_FALSE(pt::ot_check(pres({0, 5}, {2}, {2}), g));  // out of range: no claim
}

TEST(Slopes, IsotopyMovesD4) {
  const auto g = pt::build_gamma(pt::testing::d4());
  EXPECT_EQ(pt::isotopy_moves(pres({0}, {1}, {1}), g), (std::vector<Presentation>{pres({1}, {0}, {0})}));
  EXPECT_EQ(pt::isotopy_moves(pres({0}, {0}, {1}), g), (std::vector<Presentation>{pres({1}, {1}, {0})}));
  EXPECT_TRUE(pt::isotopy_moves(pres({0}, {0}, {0}), g).empty());
  const auto closure = pt::isotopy_closure(pt::enumerate_presentations(g), g);
  EXPECT_EQ(closure.size(), 5u);
}

TEST(Slopes, FirstMoveShape) {
  // (0, n2, n3 | nk) -> (1, n2 - k, n3 - k | nk - 1) with k = 1.
  const auto g = pt::build_gamma(pt::SeifertData::parse("-1;3/5,1/3,1/3"));
  const auto moves = pt::isotopy_moves(pres({0, 1}, {1}, {2}), g);
  EXPECT_NE(std::find(moves.begin(), moves.end(), pres({1, 0}, {0}, {1})), moves.end());
  for (const auto& p : pt::enumerate_presentations(g))
    for (const auto& q : pt::isotopy_moves(p, g)) {
      EXPECT_TRUE(pt::in_range(g, q));
      const auto back = pt::isotopy_moves(q, g);
      EXPECT_NE(std::find(back.begin(), back.end(), p), back.end()) << p.to_json() << " -> " << q.to_json();
    }
}

TEST(SlopesCorpus, OtImpliesDropOut) {
  for (const auto& e : pt::testing::classified_corpus())
    for (const auto& p : pt::enumerate_presentations(e.manifold->gamma()))
      if (pt::ot_check(p, e.manifold->gamma()))
        EXPECT_EQ(e.report.classes[pt::find_class(e.report, p)].verdict, pt::VerdictKind::drop_out)
            << e.manifold->seifert().str() << " " << p.to_json();
}

TEST(SlopesCorpus, MoveClosureMatchesWalker) {
  for (const auto& e : pt::testing::classified_corpus()) {
    std::vector<Presentation> tight;
    std::vector<std::vector<Presentation>> walker;
    for (const auto& c : e.report.classes)
      if (c.verdict == pt::VerdictKind::proper_ends) {
        tight.insert(tight.end(), c.members.begin(), c.members.end());
        walker.push_back(c.members);
      }
    std::sort(tight.begin(), tight.end());
    std::sort(walker.begin(), walker.end());
    EXPECT_EQ(pt::isotopy_closure(tight, e.manifold->gamma()), walker) << e.manifold->seifert().str();
  }
}
