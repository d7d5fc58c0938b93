#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "naive.hpp"
#include "plumbtight/fullpath.hpp"

namespace pt = plumbtight;
using pt::Direction;
using pt::Presentation;
using pt::VerdictKind;

namespace {

Presentation pres(std::vector<int> a, std::vector<int> b, std::vector<int> c) {
  return Presentation{{std::move(a), std::move(b), std::move(c)}};
}

pt::SignVector negated(pt::SignVector s) {
  for (auto& x : s.s) x = static_cast<std::int8_t>(-x);
  return s;
}

// Every sign vector over n+1 generators.
std::vector<pt::SignVector> all_signs(int generators) {
  std::vector<pt::SignVector> out;
  const int n = generators + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    pt::SignVector s;
    for (int i = 0; i < n; ++i) s.s.push_back((mask >> i) & 1 ? 1 : -1);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Fullpath, StepContractAndReverse) {
  const pt::Manifold m(pt::testing::d4());
  const auto st = pt::make_state(m, pt::canonical_sign_vector(m.gamma(), m.basis(), pres({0}, {0}, {0})));
  ASSERT_EQ(st.cov, (pt::Covector{2, 0, 0, 0}));
  EXPECT_THROW(pt::step(m, st, 1, 1), pt::ContractError);
  EXPECT_THROW(pt::step(m, st, 0, 2), pt::ContractError);
  // Center evaluates to -v.v = 2, so +2PD is legal... but the sign vector must stay in {-1,+1}.
  for (const auto& s : all_signs(m.basis().generator_count)) {
    const auto a = pt::make_state(m, s);
    for (std::size_t v = 0; v < a.cov.size(); ++v)
      for (int dir : {1, -1}) {
        if (a.cov[v] != -dir * m.dual_form()(v, v)) continue;
        pt::PathState b;
        try {
          b = pt::step(m, a, v, dir);
        } catch (const pt::ContractError&) {
          continue;
        }
        EXPECT_EQ(b.cov, m.dual_covector(b.sign));
        for (std::size_t w = 0; w < a.cov.size(); ++w) EXPECT_EQ(b.cov[w], a.cov[w] + 2 * dir * m.dual_form()(v, w));
        if (v != 0) EXPECT_EQ(m.gamma_covector(b.sign), m.gamma_covector(a.sign));
        const auto back = pt::step(m, b, v, -dir);
        EXPECT_EQ(back.sign, a.sign);
        EXPECT_EQ(back.cov, a.cov);
      }
  }
}

TEST(Fullpath, NeedsStepAndBoxes) {
  const pt::Manifold m(pt::testing::d4());
  EXPECT_TRUE(pt::needs_step(m, {-2, 0, 0, 0}, 0, Direction::initial));
  EXPECT_TRUE(pt::needs_step(m, {2, 0, 0, 0}, 0, Direction::terminal));
  EXPECT_FALSE(pt::needs_step(m, {0, 0, 0, 0}, 0, Direction::initial));
  EXPECT_TRUE(pt::in_initial_box(m, {0, 0, 0, 2}));
  EXPECT_FALSE(pt::in_initial_box(m, {0, 0, 0, -2}));
  EXPECT_TRUE(pt::in_terminal_box(m, {0, 0, 0, -2}));
  EXPECT_FALSE(pt::in_terminal_box(m, {0, 0, 0, 2}));
}

TEST(Fullpath, CentralTurnD4) {
  const pt::Manifold m(pt::testing::d4());
  const auto signs = all_signs(m.basis().generator_count);
  int turns = 0;
  for (const auto& s : signs) {
    const auto st = pt::make_state(m, s);
    if (!pt::needs_step(m, st.cov, 0, Direction::initial)) continue;
    bool reduced = true;
    for (std::size_t v = 1; v < 4; ++v) reduced &= !pt::needs_step(m, st.cov, v, Direction::initial);
    if (!reduced || s.s[0] == 1) continue;  // (+---) is a plain step
    if (s.s[2] + s.s[3] + s.s[4] != -1) continue;
    const auto out = pt::central_turn(m, st, Direction::initial);
    ++turns;
    for (std::size_t w = 0; w < 4; ++w) EXPECT_EQ(out.cov[w], st.cov[w] - 2 * m.dual_form()(0, w));
    // Some sign vector with the same dual covector and flipped h sign must exist.
    bool found = false;
    for (const auto& t : signs) found |= t.s[0] == -s.s[0] && m.dual_covector(t) == st.cov;
    EXPECT_TRUE(found);
  }
  EXPECT_GT(turns, 0);
  const auto st = pt::make_state(m, pt::canonical_sign_vector(m.gamma(), m.basis(), pres({0}, {0}, {0})));
  EXPECT_THROW(pt::central_turn(m, st, Direction::initial), pt::ContractError);
}

TEST(Fullpath, D4Verdicts) {
  const pt::Manifold m(pt::testing::d4());
  const auto all_pos = pt::walk(m, pres({0}, {0}, {0}), Direction::terminal);
  EXPECT_EQ(all_pos.kind, VerdictKind::drop_out);
  EXPECT_EQ(all_pos.drop_vertex, std::optional<std::size_t>(0));
  EXPECT_EQ(pt::walk(m, pres({1}, {1}, {1}), Direction::initial).kind, VerdictKind::drop_out);
  const auto pc = pt::path_component(m, pres({0}, {0}, {1}));
  EXPECT_EQ(pc.verdict, VerdictKind::proper_ends);
  EXPECT_EQ(pc.members, (std::vector<Presentation>{pres({0}, {0}, {1}), pres({1}, {1}, {0})}));
  EXPECT_EQ(pc.d_candidate, std::optional<pt::Rational>(pt::Rational(0)));
}

TEST(FullpathCorpus, ReduceLegsConfluent) {
  std::mt19937_64 rng(20240611);
  for (const auto& e : pt::testing::classified_corpus()) {
    const auto& m = *e.manifold;
    const auto ps = pt::enumerate_presentations(m.gamma());
    // A few seeded states per manifold: canonical starts and the state before each central turn.
    for (std::size_t i = 0; i < ps.size(); i += 1 + ps.size() / 4) {
      for (Direction d : {Direction::initial, Direction::terminal}) {
        const auto start = pt::make_state(m, pt::canonical_sign_vector(m.gamma(), m.basis(), ps[i]));
        const auto ref = pt::reduce_legs(m, start, d);
        for (std::size_t v = 1; v < ref.cov.size(); ++v) EXPECT_FALSE(pt::needs_step(m, ref.cov, v, d));
        EXPECT_EQ(pt::reduce_legs(m, ref, d).sign, ref.sign);
        for (int t = 0; t < 200; ++t) {
          const auto other = pt::reduce_legs(m, start, d, &rng);
          ASSERT_EQ(other.cov, ref.cov) << m.seifert().str() << " " << ps[i].to_json();
        }
      }
    }
  }
}

TEST(FullpathCorpus, WalkProperties) {
  for (const auto& e : pt::testing::classified_corpus()) {
    const auto& m = *e.manifold;
    SCOPED_TRACE(m.seifert().str());
    for (const auto& p : pt::enumerate_presentations(m.gamma())) {
      const auto start = pt::canonical_sign_vector(m.gamma(), m.basis(), p);
      const auto k0 = m.dual_covector(start);
      for (Direction d : {Direction::initial, Direction::terminal}) {
        const auto w = pt::walk_from(m, start, d);
        if (w.kind == VerdictKind::drop_out) {
          EXPECT_EQ(w.drop_vertex, std::optional<std::size_t>(0));
        } else {
          EXPECT_TRUE(d == Direction::initial ? pt::in_initial_box(m, w.end) : pt::in_terminal_box(m, w.end));
        }
        EXPECT_EQ(m.degree(w.end), m.degree(k0));
        const auto lw = pt::lattice_walk(m, k0, d);
        EXPECT_EQ(lw.kind, w.kind);
        EXPECT_EQ(lw.end, w.end);
        ASSERT_FALSE(w.component.empty());
        EXPECT_EQ(w.component.front(), p);
        // Mirror: the terminal walk of K is the initial walk of -K with every sign reversed.
        const auto mirror = pt::walk_from(m, negated(start), d == Direction::initial ? Direction::terminal : Direction::initial);
        EXPECT_EQ(mirror.kind, w.kind);
        pt::Covector neg = w.end;
        for (auto& x : neg) x = -x;
        EXPECT_EQ(mirror.end, neg);
      }
    }
  }
}

TEST(FullpathCorpus, GLFilter) {
  for (const auto& e : pt::testing::classified_corpus()) {
    const auto& m = *e.manifold;
    const auto& g = m.gamma();
    for (const auto& p : pt::enumerate_presentations(g)) {
      bool pos = false, neg = false;
      for (int l = 0; l < 3; ++l) {
        pos |= p.n[l][0] == 0;
        neg |= p.n[l][0] == -g.legs[l][0] - 1;
      }
      if (!pos) EXPECT_EQ(pt::walk(m, p, Direction::initial).kind, VerdictKind::drop_out);
      if (!neg) EXPECT_EQ(pt::walk(m, p, Direction::terminal).kind, VerdictKind::drop_out);
    }
  }
}

TEST(FullpathCorpus, ClassificationShape) {
  for (const auto& e : pt::testing::classified_corpus()) {
    const auto& m = *e.manifold;
    const auto& r = e.report;
    SCOPED_TRACE(m.seifert().str());
    std::size_t total = 0;
    bool seen_ot = false;
    for (std::size_t c = 0; c < r.classes.size(); ++c) {
      const auto& cls = r.classes[c];
      total += cls.members.size();
      EXPECT_TRUE(std::is_sorted(cls.members.begin(), cls.members.end()));
      if (cls.verdict == VerdictKind::drop_out) seen_ot = true;
      else EXPECT_FALSE(seen_ot) << "tight classes come first";
      for (const auto& p : cls.members) EXPECT_EQ(pt::find_class(r, p), c);
      if (cls.verdict == VerdictKind::proper_ends) {
        ASSERT_TRUE(cls.d3 && cls.d);
        EXPECT_EQ(*cls.d3, *cls.d);
        EXPECT_EQ(-m.degree(cls.initial_end), *cls.d);
        for (const auto& p : cls.members) EXPECT_EQ(pt::d3_via_gamma(m.gamma(), p), *cls.d3);
      }
    }
    EXPECT_EQ(total, r.presentation_count);
    EXPECT_EQ(r.h1, m.homology_order());
    // Conjugate presentations share verdicts.
    for (const auto& p : pt::enumerate_presentations(m.gamma()))
      EXPECT_EQ(r.classes[pt::find_class(r, p)].verdict,
                r.classes[pt::find_class(r, pt::conjugate(m.gamma(), p))].verdict);
  }
}

TEST(Fullpath, ClassifyRejectsNonLSpace) {
  EXPECT_THROW(pt::classify(pt::SeifertData::parse("-1;2/5,1/3,1/3")), pt::NotLSpaceError);
  try {
    pt::classify(pt::SeifertData::parse("-1;1/3,1/3,1/3"));
    FAIL();
  } catch (const pt::NotLSpaceError& e) {
    EXPECT_EQ(e.pair.m, 2);
    EXPECT_EQ(e.pair.a, 1);
  }
}
