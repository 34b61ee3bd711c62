#include <doctest.h>

#include <random>

#include "rankrange/random.hpp"
#include "rankrange/scores.hpp"
#include "reference.hpp"

using namespace rankrange;

namespace {

std::vector<Score> vec(const ScoringRule& rule, int m) {
  const VectorX<Score> v = rule.vector(m);
  return {v.data(), v.data() + v.size()};
}

CompleteProfile votes(int m, std::initializer_list<std::vector<Cand>> list) {
  CompleteProfile t(m);
  for (const auto& v : list) t.add(LinearOrder(v));
  return t;
}

constexpr Cand a = 0, b = 1, c = 2;

}  // namespace

TEST_CASE("score vectors") {
  CHECK(vec(ScoringRule::borda(), 4) == std::vector<Score>{3, 2, 1, 0});
  CHECK(vec(ScoringRule::plurality(), 5) == std::vector<Score>{1, 0, 0, 0, 0});
  CHECK(vec(ScoringRule::approval(2), 4) == std::vector<Score>{1, 1, 0, 0});
  CHECK(vec(ScoringRule::veto(), 3) == std::vector<Score>{1, 1, 0});
  CHECK(vec(ScoringRule::t_veto(2), 4) == std::vector<Score>{1, 1, 0, 0});
  CHECK_THROWS_AS(ScoringRule::approval(3).vector(3), FamilyError);
  CHECK_THROWS_AS(ScoringRule::plurality().vector(1), FamilyError);
  CHECK_THROWS_AS(ScoringRule::bucklin().vector(3), RuleDomainError);

  const ScoringRule custom = ScoringRule::custom({{3, {5, 2, 2}}});
  CHECK(vec(custom, 3) == std::vector<Score>{5, 2, 2});
  CHECK_THROWS_AS(custom.vector(4), FamilyError);
  CHECK_THROWS_AS(ScoringRule::custom({{3, {1, 2, 0}}}).vector(3), FamilyError);
  CHECK_THROWS_AS(ScoringRule::custom({{3, {1, 1, 1}}}).vector(3), FamilyError);
}

TEST_CASE("rule metadata") {
  for (const auto& rule : {ScoringRule::plurality(), ScoringRule::veto(), ScoringRule::approval(2),
                           ScoringRule::t_veto(2), ScoringRule::borda()}) {
    CHECK(rule.strongly_pure());
    CHECK(rule.polynomial_scores());
  }
  CHECK(ScoringRule::plurality().p_valued() == 2);
  CHECK_FALSE(ScoringRule::borda().p_valued().has_value());
  CHECK(ScoringRule::plurality().is_plurality_like(4));
  CHECK_FALSE(ScoringRule::plurality().is_veto_like(4));
  CHECK(ScoringRule::veto().is_veto_like(4));
  CHECK(ScoringRule::approval(2).is_veto_like(3));
  CHECK(ScoringRule::plurality().is_veto_like(2));
  CHECK_FALSE(ScoringRule::borda().is_plurality_like(3));
  CHECK(ScoringRule::bucklin().lower_is_better());
  CHECK(ScoringRule::approval(2).name() == "2-approval");
}

TEST_CASE("positional scores") {
  const ScoreTable p = scores(votes(3, {{a, b, c}}), ScoringRule::plurality());
  CHECK(p(a) == 1);
  CHECK(p(b) == 0);
  const ScoreTable bo = scores(votes(3, {{a, b, c}}), ScoringRule::borda());
  CHECK(bo(a) == 2);
  CHECK(bo(b) == 1);
  CHECK(bo(c) == 0);
  const ScoreTable sym = scores(votes(2, {{a, b}, {b, a}}), ScoringRule::plurality());
  CHECK(sym(a) == 1);
  CHECK(sym(b) == 1);
}

TEST_CASE("overflow is reported") {
  const Score big = std::numeric_limits<Score>::max() / 2 + 1;
  const ScoringRule huge = ScoringRule::custom({{2, {big, 0}}});
  CHECK_THROWS_AS(scores(votes(2, {{a, b}, {a, b}}), huge), OverflowError);
}

TEST_CASE("bucklin scores") {
  const ScoreTable u = scores(votes(3, {{a, b, c}, {a, b, c}, {a, b, c}}), ScoringRule::bucklin());
  CHECK(u(a) == 1);
  CHECK(u(b) == 2);
  CHECK(u(c) == 3);
  const ScoreTable one = scores(votes(2, {{a, b}}), ScoringRule::bucklin());
  CHECK(one(a) == 1);
  CHECK(one(b) == 2);
  const ScoreTable two = scores(votes(2, {{a, b}, {b, a}}), ScoringRule::bucklin());
  CHECK(two(a) == 2);
  CHECK(two(b) == 2);
}

TEST_CASE("copeland scores") {
  const ScoreTable u = scores(votes(3, {{a, b, c}, {a, b, c}, {a, b, c}}), ScoringRule::copeland());
  CHECK(u(a) == 2);
  CHECK(u(b) == 1);
  CHECK(u(c) == 0);
  const ScoreTable tie = scores(votes(2, {{a, b}, {b, a}}), ScoringRule::copeland());
  CHECK(tie(a) == 0);
  CHECK(tie(b) == 0);
  CHECK(scores(votes(3, {{a, b, c}}), ScoringRule::copeland())(a) == 2);
}

TEST_CASE("maximin scores and pairwise matrices") {
  const CompleteProfile t = votes(2, {{a, b}, {a, b}, {b, a}});
  const MatrixX<Score> n = pairwise_counts<Score>(t);
  CHECK(n(a, b) == 2);
  CHECK(scores(t, ScoringRule::maximin())(a) == 2);
  CHECK(pairwise_margins<Score>(t)(a, b) == 1);

  const ScoreTable one = scores(votes(3, {{a, b, c}}), ScoringRule::maximin());
  CHECK(one(a) == 1);
  CHECK(one(c) == 0);
  const CompleteProfile sym = votes(2, {{a, b}, {b, a}});
  CHECK(scores(sym, ScoringRule::maximin())(a) == 1);
  CHECK(scores(sym, ScoringRule::maximin())(b) == 1);
  CHECK(pairwise_margins<Score>(sym)(a, b) == 0);
}

TEST_CASE("ranks") {
  const CompleteProfile t = votes(3, {{a, b, c}});
  const LinearOrder abc({a, b, c}), cba({c, b, a});
  CHECK(rank(t, a, abc, ScoringRule::plurality()) == 1);
  CHECK(rank(t, b, abc, ScoringRule::plurality()) == 2);
  CHECK(rank(t, c, abc, ScoringRule::plurality()) == 3);
  CHECK(rank(t, b, cba, ScoringRule::plurality()) == 3);
  CHECK(rank(t, c, cba, ScoringRule::plurality()) == 2);
  const CompleteProfile u = votes(3, {{a, b, c}, {a, b, c}, {a, b, c}});
  CHECK(rank(u, a, cba, ScoringRule::bucklin()) == 1);
  CHECK(ranking(t, cba, ScoringRule::plurality()).sequence() == std::vector<Cand>{a, c, b});
}

TEST_CASE("score invariants on random profiles") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const int m = 2 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 5);
    CompleteProfile t(m);
    for (int v = 0; v < n; ++v) t.add(random_linear_order(m, rng));
    const LinearOrder tie = random_linear_order(m, rng);
    const auto rv = ref::to_votes(t);

    const MatrixX<Score> nm = pairwise_counts<Score>(t), d = pairwise_margins<Score>(t);
    CHECK(d == -d.transpose());
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (x != y) CHECK(d(x, y) == 2 * nm(x, y) - n);

    const ScoreTable cop = scores(t, ScoringRule::copeland());
    if (n % 2 == 1) CHECK(cop.sum() == m * (m - 1) / 2);

    for (const auto& rule : {ScoringRule::plurality(), ScoringRule::borda(), ScoringRule::veto(), ScoringRule::bucklin(),
                             ScoringRule::copeland(), ScoringRule::maximin()}) {
      const ScoreTable s = scores(t, rule);
      const auto expected = ref::scores(rv, m, rule);
      std::set<int> ranks;
      for (int x = 0; x < m; ++x) {
        CHECK(s(x) == expected[static_cast<std::size_t>(x)]);
        const int r = rank(t, x, tie, rule);
        CHECK(r == ref::rank(expected, x, tie.sequence(), rule.lower_is_better()));
        ranks.insert(r);
      }
      CHECK(ranks.size() == static_cast<std::size_t>(m));
      if (rule.kind() == RuleKind::bucklin) CHECK((s.minCoeff() >= 1 && s.maxCoeff() <= m));
      if (rule.kind() == RuleKind::copeland) CHECK((s.minCoeff() >= 0 && s.maxCoeff() <= m - 1));
      if (rule.kind() == RuleKind::maximin) CHECK((s.minCoeff() >= 0 && s.maxCoeff() <= n));
      if (rule.positional()) {
        const VectorX<Score> v = rule.vector(m);
        CHECK((s.minCoeff() >= n * v(m - 1) && s.maxCoeff() <= n * v(0)));
      }
    }
  }
}

TEST_CASE("reversed rules") {
  auto one = [](int) -> Score { return 1; };
  for (int m = 2; m <= 6; ++m) {
    CHECK(vec(reversed_rule(ScoringRule::plurality(), one, one), m) == vec(ScoringRule::veto(), m));
    if (m > 2)
      CHECK(vec(reversed_rule(ScoringRule::approval(2), one, one), m) == vec(ScoringRule::t_veto(2), m));
    // (m, 1) gives Borda shifted by one, the same rule up to a constant.
    const auto shifted = vec(reversed_rule(ScoringRule::borda(), [](int k) -> Score { return k; }, one), m);
    auto borda = vec(ScoringRule::borda(), m);
    for (auto& x : borda) ++x;
    CHECK(shifted == borda);
    CHECK(vec(reversed_rule(ScoringRule::borda(), [](int k) -> Score { return k - 1; }, one), m) ==
          vec(ScoringRule::borda(), m));
  }
  const ScoringRule r = reversed_rule(ScoringRule::borda(), one, one);
  CHECK(r.strongly_pure());
  CHECK(r.polynomial_scores());
  CHECK(r.family() == Family::reversed);

  auto seven = [](int) -> Score { return 7; };
  const ScoringRule custom = ScoringRule::custom({{4, {9, 4, 4, 1}}});
  CHECK(vec(reversed_rule(reversed_rule(custom, seven, one), seven, one), 4) == vec(custom, 4));

  CHECK_THROWS_AS(reversed_rule(ScoringRule::plurality(), one, [](int) -> Score { return 0; }).vector(3),
                  DegenerateRuleError);
  CHECK_THROWS_AS(reversed_rule(ScoringRule::maximin(), one, one), RuleDomainError);
}
