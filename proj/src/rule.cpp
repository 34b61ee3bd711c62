#include "rankrange/rule.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rankrange/scores.hpp"

namespace rankrange {

std::string to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::positional: return "positional";
    case RuleKind::bucklin: return "bucklin";
    case RuleKind::copeland: return "copeland";
    case RuleKind::maximin: return "maximin";
  }
  return "?";
}

std::string to_string(Family family) {
  switch (family) {
    case Family::plurality: return "plurality";
    case Family::veto: return "veto";
    case Family::approval: return "t-approval";
    case Family::t_veto: return "t-veto";
    case Family::borda: return "borda";
    case Family::custom: return "custom";
    case Family::reversed: return "reversed";
  }
  return "?";
}

void check_score_vector(const VectorX<Score>& v, int m) {
  if (m < 2) throw FamilyError("score vectors need m >= 2");
  if (v.size() != m) throw FamilyError("score vector for m=" + std::to_string(m) + " has " + std::to_string(v.size()) + " entries");
  for (int j = 1; j < m; ++j)
    if (v(j) > v(j - 1)) throw FamilyError("score vector for m=" + std::to_string(m) + " is not non-increasing");
  if (v(0) <= v(m - 1)) throw FamilyError("score vector for m=" + std::to_string(m) + " has s(1) <= s(m)");
}

#define RANKRANGE_BUILTIN(fam, tval, pval)   \
  ScoringRule r;                             \
  r.kind_ = RuleKind::positional;            \
  r.family_ = fam;                           \
  r.t_ = tval;                               \
  r.strongly_pure_ = true;                   \
  r.polynomial_scores_ = true;               \
  r.p_valued_ = pval;                        \
  return r;

ScoringRule ScoringRule::plurality() { RANKRANGE_BUILTIN(Family::plurality, 1, 2) }
ScoringRule ScoringRule::veto() { RANKRANGE_BUILTIN(Family::veto, 1, 2) }
ScoringRule ScoringRule::borda() { RANKRANGE_BUILTIN(Family::borda, 0, std::nullopt) }

ScoringRule ScoringRule::approval(int t) {
  if (t < 1) throw FamilyError("t-approval needs t >= 1");
  RANKRANGE_BUILTIN(Family::approval, t, 2)
}

ScoringRule ScoringRule::t_veto(int t) {
  if (t < 1) throw FamilyError("t-veto needs t >= 1");
  RANKRANGE_BUILTIN(Family::t_veto, t, 2)
}

#undef RANKRANGE_BUILTIN

ScoringRule ScoringRule::custom(std::map<int, std::vector<Score>> vectors, bool strongly_pure,
                                bool polynomial_scores, std::optional<int> p_valued) {
  ScoringRule r;
  r.kind_ = RuleKind::positional;
  r.family_ = Family::custom;
  r.custom_ = std::move(vectors);
  r.strongly_pure_ = strongly_pure;
  r.polynomial_scores_ = polynomial_scores;
  r.p_valued_ = p_valued;
  for (const auto& [m, v] : r.custom_)
    check_score_vector(Eigen::Map<const VectorX<Score>>(v.data(), static_cast<Eigen::Index>(v.size())), m);
  return r;
}

ScoringRule ScoringRule::bucklin() {
  ScoringRule r;
  r.kind_ = RuleKind::bucklin;
  return r;
}

ScoringRule ScoringRule::copeland() {
  ScoringRule r;
  r.kind_ = RuleKind::copeland;
  return r;
}

ScoringRule ScoringRule::maximin() {
  ScoringRule r;
  r.kind_ = RuleKind::maximin;
  return r;
}

VectorX<Score> ScoringRule::vector(int m) const {
  if (kind_ != RuleKind::positional) throw RuleDomainError(to_string(kind_) + " has no score vector");
  if (m < 2) throw FamilyError("score vectors need m >= 2");
  VectorX<Score> v = VectorX<Score>::Zero(m);
  switch (family_) {
    case Family::plurality: v(0) = 1; break;
    case Family::veto: v.setOnes(); v(m - 1) = 0; break;
    case Family::approval:
      if (t_ >= m) throw FamilyError(std::to_string(t_) + "-approval is degenerate for m=" + std::to_string(m));
      v.head(t_).setOnes();
      break;
    case Family::t_veto:
      if (t_ >= m) throw FamilyError(std::to_string(t_) + "-veto is degenerate for m=" + std::to_string(m));
      v.setOnes();
      v.tail(t_).setZero();
      break;
    case Family::borda:
      for (int j = 0; j < m; ++j) v(j) = m - 1 - j;
      break;
    case Family::custom: {
      auto it = custom_.find(m);
      if (it == custom_.end()) throw FamilyError("custom rule has no vector for m=" + std::to_string(m));
      v = Eigen::Map<const VectorX<Score>>(it->second.data(), m);
      break;
    }
    case Family::reversed:
      v = (*generator_)(m);
      try {
        check_score_vector(v, m);
      } catch (const FamilyError& e) {
        throw DegenerateRuleError(std::string("reversed rule: ") + e.what());
      }
      break;
  }
  return v;
}

bool ScoringRule::is_plurality_like(int m) const {
  if (kind_ != RuleKind::positional) return false;
  const VectorX<Score> v = vector(m);
  return (v.tail(m - 1).array() == v(m - 1)).all();
}

bool ScoringRule::is_veto_like(int m) const {
  if (kind_ != RuleKind::positional) return false;
  const VectorX<Score> v = vector(m);
  return (v.head(m - 1).array() == v(0)).all();
}

std::string ScoringRule::name() const {
  if (kind_ != RuleKind::positional) return to_string(kind_);
  switch (family_) {
    case Family::approval: return std::to_string(t_) + "-approval";
    case Family::t_veto: return std::to_string(t_) + "-veto";
    default: return to_string(family_);
  }
}

ScoringRule reversed_rule(const ScoringRule& rule, Coefficient a, Coefficient b) {
  if (!rule.positional()) throw RuleDomainError("only positional rules can be reversed");
  ScoringRule r = rule;
  r.family_ = Family::reversed;
  r.custom_.clear();
  r.generator_ = std::make_shared<const std::function<VectorX<Score>(int)>>(
      [base = rule, a = std::move(a), b = std::move(b)](int m) {
        const VectorX<Score> s = base.vector(m);
        const Score am = a(m), bm = b(m);
        VectorX<Score> out(m);
        for (int i = 0; i < m; ++i) out(i) = checked_add(am, -checked_mul(bm, s(m - 1 - i)));
        return out;
      });
  return r;
}

ScoreTable scores(const CompleteProfile& t, const ScoringRule& rule) {
  switch (rule.kind()) {
    case RuleKind::positional: return positional_scores<Score>(t, rule.vector(t.candidates()));
    case RuleKind::bucklin: return bucklin_scores<Score>(t);
    case RuleKind::copeland: return copeland_scores<Score>(pairwise_counts<Score>(t), t.voters());
    case RuleKind::maximin: return maximin_scores<Score>(pairwise_counts<Score>(t));
  }
  return {};
}

bool defeats(const ScoreTable& s, Cand a, Cand b, const LinearOrder& tie, bool lower_is_better) {
  if (a == b) return false;
  if (s(a) != s(b)) return lower_is_better ? s(a) < s(b) : s(a) > s(b);
  return tie.prefers(a, b);
}

int rank_from_scores(const ScoreTable& s, Cand c, const LinearOrder& tie, bool lower_is_better) {
  int r = 1;
  for (Cand x = 0; x < s.size(); ++x)
    if (defeats(s, x, c, tie, lower_is_better)) ++r;
  return r;
}

int rank(const CompleteProfile& t, Cand c, const LinearOrder& tie, const ScoringRule& rule) {
  if (c < 0 || c >= t.candidates()) throw RangeError("candidate " + std::to_string(c) + " out of range");
  return rank_from_scores(scores(t, rule), c, tie, rule.lower_is_better());
}

LinearOrder ranking(const CompleteProfile& t, const LinearOrder& tie, const ScoringRule& rule) {
  const ScoreTable s = scores(t, rule);
  std::vector<Cand> seq(static_cast<std::size_t>(t.candidates()));
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(),
            [&](Cand a, Cand b) { return defeats(s, a, b, tie, rule.lower_is_better()); });
  return LinearOrder(std::move(seq));
}

}  // namespace rankrange
