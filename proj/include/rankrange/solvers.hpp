#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "rankrange/oracle.hpp"
#include "rankrange/profile.hpp"
#include "rankrange/rule.hpp"
#include "rankrange/scheduling.hpp"

namespace rankrange {

/// Joint values a candidate sequence can realise across completions.
struct ScoreTupleSet {
  int q = 0;
  std::set<std::vector<Score>> tuples;
  /// False when the rule lacks polynomial scores, so the set size has no
  /// polynomial bound.
  bool size_guarantee = true;
};

inline constexpr std::uint64_t kDefaultTupleCap = 2'000'000;

/// Some completion with gamma[c] <= s(T, c) <= delta[c] for every c. The rule
/// must have a plurality-shaped (x, y, ..., y) or veto-shaped (x, ..., x, y)
/// vector for m candidates; RuleDomainError otherwise.
bool feasible_scores_plurality_veto(const PartialProfile& profile, std::span<const Score> gamma,
                                    std::span<const Score> delta, const ScoringRule& rule,
                                    CompleteProfile* witness = nullptr);

/// min rank of c < k for plurality- or veto-shaped rules.
bool min_rank_lt_plurality_veto(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule,
                                int k, CompleteProfile* witness = nullptr);

/// One extension of `voter` giving each S_i exactly scores_i.
std::optional<LinearOrder> score_tuple_extension(const PartialOrder& voter, std::span<const Cand> s,
                                                 std::span<const Score> scores, const ScoringRule& rule);
bool score_tuple_feasible_single(const PartialOrder& voter, std::span<const Cand> s, std::span<const Score> scores,
                                 const ScoringRule& rule);

/// ps(P, S): every (s(T, S_1), ..., s(T, S_q)) over completions T.
ScoreTupleSet possible_score_tuples(const PartialProfile& profile, std::span<const Cand> s, const ScoringRule& rule,
                                    std::uint64_t cap = kDefaultTupleCap);

/// max rank of c > k for positional rules.
bool max_rank_gt_poly(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule, int k,
                      CompleteProfile* witness = nullptr, std::uint64_t cap = kDefaultTupleCap);

struct ReversedInstance {
  PartialProfile profile;
  LinearOrder tie;
  ScoringRule rule;
};

/// Every voter and the tiebreaker reversed, rule r^{a,b}. Under it
/// rank'(c) = m + 1 - rank(c) in every completion. Throws DegenerateRuleError
/// unless b(m) > 0.
ReversedInstance reverse_instance(const PartialProfile& profile, const LinearOrder& tie, const ScoringRule& rule,
                                  const Coefficient& a, const Coefficient& b);

/// min rank of c < m - k + 1, through the reversed instance with a = s_m(1), b = 1.
bool min_rank_lt_kbar(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule, int k,
                      CompleteProfile* witness = nullptr, std::uint64_t cap = kDefaultTupleCap);

/// max rank of c > m - k + 1 for plurality- or veto-shaped rules.
bool max_rank_gt_kbar_plurality_veto(const PartialProfile& profile, Cand c, const LinearOrder& tie,
                                     const ScoringRule& rule, int k, CompleteProfile* witness = nullptr);

/// One extension of `voter` placing S_i within the top R_i exactly when h_i = 1.
std::optional<LinearOrder> bucklin_count_extension(const PartialOrder& voter, std::span<const Cand> s,
                                                   std::span<const int> r, std::span<const int> h);
bool bucklin_count_tuple_feasible_single(const PartialOrder& voter, std::span<const Cand> s, std::span<const int> r,
                                         std::span<const int> h);

/// ps(P, S, R): per-candidate counts of voters placing S_i within the top R_i.
ScoreTupleSet bucklin_possible_counts(const PartialProfile& profile, std::span<const Cand> s, std::span<const int> r,
                                      std::uint64_t cap = kDefaultTupleCap);

/// max rank of c > k under Bucklin.
bool bucklin_max_rank_gt_k(const PartialProfile& profile, Cand c, const LinearOrder& tie, int k,
                           CompleteProfile* witness = nullptr, std::uint64_t cap = kDefaultTupleCap);

/// max rank of c > 1 under Maximin, i.e. c is not a necessary winner under
/// the tiebreaker.
bool maximin_max_rank_gt_1(const PartialProfile& profile, Cand c, const LinearOrder& tie,
                           CompleteProfile* witness = nullptr);

/// Lexicographic k-subsets of `items`, stopping when `visit` returns true.
bool any_combination(std::span<const Cand> items, int k, const std::function<bool(std::span<const Cand>)>& visit);

}  // namespace rankrange
