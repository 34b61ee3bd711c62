#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "rankrange/profile.hpp"
#include "rankrange/rule.hpp"

namespace rankrange {

enum class Extremum { min, max };
enum class Cmp { lt, gt };

/// Is the extremal rank of `c` (over all completions) `cmp` k?
struct RankQuery {
  PartialProfile profile;
  Cand c = 0;
  LinearOrder tie;
  ScoringRule rule;
  Extremum extremum = Extremum::min;
  Cmp cmp = Cmp::lt;
  int k = 1;
};

struct Verdict {
  bool answer = false;
  /// Set when the answer is certified by a single completion (min<k or
  /// max>k answered true).
  std::optional<CompleteProfile> witness;
  std::optional<int> achieved_rank;
};

/// enumerate: walk every completion. tally: exact closure over the distinct
/// per-voter contributions to the aggregate (score vector, position counts or
/// pairwise counts). automatic: enumerate when the number of completions is
/// within the cap, otherwise tally.
enum class OracleEngine { automatic, enumerate, tally };

struct OracleOptions {
  std::uint64_t cap = kDefaultCap;
  OracleEngine engine = OracleEngine::automatic;
};

/// { rank(T, c) : T completes the profile }. Throws LimitError beyond the cap.
std::set<int> rank_set(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule,
                       const OracleOptions& options = {});

/// rank_set for every candidate in one pass.
std::vector<std::set<int>> rank_sets(const PartialProfile& profile, const LinearOrder& tie, const ScoringRule& rule,
                                     const OracleOptions& options = {});

int min_rank(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule,
             const OracleOptions& options = {});
int max_rank(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule,
             const OracleOptions& options = {});

/// Witnesses are the first certifying completion in lexicographic order.
Verdict decide(const RankQuery& query, const OracleOptions& options = {});

/// The answer when k alone settles the query (min<k with k<=1, max>k with
/// k>=m and their complements), otherwise nullopt.
std::optional<bool> forced_answer(Extremum extremum, Cmp cmp, int k, int m);

}  // namespace rankrange
