#include "rankrange/dispatch.hpp"

#include <vector>

#include "rankrange/solvers.hpp"

namespace rankrange {

namespace {

/// min>k and max<k become negated min<k+1 and max>k-1.
struct Existential {
  Extremum extremum;
  int k;
  bool negated;
};

Existential existential(const RankQuery& q) {
  if (q.extremum == Extremum::min) return q.cmp == Cmp::lt ? Existential{Extremum::min, q.k, false}
                                                           : Existential{Extremum::min, q.k + 1, true};
  return q.cmp == Cmp::gt ? Existential{Extremum::max, q.k, false} : Existential{Extremum::max, q.k - 1, true};
}

bool shaped(const ScoringRule& rule, int m) {
  return rule.positional() && (rule.is_plurality_like(m) || rule.is_veto_like(m));
}

bool poly(const ScoringRule& rule) { return rule.positional() && rule.polynomial_scores(); }

std::optional<std::string> route(const RankQuery& q, const Existential& e, bool any_parameter, int limit) {
  const int m = q.profile.candidates();
  auto fits = [&](int parameter) { return any_parameter || parameter <= limit; };
  if (e.extremum == Extremum::min) {
    if (shaped(q.rule, m)) return "min_rank_lt_plurality_veto";
    if (poly(q.rule) && fits(m - e.k + 1)) return "min_rank_lt_kbar";
    return std::nullopt;
  }
  if (poly(q.rule) && fits(e.k)) return "max_rank_gt_poly";
  if (shaped(q.rule, m) && fits(m - e.k + 1)) return "max_rank_gt_kbar_plurality_veto";
  if (q.rule.kind() == RuleKind::bucklin && fits(e.k)) return "bucklin_max_rank_gt_k";
  if (q.rule.kind() == RuleKind::maximin && e.k == 1) return "maximin_max_rank_gt_1";
  return std::nullopt;
}

bool run_solver(const std::string& name, const RankQuery& q, int k, CompleteProfile* witness) {
  const int m = q.profile.candidates();
  if (name == "min_rank_lt_plurality_veto") return min_rank_lt_plurality_veto(q.profile, q.c, q.tie, q.rule, k, witness);
  if (name == "min_rank_lt_kbar") return min_rank_lt_kbar(q.profile, q.c, q.tie, q.rule, m - k + 1, witness);
  if (name == "max_rank_gt_poly") return max_rank_gt_poly(q.profile, q.c, q.tie, q.rule, k, witness);
  if (name == "max_rank_gt_kbar_plurality_veto")
    return max_rank_gt_kbar_plurality_veto(q.profile, q.c, q.tie, q.rule, m - k + 1, witness);
  if (name == "bucklin_max_rank_gt_k") return bucklin_max_rank_gt_k(q.profile, q.c, q.tie, k, witness);
  return maximin_max_rank_gt_1(q.profile, q.c, q.tie, witness);
}

}  // namespace

std::optional<std::string> solver_for(const RankQuery& query, bool any_parameter, int max_fixed_k) {
  const int m = query.profile.candidates();
  const Existential e = existential(query);
  if (forced_answer(e.extremum, e.extremum == Extremum::min ? Cmp::lt : Cmp::gt, e.k, m)) return std::nullopt;
  return route(query, e, any_parameter, max_fixed_k);
}

Outcome evaluate(const RankQuery& query, const DecideOptions& options) {
  const int m = query.profile.candidates();
  if (query.c < 0 || query.c >= m) throw RangeError("query candidate out of range");
  if (query.tie.size() != m) throw LengthMismatchError("tiebreaker size differs from the candidate count");
  const Existential e = existential(query);
  const Cmp cmp = e.extremum == Extremum::min ? Cmp::lt : Cmp::gt;

  Outcome out;
  if (const auto forced = forced_answer(e.extremum, cmp, e.k, m)) {
    out.engine = "trivial";
    out.answer = *forced != e.negated;
    if (out.answer && !e.negated) out.witness = first_completion(query.profile);
    return out;
  }

  std::optional<std::string> solver;
  if (options.engine != EnginePreference::oracle)
    solver = route(query, e, options.engine == EnginePreference::solver, options.max_fixed_k);
  if (options.engine == EnginePreference::solver && !solver)
    throw IntractableWithoutOracleError("no polynomial solver covers " + query.rule.name() + " with this query");

  if (solver) {
    CompleteProfile witness;
    const bool found = run_solver(*solver, query, e.k, &witness);
    out.engine = *solver;
    out.answer = found != e.negated;
    if (found && !e.negated) out.witness = std::move(witness);
    return out;
  }
  Verdict v = decide(query, options.oracle);
  out.engine = "oracle";
  out.answer = v.answer;
  out.witness = std::move(v.witness);
  return out;
}

}  // namespace rankrange
