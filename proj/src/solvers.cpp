#include "rankrange/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "rankrange/matching.hpp"
#include "rankrange/scores.hpp"

namespace rankrange {

bool any_combination(std::span<const Cand> items, int k, const std::function<bool(std::span<const Cand>)>& visit) {
  const int size = static_cast<int>(items.size());
  if (k < 0 || k > size) return false;
  std::vector<int> index(static_cast<std::size_t>(k));
  std::iota(index.begin(), index.end(), 0);
  std::vector<Cand> chosen(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) chosen[static_cast<std::size_t>(i)] = items[static_cast<std::size_t>(index[static_cast<std::size_t>(i)])];
    if (visit(chosen)) return true;
    int i = k - 1;
    while (i >= 0 && index[static_cast<std::size_t>(i)] == size - k + i) --i;
    if (i < 0) return false;
    ++index[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) index[static_cast<std::size_t>(j)] = index[static_cast<std::size_t>(j - 1)] + 1;
  }
}

namespace {

using Tuple = std::vector<Score>;

std::vector<Cand> others(int m, Cand c) {
  std::vector<Cand> out;
  for (Cand x = 0; x < m; ++x)
    if (x != c) out.push_back(x);
  return out;
}

Score floor_div(Score a, Score b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
Score ceil_div(Score a, Score b) { return -floor_div(-a, b); }

void check_candidate(const PartialProfile& profile, Cand c, const LinearOrder& tie) {
  if (c < 0 || c >= profile.candidates()) throw RangeError("candidate " + std::to_string(c) + " out of range");
  if (tie.size() != profile.candidates()) throw RangeError("tiebreaker does not cover the candidates");
}

/// Extension of `voter` with `c` as high (lift) or as low as it can go.
LinearOrder extension_with(const PartialOrder& voter, Cand c, bool lift) {
  std::vector<int> key(static_cast<std::size_t>(voter.size()), 0);
  key[static_cast<std::size_t>(c)] = lift ? -1 : 1;
  return prioritized_extension(voter, key);
}

enum class Shape { plurality, veto };

Shape shape_of(const ScoringRule& rule, int m) {
  if (!rule.positional()) throw RuleDomainError(rule.name() + " is not a positional rule");
  if (rule.is_plurality_like(m)) return Shape::plurality;
  if (rule.is_veto_like(m)) return Shape::veto;
  throw RuleDomainError(rule.name() + " is neither plurality- nor veto-shaped for m=" + std::to_string(m));
}

/// Minkowski folding of per-voter tuple sets, kept per prefix for witnesses.
class TupleFold {
 public:
  TupleFold(int q, std::uint64_t cap) : q_(q), cap_(cap) { prefix_.push_back({Tuple(static_cast<std::size_t>(q), 0)}); }

  void add_voter(std::vector<Tuple> local) {
    std::set<Tuple> next;
    for (const Tuple& a : prefix_.back())
      for (const Tuple& b : local) {
        Tuple s(a.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = checked_add(a[i], b[i]);
        next.insert(std::move(s));
        if (next.size() > cap_) throw LimitError("more than " + std::to_string(cap_) + " score tuples");
      }
    local_.push_back(std::move(local));
    prefix_.push_back(std::move(next));
  }

  const std::set<Tuple>& result() const { return prefix_.back(); }

  /// Per-voter tuples summing to `target`.
  std::vector<Tuple> split(Tuple target) const {
    std::vector<Tuple> parts(local_.size());
    for (std::size_t i = local_.size(); i-- > 0;) {
      for (const Tuple& t : local_[i]) {
        Tuple rest(target.size());
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = target[j] - t[j];
        if (prefix_[i].count(rest)) {
          parts[i] = t;
          target = std::move(rest);
          break;
        }
      }
    }
    return parts;
  }

 private:
  int q_;
  std::uint64_t cap_;
  std::vector<std::vector<Tuple>> local_;
  std::vector<std::set<Tuple>> prefix_;
};

/// Runs `local` once per distinct voter order.
template <typename F>
std::vector<std::vector<Tuple>> per_voter(const PartialProfile& profile, F local) {
  std::vector<std::vector<Tuple>> out;
  for (int i = 0; i < profile.voters(); ++i) {
    int same = -1;
    for (int j = 0; j < i && same < 0; ++j)
      if (profile[j] == profile[i]) same = j;
    out.push_back(same >= 0 ? out[static_cast<std::size_t>(same)] : local(profile[i]));
  }
  return out;
}

void check_sequence(int m, std::span<const Cand> s) {
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (Cand x : s) {
    if (x < 0 || x >= m) throw RangeError("sequence member " + std::to_string(x) + " out of range");
    if (seen[static_cast<std::size_t>(x)]) throw RangeError("sequence members must be distinct");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

std::vector<Tuple> local_score_tuples(const PartialOrder& voter, std::span<const Cand> s, const ScoringRule& rule,
                                      const VectorX<Score>& vec) {
  const int m = voter.size();
  std::vector<std::vector<Score>> values;
  for (Cand x : s) {
    std::vector<Score> vals;
    for (int j = voter.predecessor_count(x); j < m - voter.successor_count(x); ++j)
      if (vals.empty() || vals.back() != vec(j)) vals.push_back(vec(j));
    values.push_back(std::move(vals));
  }
  std::vector<Tuple> out;
  Tuple current(s.size());
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == s.size()) {
      if (score_tuple_feasible_single(voter, s, current, rule)) out.push_back(current);
      return;
    }
    for (Score v : values[i]) {
      current[i] = v;
      walk(i + 1);
    }
  };
  walk(0);
  return out;
}

std::vector<Tuple> local_bucklin_counts(const PartialOrder& voter, std::span<const Cand> s, std::span<const int> r) {
  const std::size_t q = s.size();
  std::vector<Tuple> out;
  std::vector<int> h(q);
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    for (std::size_t i = 0; i < q; ++i) h[i] = (mask >> i) & 1u;
    if (bucklin_count_tuple_feasible_single(voter, s, r, h)) out.emplace_back(h.begin(), h.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CompleteProfile unreverse(const CompleteProfile& t) { return reverse_profile(t); }

Coefficient top_value(const ScoringRule& rule) {
  return [rule](int m) { return rule.vector(m)(0); };
}

Score one(int) { return 1; }

}  // namespace

bool feasible_scores_plurality_veto(const PartialProfile& profile, std::span<const Score> gamma,
                                    std::span<const Score> delta, const ScoringRule& rule, CompleteProfile* witness) {
  const int m = profile.candidates(), n = profile.voters();
  if (static_cast<int>(gamma.size()) != m || static_cast<int>(delta.size()) != m)
    throw LengthMismatchError("score bounds need one entry per candidate");
  const Shape shape = shape_of(rule, m);
  const VectorX<Score> vec = rule.vector(m);
  const Score x = vec(0), y = vec(m - 1), gap = x - y;
  const Score lowest = checked_mul<Score>(n, y), highest = checked_mul<Score>(n, x);

  std::vector<int> alpha(static_cast<std::size_t>(m)), beta(static_cast<std::size_t>(m));
  for (Cand c = 0; c < m; ++c) {
    const Score lo = std::clamp(gamma[static_cast<std::size_t>(c)], lowest - 1, highest + 1);
    const Score hi = std::clamp(delta[static_cast<std::size_t>(c)], lowest - 1, highest + 1);
    Score a, b;
    if (shape == Shape::plurality) {  // score = n*y + gap * (#voters with c on top)
      a = ceil_div(lo - lowest, gap);
      b = floor_div(hi - lowest, gap);
    } else {  // score = n*x - gap * (#voters with c at the bottom)
      a = ceil_div(highest - hi, gap);
      b = floor_div(highest - lo, gap);
    }
    a = std::max<Score>(a, 0);
    b = std::min<Score>(b, n);
    if (a > b) return false;
    alpha[static_cast<std::size_t>(c)] = static_cast<int>(a);
    beta[static_cast<std::size_t>(c)] = static_cast<int>(b);
  }

  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (Cand c = 0; c < m; ++c) {
      const bool free = shape == Shape::plurality ? profile[v].predecessor_count(c) == 0 : profile[v].successor_count(c) == 0;
      if (free) edges.emplace_back(v, c);
    }
  auto assignment = polygamous_matching(n, m, edges, alpha, beta);
  if (!assignment) return false;
  if (witness) {
    CompleteProfile t(m);
    for (int v = 0; v < n; ++v)
      t.add(extension_with(profile[v], (*assignment)[static_cast<std::size_t>(v)], shape == Shape::plurality));
    *witness = std::move(t);
  }
  return true;
}

bool min_rank_lt_plurality_veto(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule,
                                int k, CompleteProfile* witness) {
  check_candidate(profile, c, tie);
  const int m = profile.candidates(), n = profile.voters();
  const Shape shape = shape_of(rule, m);
  if (k <= 1) return false;
  if (k > m) {
    if (witness) *witness = first_completion(profile);
    return true;
  }
  const VectorX<Score> vec = rule.vector(m);
  const Score gap = vec(0) - vec(m - 1);
  const Score high = std::numeric_limits<Score>::max() / 4, low = std::numeric_limits<Score>::min() / 4;

  // rank < k  <=>  c defeats some set D of m - k + 1 rivals.
  const std::vector<Cand> rivals = others(m, c);
  return any_combination(rivals, m - k + 1, [&](std::span<const Cand> d) {
    for (int units = 0; units <= n; ++units) {
      const Score threshold = shape == Shape::plurality ? n * vec(m - 1) + gap * units : n * vec(0) - gap * units;
      std::vector<Score> gamma(static_cast<std::size_t>(m), low), delta(static_cast<std::size_t>(m), high);
      gamma[static_cast<std::size_t>(c)] = threshold;
      for (Cand x : d) delta[static_cast<std::size_t>(x)] = tie.prefers(c, x) ? threshold : threshold - 1;
      if (feasible_scores_plurality_veto(profile, gamma, delta, rule, witness)) return true;
    }
    return false;
  });
}

std::optional<LinearOrder> score_tuple_extension(const PartialOrder& voter, std::span<const Cand> s,
                                                 std::span<const Score> scores, const ScoringRule& rule) {
  if (s.size() != scores.size()) throw LengthMismatchError("candidate sequence and score tuple lengths differ");
  const int m = voter.size();
  check_sequence(m, s);
  const VectorX<Score> vec = rule.vector(m);
  SchedulingInstance si{m, std::vector<int>(static_cast<std::size_t>(m), 1), std::vector<int>(static_cast<std::size_t>(m), m + 1), voter};
  for (std::size_t i = 0; i < s.size(); ++i) {
    int first = -1, last = -1;
    for (int j = 0; j < m; ++j)
      if (vec(j) == scores[i]) {
        if (first < 0) first = j + 1;
        last = j + 1;
      }
    if (first < 0) return std::nullopt;
    si.release[static_cast<std::size_t>(s[i])] = first;
    si.deadline[static_cast<std::size_t>(s[i])] = last + 1;
  }
  return schedule_unit_tasks(si);
}

bool score_tuple_feasible_single(const PartialOrder& voter, std::span<const Cand> s, std::span<const Score> scores,
                                 const ScoringRule& rule) {
  return score_tuple_extension(voter, s, scores, rule).has_value();
}

ScoreTupleSet possible_score_tuples(const PartialProfile& profile, std::span<const Cand> s, const ScoringRule& rule,
                                    std::uint64_t cap) {
  check_sequence(profile.candidates(), s);
  const VectorX<Score> vec = rule.vector(profile.candidates());
  TupleFold fold(static_cast<int>(s.size()), cap);
  for (auto& local : per_voter(profile, [&](const PartialOrder& v) { return local_score_tuples(v, s, rule, vec); }))
    fold.add_voter(std::move(local));
  return ScoreTupleSet{static_cast<int>(s.size()), fold.result(), rule.polynomial_scores()};
}

bool max_rank_gt_poly(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule, int k,
                      CompleteProfile* witness, std::uint64_t cap) {
  check_candidate(profile, c, tie);
  const int m = profile.candidates();
  const VectorX<Score> vec = rule.vector(m);
  if (k < 1) {
    if (witness) *witness = first_completion(profile);
    return true;
  }
  if (k >= m) return false;

  // rank > k  <=>  some k rivals all defeat c.
  const std::vector<Cand> rivals = others(m, c);
  return any_combination(rivals, k, [&](std::span<const Cand> chosen) {
    std::vector<Cand> seq(chosen.begin(), chosen.end());
    seq.push_back(c);
    TupleFold fold(k + 1, cap);
    for (auto& local : per_voter(profile, [&](const PartialOrder& v) { return local_score_tuples(v, seq, rule, vec); }))
      fold.add_voter(std::move(local));
    for (const Tuple& t : fold.result()) {
      bool all = true;
      for (int i = 0; i < k && all; ++i)
        all = tie.prefers(seq[static_cast<std::size_t>(i)], c) ? t[static_cast<std::size_t>(i)] >= t.back()
                                                               : t[static_cast<std::size_t>(i)] > t.back();
      if (!all) continue;
      if (witness) {
        const std::vector<Tuple> parts = fold.split(t);
        CompleteProfile w(m);
        for (int v = 0; v < profile.voters(); ++v)
          w.add(*score_tuple_extension(profile[v], seq, parts[static_cast<std::size_t>(v)], rule));
        *witness = std::move(w);
      }
      return true;
    }
    return false;
  });
}

ReversedInstance reverse_instance(const PartialProfile& profile, const LinearOrder& tie, const ScoringRule& rule,
                                  const Coefficient& a, const Coefficient& b) {
  const int m = profile.candidates();
  if (b(m) <= 0) throw DegenerateRuleError("reversal needs b(m) > 0");
  ScoringRule reversed = reversed_rule(rule, a, b);
  reversed.vector(m);
  return ReversedInstance{reverse_profile(profile), tie.reversed(), std::move(reversed)};
}

bool min_rank_lt_kbar(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule, int k,
                      CompleteProfile* witness, std::uint64_t cap) {
  check_candidate(profile, c, tie);
  const int m = profile.candidates();
  const int kbar = m - k + 1;
  if (kbar <= 1) return false;
  // min < m-k+1  <=>  reversed max > k
  const ReversedInstance rev = reverse_instance(profile, tie, rule, top_value(rule), one);
  CompleteProfile w;
  const bool answer = max_rank_gt_poly(rev.profile, c, rev.tie, rev.rule, k, witness ? &w : nullptr, cap);
  if (answer && witness) *witness = unreverse(w);
  return answer;
}

bool max_rank_gt_kbar_plurality_veto(const PartialProfile& profile, Cand c, const LinearOrder& tie,
                                     const ScoringRule& rule, int k, CompleteProfile* witness) {
  check_candidate(profile, c, tie);
  const int m = profile.candidates();
  const int kbar = m - k + 1;
  if (kbar >= m) return false;
  // max > m-k+1  <=>  reversed min < k
  const ReversedInstance rev = reverse_instance(profile, tie, rule, top_value(rule), one);
  CompleteProfile w;
  const bool answer = min_rank_lt_plurality_veto(rev.profile, c, rev.tie, rev.rule, k, witness ? &w : nullptr);
  if (answer && witness) *witness = unreverse(w);
  return answer;
}

std::optional<LinearOrder> bucklin_count_extension(const PartialOrder& voter, std::span<const Cand> s,
                                                   std::span<const int> r, std::span<const int> h) {
  if (s.size() != r.size() || s.size() != h.size()) throw LengthMismatchError("S, R and h lengths differ");
  const int m = voter.size();
  check_sequence(m, s);
  for (int hi : h)
    if (hi != 0 && hi != 1) return std::nullopt;
  SchedulingInstance si{m, std::vector<int>(static_cast<std::size_t>(m), 1), std::vector<int>(static_cast<std::size_t>(m), m + 1), voter};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int top = std::clamp(r[i], 0, m);
    auto x = static_cast<std::size_t>(s[i]);
    if (h[i] == 1) {
      si.deadline[x] = top + 1;
    } else {
      si.release[x] = top + 1;
    }
  }
  return schedule_unit_tasks(si);
}

bool bucklin_count_tuple_feasible_single(const PartialOrder& voter, std::span<const Cand> s, std::span<const int> r,
                                         std::span<const int> h) {
  return bucklin_count_extension(voter, s, r, h).has_value();
}

ScoreTupleSet bucklin_possible_counts(const PartialProfile& profile, std::span<const Cand> s, std::span<const int> r,
                                      std::uint64_t cap) {
  if (s.size() != r.size()) throw LengthMismatchError("S and R lengths differ");
  check_sequence(profile.candidates(), s);
  TupleFold fold(static_cast<int>(s.size()), cap);
  for (auto& local : per_voter(profile, [&](const PartialOrder& v) { return local_bucklin_counts(v, s, r); }))
    fold.add_voter(std::move(local));
  return ScoreTupleSet{static_cast<int>(s.size()), fold.result(), true};
}

bool bucklin_max_rank_gt_k(const PartialProfile& profile, Cand c, const LinearOrder& tie, int k,
                           CompleteProfile* witness, std::uint64_t cap) {
  check_candidate(profile, c, tie);
  const int m = profile.candidates(), n = profile.voters();
  if (k < 1) {
    if (witness) *witness = first_completion(profile);
    return true;
  }
  if (k >= m) return false;

  // Some k rivals all defeat c, where c's score is t: c is within the top
  // t - 1 for at most n/2 voters, each rival within the top t (if it wins
  // ties against c) or t - 1 for a majority.
  const std::vector<Cand> rivals = others(m, c);
  return any_combination(rivals, k, [&](std::span<const Cand> chosen) {
    std::vector<Cand> seq(chosen.begin(), chosen.end());
    seq.push_back(c);
    for (int t = 1; t <= m; ++t) {
      std::vector<int> r;
      for (Cand x : chosen) r.push_back(tie.prefers(x, c) ? t : t - 1);
      r.push_back(t - 1);
      TupleFold fold(k + 1, cap);
      for (auto& local : per_voter(profile, [&](const PartialOrder& v) { return local_bucklin_counts(v, seq, r); }))
        fold.add_voter(std::move(local));
      for (const Tuple& h : fold.result()) {
        bool ok = 2 * h.back() <= n;
        for (int i = 0; i < k && ok; ++i) ok = 2 * h[static_cast<std::size_t>(i)] > n;
        if (!ok) continue;
        if (witness) {
          const std::vector<Tuple> parts = fold.split(h);
          CompleteProfile w(m);
          for (int v = 0; v < n; ++v) {
            const std::vector<int> hv(parts[static_cast<std::size_t>(v)].begin(), parts[static_cast<std::size_t>(v)].end());
            w.add(*bucklin_count_extension(profile[v], seq, r, hv));
          }
          *witness = std::move(w);
        }
        return true;
      }
    }
    return false;
  });
}

bool maximin_max_rank_gt_1(const PartialProfile& profile, Cand c, const LinearOrder& tie, CompleteProfile* witness) {
  check_candidate(profile, c, tie);
  const int m = profile.candidates();
  if (m < 2) return false;
  // c' defeats c iff N(c', y) >= N(c, x) + delta for some pivot x and all y.
  // For a fixed (c', x) every voter has one extension maximising all of
  // [c' > y] - [c > x] at once: keep c below x when allowed, then lift c'
  // directly after its forced predecessors.
  for (Cand rival = 0; rival < m; ++rival) {
    if (rival == c) continue;
    const Score delta = tie.prefers(rival, c) ? 0 : 1;
    for (Cand x = 0; x < m; ++x) {
      if (x == c) continue;
      CompleteProfile t(m);
      for (const auto& voter : profile.orders()) {
        PartialOrder p = voter;
        if (x != rival && !voter.precedes(c, x)) p = voter.merged(PartialOrder::from_pairs(m, std::vector<std::pair<Cand, Cand>>{{x, c}}));
        std::vector<int> key(static_cast<std::size_t>(m), 2);
        key[static_cast<std::size_t>(rival)] = 1;
        for (Cand a = 0; a < m; ++a)
          if (p.precedes(a, rival)) key[static_cast<std::size_t>(a)] = 0;
        t.add(prioritized_extension(p, key));
      }
      const MatrixX<Score> nm = pairwise_counts<Score>(t);
      bool ok = true;
      for (Cand y = 0; y < m && ok; ++y)
        if (y != rival) ok = nm(rival, y) >= nm(c, x) + delta;
      if (ok) {
        if (witness) *witness = std::move(t);
        return true;
      }
    }
  }
  return false;
}

}  // namespace rankrange
