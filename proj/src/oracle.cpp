#include "rankrange/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

#include "rankrange/scores.hpp"

namespace rankrange {

std::optional<bool> forced_answer(Extremum extremum, Cmp cmp, int k, int m) {
  if (extremum == Extremum::min && cmp == Cmp::lt) {
    if (k <= 1) return false;
    if (k > m) return true;
  } else if (extremum == Extremum::max && cmp == Cmp::gt) {
    if (k >= m) return false;
    if (k < 1) return true;
  } else if (extremum == Extremum::min && cmp == Cmp::gt) {
    if (k < 1) return true;
    if (k >= m) return false;
  } else {
    if (k > m) return true;
    if (k <= 1) return false;
  }
  return std::nullopt;
}

namespace {

using State = std::vector<Score>;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Score v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using StateSet = std::unordered_set<State, StateHash>;

/// Aggregate each vote contributes to, and how to turn a total into scores.
class Aggregate {
 public:
  Aggregate(const ScoringRule& rule, int m, int n) : rule_(rule), m_(m), n_(n) {
    if (rule.positional()) vec_ = rule.vector(m);
  }

  std::size_t width() const {
    switch (rule_.kind()) {
      case RuleKind::positional: return static_cast<std::size_t>(m_);
      case RuleKind::bucklin: return static_cast<std::size_t>(m_ * m_);
      default: return static_cast<std::size_t>(m_ * (m_ - 1) / 2);
    }
  }

  State contribution(const LinearOrder& vote) const {
    State out(width(), 0);
    switch (rule_.kind()) {
      case RuleKind::positional:
        for (int j = 0; j < m_; ++j) out[static_cast<std::size_t>(vote[j])] = vec_(j);
        break;
      case RuleKind::bucklin:
        for (int j = 0; j < m_; ++j) out[static_cast<std::size_t>(vote[j] * m_ + j)] = 1;
        break;
      default:
        for (int a = 0; a < m_; ++a)
          for (int b = a + 1; b < m_; ++b)
            if (vote.prefers(a, b)) out[pair_index(a, b)] = 1;
        break;
    }
    return out;
  }

  ScoreTable scores(const State& s) const {
    switch (rule_.kind()) {
      case RuleKind::positional:
        return Eigen::Map<const ScoreTable>(s.data(), m_);
      case RuleKind::bucklin: {
        MatrixX<Score> counts(m_, m_);
        for (int c = 0; c < m_; ++c)
          for (int j = 0; j < m_; ++j) counts(c, j) = s[static_cast<std::size_t>(c * m_ + j)];
        return bucklin_scores<Score>(counts, n_);
      }
      default: {
        MatrixX<Score> nm = MatrixX<Score>::Zero(m_, m_);
        for (int a = 0; a < m_; ++a)
          for (int b = a + 1; b < m_; ++b) {
            nm(a, b) = s[pair_index(a, b)];
            nm(b, a) = n_ - nm(a, b);
          }
        if (rule_.kind() == RuleKind::copeland) return copeland_scores<Score>(nm, n_);
        return maximin_scores<Score>(nm);
      }
    }
  }

 private:
  std::size_t pair_index(int a, int b) const {
    return static_cast<std::size_t>(a * m_ - a * (a + 1) / 2 + (b - a - 1));
  }

  const ScoringRule& rule_;
  int m_;
  int n_;
  VectorX<Score> vec_;
};

void add_into(State& target, const State& delta) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] = checked_add(target[i], delta[i]);
}

State sum(const State& a, const State& b) {
  State out = a;
  add_into(out, b);
  return out;
}

struct VoterChoices {
  int voter;
  std::vector<State> contributions;  // in lexicographic order of their first extension
  std::vector<LinearOrder> representatives;
};

/// Exact forward closure over aggregate states.
class TallyEngine {
 public:
  TallyEngine(const PartialProfile& profile, const ScoringRule& rule, std::uint64_t cap)
      : profile_(profile), aggregate_(rule, profile.candidates(), profile.voters()), cap_(cap) {
    fixed_.resize(static_cast<std::size_t>(profile.voters()));
    State base(aggregate_.width(), 0);
    for (int i = 0; i < profile.voters(); ++i) {
      if (count_linear_extensions(profile[i], cap_) > cap_)
        throw LimitError("voter " + std::to_string(i) + " has more than " + std::to_string(cap_) + " extensions");
      VoterChoices choices{i, {}, {}};
      std::unordered_set<State, StateHash> seen;
      for_each_linear_extension(profile[i], [&](const LinearOrder& ext) {
        State contrib = aggregate_.contribution(ext);
        if (seen.insert(contrib).second) {
          choices.contributions.push_back(std::move(contrib));
          choices.representatives.push_back(ext);
        }
        return true;
      });
      if (choices.contributions.size() == 1) {
        add_into(base, choices.contributions.front());
        fixed_[static_cast<std::size_t>(i)] = choices.representatives.front();
      } else {
        variable_.push_back(std::move(choices));
      }
    }
    StateSet layer{base};
    std::uint64_t stored = 1;
    keep_layers_ = true;
    layers_.push_back(layer);
    for (const auto& choices : variable_) {
      StateSet next;
      for (const State& s : layer)
        for (const State& c : choices.contributions) {
          next.insert(sum(s, c));
          if (next.size() > cap_) throw LimitError("more than " + std::to_string(cap_) + " aggregate states");
        }
      stored += next.size();
      if (stored > cap_ && keep_layers_) {
        keep_layers_ = false;
        layers_.clear();
      }
      if (keep_layers_) layers_.push_back(next);
      layer = std::move(next);
    }
    final_ = std::move(layer);
  }

  const StateSet& final_states() const { return final_; }
  const Aggregate& aggregate() const { return aggregate_; }

  /// Lexicographically first completion whose final state satisfies `accept`.
  std::optional<CompleteProfile> witness(const std::function<bool(const State&)>& accept) const {
    if (!keep_layers_) return std::nullopt;
    const std::size_t v = variable_.size();
    std::vector<StateSet> good(v + 1);
    for (const State& s : layers_[v])
      if (accept(s)) good[v].insert(s);
    if (good[v].empty()) return std::nullopt;
    for (std::size_t i = v; i-- > 0;)
      for (const State& s : layers_[i])
        for (const State& c : variable_[i].contributions)
          if (good[i + 1].count(sum(s, c))) {
            good[i].insert(s);
            break;
          }
    std::vector<LinearOrder> votes(fixed_.begin(), fixed_.end());
    State state = *layers_[0].begin();
    for (std::size_t i = 0; i < v; ++i) {
      const auto& choices = variable_[i];
      for (std::size_t j = 0; j < choices.contributions.size(); ++j) {
        State next = sum(state, choices.contributions[j]);
        if (good[i + 1].count(next)) {
          votes[static_cast<std::size_t>(choices.voter)] = choices.representatives[j];
          state = std::move(next);
          break;
        }
      }
    }
    return CompleteProfile(profile_.candidates(), std::move(votes));
  }

 private:
  const PartialProfile& profile_;
  Aggregate aggregate_;
  std::uint64_t cap_;
  std::vector<LinearOrder> fixed_;
  std::vector<VoterChoices> variable_;
  std::vector<StateSet> layers_;
  bool keep_layers_ = false;
  StateSet final_;
};

bool use_enumeration(const PartialProfile& profile, const OracleOptions& options) {
  switch (options.engine) {
    case OracleEngine::enumerate: return true;
    case OracleEngine::tally: return false;
    case OracleEngine::automatic: return count_completions(profile, options.cap) <= options.cap;
  }
  return true;
}

void check_inputs(const PartialProfile& profile, const LinearOrder& tie, const ScoringRule& rule) {
  if (tie.size() != profile.candidates()) throw RangeError("tiebreaker does not cover the candidates");
  if (rule.positional()) rule.vector(profile.candidates());
}

bool satisfies(int rank, Cmp cmp, int k) { return cmp == Cmp::lt ? rank < k : rank > k; }

}  // namespace

std::vector<std::set<int>> rank_sets(const PartialProfile& profile, const LinearOrder& tie, const ScoringRule& rule,
                                     const OracleOptions& options) {
  check_inputs(profile, tie, rule);
  const int m = profile.candidates();
  std::vector<std::set<int>> out(static_cast<std::size_t>(m));
  auto record = [&](const ScoreTable& s) {
    for (Cand c = 0; c < m; ++c) out[static_cast<std::size_t>(c)].insert(rank_from_scores(s, c, tie, rule.lower_is_better()));
  };
  if (use_enumeration(profile, options)) {
    for_each_completion(profile, [&](const CompleteProfile& t) {
      record(scores(t, rule));
      return true;
    }, options.cap);
  } else {
    TallyEngine engine(profile, rule, options.cap);
    for (const State& s : engine.final_states()) record(engine.aggregate().scores(s));
  }
  return out;
}

std::set<int> rank_set(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule,
                       const OracleOptions& options) {
  if (c < 0 || c >= profile.candidates()) throw RangeError("candidate " + std::to_string(c) + " out of range");
  return rank_sets(profile, tie, rule, options)[static_cast<std::size_t>(c)];
}

int min_rank(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule,
             const OracleOptions& options) {
  return *rank_set(profile, c, tie, rule, options).begin();
}

int max_rank(const PartialProfile& profile, Cand c, const LinearOrder& tie, const ScoringRule& rule,
             const OracleOptions& options) {
  return *rank_set(profile, c, tie, rule, options).rbegin();
}

Verdict decide(const RankQuery& q, const OracleOptions& options) {
  const int m = q.profile.candidates();
  if (q.c < 0 || q.c >= m) throw RangeError("candidate " + std::to_string(q.c) + " out of range");
  check_inputs(q.profile, q.tie, q.rule);
  if (auto forced = forced_answer(q.extremum, q.cmp, q.k, m)) {
    Verdict v{*forced, std::nullopt, std::nullopt};
    if (*forced && (q.extremum == Extremum::min) == (q.cmp == Cmp::lt)) {
      v.witness = first_completion(q.profile);
      v.achieved_rank = rank(*v.witness, q.c, q.tie, q.rule);
    }
    return v;
  }

  // Universal forms are complements of existential ones:
  // min > k  <=>  not (min < k+1);  max < k  <=>  not (max > k-1).
  const bool existential = (q.extremum == Extremum::min) == (q.cmp == Cmp::lt);
  const Cmp cmp = q.extremum == Extremum::min ? Cmp::lt : Cmp::gt;
  const int k = existential ? q.k : (cmp == Cmp::lt ? q.k + 1 : q.k - 1);
  const bool lower = q.rule.lower_is_better();

  Verdict v;
  bool found = false;
  if (use_enumeration(q.profile, options)) {
    for_each_completion(q.profile, [&](const CompleteProfile& t) {
      const int r = rank_from_scores(scores(t, q.rule), q.c, q.tie, lower);
      if (!satisfies(r, cmp, k)) return true;
      found = true;
      v.witness = t;
      v.achieved_rank = r;
      return false;
    }, options.cap);
  } else {
    TallyEngine engine(q.profile, q.rule, options.cap);
    auto accept = [&](const State& s) {
      return satisfies(rank_from_scores(engine.aggregate().scores(s), q.c, q.tie, lower), cmp, k);
    };
    for (const State& s : engine.final_states())
      if (accept(s)) {
        found = true;
        break;
      }
    if (found) {
      v.witness = engine.witness(accept);
      if (v.witness) v.achieved_rank = rank(*v.witness, q.c, q.tie, q.rule);
    }
  }
  v.answer = existential ? found : !found;
  if (!existential) {
    v.witness.reset();
    v.achieved_rank.reset();
  }
  return v;
}

}  // namespace rankrange
