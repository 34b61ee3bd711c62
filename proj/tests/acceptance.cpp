// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "rankrange/dispatch.hpp"
#include "rankrange/gadgets.hpp"
#include "rankrange/mcgarvey.hpp"
#include "rankrange/random.hpp"
#include "rankrange/scores.hpp"
#include "rankrange/solvers.hpp"
#include "reference.hpp"

using namespace rankrange;

namespace {

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
};

std::string describe(const ref::Profile& p) {
  std::ostringstream s;
  s << "m=" << p.m << " voters=";
  for (const auto& v : p.voters) {
    s << "{";
    for (auto [a, b] : v) s << a << ">" << b << " ";
    s << "}";
  }
  return s.str();
}

std::string describe(const ref::Profile& p, const std::vector<int>& tie, const ScoringRule& rule, int c, int k) {
  std::ostringstream s;
  s << describe(p) << " tie=";
  for (int x : tie) s << x;
  s << " rule=" << rule.name() << " c=" << c << " k=" << k;
  return s.str();
}

std::vector<ScoringRule> corpus_rules() {
  return {ScoringRule::plurality(), ScoringRule::veto(),     ScoringRule::borda(),  ScoringRule::approval(2),
          ScoringRule::bucklin(),   ScoringRule::copeland(), ScoringRule::maximin()};
}

bool usable(const ScoringRule& rule, int m) {
  if (!rule.positional()) return true;
  try {
    rule.vector(m);
    return true;
  } catch (const FamilyError&) {
    return false;
  }
}

bool shaped(const ScoringRule& rule, int m) {
  return rule.positional() && (rule.is_plurality_like(m) || rule.is_veto_like(m));
}

/// A solver witness must complete the profile and reach the claimed rank.
bool witness_ok(const CompleteProfile& w, const ref::Profile& p, int c, const std::vector<int>& tie,
                const ScoringRule& rule, const std::function<bool(int)>& rank_ok) {
  if (w.voters() != static_cast<int>(p.voters.size()) || w.candidates() != p.m) return false;
  const auto votes = ref::to_votes(w);
  for (std::size_t i = 0; i < votes.size(); ++i)
    if (!ref::satisfies(votes[i], p.voters[i])) return false;
  return rank_ok(ref::rank(ref::scores(votes, p.m, rule), c, tie, rule.lower_is_better()));
}

void check_instance(Tally& t, const ref::Profile& p, const std::vector<int>& tie_seq, const ScoringRule& rule) {
  const int m = p.m;
  const PartialProfile profile = ref::to_library(p);
  const LinearOrder tie(tie_seq);
  const auto truth = ref::rank_sets(p, tie_seq, rule);
  const auto oracle = rank_sets(profile, tie, rule);
  t.expect(truth == oracle, [&] { return "oracle rank sets differ: " + describe(p, tie_seq, rule, -1, -1); });

  for (int c = 0; c < m; ++c) {
    const int lo = *truth[static_cast<std::size_t>(c)].begin(), hi = *truth[static_cast<std::size_t>(c)].rbegin();
    for (int k = 1; k <= m; ++k) {
      auto run = [&](const char* name, bool expected, const std::function<bool(CompleteProfile*)>& solve,
                     const std::function<bool(int)>& rank_ok) {
        CompleteProfile w;
        const bool got = solve(&w);
        t.expect(got == expected, [&] {
          return std::string(name) + " answered " + (got ? "yes" : "no") + ": " + describe(p, tie_seq, rule, c, k);
        });
        if (got && expected)
          t.expect(witness_ok(w, p, c, tie_seq, rule, rank_ok),
                   [&] { return std::string(name) + " witness invalid: " + describe(p, tie_seq, rule, c, k); });
      };
      const int kbar = m - k + 1;
      if (rule.positional()) {
        if (shaped(rule, m)) {
          run("min_rank_lt_plurality_veto", lo < k,
              [&](CompleteProfile* w) { return min_rank_lt_plurality_veto(profile, c, tie, rule, k, w); },
              [&](int r) { return r < k; });
          run("max_rank_gt_kbar_plurality_veto", hi > kbar,
              [&](CompleteProfile* w) { return max_rank_gt_kbar_plurality_veto(profile, c, tie, rule, k, w); },
              [&](int r) { return r > kbar; });
        }
        run("max_rank_gt_poly", hi > k,
            [&](CompleteProfile* w) { return max_rank_gt_poly(profile, c, tie, rule, k, w); },
            [&](int r) { return r > k; });
        run("min_rank_lt_kbar", lo < kbar,
            [&](CompleteProfile* w) { return min_rank_lt_kbar(profile, c, tie, rule, k, w); },
            [&](int r) { return r < kbar; });
      } else if (rule.kind() == RuleKind::bucklin) {
        run("bucklin_max_rank_gt_k", hi > k,
            [&](CompleteProfile* w) { return bucklin_max_rank_gt_k(profile, c, tie, k, w); },
            [&](int r) { return r > k; });
      } else if (rule.kind() == RuleKind::maximin && k == 1) {
        run("maximin_max_rank_gt_1", hi > 1,
            [&](CompleteProfile* w) { return maximin_max_rank_gt_1(profile, c, tie, w); },
            [&](int r) { return r > 1; });
      }
    }
  }
}

std::string criterion_oracle_equivalence(Tally& t) {
  long instances = 0;
  for (const auto& p : corpus::exhaustive())
    for (const auto& rule : corpus_rules()) {
      if (!usable(rule, p.m)) continue;
      for (const auto& tie : corpus::all_permutations(p.m)) {
        check_instance(t, p, tie, rule);
        ++instances;
      }
    }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> m_dist(2, 4), n_dist(1, 3);
  std::uniform_real_distribution<double> density(0.0, 0.7);
  for (int i = 0; i < 1000; ++i) {
    const int m = m_dist(rng), n = n_dist(rng);
    const ref::Profile p = corpus::random_profile(m, n, density(rng), rng);
    const auto tie = corpus::random_permutation(m, rng);
    for (const auto& rule : corpus_rules()) {
      if (!usable(rule, m)) continue;
      check_instance(t, p, tie, rule);
      ++instances;
    }
  }
  return std::to_string(instances) + " (profile, tiebreaker, rule) instances";
}

std::vector<int> tie_with(int c, const std::vector<int>& others, bool first) {
  std::vector<int> out;
  if (first) out.push_back(c);
  out.insert(out.end(), others.begin(), others.end());
  if (!first) out.push_back(c);
  return out;
}

std::string criterion_winner_equivalences(Tally& t) {
  std::mt19937_64 rng(77);
  std::vector<ref::Profile> profiles = corpus::exhaustive();
  std::uniform_int_distribution<int> m_dist(2, 4), n_dist(1, 3);
  std::uniform_real_distribution<double> density(0.0, 0.7);
  for (int i = 0; i < 1000; ++i) profiles.push_back(corpus::random_profile(m_dist(rng), n_dist(rng), density(rng), rng));

  for (const auto& p : profiles) {
    const PartialProfile profile = ref::to_library(p);
    for (const auto& rule : corpus_rules()) {
      if (!usable(rule, p.m)) continue;
      for (int c = 0; c < p.m; ++c) {
        const ref::WinnerFacts facts = ref::winner_facts(p, c, rule);
        std::vector<int> rest;
        for (int x = 0; x < p.m; ++x)
          if (x != c) rest.push_back(x);
        for (const auto& perm : corpus::all_permutations(p.m - 1)) {
          std::vector<int> others;
          for (int i : perm) others.push_back(rest[static_cast<std::size_t>(i)]);
          for (bool first : {true, false}) {
            const LinearOrder tie(tie_with(c, others, first));
            const auto ranks = rank_set(profile, c, tie, rule);
            const bool min_is_1 = *ranks.begin() == 1, max_is_1 = *ranks.rbegin() == 1;
            auto ctx = [&](const char* what) { return std::string(what) + ": " + describe(p, tie.sequence(), rule, c, 2); };
            const RankQuery pw{profile, c, tie, rule, Extremum::min, Cmp::lt, 2};
            const RankQuery nw{profile, c, tie, rule, Extremum::max, Cmp::lt, 2};
            const bool decided_min = evaluate(pw).answer, decided_max = evaluate(nw).answer;
            t.expect(decided_min == min_is_1, [&] { return ctx("decide min<2 disagrees with the rank set"); });
            t.expect(decided_max == max_is_1, [&] { return ctx("decide max<2 disagrees with the rank set"); });
            if (first) {
              t.expect(facts.possible == min_is_1, [&] { return ctx("possible winner"); });
              t.expect(facts.necessary == max_is_1, [&] { return ctx("necessary winner"); });
            } else {
              t.expect(facts.possible_unique == min_is_1, [&] { return ctx("possible unique winner"); });
              t.expect(facts.necessary_unique == max_is_1, [&] { return ctx("necessary unique winner"); });
            }
          }
        }
      }
    }
  }
  return std::to_string(profiles.size()) + " profiles";
}

/// Gadget checks share one rank computation per profile; every k only moves
/// the claim's bound.
struct GadgetRun {
  Tally& t;
  long instances = 0;

  void check(const GadgetInstance& g, const std::vector<std::set<int>>& ranks, bool property, std::size_t claim,
             const std::string& label) {
    ++instances;
    const GadgetClaim& cl = g.claims.at(claim);
    const auto& r = ranks[static_cast<std::size_t>(g.focus)];
    const int extreme = cl.extremum == Extremum::min ? *r.begin() : *r.rbegin();
    const bool side = cl.cmp == Cmp::lt ? extreme < cl.bound : extreme > cl.bound;
    t.expect(side == property, [&] {
      return label + " k=" + std::to_string(g.k) + ": property " + (property ? "holds" : "fails") + " but rank " +
             std::to_string(extreme) + " vs bound " + std::to_string(cl.bound);
    });
  }

  void bands(const GadgetInstance& g, const std::vector<std::set<int>>& ranks, const std::string& label) {
    for (const RankBand& b : g.bands) {
      const auto& r = ranks[static_cast<std::size_t>(b.candidate)];
      t.expect(*r.begin() >= b.low && *r.rbegin() <= b.high,
               [&] { return label + ": band of candidate " + std::to_string(b.candidate) + " violated"; });
    }
  }
};

std::vector<std::set<int>> focus_only(const GadgetInstance& g) {
  std::vector<std::set<int>> out(static_cast<std::size_t>(g.profile.candidates()));
  out[static_cast<std::size_t>(g.focus)] = rank_set(g.profile, g.focus, g.tie, g.rule);
  return out;
}

std::vector<CoreInstance> small_cores(const ScoringRule& rule, int max_m) {
  std::vector<CoreInstance> out;
  for (int m = 1; m <= max_m; ++m) {
    if (!usable(rule, m)) continue;
    const auto options = corpus::small_voters(m);
    std::vector<ref::Profile> profiles;
    for (const auto& a : options) {
      profiles.push_back({m, {a}});
      for (const auto& b : options) {
        profiles.push_back({m, {a, b}});
        for (const auto& c : options) profiles.push_back({m, {a, b, c}});
      }
    }
    for (const auto& p : profiles)
      for (int focus = 0; focus < m; ++focus) out.push_back(CoreInstance{ref::to_library(p), focus, rule, {}});
  }
  return out;
}

void check_padding(GadgetRun& run, const CoreInstance& core, const std::function<GadgetInstance(int)>& build,
                   const std::string& name) {
  const ref::Profile p = ref::from_library(core.profile);
  const ref::WinnerFacts facts = ref::winner_facts(p, core.focus, core.rule);
  for (int k = 1; k <= 3; ++k) {
    const GadgetInstance g = build(k);
    const auto ranks = rank_sets(g.profile, g.tie, g.rule);
    for (std::size_t i = 0; i < g.claims.size(); ++i)
      run.check(g, ranks, g.claims[i].property == Property::possible_winner ? facts.possible : facts.necessary, i,
                name + " " + describe(p) + " focus=" + std::to_string(core.focus));
    run.bands(g, ranks, name);
  }
}

std::string criterion_gadgets(Tally& t) {
  GadgetRun run{t};
  auto edges = [](const Graph& g) { return g.edges(); };

  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n)) {
      const int alpha = ref::min_vertex_cover(n, edges(g)), beta = ref::max_independent_set(n, edges(g));
      const int gamma = ref::min_dominating_set(n, edges(g));
      t.expect(alpha == min_vertex_cover(g) && beta == max_independent_set(g) && gamma == min_dominating_set(g),
               [&] { return "graph oracle disagrees on " + g.to_string(); });

      const GadgetInstance ds0 = ds_gadget(g, 0);
      const auto ds_ranks = focus_only(ds0);
      for (int k = 0; k <= n; ++k) {
        const GadgetInstance ds = ds_gadget(g, k);
        t.expect(ds.profile == ds0.profile, [&] { return "ds profile depends on k"; });
        run.check(ds, ds_ranks, gamma <= k, 0, "ds " + g.to_string());
      }

      if (!g.connected() || !g.regular_degree() || g.edges().empty()) continue;
      for (const ScoringRule& rule : {ScoringRule::plurality(), ScoringRule::borda()}) {
        const GadgetInstance vc0 = vc_gadget(g, rule, 0), is0 = is_gadget(g, rule, 0);
        const auto vc_ranks = rank_sets(vc0.profile, vc0.tie, vc0.rule);
        const auto is_ranks = rank_sets(is0.profile, is0.tie, is0.rule);
        const std::string label = g.to_string() + " " + rule.name();
        run.bands(vc0, vc_ranks, "vc " + label);
        run.bands(is0, is_ranks, "is " + label);
        for (int k = 0; k <= n; ++k) {
          const GadgetInstance vc = vc_gadget(g, rule, k), is = is_gadget(g, rule, k);
          run.check(vc, vc_ranks, alpha <= k, 0, "vc " + label);
          run.check(is, is_ranks, beta >= k, 0, "is " + label);
        }
      }
    }

  for (const Graph& g : {Graph::complete(4), Graph::prism()}) {
    const int beta = ref::max_independent_set(g.vertices(), edges(g));
    const GadgetInstance b0 = bucklin_is_gadget(g, 0);
    const auto ranks = rank_sets(b0.profile, b0.tie, b0.rule);
    run.bands(b0, ranks, "bucklin_is " + g.to_string());
    for (int k = 0; k <= g.vertices(); ++k) run.check(bucklin_is_gadget(g, k), ranks, beta >= k, 0, "bucklin_is " + g.to_string());
  }

  for (const ScoringRule& rule : {ScoringRule::plurality(), ScoringRule::veto(), ScoringRule::borda()})
    for (const CoreInstance& core : small_cores(rule, 2))
      check_padding(run, core, [&](int k) { return pw_padding_gadget(core, k); }, "pw_padding " + rule.name());
  for (const CoreInstance& core : small_cores(ScoringRule::copeland(), 2))
    check_padding(run, core, [&](int k) { return copeland_padding(core, k); }, "copeland_padding");
  for (const CoreInstance& core : small_cores(ScoringRule::bucklin(), 2))
    check_padding(run, core, [&](int k) { return bucklin_padding(core, k); }, "bucklin_padding");

  // Maximin padding: claims only where the margin precondition holds. Three
  // candidate cores give the positive side.
  std::vector<CoreInstance> maximin_cores = small_cores(ScoringRule::maximin(), 2);
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> n_dist(2, 6);
  for (int i = 0; i < 200; ++i) {
    const ref::Profile p = corpus::random_profile(3, n_dist(rng), 0.6, rng);
    maximin_cores.push_back(CoreInstance{ref::to_library(p), static_cast<Cand>(i % 3), ScoringRule::maximin(), {}});
  }
  {
    // Two copies of the cyclic profile: every margin is +-2, all tie at -2.
    ref::Profile cyclic{3, {}};
    for (int copy = 0; copy < 2; ++copy)
      for (const std::vector<int>& v : std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})
        cyclic.voters.push_back({{v[0], v[1]}, {v[1], v[2]}});
    cyclic.voters.push_back({});
    cyclic.voters.push_back({});
    maximin_cores.push_back(CoreInstance{ref::to_library(cyclic), 0, ScoringRule::maximin(), {}});
  }
  long with_precondition = 0, positive = 0;
  for (const CoreInstance& core : maximin_cores) {
    const ref::Profile p = ref::from_library(core.profile);
    bool holds = true;
    ref::completions(p, [&](const std::vector<ref::Vote>& votes) {
      const auto d = ref::margins(votes, p.m);
      int worst = 1 << 20;
      for (int x = 0; x < p.m; ++x)
        if (x != core.focus) worst = std::min(worst, d[static_cast<std::size_t>(core.focus)][static_cast<std::size_t>(x)]);
      if (p.m == 1 || worst > -2) holds = false;
    });
    const GadgetInstance first = maximin_padding(core, 1, kDefaultCap);
    t.expect(first.precondition == std::optional<bool>(holds), [&] { return "maximin precondition flag " + describe(p); });
    if (!holds) continue;
    ++with_precondition;
    const bool pw = ref::winner_facts(p, core.focus, core.rule).possible;
    positive += pw;
    for (int k = 1; k <= 3; ++k) {
      const GadgetInstance g = maximin_padding(core, k, kDefaultCap);
      run.check(g, focus_only(g), pw, 0, "maximin_padding " + describe(p));
    }
  }
  t.expect(positive > 0, [] { return "maximin padding corpus has no possible-winner instance"; });

  std::vector<Triple> triples;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) triples.push_back({a, b, c});
  std::vector<X3CInstance> x3c{{1, {{0, 1, 2}}}};
  for (std::size_t i = 0; i < triples.size(); ++i) {
    x3c.push_back({2, {triples[i]}});
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      x3c.push_back({2, {triples[i], triples[j]}});
      for (std::size_t l = j + 1; l < triples.size(); ++l) x3c.push_back({2, {triples[i], triples[j], triples[l]}});
    }
  }
  long covers = 0;
  for (const X3CInstance& inst : x3c) {
    const bool cover = ref::exact_cover(inst.q, inst.sets);
    t.expect(cover == exact_cover(inst), [&] { return "exact-cover oracle disagrees on " + inst.to_string(); });
    covers += cover;
    for (int k = 2; k <= 3; ++k) {
      const GadgetInstance g = x3c_gadget(inst, k);
      const auto ranks = focus_only(g);
      run.check(g, ranks, cover, 0, "x3c " + inst.to_string());
      run.bands(g, ranks, "x3c " + inst.to_string());
    }
  }
  return std::to_string(run.instances) + " claims; maximin cores with precondition " + std::to_string(with_precondition) +
         " (" + std::to_string(positive) + " winners); x3c instances " + std::to_string(x3c.size()) + " (" +
         std::to_string(covers) + " covers)";
}

std::string criterion_mcgarvey(Tally& t) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> m_dist(2, 5), n_dist(0, 4);
  for (int i = 0; i < 200; ++i) {
    const int m = m_dist(rng), n = n_dist(rng);
    CompleteProfile base(m);
    for (int v = 0; v < n; ++v) base.add(random_linear_order(m, rng));
    MatrixX<Score> target = MatrixX<Score>::Zero(m, m);
    std::vector<int> values;
    for (int x = -4; x <= 4; ++x)
      if ((x - n) % 2 == 0) values.push_back(x);
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        target(a, b) = values[pick(rng)];
        target(b, a) = -target(a, b);
      }
    const CompleteProfile extra = mcgarvey(base, target);
    std::vector<ref::Vote> all = ref::to_votes(base);
    for (const auto& v : ref::to_votes(extra)) all.push_back(v);
    const auto d = ref::margins(all, m), d0 = ref::margins(ref::to_votes(base), m);
    long bound2 = 0;
    bool exact = true;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (a == b) continue;
        exact = exact && d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == target(a, b);
        bound2 += std::abs(target(a, b) - d0[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) + 1;
      }
    t.expect(exact, [&] { return "margins differ from the target (case " + std::to_string(i) + ")"; });
    t.expect(2L * extra.voters() <= bound2, [&] { return "size bound exceeded (case " + std::to_string(i) + ")"; });
  }
  return "200 targets";
}

std::string criterion_structures(Tally& t) {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> m_dist(2, 5), n_dist(1, 3);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  for (int i = 0; i < 500; ++i) {
    const int m = m_dist(rng), n = n_dist(rng);
    ref::Profile p;
    do p = corpus::random_profile(m, n, density(rng), rng);
    while (corpus::completion_count(p) > 50000);
    const PartialProfile profile = ref::to_library(p);
    const int q = std::uniform_int_distribution<int>(1, std::min(3, m))(rng);
    std::vector<int> s = corpus::random_permutation(m, rng);
    s.resize(static_cast<std::size_t>(q));
    std::vector<int> r;
    for (int j = 0; j < q; ++j) r.push_back(std::uniform_int_distribution<int>(1, m)(rng));
    std::vector<ScoringRule> rules{ScoringRule::plurality(), ScoringRule::veto(), ScoringRule::borda()};
    if (m >= 3) rules.push_back(ScoringRule::approval(2));
    const ScoringRule rule = rules[static_cast<std::size_t>(i) % rules.size()];

    std::set<std::vector<Score>> tuples, counts;
    ref::completions(p, [&](const std::vector<ref::Vote>& votes) {
      const auto sc = ref::scores(votes, m, rule);
      std::vector<Score> tuple, count(static_cast<std::size_t>(q), 0);
      for (int j = 0; j < q; ++j) tuple.push_back(sc[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])]);
      for (const auto& v : votes)
        for (int j = 0; j < q; ++j) {
          const auto top = v.begin() + r[static_cast<std::size_t>(j)];
          if (std::find(v.begin(), top, s[static_cast<std::size_t>(j)]) != top) ++count[static_cast<std::size_t>(j)];
        }
      tuples.insert(tuple);
      counts.insert(count);
    });
    t.expect(possible_score_tuples(profile, s, rule).tuples == tuples,
             [&] { return "score tuples differ: " + describe(p) + " rule=" + rule.name(); });
    t.expect(bucklin_possible_counts(profile, s, r).tuples == counts,
             [&] { return "bucklin counts differ: " + describe(p); });

    // Scheduling over the first voter's order with random windows.
    SchedulingInstance inst{m, {}, {}, profile[0]};
    for (int x = 0; x < m; ++x) {
      const int rel = std::uniform_int_distribution<int>(1, m)(rng);
      inst.release.push_back(rel);
      inst.deadline.push_back(std::uniform_int_distribution<int>(rel + 1, m + 1)(rng));
    }
    bool feasible = false;
    for (const auto& v : ref::extensions(m, p.voters[0])) {
      bool ok = true;
      for (int slot = 1; slot <= m; ++slot) {
        const int x = v[static_cast<std::size_t>(slot - 1)];
        ok = ok && inst.release[static_cast<std::size_t>(x)] <= slot && slot < inst.deadline[static_cast<std::size_t>(x)];
      }
      feasible = feasible || ok;
    }
    const auto schedule = schedule_unit_tasks(inst);
    t.expect(schedule.has_value() == feasible, [&] { return "scheduling feasibility differs: " + describe(p); });
    if (schedule) {
      bool ok = ref::satisfies(schedule->sequence(), p.voters[0]);
      for (int slot = 1; slot <= m; ++slot) {
        const int x = (*schedule)[slot - 1];
        ok = ok && inst.release[static_cast<std::size_t>(x)] <= slot && slot < inst.deadline[static_cast<std::size_t>(x)];
      }
      t.expect(ok, [&] { return "schedule breaks a window or the order: " + describe(p); });
    }
  }
  return "500 instances";
}

std::string criterion_reversal(Tally& t) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> m_dist(2, 5), n_dist(1, 3), a_dist(-5, 5), b_dist(1, 3);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  long completions = 0;
  for (int i = 0; i < 200; ++i) {
    const int m = m_dist(rng), n = n_dist(rng);
    ref::Profile p;
    do p = corpus::random_profile(m, n, density(rng), rng);
    while (corpus::completion_count(p) > 5000);
    const auto tie = corpus::random_permutation(m, rng);
    std::vector<ScoringRule> rules{ScoringRule::plurality(), ScoringRule::veto(), ScoringRule::borda()};
    if (m >= 3) {
      rules.push_back(ScoringRule::approval(2));
      rules.push_back(ScoringRule::t_veto(2));
    }
    std::vector<Score> custom{0};
    for (int j = 1; j < m; ++j) custom.insert(custom.begin(), custom.front() + std::uniform_int_distribution<int>(0, 3)(rng));
    if (custom.front() > custom.back()) rules.push_back(ScoringRule::custom({{m, custom}}));
    const ScoringRule rule = rules[std::uniform_int_distribution<std::size_t>(0, rules.size() - 1)(rng)];
    const Score a = a_dist(rng), b = b_dist(rng);
    const ReversedInstance rev =
        reverse_instance(ref::to_library(p), LinearOrder(tie), rule, [a](int) { return a; }, [b](int) { return b; });
    const ref::Profile rp = ref::from_library(rev.profile);
    const std::vector<int> rtie = rev.tie.sequence();
    ref::completions(p, [&](const std::vector<ref::Vote>& votes) {
      ++completions;
      std::vector<ref::Vote> reversed;
      for (const auto& v : votes) reversed.emplace_back(v.rbegin(), v.rend());
      bool admitted = true;
      for (std::size_t j = 0; j < reversed.size(); ++j) admitted = admitted && ref::satisfies(reversed[j], rp.voters[j]);
      t.expect(admitted, [&] { return "reversed completion not admitted: " + describe(p); });
      const auto s = ref::scores(votes, m, rule), rs = ref::scores(reversed, m, rev.rule);
      for (int c = 0; c < m; ++c)
        t.expect(ref::rank(rs, c, rtie, false) == m + 1 - ref::rank(s, c, tie, false),
                 [&] { return "reversal identity fails: " + describe(p, tie, rule, c, 0); });
    });
  }
  return "200 instances, " + std::to_string(completions) + " completions";
}

std::string criterion_smoke(Tally& t) {
  std::mt19937_64 rng(8);
  double worst = 0;
  for (int i = 0; i < 5; ++i) {
    const RankQuery q{random_partial_profile(40, 40, 0.3, rng), static_cast<Cand>(i), random_linear_order(40, rng),
                      ScoringRule::plurality(), Extremum::min, Cmp::lt, 2};
    const auto start = std::chrono::steady_clock::now();
    min_rank_lt_plurality_veto(q.profile, q.c, q.tie, q.rule, q.k);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    worst = std::max(worst, secs);
    t.expect(secs < 10.0, [&] { return "solver took " + std::to_string(secs) + " s"; });
    bool refused = false;
    try {
      decide(q);
    } catch (const LimitError&) {
      refused = true;
    }
    t.expect(refused, [] { return "oracle did not refuse at the cap"; });
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "slowest solver run %.3f s", worst);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments pick criteria by number.
  std::set<std::string> only(argv + 1, argv + argc);
  const std::vector<std::pair<std::string, std::function<std::string(Tally&)>>> criteria{
      {"1 oracle equivalence", criterion_oracle_equivalence},
      {"2 winner equivalences", criterion_winner_equivalences},
      {"3 gadget biconditionals", criterion_gadgets},
      {"4 McGarvey exactness", criterion_mcgarvey},
      {"5 tuple sets and scheduling", criterion_structures},
      {"6 reversal identities", criterion_reversal},
      {"7 tractability smoke test", criterion_smoke},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && !only.count(name.substr(0, name.find(' ')))) continue;
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = run(t);
    } catch (const std::exception& e) {
      t.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = t.failures == 0;
    failed += !pass;
    std::printf("[%s] %s: %ld checks, %ld failures, %.1f s", pass ? "PASS" : "FAIL", name.c_str(), t.checks,
                t.failures, secs);
    if (!detail.empty()) std::printf("; %s", detail.c_str());
    if (!pass) std::printf("; first failure: %s", t.first.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
