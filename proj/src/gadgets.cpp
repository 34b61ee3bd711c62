#include "rankrange/gadgets.hpp"

#include <numeric>
#include <string>

#include "rankrange/mcgarvey.hpp"
#include "rankrange/scores.hpp"

namespace rankrange {

std::string to_string(Property property) {
  switch (property) {
    case Property::vertex_cover_at_most: return "vertex_cover_at_most";
    case Property::independent_set_at_least: return "independent_set_at_least";
    case Property::dominating_set_at_most: return "dominating_set_at_most";
    case Property::possible_winner: return "possible_winner";
    case Property::necessary_winner: return "necessary_winner";
    case Property::exact_cover: return "exact_cover";
  }
  return "?";
}

RankQuery GadgetInstance::query(std::size_t claim) const {
  const GadgetClaim& c = claims.at(claim);
  return RankQuery{profile, focus, tie, rule, c.extremum, c.cmp, c.bound};
}

int last_positive_index(const ScoringRule& rule, int m) {
  const VectorX<Score> s = rule.vector(m);
  int l = 0;
  for (int j = 0; j < m; ++j)
    if (s(j) > s(m - 1)) l = j + 1;
  return l;
}

namespace {

std::vector<Cand> range(Cand from, Cand to) {
  std::vector<Cand> out(static_cast<std::size_t>(std::max(0, to - from)));
  std::iota(out.begin(), out.end(), from);
  return out;
}

std::vector<Cand> join(std::initializer_list<std::vector<Cand>> parts) {
  std::vector<Cand> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<std::vector<Cand>> singletons(std::span<const Cand> seq) {
  std::vector<std::vector<Cand>> out;
  for (Cand c : seq) out.push_back({c});
  return out;
}

std::vector<std::string> numbered(const std::string& stem, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::vector<std::string> concat_labels(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

int require_regular(const Graph& g) {
  const auto degree = g.regular_degree();
  if (!degree) throw NotRegularError("graph " + g.to_string() + " is not regular");
  if (g.edges().empty()) throw InvalidInstanceError("graph " + g.to_string() + " has no edges");
  return *degree;
}

/// P1: for each edge e = {u, w} and i = 1..n, M_i(C \ e) with {u, w} free at
/// positions l and l+1.
void add_edge_voters(std::vector<PartialOrder>& voters, const Graph& g, int m, int l) {
  const int n = g.vertices();
  for (auto [u, w] : g.edges()) {
    std::vector<Cand> rest;
    for (Cand x = 0; x < m; ++x)
      if (x != u && x != w) rest.push_back(x);
    for (int i = 1; i <= n; ++i) {
      const std::vector<Cand> seq = circular_vote(i, rest);
      std::vector<std::vector<Cand>> blocks;
      for (int j = 0; j < l - 1; ++j) blocks.push_back({seq[static_cast<std::size_t>(j)]});
      blocks.push_back({u, w});
      for (std::size_t j = static_cast<std::size_t>(l - 1); j < seq.size(); ++j) blocks.push_back({seq[j]});
      voters.push_back(partitioned_order(m, blocks));
    }
  }
}

/// T2: delta copies of M_i(U) with d at l and c* at l+1.
void add_anchor_voters(std::vector<PartialOrder>& voters, int n, int delta, int l) {
  const Cand star = n, d = n + 1;
  const std::vector<Cand> u = range(0, n);
  for (int copy = 0; copy < delta; ++copy)
    for (int i = 1; i <= n; ++i) {
      std::vector<Cand> seq = circular_vote(i, u);
      seq.insert(seq.begin() + (l - 1), {d, star});
      voters.push_back(PartialOrder::from_linear(LinearOrder(seq)));
    }
}

std::vector<std::string> graph_labels(int n) { return concat_labels({numbered("u", n), {"c*", "d"}}); }

void check_core(const CoreInstance& core) {
  if (core.focus < 0 || core.focus >= core.profile.candidates()) throw RangeError("core focus out of range");
}

std::vector<std::string> core_labels(const CoreInstance& core) {
  if (!core.labels.empty()) return core.labels;
  std::vector<std::string> out;
  for (int i = 0; i < core.profile.candidates(); ++i) out.push_back("c" + std::to_string(i + 1));
  return out;
}

/// O(D, {c}, C \ {c}) for a core of m candidates padded with `pads` more.
LinearOrder padded_tie(int m, int pads, Cand focus) {
  std::vector<Cand> rest;
  for (Cand x = 0; x < m; ++x)
    if (x != focus) rest.push_back(x);
  return LinearOrder(join({range(m, m + pads), {focus}, rest}));
}

/// Core voters extended to m + pads candidates.
std::vector<PartialOrder> lift(const PartialProfile& profile, int pads, std::span<const std::vector<Cand>> blocks) {
  const int m = profile.candidates(), total = m + pads;
  const PartialOrder frame = partitioned_order(total, blocks);
  std::vector<PartialOrder> out;
  for (const auto& v : profile.orders()) {
    Relation r = Relation::Constant(total, total, false);
    r.topLeftCorner(m, m) = v.relation();
    out.push_back(PartialOrder::from_relation(r).merged(frame));
  }
  return out;
}

void add_pad_bands(GadgetInstance& gi, int m, int pads) {
  for (Cand d = m; d < m + pads; ++d) gi.bands.push_back({d, 1, pads});
}

/// Entries left free by a margin target: 0 when parity allows, else +1
/// oriented by ascending index.
void fill_free_margins(MatrixX<Score>& target, const MatrixX<Score>& base, const Relation& fixed) {
  const Eigen::Index m = target.rows();
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = a + 1; b < m; ++b) {
      if (fixed(a, b)) continue;
      const Score v = (base(a, b) % 2 == 0) ? 0 : 1;
      target(a, b) = v;
      target(b, a) = -v;
    }
}

}  // namespace

GadgetInstance vc_gadget(const Graph& g, const ScoringRule& rule, int k) {
  const int delta = require_regular(g);
  const int n = g.vertices(), m = n + 2;
  const int l = last_positive_index(rule, m);
  std::vector<PartialOrder> voters;
  add_edge_voters(voters, g, m, l);
  add_anchor_voters(voters, n, delta, l);

  GadgetInstance gi;
  gi.gadget = "vc";
  gi.k = k;
  gi.labels = graph_labels(n);
  gi.profile = PartialProfile(m, std::move(voters));
  gi.tie = LinearOrder(join({{n, n + 1}, range(0, n)}));
  gi.rule = rule;
  gi.focus = n;
  gi.claims = {{Property::vertex_cover_at_most, Extremum::min, Cmp::lt, k + 3}};
  gi.bands = {{n + 1, 1, 1}};
  gi.graph = g;
  return gi;
}

GadgetInstance is_gadget(const Graph& g, const ScoringRule& rule, int k) {
  const int delta = require_regular(g);
  const int n = g.vertices(), m = n + 2;
  const Cand star = n, d = n + 1;
  const int l = last_positive_index(rule, m);
  std::vector<PartialOrder> voters;
  add_edge_voters(voters, g, m, l);
  add_anchor_voters(voters, n, delta, l);

  // T3: delta*n copies of M_i(u_1..u_n, d, c*), with d/c* swapped in the
  // vote that puts them at l, l+1.
  const std::vector<Cand> base = join({range(0, n), {d, star}});
  std::vector<LinearOrder> block;
  for (int i = 1; i <= m; ++i) {
    std::vector<Cand> seq = circular_vote(i, base);
    if (seq[static_cast<std::size_t>(l - 1)] == d && seq[static_cast<std::size_t>(l)] == star)
      std::swap(seq[static_cast<std::size_t>(l - 1)], seq[static_cast<std::size_t>(l)]);
    block.emplace_back(std::move(seq));
  }
  for (int copy = 0; copy < delta * n; ++copy)
    for (const auto& vote : block) voters.push_back(PartialOrder::from_linear(vote));

  GadgetInstance gi;
  gi.gadget = "is";
  gi.k = k;
  gi.labels = graph_labels(n);
  gi.profile = PartialProfile(m, std::move(voters));
  gi.tie = LinearOrder(join({range(0, n), {star, d}}));
  gi.rule = rule;
  gi.focus = star;
  gi.claims = {{Property::independent_set_at_least, Extremum::max, Cmp::gt, k}};
  gi.bands = {{d, m, m}};
  gi.graph = g;
  return gi;
}

GadgetInstance ds_gadget(const Graph& g, int k) {
  const int n = g.vertices();
  if (n < 1) throw InvalidInstanceError("dominating-set gadget needs at least one vertex");
  const Cand star = n;
  std::vector<PartialOrder> voters;
  for (int u = 0; u < n; ++u) {
    std::vector<Cand> closed, open;
    for (int x = 0; x < n; ++x) (x == u || g.adjacent(u, x) ? closed : open).push_back(x);
    const std::vector<std::vector<Cand>> blocks{closed, open, {star}};
    voters.push_back(partitioned_order(n + 1, blocks));
  }
  GadgetInstance gi;
  gi.gadget = "ds";
  gi.k = k;
  gi.labels = concat_labels({numbered("u", n), {"c*"}});
  gi.profile = PartialProfile(n + 1, std::move(voters));
  gi.tie = LinearOrder(join({{star}, range(0, n)}));
  gi.rule = ScoringRule::plurality();
  gi.focus = star;
  gi.claims = {{Property::dominating_set_at_most, Extremum::min, Cmp::lt, k + 2}};
  gi.graph = g;
  return gi;
}

GadgetInstance pw_padding_gadget(const CoreInstance& core, int k) {
  check_core(core);
  if (k < 1) throw RangeError("padding needs k >= 1");
  const ScoringRule& rule = core.rule;
  if (!rule.positional()) throw RuleDomainError("positional padding needs a positional rule");
  if (!rule.strongly_pure()) throw PurityMetadataError(rule.name() + " is not flagged strongly pure");
  const int m = core.profile.candidates(), pads = k - 1, wide = m + pads, n = core.profile.voters();
  const VectorX<Score> narrow_vec = rule.vector(m), wide_vec = rule.vector(wide);
  int offset = -1;
  for (int t = 0; t <= pads && offset < 0; ++t)
    if (wide_vec.segment(t, m) == narrow_vec) offset = t;
  if (offset < 0)
    throw PurityMetadataError(rule.name() + ": s_" + std::to_string(m) + " does not occur inside s_" + std::to_string(wide));

  const std::vector<Cand> c_all = range(0, m), d1 = range(m, m + offset), d2 = range(m + offset, wide), d_all = range(m, wide);
  const std::vector<std::vector<Cand>> frame{d1, c_all, d2};
  std::vector<PartialOrder> voters = lift(core.profile, pads, frame);

  // n * s_{m'}(1) copies (normalised so s_{m'}(m') = 0) of M_i(D) o M_j(C).
  const Score copies = checked_mul<Score>(n, wide_vec(0) - wide_vec(wide - 1));
  std::vector<PartialOrder> block;
  for (int i = 1; i <= pads; ++i)
    for (int j = 1; j <= m; ++j)
      block.push_back(PartialOrder::from_linear(LinearOrder(join({circular_vote(i, d_all), circular_vote(j, c_all)}))));
  for (Score copy = 0; copy < copies; ++copy) voters.insert(voters.end(), block.begin(), block.end());

  GadgetInstance gi;
  gi.gadget = "pw_padding";
  gi.k = k;
  gi.labels = concat_labels({core_labels(core), numbered("d", pads)});
  gi.profile = PartialProfile(wide, std::move(voters));
  gi.tie = padded_tie(m, pads, core.focus);
  gi.rule = rule;
  gi.focus = core.focus;
  gi.claims = {{Property::possible_winner, Extremum::min, Cmp::lt, k + 1}};
  add_pad_bands(gi, m, pads);
  gi.core = core;
  return gi;
}

namespace {

GadgetInstance top_padding(const CoreInstance& core, int k, const ScoringRule& rule, const std::string& name) {
  check_core(core);
  if (k < 1) throw RangeError("padding needs k >= 1");
  const int m = core.profile.candidates(), pads = k - 1;
  const std::vector<std::vector<Cand>> frame{range(m, m + pads), range(0, m)};
  GadgetInstance gi;
  gi.gadget = name;
  gi.k = k;
  gi.labels = concat_labels({core_labels(core), numbered("d", pads)});
  gi.profile = PartialProfile(m + pads, lift(core.profile, pads, frame));
  gi.tie = padded_tie(m, pads, core.focus);
  gi.rule = rule;
  gi.focus = core.focus;
  gi.claims = {{Property::possible_winner, Extremum::min, Cmp::lt, k + 1}};
  add_pad_bands(gi, m, pads);
  gi.core = core;
  gi.core->rule = rule;
  return gi;
}

}  // namespace

GadgetInstance copeland_padding(const CoreInstance& core, int k) {
  GadgetInstance gi = top_padding(core, k, ScoringRule::copeland(), "copeland_padding");
  gi.claims.push_back({Property::necessary_winner, Extremum::max, Cmp::lt, k + 1});
  return gi;
}

GadgetInstance bucklin_padding(const CoreInstance& core, int k) {
  return top_padding(core, k, ScoringRule::bucklin(), "bucklin_padding");
}

GadgetInstance bucklin_is_gadget(const Graph& g, int k) {
  const int degree = require_regular(g);
  if (degree != 3) throw NotRegularError("graph " + g.to_string() + " is not 3-regular");
  const int n = g.vertices(), m = 2 * n + 1, edges = static_cast<int>(g.edges().size());
  const Cand star = n, d = n + 1;
  const std::vector<Cand> f = range(n + 2, m), u_all = range(0, n);

  std::vector<PartialOrder> voters;
  int swapped = 0;
  for (auto [u, w] : g.edges()) {
    std::vector<Cand> rest;
    for (Cand x : u_all)
      if (x != u && x != w) rest.push_back(x);
    const bool swap = swapped++ < 3;
    std::vector<std::vector<Cand>> blocks = singletons(f);
    blocks.push_back({swap ? d : star});
    blocks.push_back({u, w});
    for (Cand x : rest) blocks.push_back({x});
    blocks.push_back({swap ? star : d});
    voters.push_back(partitioned_order(m, blocks));
  }
  const LinearOrder anchor(join({u_all, {star}, f, {d}}));
  for (int i = 0; i < edges - 4; ++i) voters.push_back(PartialOrder::from_linear(anchor));

  GadgetInstance gi;
  gi.gadget = "bucklin_is";
  gi.k = k;
  gi.labels = concat_labels({numbered("u", n), {"c*", "d"}, numbered("f", n - 1)});
  gi.profile = PartialProfile(m, std::move(voters));
  gi.tie = LinearOrder(join({f, u_all, {star}, {d}}));
  gi.rule = ScoringRule::bucklin();
  gi.focus = star;
  gi.claims = {{Property::independent_set_at_least, Extremum::max, Cmp::gt, k + n - 1}};
  for (Cand x : f) gi.bands.push_back({x, 1, n - 1});
  gi.graph = g;
  return gi;
}

GadgetInstance maximin_padding(const CoreInstance& core, int k, std::uint64_t cap) {
  check_core(core);
  if (k < 1) throw RangeError("padding needs k >= 1");
  const int m = core.profile.candidates(), pads = k - 1, total = m + pads;
  std::vector<std::vector<Cand>> frame{range(0, m)};
  for (Cand d = m; d < total; ++d) frame.push_back({d});
  const PartialProfile first(total, lift(core.profile, pads, frame));

  // T2 leaves C x C margins alone and brings every pair touching D to 0 or +-1.
  CompleteProfile base(total);
  const std::vector<int> zero(static_cast<std::size_t>(total), 0);
  for (const auto& v : first.orders()) base.add(prioritized_extension(v, zero));
  const MatrixX<Score> base_margin = pairwise_margins<Score>(base);
  MatrixX<Score> target = base_margin;
  Relation fixed = Relation::Constant(total, total, false);
  fixed.topLeftCorner(m, m).setConstant(true);
  fill_free_margins(target, base_margin, fixed);
  const CompleteProfile second = mcgarvey(base, target);

  std::vector<PartialOrder> voters = first.orders();
  for (const auto& vote : second.votes()) voters.push_back(PartialOrder::from_linear(vote));

  GadgetInstance gi;
  gi.gadget = "maximin_padding";
  gi.k = k;
  gi.labels = concat_labels({core_labels(core), numbered("d", pads)});
  gi.profile = PartialProfile(total, std::move(voters));
  gi.tie = padded_tie(m, pads, core.focus);
  gi.rule = ScoringRule::maximin();
  gi.focus = core.focus;
  gi.claims = {{Property::possible_winner, Extremum::min, Cmp::lt, k + 1}};
  gi.core = core;
  gi.core->rule = gi.rule;

  if (count_completions(core.profile, cap) <= cap) {
    bool ok = true;
    for_each_completion(core.profile, [&](const CompleteProfile& t) {
      const MatrixX<Score> margins = pairwise_margins<Score>(t);
      Score worst = std::numeric_limits<Score>::max();
      for (Cand x = 0; x < m; ++x)
        if (x != core.focus) worst = std::min(worst, margins(core.focus, x));
      ok = worst <= -2;
      return ok;
    }, cap);
    gi.precondition = ok;
  }
  return gi;
}

GadgetInstance x3c_gadget(const X3CInstance& instance, int k) {
  if (k < 2) throw RangeError("the exact-cover gadget needs k >= 2");
  if (instance.q < 1 || instance.sets.empty()) throw InvalidInstanceError("exact-cover instance has no sets");
  const int q = instance.q, universe = 3 * q;
  for (const Triple& e : instance.sets) {
    for (int u : e)
      if (u < 0 || u >= universe) throw InvalidInstanceError("triple member out of range");
    if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2]) throw InvalidInstanceError("triples need three distinct members");
  }
  const Cand star = universe, w = universe + 1;
  const int total = universe + 2 + k;
  auto dk = [&](int i) { return universe + 1 + i; };  // d_1..d_k
  const int sets = static_cast<int>(instance.sets.size());

  std::vector<PartialOrder> voters;
  CompleteProfile base(total);
  for (const Triple& e : instance.sets) {
    std::vector<Cand> inside(e.begin(), e.end()), outside;
    for (Cand u = 0; u < universe; ++u)
      if (std::find(e.begin(), e.end(), u) == e.end()) outside.push_back(u);
    std::vector<std::vector<Cand>> blocks{{w}, {star}, outside, inside};
    for (int i = 1; i <= k; ++i) blocks.push_back({dk(i)});
    const LinearOrder full = partitioned_completion(total, blocks);
    base.add(full);
    Relation r = PartialOrder::from_linear(full).relation();
    for (Cand x : inside) r(x, dk(k)) = false;
    for (int i = 1; i < k; ++i) r(dk(i), dk(k)) = false;
    voters.push_back(PartialOrder::from_relation(r));
  }

  const MatrixX<Score> base_margin = pairwise_margins<Score>(base);
  MatrixX<Score> target = MatrixX<Score>::Zero(total, total);
  Relation fixed = Relation::Constant(total, total, false);
  auto set = [&](Cand a, Cand b, Score v) {
    target(a, b) = v;
    target(b, a) = -v;
    fixed(a, b) = fixed(b, a) = true;
  };
  set(w, star, sets);
  set(w, dk(1), -sets - 2);
  for (Cand u = 0; u < universe; ++u) {
    set(w, u, sets + 2);
    set(dk(k), u, -sets - 2);
  }
  for (int i = 1; i < k; ++i) set(dk(i), dk(k), 2 * q - sets);
  fill_free_margins(target, base_margin, fixed);
  const CompleteProfile second = mcgarvey(base, target);
  for (const auto& vote : second.votes()) voters.push_back(PartialOrder::from_linear(vote));

  GadgetInstance gi;
  gi.gadget = "x3c";
  gi.k = k;
  gi.labels = concat_labels({numbered("u", universe), {"c*", "w"}, numbered("d", k)});
  gi.profile = PartialProfile(total, std::move(voters));
  std::vector<Cand> lower = range(0, universe);
  lower.push_back(w);
  gi.tie = LinearOrder(join({range(dk(1), dk(k) + 1), {star}, lower}));
  gi.rule = ScoringRule::maximin();
  gi.focus = star;
  gi.claims = {{Property::exact_cover, Extremum::max, Cmp::gt, k}};
  gi.bands = {{star, 1, k + 1}};
  gi.x3c = instance;
  return gi;
}

namespace {

bool wins(const ScoreTable& s, Cand c, bool lower_is_better) {
  for (Eigen::Index x = 0; x < s.size(); ++x)
    if (lower_is_better ? s(x) < s(c) : s(x) > s(c)) return false;
  return true;
}

}  // namespace

bool possible_winner(const PartialProfile& profile, Cand c, const ScoringRule& rule, std::uint64_t cap) {
  bool found = false;
  for_each_completion(profile, [&](const CompleteProfile& t) {
    found = wins(scores(t, rule), c, rule.lower_is_better());
    return !found;
  }, cap);
  return found;
}

bool necessary_winner(const PartialProfile& profile, Cand c, const ScoringRule& rule, std::uint64_t cap) {
  bool all = true;
  for_each_completion(profile, [&](const CompleteProfile& t) {
    all = wins(scores(t, rule), c, rule.lower_is_better());
    return all;
  }, cap);
  return all;
}

std::vector<ClaimCheck> verify_claims(const GadgetInstance& gi, const OracleOptions& options) {
  const std::set<int> ranks = rank_set(gi.profile, gi.focus, gi.tie, gi.rule, options);
  std::vector<ClaimCheck> out;
  for (const GadgetClaim& claim : gi.claims) {
    ClaimCheck check;
    switch (claim.property) {
      case Property::vertex_cover_at_most: check.property = min_vertex_cover(*gi.graph) <= gi.k; break;
      case Property::independent_set_at_least: check.property = max_independent_set(*gi.graph) >= gi.k; break;
      case Property::dominating_set_at_most: check.property = min_dominating_set(*gi.graph) <= gi.k; break;
      case Property::possible_winner:
        check.property = possible_winner(gi.core->profile, gi.core->focus, gi.core->rule, options.cap);
        break;
      case Property::necessary_winner:
        check.property = necessary_winner(gi.core->profile, gi.core->focus, gi.core->rule, options.cap);
        break;
      case Property::exact_cover: check.property = exact_cover(*gi.x3c); break;
    }
    const int extreme = claim.extremum == Extremum::min ? *ranks.begin() : *ranks.rbegin();
    check.rank_side = claim.cmp == Cmp::lt ? extreme < claim.bound : extreme > claim.bound;
    out.push_back(check);
  }
  return out;
}

bool verify_bands(const GadgetInstance& gi, const OracleOptions& options) {
  if (gi.bands.empty()) return true;
  const auto sets = rank_sets(gi.profile, gi.tie, gi.rule, options);
  for (const RankBand& band : gi.bands) {
    const auto& s = sets[static_cast<std::size_t>(band.candidate)];
    if (*s.begin() < band.low || *s.rbegin() > band.high) return false;
  }
  return true;
}

}  // namespace rankrange
