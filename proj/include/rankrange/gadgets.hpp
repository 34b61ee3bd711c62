#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankrange/graph.hpp"
#include "rankrange/oracle.hpp"

namespace rankrange {

/// The combinatorial side of a gadget's biconditional.
enum class Property {
  vertex_cover_at_most,      // alpha(G) <= k
  independent_set_at_least,  // beta(G) >= k
  dominating_set_at_most,    // gamma(G) <= k
  possible_winner,           // core focus wins some completion
  necessary_winner,          // core focus wins every completion
  exact_cover,               // the X3C instance has an exact cover
};

std::string to_string(Property property);

/// property holds  <=>  (extremum rank of the focus) cmp bound.
struct GadgetClaim {
  Property property;
  Extremum extremum;
  Cmp cmp;
  int bound;
};

/// A candidate whose rank is pinned to [low, high] in every completion.
struct RankBand {
  Cand candidate;
  int low;
  int high;
};

/// Input of the padding gadgets: a voting instance and a focus candidate.
struct CoreInstance {
  PartialProfile profile;
  Cand focus = 0;
  ScoringRule rule;
  std::vector<std::string> labels;
};

struct GadgetInstance {
  std::string gadget;
  int k = 0;
  std::vector<std::string> labels;
  PartialProfile profile;
  LinearOrder tie;
  ScoringRule rule;
  Cand focus = 0;
  std::vector<GadgetClaim> claims;
  std::vector<RankBand> bands;

  std::optional<Graph> graph;
  std::optional<X3CInstance> x3c;
  std::optional<CoreInstance> core;

  /// Maximin padding only: whether s(T, c*) <= -2 (margin form) was checked
  /// in every core completion; nullopt when the core exceeded the cap.
  std::optional<bool> precondition;

  RankQuery query(std::size_t claim = 0) const;
};

/// Last index l (1-based) with s_m(l) > s_m(m).
int last_positive_index(const ScoringRule& rule, int m);

/// Minimum vertex cover. Candidates U, c*, d; claim alpha(G) <= k iff min < k+3.
GadgetInstance vc_gadget(const Graph& g, const ScoringRule& rule, int k);

/// Maximum independent set. Claim beta(G) >= k iff max > k.
GadgetInstance is_gadget(const Graph& g, const ScoringRule& rule, int k);

/// Dominating set under plurality. Claim gamma(G) <= k iff min < k+2.
GadgetInstance ds_gadget(const Graph& g, int k);

/// Pads a positional instance with k-1 leading candidates; claim: possible
/// winner iff min < k+1. Needs a strongly pure rule whose s_m sits inside
/// s_{m+k-1} at some offset t <= k-1, else PurityMetadataError.
GadgetInstance pw_padding_gadget(const CoreInstance& core, int k);

/// Copeland: claims possible winner iff min < k+1, necessary winner iff max < k+1.
GadgetInstance copeland_padding(const CoreInstance& core, int k);

/// Bucklin: claim possible winner iff min < k+1.
GadgetInstance bucklin_padding(const CoreInstance& core, int k);

/// Bucklin on a 3-regular graph. Claim beta(G) >= k iff max > k + |F|.
GadgetInstance bucklin_is_gadget(const Graph& g, int k);

/// Maximin padding: claim possible winner iff min < k+1, valid when the
/// precondition holds. The core precondition is checked with the oracle when
/// the core is within `cap` completions.
GadgetInstance maximin_padding(const CoreInstance& core, int k, std::uint64_t cap = kDefaultCap);

/// Maximin exact-cover gadget, k >= 2. Claim exact cover iff max > k.
GadgetInstance x3c_gadget(const X3CInstance& instance, int k);

/// Winner semantics without a tiebreaker: c's score is at least as good as
/// every rival's in some / every completion.
bool possible_winner(const PartialProfile& profile, Cand c, const ScoringRule& rule, std::uint64_t cap = kDefaultCap);
bool necessary_winner(const PartialProfile& profile, Cand c, const ScoringRule& rule, std::uint64_t cap = kDefaultCap);

struct ClaimCheck {
  bool property = false;
  bool rank_side = false;
  bool holds() const { return property == rank_side; }
};

/// Evaluates both sides of every claim with the graph oracles and the rank
/// oracle.
std::vector<ClaimCheck> verify_claims(const GadgetInstance& instance, const OracleOptions& options = {});

/// Whether every rank band holds in every completion.
bool verify_bands(const GadgetInstance& instance, const OracleOptions& options = {});

}  // namespace rankrange
