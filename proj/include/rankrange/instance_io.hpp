#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankrange/gadgets.hpp"

namespace rankrange {

inline constexpr const char* kFormatVersion = "1";

struct QuerySpec {
  Cand candidate = 0;
  Extremum extremum = Extremum::min;
  Cmp cmp = Cmp::lt;
  int k = 1;

  friend bool operator==(const QuerySpec&, const QuerySpec&) = default;
};

/// Gadget metadata carried with an emitted instance. `source` is the graph or
/// exact-cover instance in its text form, or "core" for padding gadgets.
struct Provenance {
  std::string gadget;
  std::string source;
  int k = 0;
  std::vector<GadgetClaim> claims;
  std::vector<RankBand> bands;
  std::optional<CoreInstance> core;
  std::optional<bool> precondition;
};

struct InstanceDocument {
  std::string format_version = kFormatVersion;
  std::vector<std::string> labels;
  PartialProfile profile;
  LinearOrder tie;
  ScoringRule rule;
  std::optional<QuerySpec> query;
  std::optional<Provenance> provenance;

  /// Requires a query; throws ParseError otherwise.
  RankQuery rank_query() const;
};

/// Strict parse: unknown fields, duplicate labels, unresolved labels and bad
/// shapes throw ParseError naming the field; cyclic voters throw CycleError;
/// unknown rules throw UnknownRuleError.
InstanceDocument parse_instance(const std::string& text);
std::string serialize_instance(const InstanceDocument& doc);

nlohmann::json rule_to_json(const ScoringRule& rule, int m);
ScoringRule rule_from_json(const nlohmann::json& j);

/// "plurality", "veto", "borda", "approval:t", "t-veto:t", "bucklin",
/// "copeland", "maximin".
ScoringRule parse_rule_name(const std::string& text);

InstanceDocument to_document(const GadgetInstance& gadget);
/// Rebuilds the gadget view (claims, bands, source objects) of a document
/// that carries provenance.
GadgetInstance from_document(const InstanceDocument& doc);

nlohmann::json witness_to_json(const CompleteProfile& witness, const std::vector<std::string>& labels);

std::string to_string(Extremum e);
std::string to_string(Cmp c);

}  // namespace rankrange
