#include "rankrange/instance_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace rankrange {

using nlohmann::json;

std::string to_string(Extremum e) { return e == Extremum::min ? "min" : "max"; }
std::string to_string(Cmp c) { return c == Cmp::lt ? "lt" : "gt"; }

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& item : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; }))
      fail(path, "unknown field \"" + item.key() + "\"");
  }
}

const json& need(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) fail(path, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

long long as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

int as_int(const json& j, const std::string& path) {
  const long long v = as_integer(j, path);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(path, "integer out of range");
  return static_cast<int>(v);
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

class LabelIndex {
 public:
  LabelIndex(const json& j, const std::string& path) {
    as_array(j, path);
    if (j.empty()) fail(path, "needs at least one candidate");
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string label = as_string(j[i], at(path, i));
      if (!index_.emplace(label, static_cast<Cand>(i)).second) fail(at(path, i), "duplicate label \"" + label + "\"");
      labels_.push_back(std::move(label));
    }
  }
  Cand operator()(const json& j, const std::string& path) const {
    const std::string label = as_string(j, path);
    const auto it = index_.find(label);
    if (it == index_.end()) fail(path, "unknown label \"" + label + "\"");
    return it->second;
  }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Cand> index_;
};

PartialProfile voters_from_json(const json& j, const std::string& path, const LabelIndex& labels) {
  as_array(j, path);
  if (j.empty()) fail(path, "needs at least one voter");
  std::vector<PartialOrder> voters;
  for (std::size_t v = 0; v < j.size(); ++v) {
    const std::string vp = at(path, v);
    as_array(j[v], vp);
    std::vector<std::pair<Cand, Cand>> pairs;
    for (std::size_t p = 0; p < j[v].size(); ++p) {
      const std::string pp = at(vp, p);
      const json& pair = as_array(j[v][p], pp);
      if (pair.size() != 2) fail(pp, "expected [earlier, later]");
      const Cand a = labels(pair[0], at(pp, 0)), b = labels(pair[1], at(pp, 1));
      if (a == b) throw CycleError(pp + ": a candidate cannot precede itself");
      pairs.emplace_back(a, b);
    }
    try {
      voters.push_back(PartialOrder::from_pairs(labels.size(), pairs));
    } catch (const CycleError&) {
      throw CycleError(vp + ": voter preferences contain a cycle");
    }
  }
  return PartialProfile(labels.size(), std::move(voters));
}

json voters_to_json(const PartialProfile& profile, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& v : profile.orders()) {
    json pairs = json::array();
    for (auto [a, b] : v.cover_pairs())
      pairs.push_back({labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]});
    out.push_back(std::move(pairs));
  }
  return out;
}

LinearOrder tie_from_json(const json& j, const std::string& path, const LabelIndex& labels) {
  as_array(j, path);
  if (static_cast<int>(j.size()) != labels.size()) fail(path, "must list every candidate once");
  std::vector<Cand> seq;
  std::set<Cand> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Cand c = labels(j[i], at(path, i));
    if (!seen.insert(c).second) fail(at(path, i), "candidate listed twice");
    seq.push_back(c);
  }
  return LinearOrder(std::move(seq));
}

json tie_to_json(const LinearOrder& tie, const std::vector<std::string>& labels) {
  json out = json::array();
  for (Cand c : tie.sequence()) out.push_back(labels[static_cast<std::size_t>(c)]);
  return out;
}

template <typename Enum>
Enum enum_from(const json& j, const std::string& path, std::initializer_list<std::pair<const char*, Enum>> names) {
  const std::string s = as_string(j, path);
  for (const auto& [name, value] : names)
    if (s == name) return value;
  fail(path, "unexpected value \"" + s + "\"");
}

Extremum extremum_from(const json& j, const std::string& path) {
  return enum_from<Extremum>(j, path, {{"min", Extremum::min}, {"max", Extremum::max}});
}

Cmp cmp_from(const json& j, const std::string& path) { return enum_from<Cmp>(j, path, {{"lt", Cmp::lt}, {"gt", Cmp::gt}}); }

Property property_from(const json& j, const std::string& path) {
  return enum_from<Property>(j, path,
                             {{"vertex_cover_at_most", Property::vertex_cover_at_most},
                              {"independent_set_at_least", Property::independent_set_at_least},
                              {"dominating_set_at_most", Property::dominating_set_at_most},
                              {"possible_winner", Property::possible_winner},
                              {"necessary_winner", Property::necessary_winner},
                              {"exact_cover", Property::exact_cover}});
}

json core_to_json(const CoreInstance& core) {
  std::vector<std::string> labels = core.labels;
  for (int i = static_cast<int>(labels.size()); i < core.profile.candidates(); ++i)
    labels.push_back("c" + std::to_string(i + 1));
  return json{{"candidates", labels},
              {"voters", voters_to_json(core.profile, labels)},
              {"rule", rule_to_json(core.rule, core.profile.candidates())},
              {"focus", labels[static_cast<std::size_t>(core.focus)]}};
}

CoreInstance core_from_json(const json& j, const std::string& path) {
  only_keys(j, path, {"candidates", "voters", "rule", "focus"});
  const LabelIndex labels(need(j, path, "candidates"), path + ".candidates");
  CoreInstance core;
  core.labels = labels.labels();
  core.profile = voters_from_json(need(j, path, "voters"), path + ".voters", labels);
  core.rule = rule_from_json(need(j, path, "rule"));
  core.focus = labels(need(j, path, "focus"), path + ".focus");
  return core;
}

json provenance_to_json(const Provenance& p, const std::vector<std::string>& labels) {
  json claims = json::array();
  for (const auto& c : p.claims)
    claims.push_back({{"property", to_string(c.property)},
                      {"extremum", to_string(c.extremum)},
                      {"cmp", to_string(c.cmp)},
                      {"bound", c.bound}});
  json bands = json::array();
  for (const auto& b : p.bands)
    bands.push_back({{"candidate", labels[static_cast<std::size_t>(b.candidate)]}, {"low", b.low}, {"high", b.high}});
  json out{{"gadget", p.gadget}, {"source", p.source}, {"k", p.k}, {"claims", claims}, {"bands", bands}};
  if (p.core) out["core"] = core_to_json(*p.core);
  if (p.precondition) out["precondition"] = *p.precondition;
  return out;
}

Provenance provenance_from_json(const json& j, const std::string& path, const LabelIndex& labels) {
  only_keys(j, path, {"gadget", "source", "k", "claims", "bands", "core", "precondition"});
  Provenance p;
  p.gadget = as_string(need(j, path, "gadget"), path + ".gadget");
  p.source = as_string(need(j, path, "source"), path + ".source");
  p.k = as_int(need(j, path, "k"), path + ".k");
  const std::string cp = path + ".claims";
  const json& claims = as_array(need(j, path, "claims"), cp);
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const std::string ip = at(cp, i);
    only_keys(claims[i], ip, {"property", "extremum", "cmp", "bound"});
    p.claims.push_back({property_from(need(claims[i], ip, "property"), ip + ".property"),
                        extremum_from(need(claims[i], ip, "extremum"), ip + ".extremum"),
                        cmp_from(need(claims[i], ip, "cmp"), ip + ".cmp"),
                        as_int(need(claims[i], ip, "bound"), ip + ".bound")});
  }
  if (j.contains("bands")) {
    const std::string bp = path + ".bands";
    const json& bands = as_array(j.at("bands"), bp);
    for (std::size_t i = 0; i < bands.size(); ++i) {
      const std::string ip = at(bp, i);
      only_keys(bands[i], ip, {"candidate", "low", "high"});
      p.bands.push_back({labels(need(bands[i], ip, "candidate"), ip + ".candidate"),
                         as_int(need(bands[i], ip, "low"), ip + ".low"), as_int(need(bands[i], ip, "high"), ip + ".high")});
    }
  }
  if (j.contains("core")) p.core = core_from_json(j.at("core"), path + ".core");
  if (j.contains("precondition")) p.precondition = as_bool(j.at("precondition"), path + ".precondition");
  return p;
}

}  // namespace

json rule_to_json(const ScoringRule& rule, int m) {
  if (!rule.positional()) return json{{"type", to_string(rule.kind())}};
  json out{{"type", "positional"}};
  switch (rule.family()) {
    case Family::approval:
    case Family::t_veto:
      out["family"] = to_string(rule.family());
      out["t"] = rule.t();
      return out;
    case Family::custom:
    case Family::reversed: {
      // Reversed rules have no closed form in the document; their vector for
      // m is written out as a custom rule.
      json vectors = json::object();
      if (rule.family() == Family::custom) {
        for (const auto& [size, v] : rule.custom_vectors()) vectors[std::to_string(size)] = v;
      } else {
        const VectorX<Score> v = rule.vector(m);
        vectors[std::to_string(m)] = std::vector<Score>(v.data(), v.data() + v.size());
      }
      out["family"] = "custom";
      out["vectors"] = std::move(vectors);
      out["strongly_pure"] = rule.strongly_pure();
      out["polynomial_scores"] = rule.polynomial_scores();
      if (rule.p_valued()) out["p_valued"] = *rule.p_valued();
      return out;
    }
    default:
      out["family"] = to_string(rule.family());
      return out;
  }
}

ScoringRule rule_from_json(const json& j) {
  const std::string path = "rule";
  only_keys(j, path, {"type", "family", "t", "vectors", "strongly_pure", "polynomial_scores", "p_valued"});
  const std::string type = as_string(need(j, path, "type"), path + ".type");
  auto no_extra = [&](std::initializer_list<const char*> keys) {
    for (const char* key : keys)
      if (j.contains(key)) fail(path, std::string("field \"") + key + "\" does not apply to " + type);
  };
  if (type == "bucklin" || type == "copeland" || type == "maximin") {
    no_extra({"family", "t", "vectors", "strongly_pure", "polynomial_scores", "p_valued"});
    return type == "bucklin" ? ScoringRule::bucklin() : type == "copeland" ? ScoringRule::copeland() : ScoringRule::maximin();
  }
  if (type != "positional") throw UnknownRuleError("unknown rule type \"" + type + "\"");
  const std::string family = as_string(need(j, path, "family"), path + ".family");
  if (family == "custom") {
    no_extra({"t"});
    const json& vectors = need(j, path, "vectors");
    if (!vectors.is_object()) fail(path + ".vectors", "expected an object keyed by candidate count");
    std::map<int, std::vector<Score>> table;
    for (const auto& item : vectors.items()) {
      const std::string vp = path + ".vectors." + item.key();
      int size = 0;
      try {
        std::size_t used = 0;
        size = std::stoi(item.key(), &used);
        if (used != item.key().size()) throw std::invalid_argument("trailing");
      } catch (const std::logic_error&) {
        fail(vp, "keys must be candidate counts");
      }
      std::vector<Score> v;
      for (std::size_t i = 0; i < as_array(item.value(), vp).size(); ++i) v.push_back(as_integer(item.value()[i], at(vp, i)));
      if (static_cast<int>(v.size()) != size) fail(vp, "vector length differs from its key");
      VectorX<Score> check(size);
      for (int i = 0; i < size; ++i) check(i) = v[static_cast<std::size_t>(i)];
      try {
        check_score_vector(check, size);
      } catch (const FamilyError& e) {
        fail(vp, e.what());
      }
      table[size] = std::move(v);
    }
    const bool pure = j.contains("strongly_pure") && as_bool(j.at("strongly_pure"), path + ".strongly_pure");
    const bool poly = j.contains("polynomial_scores") && as_bool(j.at("polynomial_scores"), path + ".polynomial_scores");
    std::optional<int> p;
    if (j.contains("p_valued")) p = as_int(j.at("p_valued"), path + ".p_valued");
    return ScoringRule::custom(std::move(table), pure, poly, p);
  }
  no_extra({"vectors", "strongly_pure", "polynomial_scores", "p_valued"});
  if (family == "t-approval" || family == "t-veto") {
    const int t = as_int(need(j, path, "t"), path + ".t");
    if (t < 1) fail(path + ".t", "must be at least 1");
    return family == "t-approval" ? ScoringRule::approval(t) : ScoringRule::t_veto(t);
  }
  no_extra({"t"});
  if (family == "plurality") return ScoringRule::plurality();
  if (family == "veto") return ScoringRule::veto();
  if (family == "borda") return ScoringRule::borda();
  throw UnknownRuleError("unknown positional family \"" + family + "\"");
}

ScoringRule parse_rule_name(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (colon != std::string::npos) {
    int t = 0;
    try {
      t = std::stoi(text.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw UnknownRuleError("bad rule parameter in \"" + text + "\"");
    }
    if (t < 1) throw UnknownRuleError("rule parameter must be positive in \"" + text + "\"");
    if (head == "approval" || head == "t-approval") return ScoringRule::approval(t);
    if (head == "t-veto") return ScoringRule::t_veto(t);
    throw UnknownRuleError("unknown rule \"" + text + "\"");
  }
  if (head == "plurality") return ScoringRule::plurality();
  if (head == "veto") return ScoringRule::veto();
  if (head == "borda") return ScoringRule::borda();
  if (head == "bucklin") return ScoringRule::bucklin();
  if (head == "copeland") return ScoringRule::copeland();
  if (head == "maximin") return ScoringRule::maximin();
  throw UnknownRuleError("unknown rule \"" + text + "\"");
}

RankQuery InstanceDocument::rank_query() const {
  if (!query) throw ParseError("query: the document has no query");
  return RankQuery{profile, query->candidate, tie, rule, query->extremum, query->cmp, query->k};
}

InstanceDocument parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t end = std::min(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n');
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
  const std::string root = "document";
  only_keys(j, root, {"format_version", "candidates", "voters", "tiebreaker", "rule", "query", "provenance"});
  InstanceDocument doc;
  doc.format_version = as_string(need(j, root, "format_version"), "format_version");
  if (doc.format_version != kFormatVersion) fail("format_version", "unsupported version \"" + doc.format_version + "\"");
  const LabelIndex labels(need(j, root, "candidates"), "candidates");
  doc.labels = labels.labels();
  doc.profile = voters_from_json(need(j, root, "voters"), "voters", labels);
  doc.tie = tie_from_json(need(j, root, "tiebreaker"), "tiebreaker", labels);
  doc.rule = rule_from_json(need(j, root, "rule"));
  if (j.contains("query")) {
    const json& q = j.at("query");
    only_keys(q, "query", {"candidate", "extremum", "cmp", "k"});
    doc.query = QuerySpec{labels(need(q, "query", "candidate"), "query.candidate"),
                          extremum_from(need(q, "query", "extremum"), "query.extremum"),
                          cmp_from(need(q, "query", "cmp"), "query.cmp"), as_int(need(q, "query", "k"), "query.k")};
  }
  if (j.contains("provenance")) doc.provenance = provenance_from_json(j.at("provenance"), "provenance", labels);
  return doc;
}

std::string serialize_instance(const InstanceDocument& doc) {
  json out{{"format_version", doc.format_version},
           {"candidates", doc.labels},
           {"voters", voters_to_json(doc.profile, doc.labels)},
           {"tiebreaker", tie_to_json(doc.tie, doc.labels)},
           {"rule", rule_to_json(doc.rule, doc.profile.candidates())}};
  if (doc.query)
    out["query"] = {{"candidate", doc.labels[static_cast<std::size_t>(doc.query->candidate)]},
                    {"extremum", to_string(doc.query->extremum)},
                    {"cmp", to_string(doc.query->cmp)},
                    {"k", doc.query->k}};
  if (doc.provenance) out["provenance"] = provenance_to_json(*doc.provenance, doc.labels);
  return out.dump(2) + "\n";
}

InstanceDocument to_document(const GadgetInstance& g) {
  InstanceDocument doc;
  doc.labels = g.labels;
  doc.profile = g.profile;
  doc.tie = g.tie;
  doc.rule = g.rule;
  if (!g.claims.empty()) {
    const GadgetClaim& c = g.claims.front();
    doc.query = QuerySpec{g.focus, c.extremum, c.cmp, c.bound};
  }
  Provenance p;
  p.gadget = g.gadget;
  p.source = g.graph ? g.graph->to_string() : g.x3c ? g.x3c->to_string() : "core";
  p.k = g.k;
  p.claims = g.claims;
  p.bands = g.bands;
  p.core = g.core;
  p.precondition = g.precondition;
  doc.provenance = std::move(p);
  return doc;
}

GadgetInstance from_document(const InstanceDocument& doc) {
  if (!doc.provenance) throw ParseError("provenance: the document carries no gadget metadata");
  if (!doc.query) throw ParseError("query: a gadget document needs a query naming its focus");
  const Provenance& p = doc.provenance.value();
  GadgetInstance g;
  g.gadget = p.gadget;
  g.k = p.k;
  g.labels = doc.labels;
  g.profile = doc.profile;
  g.tie = doc.tie;
  g.rule = doc.rule;
  g.focus = doc.query->candidate;
  g.claims = p.claims;
  g.bands = p.bands;
  g.core = p.core;
  g.precondition = p.precondition;
  for (const auto& c : p.claims) {
    switch (c.property) {
      case Property::vertex_cover_at_most:
      case Property::independent_set_at_least:
      case Property::dominating_set_at_most:
        if (!g.graph) g.graph = Graph::parse(p.source);
        break;
      case Property::exact_cover:
        if (!g.x3c) g.x3c = X3CInstance::parse(p.source);
        break;
      case Property::possible_winner:
      case Property::necessary_winner:
        if (!g.core) throw ParseError("provenance.core: winner claims need the core instance");
        break;
    }
  }
  return g;
}

json witness_to_json(const CompleteProfile& witness, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& vote : witness.votes()) out.push_back(tie_to_json(vote, labels));
  return out;
}

}  // namespace rankrange
