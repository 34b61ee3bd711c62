#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rankrange/types.hpp"

namespace rankrange {

enum class RuleKind { positional, bucklin, copeland, maximin };

enum class Family { plurality, veto, approval, t_veto, borda, custom, reversed };

std::string to_string(RuleKind kind);
std::string to_string(Family family);

/// Per-m integer coefficient used by reversed rules.
using Coefficient = std::function<Score(int m)>;

/// A positional family (vector generator per m plus metadata) or one of the
/// non-positional rules.
class ScoringRule {
 public:
  static ScoringRule plurality();
  static ScoringRule veto();
  static ScoringRule approval(int t);
  static ScoringRule t_veto(int t);
  static ScoringRule borda();

  /// Explicit vectors keyed by m. Metadata is caller-declared.
  static ScoringRule custom(std::map<int, std::vector<Score>> vectors, bool strongly_pure = false,
                            bool polynomial_scores = false, std::optional<int> p_valued = std::nullopt);

  static ScoringRule bucklin();
  static ScoringRule copeland();
  static ScoringRule maximin();

  RuleKind kind() const { return kind_; }
  bool positional() const { return kind_ == RuleKind::positional; }
  Family family() const { return family_; }
  int t() const { return t_; }
  const std::map<int, std::vector<Score>>& custom_vectors() const { return custom_; }

  bool strongly_pure() const { return strongly_pure_; }
  bool polynomial_scores() const { return polynomial_scores_; }
  std::optional<int> p_valued() const { return p_valued_; }

  /// Bucklin ranks ascending; every other rule ranks descending.
  bool lower_is_better() const { return kind_ == RuleKind::bucklin; }

  /// s_m. Throws RuleDomainError for non-positional rules, FamilyError when
  /// the family has no valid vector for m (including a custom vector that is
  /// missing or not non-increasing with s(1) > s(m)), DegenerateRuleError when
  /// a reversed rule yields an invalid vector.
  VectorX<Score> vector(int m) const;

  /// s_m = (x, y, ..., y) with x > y.
  bool is_plurality_like(int m) const;
  /// s_m = (x, ..., x, y) with x > y.
  bool is_veto_like(int m) const;

  std::string name() const;

 private:
  friend ScoringRule reversed_rule(const ScoringRule&, Coefficient, Coefficient);

  RuleKind kind_ = RuleKind::positional;
  Family family_ = Family::plurality;
  int t_ = 0;
  std::map<int, std::vector<Score>> custom_;
  std::shared_ptr<const std::function<VectorX<Score>(int)>> generator_;
  bool strongly_pure_ = false;
  bool polynomial_scores_ = false;
  std::optional<int> p_valued_;
};

/// r^{a,b}(m, i) = a(m) - b(m) * r(m, m + 1 - i). Keeps the purity, score
/// growth and value-count metadata of `rule`.
ScoringRule reversed_rule(const ScoringRule& rule, Coefficient a, Coefficient b);

/// Validates a positional vector; throws FamilyError.
void check_score_vector(const VectorX<Score>& v, int m);

}  // namespace rankrange
