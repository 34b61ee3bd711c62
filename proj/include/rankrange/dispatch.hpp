#pragma once

#include <optional>
#include <string>

#include "rankrange/oracle.hpp"

namespace rankrange {

enum class EnginePreference { automatic, oracle, solver };

struct DecideOptions {
  EnginePreference engine = EnginePreference::automatic;
  OracleOptions oracle;
  /// Largest fixed parameter (k or m-k+1) routed to an O(m^k) solver
  /// automatically.
  int max_fixed_k = 3;
};

struct Outcome {
  bool answer = false;
  /// "trivial", "oracle" or the solver's name.
  std::string engine;
  std::optional<CompleteProfile> witness;
};

/// The solver that covers the query, if any. With `any_parameter` the fixed
/// parameter limit is ignored.
std::optional<std::string> solver_for(const RankQuery& query, bool any_parameter, int max_fixed_k = 3);

/// Answers the query with the preferred engine. A solver request outside every
/// solver's domain throws IntractableWithoutOracleError.
Outcome evaluate(const RankQuery& query, const DecideOptions& options = {});

}  // namespace rankrange
