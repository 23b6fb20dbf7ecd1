#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdl/formula.hpp"

namespace mdl {

/// Complexity classes in the order used for aggregation. NP and coNP are
/// incomparable; every other pair is ordered by inclusion.
enum class Complexity { Trivial, P, NP, CoNP, Sigma2, Sigma3, PSpace, NExpTime };

std::string_view complexity_name(Complexity c);
/// Plain-ASCII spelling, e.g. "Sigma2p".
std::string_view complexity_ascii(Complexity c);
/// a is contained in b.
bool complexity_leq(Complexity a, Complexity b);
bool complexity_comparable(Complexity a, Complexity b);

enum class ResultKind { Completeness, UpperBound };
std::string_view result_kind_name(ResultKind k);

enum class Requirement { Required, Forbidden, DontCare };
enum class Regime { Unbounded, Bounded };
std::string_view regime_name(Regime r);

enum class EngineChoice {
  Pipeline,
  FastpathTrivial,
  FastpathNoConjunction,
  FastpathLiteralConjunction,
};
std::string_view engine_choice_name(EngineChoice e);

struct ClassificationRule {
  std::string id;
  /// Indexed by Operator.
  std::array<Requirement, kOperatorCount> pattern;
  Regime regime;
  Complexity complexity;
  ResultKind result_kind;
  std::string citation;

  bool matches(const OperatorSet& ops) const;
  /// "+", "-" and "*" per operator in column order.
  std::string pattern_string() const;
};

struct Classification {
  Complexity complexity;
  ResultKind result_kind;
  std::vector<ClassificationRule> matched_rules;
  EngineChoice recommended_engine;
  /// Set when the bounded table is applied outside the arity range it covers.
  bool caveat = false;
  std::string caveat_reason;
};

/// The full rule table of a regime, in table order.
const std::vector<ClassificationRule>& rules(Regime regime);

/// Engine suited to a fragment: fast paths where a polynomial procedure
/// exists, the complete pipeline otherwise.
EngineChoice recommend_engine(const OperatorSet& ops);

/// Matches sig against the unbounded table, or the bounded one when
/// arity_bound is given. The reported class is the least matched class.
Classification classify(const FragmentSignature& sig, std::optional<int> arity_bound = std::nullopt);

}  // namespace mdl
