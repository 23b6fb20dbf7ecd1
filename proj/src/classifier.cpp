#include "mdl/classifier.hpp"

#include <stdexcept>

namespace mdl {

std::string_view complexity_name(Complexity c) {
  switch (c) {
    case Complexity::Trivial: return "trivial";
    case Complexity::P: return "P";
    case Complexity::NP: return "NP";
    case Complexity::CoNP: return "coNP";
    case Complexity::Sigma2: return "Σ₂ᵖ";
    case Complexity::Sigma3: return "Σ₃ᵖ";
    case Complexity::PSpace: return "PSPACE";
    case Complexity::NExpTime: return "NEXPTIME";
  }
  return "?";
}

std::string_view complexity_ascii(Complexity c) {
  switch (c) {
    case Complexity::Sigma2: return "Sigma2p";
    case Complexity::Sigma3: return "Sigma3p";
    default: return complexity_name(c);
  }
}

bool complexity_leq(Complexity a, Complexity b) {
  if (a == b) return true;
  bool a_mid = a == Complexity::NP || a == Complexity::CoNP;
  bool b_mid = b == Complexity::NP || b == Complexity::CoNP;
  if (a_mid && b_mid) return false;
  return static_cast<int>(a) < static_cast<int>(b);
}

bool complexity_comparable(Complexity a, Complexity b) {
  return complexity_leq(a, b) || complexity_leq(b, a);
}

std::string_view result_kind_name(ResultKind k) {
  return k == ResultKind::Completeness ? "completeness" : "upper_bound";
}

std::string_view regime_name(Regime r) { return r == Regime::Unbounded ? "unbounded" : "bounded"; }

std::string_view engine_choice_name(EngineChoice e) {
  switch (e) {
    case EngineChoice::Pipeline: return "pipeline";
    case EngineChoice::FastpathTrivial: return "fastpath:trivial";
    case EngineChoice::FastpathNoConjunction: return "fastpath:no-conjunction";
    case EngineChoice::FastpathLiteralConjunction: return "fastpath:literal-conjunction";
  }
  return "?";
}

bool ClassificationRule::matches(const OperatorSet& ops) const {
  for (std::size_t i = 0; i < kOperatorCount; ++i) {
    bool present = ops.contains(kAllOperators[i]);
    if (pattern[i] == Requirement::Required && !present) return false;
    if (pattern[i] == Requirement::Forbidden && present) return false;
  }
  return true;
}

std::string ClassificationRule::pattern_string() const {
  std::string out;
  for (Requirement r : pattern)
    out += r == Requirement::Required ? '+' : r == Requirement::Forbidden ? '-' : '*';
  return out;
}

namespace {

// Columns: Box Diamond And Or NegAtom Top Bot Dep Cor.
ClassificationRule row(std::string id, std::string_view cols, Regime regime, Complexity c,
                       std::string citation) {
  if (cols.size() != kOperatorCount) throw std::logic_error("rule pattern width");
  ClassificationRule r;
  r.id = std::move(id);
  for (std::size_t i = 0; i < kOperatorCount; ++i)
    r.pattern[i] = cols[i] == '+' ? Requirement::Required
                   : cols[i] == '-' ? Requirement::Forbidden
                                    : Requirement::DontCare;
  r.regime = regime;
  r.complexity = c;
  r.result_kind = c == Complexity::P ? ResultKind::UpperBound : ResultKind::Completeness;
  r.citation = std::move(citation);
  return r;
}

// Rows shared by both regimes, from the two-modality poor-man's rows onward.
void append_common(std::vector<ClassificationRule>& out, const char* prefix, Regime g,
                   int first_number) {
  struct Spec {
    const char* cols;
    Complexity c;
    const char* citation;
  };
  static const Spec kCommon[] = {
      {"+++-+**-+", Complexity::Sigma2, "monotone-poor-mans-logic"},
      {"+++--*+*+", Complexity::Sigma2, "monotone-poor-mans-logic"},
      {"+++-+**--", Complexity::CoNP, "ladner77+donini92"},
      {"+++--*+*-", Complexity::CoNP, "simple-cases.c"},
      {"+-+++****", Complexity::NP, "one-modality.a"},
      {"-++++****", Complexity::NP, "one-modality.a"},
      {"+-+-+***+", Complexity::NP, "one-modality.a"},
      {"-++-+***+", Complexity::NP, "one-modality.a"},
      {"+-+-+***-", Complexity::P, "one-modality.b"},
      {"-++-+***-", Complexity::P, "one-modality.b"},
      {"+-+*-****", Complexity::P, "one-modality.c"},
      {"-++*-****", Complexity::P, "one-modality.c"},
      {"**-******", Complexity::P, "one-modality.d"},
      {"****-*-**", Complexity::Trivial, "simple-cases.d"},
      {"--+++****", Complexity::NP, "cook71"},
      {"--+*+***+", Complexity::NP, "cook71, cor-equals-or"},
      {"--*-****-", Complexity::P, "simple-cases.e"},
      {"--**-****", Complexity::P, "simple-cases.f"},
  };
  int n = first_number;
  for (const auto& s : kCommon) out.push_back(row(prefix + std::to_string(n++), s.cols, g, s.c, s.citation));
}

std::vector<ClassificationRule> build(Regime g) {
  std::vector<ClassificationRule> out;
  if (g == Regime::Unbounded) {
    out.push_back(row("U1", "+++*+**+*", g, Complexity::NExpTime, "poor-mans-dependence-logic"));
    out.push_back(row("U2", "+++++**-*", g, Complexity::PSpace, "simple-cases.a"));
    out.push_back(row("U3", "++++-*+**", g, Complexity::PSpace, "simple-cases.b"));
    append_common(out, "U", g, 4);
  } else {
    out.push_back(row("B1", "+++++****", g, Complexity::PSpace, "bounded-arity.a"));
    out.push_back(row("B2", "++++-*+**", g, Complexity::PSpace, "simple-cases.b"));
    out.push_back(row("B3", "+++-+**+*", g, Complexity::Sigma3, "bounded-arity.b"));
    append_common(out, "B", g, 4);
  }
  return out;
}

}  // namespace

const std::vector<ClassificationRule>& rules(Regime regime) {
  static const std::vector<ClassificationRule> unbounded = build(Regime::Unbounded);
  static const std::vector<ClassificationRule> bounded = build(Regime::Bounded);
  return regime == Regime::Unbounded ? unbounded : bounded;
}

EngineChoice recommend_engine(const OperatorSet& ops) {
  if (!ops.contains(Operator::NegAtom) && !ops.contains(Operator::Bot))
    return EngineChoice::FastpathTrivial;
  if (!ops.contains(Operator::And)) return EngineChoice::FastpathNoConjunction;
  if (!ops.contains(Operator::Box) && !ops.contains(Operator::Diamond) &&
      !ops.contains(Operator::Or) && !ops.contains(Operator::Cor))
    return EngineChoice::FastpathLiteralConjunction;
  return EngineChoice::Pipeline;
}

Classification classify(const FragmentSignature& sig, std::optional<int> arity_bound) {
  Regime regime = arity_bound ? Regime::Bounded : Regime::Unbounded;
  Classification out;
  for (const auto& r : rules(regime))
    if (r.matches(sig.present)) out.matched_rules.push_back(r);
  if (out.matched_rules.empty())
    throw std::logic_error("classify: no rule matches " + to_string(sig.present));

  const ClassificationRule* least = nullptr;
  for (const auto& candidate : out.matched_rules) {
    bool below_all = true;
    for (const auto& other : out.matched_rules)
      if (!complexity_leq(candidate.complexity, other.complexity)) below_all = false;
    if (below_all) {
      least = &candidate;
      break;
    }
  }
  if (!least)
    throw std::logic_error("classify: matched rules are not totally ordered for " +
                           to_string(sig.present));
  out.complexity = least->complexity;
  out.result_kind = least->result_kind;
  out.recommended_engine = recommend_engine(sig.present);

  if (arity_bound) {
    if (*arity_bound < 3) {
      out.caveat = true;
      out.caveat_reason = "bounded table is established for arity bounds of at least 3";
    }
    if (sig.max_dep_arity && *sig.max_dep_arity > *arity_bound) {
      out.caveat = true;
      if (!out.caveat_reason.empty()) out.caveat_reason += "; ";
      out.caveat_reason += "formula has a dependence atom of arity " +
                           std::to_string(*sig.max_dep_arity) + " above the bound " +
                           std::to_string(*arity_bound);
    }
  }
  return out;
}

}  // namespace mdl
