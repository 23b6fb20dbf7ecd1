#include <doctest.h>

#include "mdl/classifier.hpp"
#include "mdl/formula.hpp"
#include "mdl/random.hpp"
#include "mdl/solver.hpp"

using namespace mdl;

namespace {

FragmentSignature sig(std::initializer_list<Operator> list, std::optional<int> arity = std::nullopt) {
  FragmentSignature s;
  for (Operator op : list) s.present.insert(op);
  if (s.present.contains(Operator::Dep)) s.max_dep_arity = arity.value_or(1);
  return s;
}

}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("table rows") {
    CHECK(rules(Regime::Unbounded).size() == 21);
    CHECK(rules(Regime::Bounded).size() == 21);
    for (Regime r : {Regime::Unbounded, Regime::Bounded})
      for (const auto& rule : rules(r)) CHECK_FALSE(rule.citation.empty());
  }

  TEST_CASE("known fragments") {
    using O = Operator;
    auto full = sig({O::Box, O::Diamond, O::And, O::NegAtom, O::Dep}, 3);

    Classification a = classify(full);
    CHECK(a.complexity == Complexity::NExpTime);
    CHECK(a.result_kind == ResultKind::Completeness);

    Classification b = classify(full, 3);
    CHECK(b.complexity == Complexity::Sigma3);
    CHECK(b.result_kind == ResultKind::Completeness);
    CHECK_FALSE(b.caveat);

    CHECK(classify(sig({O::Box, O::Diamond, O::Or, O::Top, O::Dep})).complexity == Complexity::Trivial);
    CHECK(classify(sig({O::And, O::Or, O::NegAtom})).complexity == Complexity::NP);
  }

  TEST_CASE("small arity bounds set the caveat") {
    using O = Operator;
    Classification c = classify(sig({O::Box, O::Diamond, O::And, O::NegAtom, O::Dep}), 2);
    CHECK(c.caveat);
    CHECK_FALSE(c.caveat_reason.empty());
  }

  TEST_CASE("every signature is classified and matches form a chain") {
    for (unsigned mask = 0; mask < (1u << kOperatorCount); ++mask) {
      FragmentSignature s;
      s.present = OperatorSet::from_mask(mask);
      if (s.present.contains(Operator::Dep)) s.max_dep_arity = 1;
      for (std::optional<int> bound : {std::optional<int>{}, std::optional<int>{3}}) {
        Classification c = classify(s, bound);
        REQUIRE_FALSE(c.matched_rules.empty());
        for (const auto& x : c.matched_rules) {
          CHECK(complexity_leq(c.complexity, x.complexity));
          for (const auto& y : c.matched_rules) CHECK(complexity_comparable(x.complexity, y.complexity));
        }
      }
    }
  }

  TEST_CASE("fragments without negation and bot are trivial") {
    for (unsigned mask = 0; mask < (1u << kOperatorCount); ++mask) {
      FragmentSignature s;
      s.present = OperatorSet::from_mask(mask);
      if (s.present.contains(Operator::NegAtom) || s.present.contains(Operator::Bot)) continue;
      if (s.present.contains(Operator::Dep)) s.max_dep_arity = 1;
      CHECK(classify(s).complexity == Complexity::Trivial);
    }
  }

  TEST_CASE("recommended engines agree with the pipeline") {
    Rng rng(3);
    FormulaShape shape;
    shape.size = 9;
    int routed = 0;
    for (int i = 0; i < 3000 && routed < 300; ++i) {
      Formula f = random_formula(rng, shape);
      if (recommend_engine(signature(f).present) == EngineChoice::Pipeline) continue;
      ++routed;
      SatOptions fast;
      SatOptions full;
      full.engine = Engine::Pipeline;
      INFO(render(f));
      CHECK(sat(f, fast).verdict == sat(f, full).verdict);
    }
    CHECK(routed > 50);
  }
}
