#include <doctest.h>

#include <vector>

#include "mdl/formula.hpp"
#include "mdl/kripke.hpp"
#include "mdl/random.hpp"
#include "mdl/teamsem.hpp"

using namespace mdl;

namespace {

using Set = std::vector<WorldId>;

// Direct reading of the team clauses over explicit world lists, without
// memoization or downward-closure shortcuts: all 3^|T| covers for the
// split and every T' of the whole structure for the diamond.
class Reference {
 public:
  explicit Reference(const KripkeStructure& w) : w_(w) {}

  bool eval(const Formula& f, const Set& t) const {
    switch (f.op()) {
      case Op::Top: return true;
      case Op::Bot: return t.empty();
      case Op::Prop:
        for (WorldId v : t)
          if (!w_.holds(v, f.name())) return false;
        return true;
      case Op::NegProp:
        for (WorldId v : t)
          if (w_.holds(v, f.name())) return false;
        return true;
      case Op::Dep:
        for (WorldId a : t)
          for (WorldId b : t) {
            bool agree = true;
            for (const auto& x : f.dep_args()) agree = agree && w_.holds(a, x) == w_.holds(b, x);
            if (agree && w_.holds(a, f.name()) != w_.holds(b, f.name())) return false;
          }
        return true;
      case Op::NegDep: return t.empty();
      case Op::And: return eval(f.lhs(), t) && eval(f.rhs(), t);
      case Op::Cor: return eval(f.lhs(), t) || eval(f.rhs(), t);
      case Op::Or: {
        std::size_t covers = 1;
        for (std::size_t i = 0; i < t.size(); ++i) covers *= 3;
        for (std::size_t c = 0; c < covers; ++c) {
          Set left, right;
          std::size_t code = c;
          for (WorldId v : t) {
            std::size_t side = code % 3;
            code /= 3;
            if (side != 1) left.push_back(v);
            if (side != 0) right.push_back(v);
          }
          if (eval(f.lhs(), left) && eval(f.rhs(), right)) return true;
        }
        return false;
      }
      case Op::Box: {
        Set image;
        for (WorldId v = 0; v < w_.world_count(); ++v)
          for (WorldId u : t)
            if (edge(u, v)) {
              image.push_back(v);
              break;
            }
        return eval(f.child(), image);
      }
      case Op::Diamond: {
        std::size_t n = w_.world_count();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          Set sub;
          for (WorldId v = 0; v < n; ++v)
            if (mask >> v & 1) sub.push_back(v);
          bool forth = true, back = true;
          for (WorldId u : t) {
            bool any = false;
            for (WorldId v : sub) any = any || edge(u, v);
            forth = forth && any;
          }
          for (WorldId v : sub) {
            bool any = false;
            for (WorldId u : t) any = any || edge(u, v);
            back = back && any;
          }
          if (forth && back && eval(f.child(), sub)) return true;
        }
        return false;
      }
    }
    return false;
  }

 private:
  bool edge(WorldId u, WorldId v) const {
    for (WorldId s : w_.successors(u))
      if (s == v) return true;
    return false;
  }

  const KripkeStructure& w_;
};

Set members(const Team& t) { return t.members(); }

Team team_of(const KripkeStructure& w, std::size_t mask) {
  Team t = w.empty_team();
  for (WorldId v = 0; v < w.world_count(); ++v)
    if (mask >> v & 1) t.insert(v);
  return t;
}

}  // namespace

TEST_SUITE("teamsem") {
  TEST_CASE("atoms and constants") {
    KripkeStructure w = parse_structure("world w1\nworld w2\nworld w3\nlabel w1 p q\nlabel w2 q\nlabel w3 p\n");
    CHECK(check(w, w.empty_team(), parse("bot")));
    CHECK_FALSE(check(w, parse_team(w, "w1"), parse("bot")));
    CHECK(check(w, parse_team(w, "w1,w2"), parse("dep(p;q)")));
    CHECK_FALSE(check(w, parse_team(w, "w1,w3"), parse("dep(p;q)")));
    CHECK(check(w, parse_team(w, "w1,w2"), parse("dep(;q)")));
    CHECK_FALSE(check(w, parse_team(w, "w2"), parse("~dep(p;q)")));
    CHECK(check(w, parse_team(w, "w1"), parse("p & ~r")));
  }

  TEST_CASE("modal clauses") {
    KripkeStructure lone = parse_structure("world w\n");
    CHECK(check(lone, lone.all_worlds(), parse("[]bot")));
    CHECK_FALSE(check(lone, lone.all_worlds(), parse("<>top")));

    KripkeStructure loop = parse_structure("world w\nedge w w\n");
    CHECK(check(loop, loop.all_worlds(), parse("<>top")));

    KripkeStructure w = parse_structure("world w\nlabel w p\n");
    CHECK(check(w, w.all_worlds(), parse("p & ~q")));
  }

  TEST_CASE("split and classical disjunction differ") {
    KripkeStructure w = parse_structure("world a\nworld b\nlabel a p\n");
    Team both = w.all_worlds();
    CHECK(check(w, both, parse("p | ~p")));
    CHECK_FALSE(check(w, both, parse("p || ~p")));
    CHECK_FALSE(check(w, both, parse("dep(;p)")));
  }

  TEST_CASE("singleton agreement with modal logic") {
    Rng rng(5);
    FormulaShape shape;
    shape.size = 10;
    shape.ops.erase(Operator::Dep);
    shape.ops.erase(Operator::Cor);
    for (int i = 0; i < 300; ++i) {
      KripkeStructure w = random_structure(rng, 1 + static_cast<int>(below(rng, 4)), {"p", "q"});
      Formula f = random_formula(rng, shape);
      for (WorldId v = 0; v < w.world_count(); ++v)
        CHECK(check(w, Team::singleton(w.world_count(), v), f) == check_ml(w, v, f));
    }
  }

  TEST_CASE("model checker agrees with the reference clauses") {
    Rng rng(17);
    FormulaShape shape;
    shape.size = 8;
    shape.max_dep_arity = 2;
    int compared = 0;
    for (int i = 0; i < 400; ++i) {
      KripkeStructure w = random_structure(rng, 1 + static_cast<int>(below(rng, 4)), {"p", "q"});
      Formula f = random_formula(rng, shape);
      Reference ref(w);
      for (std::size_t mask = 0; mask < (std::size_t{1} << w.world_count()); ++mask) {
        Team t = team_of(w, mask);
        INFO(render(f), " on ", write_structure(w), " team ", format_team(w, t));
        REQUIRE(check(w, t, f) == ref.eval(f, members(t)));
        ++compared;
      }
    }
    CHECK(compared > 1000);
  }

  TEST_CASE("downward closure and empty team") {
    Rng rng(23);
    FormulaShape shape;
    shape.size = 10;
    for (int i = 0; i < 300; ++i) {
      KripkeStructure w = random_structure(rng, 1 + static_cast<int>(below(rng, 4)), {"p", "q"});
      Formula f = random_formula(rng, shape);
      CHECK(check(w, w.empty_team(), f));
      std::size_t full = (std::size_t{1} << w.world_count()) - 1;
      for (std::size_t mask = 0; mask <= full; ++mask) {
        if (!check(w, team_of(w, mask), f)) continue;
        for (std::size_t sub = mask; sub; sub = (sub - 1) & mask)
          CHECK(check(w, team_of(w, sub), f));
      }
    }
  }
}
