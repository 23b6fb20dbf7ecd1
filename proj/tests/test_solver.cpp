#include <doctest.h>

#include <set>

#include "mdl/formula.hpp"
#include "mdl/kripke.hpp"
#include "mdl/solver.hpp"
#include "mdl/teamsem.hpp"

using namespace mdl;

namespace {

std::set<std::string> cor_disjuncts(const std::string& text) {
  CorExpansion e(parse(text));
  std::set<std::string> out;
  for (BigInt i = 0; i < e.disjunct_count(); ++i) out.insert(render(e.disjunct(i)));
  return out;
}

SatResult run(const std::string& text, Engine engine = Engine::Pipeline, bool witness = true) {
  SatOptions o;
  o.engine = engine;
  o.want_witness = witness;
  return sat(parse(text), o);
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("classical disjunction expansion") {
    CHECK(cor_disjuncts("<>p & q") == std::set<std::string>{"<>p & q"});
    CHECK(cor_disjuncts("p || q") == std::set<std::string>{"p", "q"});
    std::set<std::string> d = cor_disjuncts("<>(p || q)");
    CHECK(d.count("<>p") == 1);
    CHECK(d.count("<>q") == 1);
    CHECK(CorExpansion(parse("(a || b) & (c || d)")).disjunct_count() == 4);
    CHECK(render(CorExpansion(parse("(a || b) & (c || d)")).disjunct(BigInt(2))) == "a & d");
  }

  TEST_CASE("alpha_encoding") {
    CHECK(alpha_encoding({true}, {}) == Formula::top());
    CHECK(render(alpha_encoding({false, true}, {"p"})) == "p");
    CHECK(render(alpha_encoding({true, true}, {"p"})) == "p | ~p");
  }

  TEST_CASE("biconditional elimination") {
    CHECK(render(to_nnf_ml(Formula::top(), "p")) == "p");
    CHECK(render(to_nnf_ml(Formula::bot(), "p")) == "~p");
    CHECK(render(to_nnf_ml(Formula::prop("p"), "q")) == "(p & q) | (~p & ~q)");
  }

  TEST_CASE("singleton translation") {
    Formula plain = parse("<>p & []q");
    SingletonTranslation none(plain);
    CHECK(none.disjunct_count() == 1);
    CHECK(none.disjunct(BigInt(0)) == plain);

    SingletonTranslation zero(parse("dep(;p)"));
    CHECK(zero.disjunct_count() == 2);
    CHECK(render(zero.disjunct(BigInt(0))) == "~p");
    CHECK(render(zero.disjunct(BigInt(1))) == "p");

    SingletonTranslation one(parse("dep(p;q)"));
    REQUIRE(one.disjunct_count() == 4);
    // Every disjunct agrees with the dependence atom on singletons; one
    // world suffices since dep is flat there.
    for (int labels = 0; labels < 4; ++labels) {
      KripkeStructure w = parse_structure(std::string("world w\n") +
                                          (labels & 1 ? "label w p\n" : "") +
                                          (labels & 2 ? "label w q\n" : ""));
      Team t = w.all_worlds();
      int satisfied = 0;
      for (int i = 0; i < 4; ++i) satisfied += check_ml(w, 0, one.disjunct(BigInt(i)));
      CHECK(check(w, t, parse("dep(p;q)")));
      CHECK(satisfied >= 1);
    }
    CHECK_THROWS_AS(SingletonTranslation(parse("p || q")), PreconditionError);
    CHECK_THROWS_AS(SingletonTranslation(parse("~dep(p;q)")), PreconditionError);
  }

  TEST_CASE("ladner") {
    CHECK_FALSE(ladner_sat(parse("p & ~p")));
    CHECK(ladner_sat(parse("[]bot")));
    CHECK(ladner_sat(parse("<>p & <>~p & []q")));
    CHECK_FALSE(ladner_sat(parse("<>p & []~p")));
    CHECK(ladner_sat(parse("<>(p | q) & [](~p)")));
  }

  TEST_CASE("pipeline verdicts and witnesses") {
    SatResult a = run("<>top");
    CHECK(a.verdict == Verdict::Sat);
    REQUIRE(a.witness);
    CHECK(check(a.witness->structure, a.witness->team, parse("<>top")));

    CHECK(run("p & ~p").verdict == Verdict::Unsat);
    CHECK(run("~dep(p;q)").verdict == Verdict::Unsat);

    const std::string hard = "dep(p;q) & <>p & <>~p & [](p || ~q)";
    SatResult h = run(hard);
    CHECK(h.verdict == Verdict::Sat);
    REQUIRE(h.witness);
    CHECK(h.witness->team.size() == 1);
    CHECK(check(h.witness->structure, h.witness->team, parse(hard)));
    SatOptions bf;
    bf.engine = Engine::Bruteforce;
    bf.bf_branching = 4;
    CHECK(sat(parse(hard), bf).verdict == Verdict::Sat);

    CHECK(run("<>dep(;p) & [](p || ~p) & <>p & <>~p").verdict == Verdict::Unsat);
    CHECK(run("<>dep(;p) & [](p | ~p) & <>p & <>~p").verdict == Verdict::Sat);
    CHECK(run("<>(p & ~p) || <>q").verdict == Verdict::Sat);
    CHECK(run("[]p & <>~p").verdict == Verdict::Unsat);
  }

  TEST_CASE("exhaustive and skipping table search agree") {
    for (const char* text : {"dep(p;q) & <>p & <>~p & [](p || ~q)", "[]dep(p;q) & <>(p & q) & <>(p & ~q)",
                             "<>(dep(;p) & <>p & <>~p)", "dep(p,q;r) & <>r"}) {
      SatOptions o;
      o.engine = Engine::Pipeline;
      SatResult skip = sat(parse(text), o);
      o.table_search = TableSearch::Exhaustive;
      SatResult full = sat(parse(text), o);
      INFO(text);
      CHECK(skip.verdict == full.verdict);
      CHECK(skip.disjunct_index == full.disjunct_index);
    }
  }

  TEST_CASE("budget overrun is a separate verdict") {
    SatOptions o;
    o.engine = Engine::Pipeline;
    o.budget = 3;
    CHECK(sat(parse("<>p & <>~p & [](q | r) & <><>s"), o).verdict == Verdict::BudgetExceeded);
  }

  TEST_CASE("bounded search") {
    SatResult t = sat_bruteforce(parse("top"), 0, 1, 1000, true);
    CHECK(t.verdict == Verdict::Sat);
    REQUIRE(t.witness);
    CHECK(t.witness->team.size() == 1);
    CHECK(sat_bruteforce(parse("bot"), 2, 2).verdict == Verdict::BoundedUnsat);
    CHECK(sat_bruteforce(parse("[]bot & <>top"), 1, 1).verdict == Verdict::BoundedUnsat);
    CHECK(sat_bruteforce(parse("<>p & <>~p"), 1, 1).verdict == Verdict::BoundedUnsat);
    CHECK(sat_bruteforce(parse("<>p & <>~p"), 1, 2).verdict == Verdict::Sat);
    CHECK(sat_bruteforce(parse("<><><>p"), 3, 3, 1).verdict == Verdict::BudgetExceeded);
  }

  TEST_CASE("fast paths") {
    CHECK(sat_no_conjunction(parse("[]p | q")));
    CHECK_FALSE(sat_no_conjunction(parse("bot")));
    CHECK_FALSE(sat_no_conjunction(parse("<>(<>bot)")));
    CHECK(sat_no_conjunction(parse("<>(<>bot) | ~dep(p;q) | <>~p")));
    CHECK_THROWS_AS(sat_no_conjunction(parse("p & q")), PreconditionError);

    CHECK_FALSE(sat_conjunction_of_literals(parse("p & ~p")));
    CHECK(sat_conjunction_of_literals(parse("p & dep(q;r)")));
    CHECK_FALSE(sat_conjunction_of_literals(parse("~dep(p;q)")));
    CHECK_THROWS_AS(sat_conjunction_of_literals(parse("<>p")), PreconditionError);

    for (const char* text : {"[]p | q", "<>(<>bot)", "p & ~q & top", "p & ~p", "<>dep(p;q) | [][]top"}) {
      SatResult fast = run(text, Engine::Auto);
      SatResult full = run(text, Engine::Pipeline);
      INFO(text);
      CHECK(fast.verdict == full.verdict);
      if (fast.witness) CHECK(check(fast.witness->structure, fast.witness->team, parse(text)));
    }
    CHECK_THROWS_AS(run("<>p & <>~p", Engine::Fastpath), PreconditionError);
  }
}
