#include <doctest.h>

#include "mdl/formula.hpp"
#include "mdl/random.hpp"

using namespace mdl;

namespace {

OperatorSet ops(std::initializer_list<Operator> list) {
  OperatorSet s;
  for (Operator op : list) s.insert(op);
  return s;
}

}  // namespace

TEST_SUITE("formula") {
  TEST_CASE("parse builds the expected trees") {
    CHECK(parse("top") == Formula::top());
    CHECK(parse("dep(p1,p2;p3) & <>q") ==
          Formula::conj(Formula::dep({"p1", "p2"}, "p3"), Formula::diamond(Formula::prop("q"))));
    CHECK(parse("p | q || r & s") ==
          Formula::cor(Formula::split(Formula::prop("p"), Formula::prop("q")),
                       Formula::conj(Formula::prop("r"), Formula::prop("s"))));
    CHECK(parse("a & b & c") ==
          Formula::conj(Formula::conj(Formula::prop("a"), Formula::prop("b")), Formula::prop("c")));
    CHECK(parse("~dep(p;q)") == Formula::neg_dep({"p"}, "q"));
    CHECK(parse("[]<>~p") == Formula::box(Formula::diamond(Formula::neg_prop("p"))));
  }

  TEST_CASE("negation applies only to atoms") {
    try {
      parse("~(p & q)");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseError::Kind::Negation);
      CHECK(e.line() == 1);
      CHECK(e.column() == 2);
    }
  }

  TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse("p &"), ParseError);
    CHECK_THROWS_AS(parse("dep(p q)"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    try {
      parse("p &\n  & q");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
  }

  TEST_CASE("render") {
    CHECK(render(Formula::top()) == "top");
    CHECK(render(Formula::dep({}, "p")) == "dep(;p)");
    CHECK(render(Formula::cor(Formula::prop("p"),
                              Formula::split(Formula::prop("q"), Formula::prop("r")))) ==
          "p || (q | r)");
  }

  TEST_CASE("render round-trips random formulas") {
    Rng rng(7);
    FormulaShape shape;
    shape.size = 14;
    shape.props = {"p", "q", "r"};
    shape.max_dep_arity = 2;
    for (int i = 0; i < 2000; ++i) {
      Formula f = random_formula(rng, shape);
      INFO(render(f));
      REQUIRE(parse(render(f)) == f);
    }
  }

  TEST_CASE("signature") {
    FragmentSignature a = signature(parse("p & ~q"));
    CHECK(a.present == ops({Operator::And, Operator::NegAtom}));
    CHECK_FALSE(a.max_dep_arity.has_value());

    FragmentSignature b = signature(parse("[]dep(p;q) | <>bot"));
    CHECK(b.present ==
          ops({Operator::Box, Operator::Diamond, Operator::Or, Operator::Dep, Operator::Bot}));
    CHECK(b.max_dep_arity == 1);

    FragmentSignature c = signature(parse("~dep(p,q;r)"));
    CHECK(c.present == ops({Operator::NegAtom, Operator::Dep}));
    CHECK(c.max_dep_arity == 2);
  }

  TEST_CASE("normalize_neg_dep") {
    CHECK(normalize_neg_dep(parse("~dep(p;q)")) == Formula::bot());
    Formula plain = parse("<>(p | dep(q;r)) & ~s");
    CHECK(normalize_neg_dep(plain) == plain);
    CHECK(normalize_neg_dep(parse("~dep(;p) & top")) == parse("bot & top"));
  }

  TEST_CASE("monotone_collapse") {
    CHECK(render(monotone_collapse(parse("dep(p;q) & r"))) == "t & t");
    CHECK(render(monotone_collapse(parse("top"))) == "top");
    CHECK(render(monotone_collapse(parse("<>(p | dep(q;r))"))) == "<>(t | t)");
    CHECK_THROWS_AS(monotone_collapse(parse("~p")), PreconditionError);
  }

  TEST_CASE("single_modality_collapse") {
    CHECK(render(single_modality_collapse(parse("[](dep(p;q) || r)"))) == "[](top | r)");
    CHECK(render(single_modality_collapse(parse("<>p"))) == "<>p");
    CHECK_THROWS_AS(single_modality_collapse(parse("[]p & <>q")), PreconditionError);
  }

  TEST_CASE("collapses are idempotent") {
    Rng rng(11);
    FormulaShape shape;
    shape.size = 12;
    for (int i = 0; i < 1000; ++i) {
      Formula f = random_formula(rng, shape);
      Formula n = normalize_neg_dep(f);
      CHECK(normalize_neg_dep(n) == n);
      if (!signature(f).present.contains(Operator::NegAtom)) {
        Formula m = monotone_collapse(f);
        CHECK(monotone_collapse(m) == m);
      }
      bool box = signature(f).present.contains(Operator::Box);
      bool dia = signature(f).present.contains(Operator::Diamond);
      if (!(box && dia)) {
        Formula s = single_modality_collapse(f);
        CHECK(single_modality_collapse(s) == s);
        CHECK_FALSE(signature(s).present.contains(Operator::Dep));
        CHECK_FALSE(signature(s).present.contains(Operator::Cor));
      }
    }
  }

  TEST_CASE("modal_depth") {
    CHECK(modal_depth(parse("p & q")) == 0);
    CHECK(modal_depth(parse("[]<>p")) == 2);
    CHECK(modal_depth(parse("<>p & [](<>q | r)")) == 2);
  }
}
