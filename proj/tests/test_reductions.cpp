#include <doctest.h>

#include "mdl/formula.hpp"
#include "mdl/kripke.hpp"
#include "mdl/reductions.hpp"
#include "mdl/solver.hpp"
#include "mdl/teamsem.hpp"

using namespace mdl;

namespace {

Clause3 clause(int a, int b, int c) {
  auto lit = [](int v) { return Literal{v < 0 ? -v : v, v > 0}; };
  return {lit(a), lit(b), lit(c)};
}

bool satisfiable(const Formula& f) {
  SatOptions o;
  o.engine = Engine::Pipeline;
  SatResult r = sat(f, o);
  REQUIRE((r.verdict == Verdict::Sat || r.verdict == Verdict::Unsat));
  return r.satisfiable();
}

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("qcsp parsing") {
    auto inst = std::get<QcspInstance>(parse_instance(InstanceKind::Qcsp13, "p qcsp13 3 1 0\n1 2 3 0\n"));
    CHECK(inst.n == 3);
    CHECK(inst.k == 0);
    REQUIRE(inst.clauses.size() == 1);
    CHECK(inst.clauses[0] == std::array<int, 3>{1, 2, 3});
    CHECK_THROWS_AS(parse_instance(InstanceKind::Qcsp13, "p qcsp13 3 1 0\n0 2 3 0\n"), InstanceError);
    CHECK_THROWS_AS(parse_instance(InstanceKind::Qcsp13, "p qcsp13 3 1 0\n1 1 3 0\n"), InstanceError);
  }

  TEST_CASE("qdimacs parsing") {
    Instance parsed = parse_instance(InstanceKind::Dqbf, "p cnf 2 1\na 1 0\ne 2 0\nd 2 1 0\n-1 2 2 0\n");
    auto inst = std::get<DqbfInstance>(parsed);
    CHECK(inst.n == 2);
    CHECK(inst.k == 1);
    REQUIRE(inst.deps.size() == 1);
    CHECK(inst.deps[0] == std::vector<int>{1});
    REQUIRE(inst.clauses.size() == 1);
    CHECK(inst.clauses[0] == clause(-1, 2, 2));

    try {
      parse_instance(InstanceKind::Dqbf, "p cnf 2 1\na 1 0\ne 2 0\n-1 0 2 0\n");
      FAIL("expected an instance error");
    } catch (const InstanceError& e) {
      CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_instance(InstanceKind::Dqbf, "p cnf 2 1\na 1 0\nd 1 0\n1 0\n"), InstanceError);
    CHECK_THROWS_AS(parse_instance(InstanceKind::Qbf3, "p cnf 3 1\na 1 0\ne 2 0\na 3 0\n1 0\n"), InstanceError);
  }

  TEST_CASE("oracles") {
    CHECK(oracle_qcsp(QcspInstance{1, 1, {}}));
    CHECK_FALSE(oracle_qcsp(QcspInstance{3, 3, {{1, 2, 3}}}));
    CHECK(oracle_qcsp(QcspInstance{3, 0, {{1, 2, 3}}}));

    CHECK_FALSE(oracle_dqbf(DqbfInstance{1, 1, {}, {clause(1, 1, 1)}, {}}));
    CHECK(oracle_dqbf(DqbfInstance{2, 0, {{}, {}}, {clause(1, -2, -2)}, {}}));
    // p2 == p1 with p2 allowed to see p1.
    CHECK(oracle_dqbf(DqbfInstance{2, 1, {{1}}, {clause(-1, 2, 2), clause(1, -2, -2)}, {}}));
    CHECK_FALSE(oracle_dqbf(DqbfInstance{2, 1, {{}}, {clause(-1, 2, 2), clause(1, -2, -2)}, {}}));

    CHECK(oracle_qbf3(Qbf3Instance{2, 2, 2, {clause(1, 2, 2), clause(-1, -1, 2)}, {}}));
    CHECK(oracle_qbf3(Qbf3Instance{1, 0, 1, {clause(1, -1, -1)}, {}}));
    // p3 == p1 xor p2.
    std::vector<Clause3> xor3 = {clause(-1, -2, -3), clause(1, 2, -3), clause(1, -2, 3), clause(-1, 2, 3)};
    CHECK(oracle_qbf3(Qbf3Instance{3, 1, 2, xor3, {}}));
  }

  TEST_CASE("qcsp reduction") {
    QcspInstance yes{3, 0, {{1, 2, 3}}};
    QcspInstance no{3, 3, {{1, 2, 3}}};
    for (QcspVariant v : {QcspVariant::Bot, QcspVariant::NegP}) {
      CHECK_FALSE(satisfiable(reduce_qcsp(yes, v)));
      CHECK(satisfiable(reduce_qcsp(no, v)));
    }
    FragmentSignature sig = signature(reduce_qcsp(QcspInstance{3, 1, {{1, 2, 3}}}, QcspVariant::Bot));
    OperatorSet expected;
    for (Operator op : {Operator::Box, Operator::Diamond, Operator::And, Operator::Bot, Operator::Cor})
      expected.insert(op);
    CHECK(sig.present == expected);
  }

  TEST_CASE("qcsp components track extendability") {
    QcspInstance inst{4, 2, {{1, 2, 3}, {2, 3, 4}}};
    for (int v = 0; v < 4; ++v) {
      std::vector<bool> val = {bool(v & 1), bool(v & 2)};
      QcspInstance fixed = inst;
      bool extendable = false;
      for (int e = 0; e < 4; ++e) {
        bool ok = true;
        std::vector<bool> all = {val[0], val[1], bool(e & 1), bool(e & 2)};
        for (const auto& c : inst.clauses) ok = ok && all[c[0] - 1] + all[c[1] - 1] + all[c[2] - 1] == 1;
        extendable = extendable || ok;
      }
      INFO("valuation ", v);
      CHECK(satisfiable(qcsp_component(inst, val, QcspVariant::Bot)) == !extendable);
    }
  }

  TEST_CASE("dqbf reduction") {
    DqbfInstance fig{2, 1, {{1}}, {clause(-1, 2, 2)}, {1, 2}};
    Formula g = reduce_dqbf(fig);
    CHECK(modal_depth(g) == 2);
    CHECK(satisfiable(g));
    KripkeStructure tree = build_full_binary_tree(2, fig.clauses);
    Team root = tree.empty_team();
    for (WorldId v = 0; v < tree.world_count(); ++v) {
      bool has_parent = false;
      for (WorldId u = 0; u < tree.world_count(); ++u)
        for (WorldId s : tree.successors(u)) has_parent = has_parent || s == v;
      if (!has_parent) root.insert(v);
    }
    REQUIRE(root.size() == 1);
    CHECK(check(tree, root, g));

    FragmentSignature sig = signature(g);
    for (Operator op : {Operator::Box, Operator::Diamond, Operator::And, Operator::NegAtom, Operator::Dep})
      CHECK(sig.present.contains(op));

    DqbfInstance no{1, 1, {}, {clause(1, 1, 1)}, {1}};
    CHECK_FALSE(satisfiable(reduce_dqbf(no)));
    CHECK(modal_depth(reduce_dqbf(no)) == 1);
  }

  TEST_CASE("qbf3 reduction") {
    Qbf3Instance yes{1, 0, 0, {clause(1, 1, 1)}, {1}};
    Qbf3Instance no{1, 0, 1, {clause(1, 1, 1)}, {1}};
    CHECK(satisfiable(reduce_qbf3(yes)));
    CHECK_FALSE(satisfiable(reduce_qbf3(no)));
    std::vector<Clause3> xor3 = {clause(-1, -2, -3), clause(1, 2, -3), clause(1, -2, 3), clause(-1, 2, 3)};
    CHECK(signature(reduce_qbf3(Qbf3Instance{3, 1, 2, xor3, {1, 2, 3}})).max_dep_arity == 3);
  }

  TEST_CASE("output size is affine in the clause count") {
    // Fixed n: each further clause adds the same number of nodes.
    auto check_affine = [](auto size_with) {
      std::vector<std::size_t> sizes;
      for (int m = 1; m <= 6; ++m) sizes.push_back(size_with(m));
      for (std::size_t i = 2; i < sizes.size(); ++i)
        CHECK(sizes[i] - sizes[i - 1] == sizes[1] - sizes[0]);
      CHECK(sizes[1] > sizes[0]);
    };
    check_affine([](int m) {
      QcspInstance inst{4, 2, {{1, 2, 3}}};
      for (int i = 0; i < m; ++i) inst.clauses.push_back({1 + i % 2, 3, 4});
      return reduce_qcsp(inst).size();
    });
    check_affine([](int m) {
      DqbfInstance inst{3, 1, {{1}, {}}, {}, {}};
      for (int i = 0; i < m; ++i) inst.clauses.push_back(clause(1, -2, i % 2 ? 3 : -3));
      return reduce_dqbf(inst).size();
    });
    check_affine([](int m) {
      Qbf3Instance inst{3, 1, 2, {}, {}};
      for (int i = 0; i < m; ++i) inst.clauses.push_back(clause(1, -2, i % 2 ? 3 : -3));
      return reduce_qbf3(inst).size();
    });
  }

  TEST_CASE("output size is quadratic in the variable count") {
    // Parts guarded by modal prefixes of length up to n contribute O(n^2)
    // nodes; second differences in n are constant.
    std::vector<std::size_t> sizes;
    for (int n = 2; n <= 9; ++n) {
      DqbfInstance inst{n, 1, {}, {clause(1, -2, 2)}, {}};
      for (int i = 2; i <= n; ++i) inst.deps.push_back({1});
      sizes.push_back(reduce_dqbf(inst).size());
    }
    for (std::size_t i = 3; i < sizes.size(); ++i)
      CHECK(sizes[i] - 2 * sizes[i - 1] + sizes[i - 2] == sizes[2] - 2 * sizes[1] + sizes[0]);
  }
}
