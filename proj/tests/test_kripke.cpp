#include <doctest.h>

#include "mdl/kripke.hpp"

using namespace mdl;

TEST_SUITE("kripke") {
  TEST_CASE("parse_structure") {
    KripkeStructure w = parse_structure("world w\n");
    CHECK(w.world_count() == 1);
    CHECK(successors(w, w.all_worlds()).empty());
    CHECK(w.label(0).empty());

    KripkeStructure v = parse_structure(
        "# a comment\nworld a\nworld b\nedge a b\nedge b b\nlabel b p q\n");
    CHECK(v.world_count() == 2);
    CHECK(v.holds(v.at("b"), "p"));
    CHECK(v.holds(v.at("b"), "q"));
    CHECK_FALSE(v.holds(v.at("a"), "p"));
    CHECK_FALSE(v.holds(v.at("a"), "unknown"));
  }

  TEST_CASE("parse_structure rejects bad input") {
    CHECK_THROWS(parse_structure("world a\nedge a b\n"));
    CHECK_THROWS(parse_structure("world a\nworld a\n"));
    CHECK_THROWS(parse_structure("label a p\n"));
    CHECK_THROWS(parse_structure("vertex a\n"));
  }

  TEST_CASE("write_structure round-trips") {
    KripkeStructure w = parse_structure("world a\nworld b\nedge a b\nlabel a p\n");
    std::string text = write_structure(w);
    CHECK(write_structure(parse_structure(text)) == text);
  }

  TEST_CASE("teams") {
    KripkeStructure w = parse_structure("world b\nworld a\nworld c\n");
    Team t = parse_team(w, "c,a");
    CHECK(t.size() == 2);
    CHECK(format_team(w, t) == "a,c");
    CHECK(parse_team(w, "").empty());
    CHECK_THROWS(parse_team(w, "d"));
  }

  TEST_CASE("successors") {
    KripkeStructure w = parse_structure("world w\n");
    CHECK(successors(w, w.empty_team()).empty());
    CHECK(successors(w, w.all_worlds()).empty());

    KripkeStructure tree = build_full_binary_tree(1, {});
    WorldId root = 0;
    while (tree.successors(root).empty()) ++root;
    Team children = successors(tree, Team::singleton(tree.world_count(), root));
    CHECK(children.size() == 2);
    CHECK_FALSE(children.contains(root));

    Team all = tree.all_worlds();
    CHECK(successors(tree, Team::singleton(tree.world_count(), root)).is_subset_of(successors(tree, all)));
  }

  TEST_CASE("build_full_binary_tree") {
    for (int n = 1; n <= 4; ++n) {
      KripkeStructure t = build_full_binary_tree(n, {});
      CHECK(t.world_count() == (std::size_t{1} << (n + 1)) - 1);
      std::size_t internal = 0;
      for (WorldId v = 0; v < t.world_count(); ++v) {
        std::size_t deg = t.successors(v).size();
        CHECK((deg == 0 || deg == 2));
        internal += deg == 2;
      }
      CHECK(internal == (std::size_t{1} << n) - 1);
    }

    KripkeStructure one = build_full_binary_tree(1, {});
    int with_p = 0, without_p = 0;
    for (WorldId v = 0; v < one.world_count(); ++v) {
      if (!one.successors(v).empty()) continue;
      (one.holds(v, "p1") ? with_p : without_p)++;
    }
    CHECK(with_p == 1);
    CHECK(without_p == 1);

    // Clause (~p1 | p2 | p2) is false exactly where p1 holds and p2 does not.
    Clause3 c{Literal{1, false}, Literal{2, true}, Literal{2, true}};
    KripkeStructure two = build_full_binary_tree(2, {c});
    int leaves = 0, marked = 0;
    for (WorldId v = 0; v < two.world_count(); ++v) {
      if (!two.successors(v).empty()) continue;
      ++leaves;
      if (two.holds(v, "f1")) {
        ++marked;
        CHECK(two.holds(v, "p1"));
        CHECK_FALSE(two.holds(v, "p2"));
      }
    }
    CHECK(leaves == 4);
    CHECK(marked == 1);
  }
}
