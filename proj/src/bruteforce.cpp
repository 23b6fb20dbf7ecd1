#include <map>
#include <set>
#include <stdexcept>

#include "mdl/solver.hpp"
#include "mdl/teamsem.hpp"

namespace mdl {

namespace {

// Propositions occurring at modal nesting exactly j, for j = 0..depth.
std::vector<std::vector<std::string>> props_by_level(const Formula& f, int depth) {
  std::vector<std::set<std::string>> sets(depth + 1);
  auto walk = [&](auto&& self, const Formula& g, int level) -> void {
    if (level > depth) return;
    switch (g.op()) {
      case Op::Prop:
      case Op::NegProp:
        sets[level].insert(g.name());
        return;
      case Op::Dep:
      case Op::NegDep:
        sets[level].insert(g.name());
        for (const auto& a : g.dep_args()) sets[level].insert(a);
        return;
      default:
        if (g.is_modal()) {
          self(self, g.child(), level + 1);
        } else if (g.is_binary()) {
          self(self, g.lhs(), level);
          self(self, g.rhs(), level);
        }
    }
  };
  walk(walk, f, 0);
  std::vector<std::vector<std::string>> out;
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

BigInt binomial(const BigInt& n, int k) {
  if (n < k) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Number of child sets with at most `branching` distinct members out of n.
BigInt child_set_count(const BigInt& n, int branching) {
  BigInt total = 0;
  for (int i = 0; i <= branching; ++i) total += binomial(n, i);
  return total;
}

// Types per level: level_counts[j] counts distinct subtrees rooted at depth j.
std::vector<BigInt> level_counts(const std::vector<std::vector<std::string>>& props, int branching) {
  int depth = static_cast<int>(props.size()) - 1;
  std::vector<BigInt> n(depth + 1);
  n[depth] = BigInt(1) << props[depth].size();
  for (int j = depth - 1; j >= 0; --j)
    n[j] = (BigInt(1) << props[j].size()) * child_set_count(n[j + 1], branching);
  return n;
}

// Calls visit(combination) for every subset of {0..n-1} with at most k members,
// by size, then lexicographically. Stops early when visit returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, int k, Visit&& visit) {
  std::vector<std::size_t> c;
  for (int size = 0; size <= k && static_cast<std::size_t>(size) <= n; ++size) {
    c.resize(size);
    for (int i = 0; i < size; ++i) c[i] = i;
    while (true) {
      if (visit(c)) return true;
      int i = size - 1;
      while (i >= 0 && c[i] == n - size + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return false;
}

void apply_label(KripkeStructure& w, WorldId v, const std::vector<std::string>& props,
                 std::size_t mask) {
  w.clear_labels(v);
  for (std::size_t i = 0; i < props.size(); ++i)
    if ((mask >> i) & 1) w.add_label(v, props[i]);
}

// The sub-structure reachable from `root`, renamed w0.. in breadth-first order.
Witness extract(const KripkeStructure& w, WorldId root) {
  KripkeStructure out;
  std::map<WorldId, WorldId> ids;
  std::vector<WorldId> order{root};
  ids.emplace(root, out.add_world("w0"));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (WorldId s : w.successors(order[i]))
      if (!ids.count(s)) {
        ids.emplace(s, out.add_world("w" + std::to_string(order.size())));
        order.push_back(s);
      }
  for (WorldId v : order) {
    for (const auto& p : w.label(v)) out.add_label(ids.at(v), p);
    for (WorldId s : w.successors(v)) out.add_edge(ids.at(v), ids.at(s));
  }
  Team t = Team::singleton(out.world_count(), 0);
  return Witness{std::move(out), std::move(t)};
}

}  // namespace

BigInt bruteforce_candidate_count(const Formula& f, int depth, int branching) {
  if (depth < 0 || branching < 0) throw std::invalid_argument("bruteforce: negative bound");
  return level_counts(props_by_level(f, depth), branching)[0];
}

SatResult sat_bruteforce(const Formula& f, int depth, int branching, std::uint64_t candidate_cap,
                         bool want_witness) {
  if (depth < 0 || branching < 0) throw std::invalid_argument("bruteforce: negative bound");
  SatResult res;
  res.engine = "bruteforce";
  auto props = props_by_level(f, depth);
  auto counts = level_counts(props, branching);
  BigInt materialized = 0;
  for (int j = 1; j <= depth; ++j) materialized += counts[j];
  if (counts[0] > candidate_cap || materialized > candidate_cap) {
    res.verdict = Verdict::BudgetExceeded;
    return res;
  }

  // Shared DAG of every subtree type below the root, deepest level first.
  KripkeStructure w;
  WorldId root = w.add_world("r");
  std::vector<WorldId> below;  // types of the level under the one being built
  for (int j = depth; j >= 1; --j) {
    std::vector<WorldId> level;
    std::size_t labels = std::size_t{1} << props[j].size();
    auto add_types = [&](const std::vector<std::size_t>& children) {
      for (std::size_t mask = 0; mask < labels; ++mask) {
        WorldId v = w.add_world("l" + std::to_string(j) + "_" + std::to_string(level.size()));
        apply_label(w, v, props[j], mask);
        for (std::size_t c : children) w.add_edge(v, below[c]);
        level.push_back(v);
      }
      return false;
    };
    if (j == depth) {
      add_types({});
    } else {
      for_each_subset(below.size(), branching, add_types);
    }
    below = std::move(level);
  }

  ModelChecker checker(w);
  checker.set_volatile(root);
  std::size_t labels = std::size_t{1} << props[0].size();
  Team team = Team::singleton(w.world_count(), root);
  std::vector<std::size_t> none;
  auto try_root = [&](const std::vector<std::size_t>& children) {
    std::vector<WorldId> succ;
    for (std::size_t c : children) succ.push_back(below[c]);
    w.set_successors(root, std::move(succ));
    for (std::size_t mask = 0; mask < labels; ++mask) {
      apply_label(w, root, props[0], mask);
      checker.invalidate_volatile();
      ++res.nodes;
      if (checker.check(team, f)) return true;
    }
    return false;
  };
  bool found = depth == 0 ? try_root(none) : for_each_subset(below.size(), branching, try_root);
  if (!found) {
    res.verdict = Verdict::BoundedUnsat;
    return res;
  }
  res.verdict = Verdict::Sat;
  if (want_witness) {
    res.witness = extract(w, root);
    if (!check(res.witness->structure, res.witness->team, f))
      throw std::logic_error("bruteforce: witness does not satisfy the formula");
  }
  return res;
}

}  // namespace mdl
