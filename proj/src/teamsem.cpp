#include "mdl/teamsem.hpp"

#include <map>

namespace mdl {

bool ModelChecker::check(const Team& t, const Formula& f) { return eval(f, t); }

bool ModelChecker::eval(const Formula& f, const Team& t) {
  switch (f.op()) {
    case Op::Top:
      return true;
    case Op::Bot:
    case Op::NegDep:
      return t.empty();
    case Op::Prop:
    case Op::NegProp: {
      int p = w_.prop_index(f.name());
      bool want = f.op() == Op::Prop;
      for (WorldId s : t.members())
        if (w_.holds(s, p) != want) return false;
      return true;
    }
    case Op::Dep:
      return eval_dep(f, t);
    default:
      break;
  }

  bool is_volatile = volatile_ && t.contains(*volatile_);
  Cache& cache = is_volatile ? volatile_cache_ : cache_;
  Key key{f.node(), t};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  bool result = false;
  switch (f.op()) {
    case Op::And:
      result = eval(f.lhs(), t) && eval(f.rhs(), t);
      break;
    case Op::Cor:
      result = eval(f.lhs(), t) || eval(f.rhs(), t);
      break;
    case Op::Or:
      result = eval_split(f, t);
      break;
    case Op::Box:
      result = eval(f.child(), successors(w_, t));
      break;
    case Op::Diamond:
      result = eval_diamond(f, t);
      break;
    default:
      break;
  }
  // Recursion may have rehashed the map, so insert fresh rather than via an iterator.
  (is_volatile ? volatile_cache_ : cache_).emplace(std::move(key), result);
  return result;
}

bool ModelChecker::eval_dep(const Formula& f, const Team& t) const {
  std::vector<int> args;
  args.reserve(f.dep_args().size());
  for (const auto& a : f.dep_args()) args.push_back(w_.prop_index(a));
  int target = w_.prop_index(f.name());
  std::map<std::vector<bool>, bool> seen;
  std::vector<bool> projection(args.size());
  for (WorldId s : t.members()) {
    for (std::size_t i = 0; i < args.size(); ++i) projection[i] = w_.holds(s, args[i]);
    bool value = w_.holds(s, target);
    auto [it, inserted] = seen.emplace(projection, value);
    if (!inserted && it->second != value) return false;
  }
  return true;
}

// Assigns each world to exactly one side. Overlapping covers add nothing:
// both sides are downward closed, so a cover can be shrunk to a partition.
// A partial side that already fails cannot be completed for the same reason.
bool ModelChecker::eval_split(const Formula& f, const Team& t) {
  std::vector<WorldId> worlds = t.members();
  Team left = w_.empty_team();
  Team right = w_.empty_team();
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == worlds.size()) return eval(f.lhs(), left) && eval(f.rhs(), right);
    WorldId s = worlds[i];
    left.insert(s);
    if (eval(f.lhs(), left) && self(self, i + 1)) return true;
    left.erase(s);
    right.insert(s);
    if (eval(f.rhs(), right) && self(self, i + 1)) return true;
    right.erase(s);
    return false;
  };
  return assign(assign, 0);
}

// Chooses one successor per world; the image is the witness team T'. Any
// larger T' satisfying the clause contains such an image, and truth passes
// down to it, so images of choice functions are enough.
bool ModelChecker::eval_diamond(const Formula& f, const Team& t) {
  std::vector<WorldId> worlds = t.members();
  for (WorldId s : worlds)
    if (w_.successors(s).empty()) return false;
  Team image = w_.empty_team();
  auto choose = [&](auto&& self, std::size_t i) -> bool {
    if (i == worlds.size()) return eval(f.child(), image);
    const auto& succ = w_.successors(worlds[i]);
    // Reusing a world already in the image keeps T' smallest, so try it first.
    for (WorldId s2 : succ)
      if (image.contains(s2) && self(self, i + 1)) return true;
    for (WorldId s2 : succ) {
      if (image.contains(s2)) continue;
      image.insert(s2);
      bool ok = eval(f.child(), image) && self(self, i + 1);
      image.erase(s2);
      if (ok) return true;
    }
    return false;
  };
  return choose(choose, 0);
}

bool check(const KripkeStructure& w, const Team& t, const Formula& f) {
  ModelChecker checker(w);
  return checker.check(t, f);
}

namespace {

bool eval_ml(const KripkeStructure& w, WorldId world, const Formula& psi) {
  switch (psi.op()) {
    case Op::Top:
      return true;
    case Op::Bot:
      return false;
    case Op::Prop:
      return w.holds(world, psi.name());
    case Op::NegProp:
      return !w.holds(world, psi.name());
    case Op::And:
      return eval_ml(w, world, psi.lhs()) && eval_ml(w, world, psi.rhs());
    case Op::Or:
      return eval_ml(w, world, psi.lhs()) || eval_ml(w, world, psi.rhs());
    case Op::Box:
      for (WorldId s : w.successors(world))
        if (!eval_ml(w, s, psi.child())) return false;
      return true;
    case Op::Diamond:
      for (WorldId s : w.successors(world))
        if (eval_ml(w, s, psi.child())) return true;
      return false;
    default:
      return false;
  }
}

}  // namespace

bool check_ml(const KripkeStructure& w, WorldId world, const Formula& psi) {
  OperatorSet ops = signature(psi).present;
  if (ops.contains(Operator::Dep))
    throw PreconditionError("check_ml: dependence atoms are not modal-logic formulas");
  if (ops.contains(Operator::Cor))
    throw PreconditionError("check_ml: classical disjunction '||' is not a modal-logic connective");
  return eval_ml(w, world, psi);
}

}  // namespace mdl
