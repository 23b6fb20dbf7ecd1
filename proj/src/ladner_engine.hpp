#pragma once

// Ladner's tableau procedure over a hash-consed modal-logic DAG whose leaves
// may include dependence constraints alpha_l(args) <-> target, with alpha_l
// read from a Boolean-function table supplied per run.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "mdl/formula.hpp"
#include "mdl/kripke.hpp"
#include "mdl/solver.hpp"

namespace mdl::detail {

struct BudgetExceeded {};

struct MlNode {
  enum class Kind : std::uint8_t { Top, Bot, Lit, And, Or, Box, Diamond, Constraint };
  Kind kind = Kind::Top;
  int a = -1;
  int b = -1;
  int prop = -1;
  bool positive = true;
  int atom = -1;
  std::vector<int> args;
};

class MlGraph {
 public:
  /// Compiles a Cor-free formula in negation normal form. Dependence atoms
  /// become constraints numbered in pre-order; negated ones are rejected.
  int add(const Formula& f);

  const MlNode& node(int id) const { return nodes_[id]; }
  std::size_t prop_count() const { return props_.size(); }
  const std::string& prop_name(int id) const { return props_[id]; }
  std::size_t atom_count() const { return atom_arity_.size(); }
  int atom_arity(int atom) const { return atom_arity_[atom]; }

 private:
  int intern(MlNode n);
  int prop_id(const std::string& name);
  int add_rec(const Formula& f);

  std::vector<MlNode> nodes_;
  std::map<std::tuple<int, int, int, int, bool, int, std::vector<int>>, int> index_;
  std::vector<std::string> props_;
  std::unordered_map<std::string, int> prop_index_;
  std::vector<int> atom_arity_;
};

/// Bit positions consulted by a run, sorted, with the table values seen.
struct Explanation {
  std::vector<std::size_t> positions;
  std::vector<bool> values;
};

struct RunResult {
  bool sat;
  Explanation explanation;
};

/// Tree model extracted from a successful run.
struct ModelTree {
  struct World {
    std::vector<int> true_props;
    std::vector<int> children;
  };
  std::vector<World> worlds;
  int root = -1;
};

class Ladner {
 public:
  /// `offsets[atom]` is the table bit of entry 0 for that atom.
  Ladner(const MlGraph& g, std::vector<std::size_t> offsets, std::uint64_t budget,
         std::uint64_t* nodes);

  /// Decides satisfiability of `root` under `table`. Results of sub-worlds
  /// are cached across runs together with the table bits they consulted.
  RunResult run(int root, const BitVector& table);

  /// Builds a tree model of `root` under `table`, or nothing if unsatisfiable.
  std::optional<ModelTree> model(int root, const BitVector& table);

 private:
  struct State {
    std::vector<int> pending;
    std::vector<std::int8_t> lits;
    std::vector<int> boxes;
    std::vector<int> diamonds;
    std::vector<int> choices;
  };
  struct Outcome {
    bool sat;
    std::vector<std::size_t> positions;
    // Model construction only.
    std::vector<int> true_props;
    std::vector<int> children;
  };
  struct CacheEntry {
    bool sat;
    std::vector<std::size_t> positions;
    std::vector<bool> values;
  };

  Outcome expand(State s);
  Outcome world(std::vector<int> formulas);
  void tick();

  const MlGraph& g_;
  std::vector<std::size_t> offsets_;
  std::uint64_t budget_;
  std::uint64_t* nodes_;
  const BitVector* table_ = nullptr;
  bool building_ = false;
  ModelTree tree_;
  std::map<std::vector<int>, std::vector<CacheEntry>> cache_;
  std::map<std::vector<int>, int> built_;
};

}  // namespace mdl::detail
