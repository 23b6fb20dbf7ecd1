#pragma once

#include <optional>
#include <unordered_map>

#include "mdl/formula.hpp"
#include "mdl/kripke.hpp"

namespace mdl {

/// Team-semantics evaluator bound to one structure.
///
/// Results are cached by (subformula node, team). Entries stay valid as long
/// as the structure is unchanged; a single world may be declared volatile so
/// that callers can rewire its edges or labels between queries and drop only
/// the entries whose team contains it. The volatile world must have no
/// incoming edges, otherwise other teams' images would depend on it too.
class ModelChecker {
 public:
  explicit ModelChecker(const KripkeStructure& w) : w_(w) {}

  bool check(const Team& t, const Formula& f);

  void set_volatile(WorldId w) { volatile_ = w; }
  /// Drops every cached result whose team contains the volatile world.
  void invalidate_volatile() { volatile_cache_.clear(); }
  void clear() {
    cache_.clear();
    volatile_cache_.clear();
  }

 private:
  struct Key {
    const Node* node;
    Team team;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return k.team.hash() ^ (std::hash<const void*>{}(k.node) * 0x9e3779b97f4a7c15ull);
    }
  };
  using Cache = std::unordered_map<Key, bool, KeyHash>;

  bool eval(const Formula& f, const Team& t);
  bool eval_dep(const Formula& f, const Team& t) const;
  bool eval_split(const Formula& f, const Team& t);
  bool eval_diamond(const Formula& f, const Team& t);

  const KripkeStructure& w_;
  std::optional<WorldId> volatile_;
  Cache cache_;
  Cache volatile_cache_;
};

/// W,T |= f under team semantics.
bool check(const KripkeStructure& w, const Team& t, const Formula& f);

/// Pointwise modal-logic satisfaction; | is read as ordinary disjunction.
/// Throws PreconditionError on dependence atoms and ||.
bool check_ml(const KripkeStructure& w, WorldId world, const Formula& psi);

}  // namespace mdl
