#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mdl/formula.hpp"
#include "mdl/kripke.hpp"

namespace mdl {

/// Generator used by the property suites. Draws go through below() so that
/// sequences do not depend on the standard library's distributions.
using Rng = std::mt19937_64;

/// Uniform-ish integer in [0, n); n must be positive.
inline std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }
inline bool coin(Rng& rng, double p = 0.5) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

struct FormulaShape {
  /// The AST node count is drawn from 1..size; it falls short only when the
  /// allowed operators cannot reach it.
  int size = 8;
  std::vector<std::string> props = {"p", "q"};
  /// Operators that may occur. Propositions are always available.
  OperatorSet ops = OperatorSet::from_mask((1u << kOperatorCount) - 1);
  int max_dep_arity = 1;
  /// Negative means unbounded.
  int max_modal_depth = -1;
  int max_dep_atoms = -1;
  int max_cor = -1;
};

Formula random_formula(Rng& rng, const FormulaShape& shape);

/// Each edge present with probability edge_p, each label with label_p.
KripkeStructure random_structure(Rng& rng, int worlds, const std::vector<std::string>& props,
                                 double edge_p = 0.4, double label_p = 0.5);
/// Each world included with probability 1/2.
Team random_team(Rng& rng, const KripkeStructure& w);

}  // namespace mdl
