#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mdl/formula.hpp"

namespace mdl {

/// Outcome of one randomized or exhaustive property suite.
struct PropertyReport {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  /// Cases that produced no comparable verdict (budget or candidate cap).
  std::uint64_t inconclusive = 0;
  std::string first_violation;
  std::string note;
  double seconds = 0;

  bool ok() const { return cases > 0 && violations == 0; }
};

/// Suite sizes; full() matches the acceptance run, quick() the CLI selftest.
struct PropertyScale {
  std::uint64_t seed = 1;
  int downward_closure = 1000;
  int empty_team_max_size = 6;
  int cor_expansion = 300;
  int translation = 300;
  /// Translation soundness runs on every structure up to this many worlds.
  int translation_exhaustive_worlds = 3;
  int ladner = 500;
  int engine_agreement = 500;
  int modal_decomposition = 200;
  int collapses = 200;
  int routing = 200;
  int qcsp_max_n = 4;
  int qbf_max_n = 3;
  int max_clauses = 2;

  static PropertyScale full() { return {}; }
  static PropertyScale quick();
};

PropertyReport check_table_totality();
PropertyReport check_downward_closure(const PropertyScale& s);
PropertyReport check_empty_team(const PropertyScale& s);
PropertyReport check_cor_expansion(const PropertyScale& s);
PropertyReport check_singleton_translation(const PropertyScale& s);
PropertyReport check_ladner(const PropertyScale& s);
PropertyReport check_engine_agreement(const PropertyScale& s);
PropertyReport check_modal_decomposition(const PropertyScale& s);
PropertyReport check_reductions(const PropertyScale& s);
PropertyReport check_binary_tree_frame();
PropertyReport check_collapses(const PropertyScale& s);
PropertyReport check_routing(const PropertyScale& s);

/// Every suite above, in order.
std::vector<PropertyReport> run_all_properties(const PropertyScale& s);

/// Exhaustive search for a pointwise tree model of a modal-logic formula in
/// negation normal form, with depth modal_depth(psi) and at most `branching`
/// successors per world. Subtrees are identified by the truth values they
/// give to the subformulas of psi.
bool ml_tree_model_exists(const Formula& psi, int branching);

/// Number of distinct <> subformulas.
int count_distinct_diamonds(const Formula& psi);

}  // namespace mdl
