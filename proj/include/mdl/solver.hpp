#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdl/formula.hpp"
#include "mdl/kripke.hpp"

namespace mdl {

using BigInt = boost::multiprecision::cpp_int;

/// Growable bit vector used for disjunct indices; bit 0 is least significant.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i, bool v) {
    if (v) {
      words_[i / 64] |= std::uint64_t{1} << (i % 64);
    } else {
      words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
  }
  BigInt to_bigint() const;
  static BitVector from_bigint(const BigInt& value, std::size_t bits);

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Smallest index above `current` (numeric order, bit 0 least significant)
/// that differs from `current` somewhere on `relevant`. Returns false when
/// no such index fits in current.size() bits.
bool next_differing_index(BitVector& current, const std::vector<std::size_t>& relevant);

/// The Cor-free disjuncts of a formula, one per assignment of a bit to each
/// || node. Bit j belongs to the j-th || node in pre-order; 0 keeps the left
/// operand, 1 the right one.
class CorExpansion {
 public:
  explicit CorExpansion(Formula f);

  std::size_t cor_count() const { return cor_count_; }
  /// 2^cor_count().
  BigInt disjunct_count() const;

  /// Disjunct for `bits`; `used` receives the bit positions actually
  /// consulted (|| nodes inside discarded operands are skipped).
  Formula disjunct(const BitVector& bits, std::vector<std::size_t>* used = nullptr) const;
  Formula disjunct(const BigInt& index) const;

 private:
  Formula f_;
  std::size_t cor_count_;
};

/// Propositional encoding of a Boolean function as a disjunction of minterms.
/// table[x] is f at input x, where x reads vars[0] as the most significant
/// bit. Minterms are listed in descending x; no minterm yields bot.
Formula alpha_encoding(const std::vector<bool>& table, const std::vector<std::string>& vars);

/// alpha <-> target in negation normal form, (alpha & target) | (~alpha & ~target)
/// with ~alpha pushed to the literals and constants folded. alpha must be
/// propositional (literals, constants, &, |).
Formula to_nnf_ml(const Formula& alpha, const std::string& target);
/// Constant folding over a Cor-free, dependence-free formula.
Formula to_nnf_ml(const Formula& psi);

/// Per-atom Boolean-function selections for a Cor-free formula.
///
/// Dependence atoms are numbered in pre-order. Selection index bits are laid
/// out with atom 0 most significant; inside an atom, truth-table entry x
/// has weight 2^x relative to the atom's block.
class SingletonTranslation {
 public:
  /// Requires f free of || and of negated dependence atoms.
  explicit SingletonTranslation(Formula f);

  std::size_t atom_count() const { return arities_.size(); }
  const std::vector<int>& arities() const { return arities_; }
  std::size_t index_bits() const { return total_bits_; }
  BigInt disjunct_count() const;
  /// Bit offset of table entry x of atom `atom`.
  std::size_t bit_position(std::size_t atom, std::size_t x) const { return offsets_[atom] + x; }

  /// f with every dependence atom replaced by alpha_l(args) <-> target.
  Formula disjunct(const BitVector& selection) const;
  Formula disjunct(const BigInt& index) const;

  const Formula& formula() const { return f_; }

 private:
  Formula f_;
  std::vector<int> arities_;
  std::vector<std::size_t> offsets_;
  std::size_t total_bits_ = 0;
};

/// Satisfiability of a modal-logic formula in negation normal form.
bool ladner_sat(const Formula& psi);

enum class Engine { Auto, Pipeline, Bruteforce, Fastpath };
enum class Verdict { Sat, Unsat, BoundedUnsat, BudgetExceeded };

std::string_view verdict_name(Verdict v);
std::optional<Engine> engine_from_name(std::string_view name);

struct Witness {
  KripkeStructure structure;
  Team team;
};

struct SatResult {
  Verdict verdict = Verdict::Unsat;
  std::optional<Witness> witness;
  std::string engine;
  /// (|| selection, dependence-function selection) of the first satisfiable disjunct.
  std::optional<std::pair<BigInt, BigInt>> disjunct_index;
  std::uint64_t nodes = 0;

  bool satisfiable() const { return verdict == Verdict::Sat; }
};

/// Node budget used when neither the options nor MDL_BUDGET set one.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
/// kDefaultBudget, or MDL_BUDGET when it holds a positive integer.
std::uint64_t default_budget();

enum class TableSearch {
  /// Numeric order, skipping indices that provably repeat a refuted run.
  Skipping,
  /// Every index in numeric order; for cross-checking the skipping search.
  Exhaustive,
};

struct SatOptions {
  Engine engine = Engine::Auto;
  bool want_witness = false;
  std::uint64_t budget = default_budget();
  TableSearch table_search = TableSearch::Skipping;
  /// Bounded search parameters; depth < 0 means modal_depth(f).
  int bf_depth = -1;
  int bf_branching = 2;
  std::uint64_t bf_candidate_cap = 200'000;
};

SatResult sat(const Formula& f, const SatOptions& options = {});

/// Complete decision: || expansion, negated-atom removal, singleton
/// translation and Ladner's procedure.
SatResult sat_pipeline(const Formula& f, const SatOptions& options = {});

/// Enumerates tree models of the given depth and branching over f's
/// propositions. Unsat answers are Verdict::BoundedUnsat.
SatResult sat_bruteforce(const Formula& f, int depth, int branching,
                         std::uint64_t candidate_cap = 200'000, bool want_witness = false);
/// Number of candidate roots sat_bruteforce would enumerate.
BigInt bruteforce_candidate_count(const Formula& f, int depth, int branching);

/// Requires f free of &.
bool sat_no_conjunction(const Formula& f);
/// Requires f free of modalities, | and ||.
bool sat_conjunction_of_literals(const Formula& f);

}  // namespace mdl
