#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mdl/formula.hpp"
#include "mdl/kripke.hpp"

namespace mdl {

/// One-in-three quantified constraint instance: p1..pk universal,
/// p(k+1)..pn existential, each clause three distinct variable indices.
struct QcspInstance {
  int n = 0;
  int k = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// Dependency-quantified CNF: p1..pk universal; deps[i] lists the
/// universals existential p(k+1+i) may depend on.
struct DqbfInstance {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> deps;
  std::vector<Clause3> clauses;
  /// permutation[i] is the input variable renumbered to i+1 (identity if built directly).
  std::vector<int> permutation;
};

/// Exists p1..pk, forall p(k+1)..pl, exists p(l+1)..pn, CNF matrix.
struct Qbf3Instance {
  int n = 0;
  int k = 0;
  int l = 0;
  std::vector<Clause3> clauses;
  std::vector<int> permutation;
};

class InstanceError : public std::invalid_argument {
 public:
  InstanceError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Throws InstanceError (line 0) when an invariant does not hold.
void validate(const QcspInstance& inst);
void validate(const DqbfInstance& inst);
void validate(const Qbf3Instance& inst);

/// Constant closing the existential block: bot, or the negated proposition ~p.
enum class QcspVariant { Bot, NegP };

/// Formula that is unsatisfiable iff the instance is true.
Formula reduce_qcsp(const QcspInstance& inst, QcspVariant variant = QcspVariant::Bot);
/// The || -free component for one universal valuation (valuation[i] is p(i+1)).
/// Unsatisfiable iff the valuation extends to a one-in-three solution.
Formula qcsp_component(const QcspInstance& inst, const std::vector<bool>& valuation,
                       QcspVariant variant = QcspVariant::Bot);

/// Formulas that are satisfiable iff the instance is true. Clauses that
/// contain a complementary pair are dropped; f<i> keeps the clause number.
Formula reduce_dqbf(const DqbfInstance& inst);
Formula reduce_qbf3(const Qbf3Instance& inst);

bool oracle_qcsp(const QcspInstance& inst);
bool oracle_dqbf(const DqbfInstance& inst);
bool oracle_qbf3(const Qbf3Instance& inst);

enum class InstanceKind { Qcsp13, Dqbf, Qbf3 };
std::string_view instance_kind_name(InstanceKind k);

using Instance = std::variant<QcspInstance, DqbfInstance, Qbf3Instance>;

/// qcsp13: `p qcsp13 <n> <m> <k>` then m lines of three indices ending in 0.
/// dqbf, qbf3: QDIMACS with `a`/`e` lines (and `d` lines for dqbf); clauses of
/// one to three literals, shorter ones padded by repeating the last literal.
/// Universals are renumbered first (dqbf) or blocks kept in prefix order (qbf3).
Instance parse_instance(InstanceKind kind, std::string_view text);

/// Output formula of the matching reduction.
Formula reduce(const Instance& inst, QcspVariant variant = QcspVariant::Bot);
bool oracle(const Instance& inst);

}  // namespace mdl
