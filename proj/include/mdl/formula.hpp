#pragma once

#include <bitset>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mdl {

/// Node kinds of the formula AST. Negation only occurs on atoms.
enum class Op {
  Top,
  Bot,
  Prop,
  NegProp,
  Dep,
  NegDep,
  And,
  Or,   // dependence (split) disjunction
  Cor,  // classical disjunction
  Box,
  Diamond,
};

struct Node;

/// Immutable, structurally shared MDL formula.
///
/// Copies are cheap; subformula identity (node()) is stable for the lifetime
/// of any Formula that refers to it and is used as a memoization key.
class Formula {
 public:
  static Formula top();
  static Formula bot();
  static Formula prop(std::string name);
  static Formula neg_prop(std::string name);
  static Formula dep(std::vector<std::string> args, std::string target);
  static Formula neg_dep(std::vector<std::string> args, std::string target);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula split(Formula lhs, Formula rhs);
  static Formula cor(Formula lhs, Formula rhs);
  static Formula box(Formula child);
  static Formula diamond(Formula child);

  Op op() const;
  bool is_atomic() const;
  bool is_binary() const;
  bool is_modal() const;

  /// Proposition name for Prop/NegProp, determined variable for Dep/NegDep.
  const std::string& name() const;
  /// Determining variables of a (negated) dependence atom.
  const std::vector<std::string>& dep_args() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  /// Operand of Box/Diamond.
  const Formula& child() const;

  const Node* node() const { return node_.get(); }

  /// Number of AST nodes.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  Op op;
  std::string name;
  std::vector<std::string> args;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t size = 1;
};

/// Operators tracked by the complexity classification, in table column order.
enum class Operator { Box, Diamond, And, Or, NegAtom, Top, Bot, Dep, Cor };

inline constexpr std::size_t kOperatorCount = 9;
inline constexpr Operator kAllOperators[kOperatorCount] = {
    Operator::Box, Operator::Diamond, Operator::And,
    Operator::Or,  Operator::NegAtom, Operator::Top,
    Operator::Bot, Operator::Dep,     Operator::Cor};

std::string_view operator_name(Operator op);
std::optional<Operator> operator_from_name(std::string_view name);

class OperatorSet {
 public:
  OperatorSet() = default;
  OperatorSet(std::initializer_list<Operator> ops) {
    for (Operator op : ops) insert(op);
  }
  static OperatorSet from_mask(unsigned mask) {
    OperatorSet s;
    s.bits_ = std::bitset<kOperatorCount>(mask);
    return s;
  }

  void insert(Operator op) { bits_.set(static_cast<std::size_t>(op)); }
  void erase(Operator op) { bits_.reset(static_cast<std::size_t>(op)); }
  bool contains(Operator op) const { return bits_.test(static_cast<std::size_t>(op)); }
  bool empty() const { return bits_.none(); }
  unsigned mask() const { return static_cast<unsigned>(bits_.to_ulong()); }

  friend bool operator==(const OperatorSet&, const OperatorSet&) = default;

 private:
  std::bitset<kOperatorCount> bits_;
};

std::string to_string(const OperatorSet& ops);

struct FragmentSignature {
  OperatorSet present;
  std::optional<int> max_dep_arity;

  friend bool operator==(const FragmentSignature&, const FragmentSignature&) = default;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Arity, Negation };

  ParseError(Kind kind, std::size_t offset, std::size_t line, std::size_t column,
             const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

/// Raised when an operation is applied outside its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Formula parse(std::string_view text);
std::string render(const Formula& f);

FragmentSignature signature(const Formula& f);
int modal_depth(const Formula& f);

/// Propositions occurring anywhere in f (dependence arguments included).
std::set<std::string> propositions(const Formula& f);
std::size_t count_op(const Formula& f, Op op);

/// Replaces every negated dependence atom by bot.
Formula normalize_neg_dep(const Formula& f);
/// Replaces every dependence atom and proposition by the proposition "t".
/// Requires a formula free of atomic negation.
Formula monotone_collapse(const Formula& f);
/// dep -> top, ~dep -> bot, || -> |. Requires at most one modality kind.
Formula single_modality_collapse(const Formula& f);

// Left-associated folds; the empty fold yields top (conjunction) or bot.
Formula conj_all(const std::vector<Formula>& parts);
Formula split_all(const std::vector<Formula>& parts);
Formula cor_all(const std::vector<Formula>& parts);

/// Prefixes f with `count` boxes (or diamonds).
Formula boxes(int count, Formula f);
Formula diamonds(int count, Formula f);

}  // namespace mdl
