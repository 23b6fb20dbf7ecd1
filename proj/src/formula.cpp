#include "mdl/formula.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mdl {

namespace {

std::shared_ptr<const Node> make_atom(Op op, std::string name = {},
                                      std::vector<std::string> args = {}) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->name = std::move(name);
  n->args = std::move(args);
  return n;
}

std::shared_ptr<const Node> make_node(Op op, Formula lhs, std::optional<Formula> rhs) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->size = 1 + lhs.size() + (rhs ? rhs->size() : 0);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

void check_name(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty proposition name");
}

}  // namespace

Formula Formula::top() {
  static const Formula f(make_atom(Op::Top));
  return f;
}

Formula Formula::bot() {
  static const Formula f(make_atom(Op::Bot));
  return f;
}

Formula Formula::prop(std::string name) {
  check_name(name);
  return Formula(make_atom(Op::Prop, std::move(name)));
}

Formula Formula::neg_prop(std::string name) {
  check_name(name);
  return Formula(make_atom(Op::NegProp, std::move(name)));
}

Formula Formula::dep(std::vector<std::string> args, std::string target) {
  check_name(target);
  for (const auto& a : args) check_name(a);
  return Formula(make_atom(Op::Dep, std::move(target), std::move(args)));
}

Formula Formula::neg_dep(std::vector<std::string> args, std::string target) {
  check_name(target);
  for (const auto& a : args) check_name(a);
  return Formula(make_atom(Op::NegDep, std::move(target), std::move(args)));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(make_node(Op::And, std::move(lhs), std::move(rhs)));
}

Formula Formula::split(Formula lhs, Formula rhs) {
  return Formula(make_node(Op::Or, std::move(lhs), std::move(rhs)));
}

Formula Formula::cor(Formula lhs, Formula rhs) {
  return Formula(make_node(Op::Cor, std::move(lhs), std::move(rhs)));
}

Formula Formula::box(Formula child) {
  return Formula(make_node(Op::Box, std::move(child), std::nullopt));
}

Formula Formula::diamond(Formula child) {
  return Formula(make_node(Op::Diamond, std::move(child), std::nullopt));
}

Op Formula::op() const { return node_->op; }

bool Formula::is_atomic() const {
  switch (op()) {
    case Op::Top:
    case Op::Bot:
    case Op::Prop:
    case Op::NegProp:
    case Op::Dep:
    case Op::NegDep:
      return true;
    default:
      return false;
  }
}

bool Formula::is_binary() const {
  return op() == Op::And || op() == Op::Or || op() == Op::Cor;
}

bool Formula::is_modal() const { return op() == Op::Box || op() == Op::Diamond; }

const std::string& Formula::name() const { return node_->name; }
const std::vector<std::string>& Formula::dep_args() const { return node_->args; }
const Formula& Formula::lhs() const { return *node_->lhs; }
const Formula& Formula::rhs() const { return *node_->rhs; }
const Formula& Formula::child() const { return *node_->lhs; }
std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.size() != b.size()) return false;
  if (a.is_atomic()) return a.name() == b.name() && a.dep_args() == b.dep_args();
  if (a.is_modal()) return a.child() == b.child();
  return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

std::string_view operator_name(Operator op) {
  switch (op) {
    case Operator::Box: return "Box";
    case Operator::Diamond: return "Diamond";
    case Operator::And: return "And";
    case Operator::Or: return "Or";
    case Operator::NegAtom: return "NegAtom";
    case Operator::Top: return "Top";
    case Operator::Bot: return "Bot";
    case Operator::Dep: return "Dep";
    case Operator::Cor: return "Cor";
  }
  return "?";
}

std::optional<Operator> operator_from_name(std::string_view name) {
  for (Operator op : kAllOperators)
    if (operator_name(op) == name) return op;
  return std::nullopt;
}

std::string to_string(const OperatorSet& ops) {
  std::string out = "{";
  bool first = true;
  for (Operator op : kAllOperators) {
    if (!ops.contains(op)) continue;
    if (!first) out += ", ";
    out += operator_name(op);
    first = false;
  }
  return out + "}";
}

ParseError::ParseError(Kind kind, std::size_t offset, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(message), kind_(kind), offset_(offset), line_(line), column_(column) {}

FragmentSignature signature(const Formula& f) {
  FragmentSignature sig;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.op()) {
      case Op::Top: sig.present.insert(Operator::Top); break;
      case Op::Bot: sig.present.insert(Operator::Bot); break;
      case Op::Prop: break;
      case Op::NegProp: sig.present.insert(Operator::NegAtom); break;
      case Op::NegDep:
        sig.present.insert(Operator::NegAtom);
        [[fallthrough]];
      case Op::Dep: {
        sig.present.insert(Operator::Dep);
        int arity = static_cast<int>(g.dep_args().size());
        sig.max_dep_arity = std::max(sig.max_dep_arity.value_or(0), arity);
        break;
      }
      case Op::And: sig.present.insert(Operator::And); break;
      case Op::Or: sig.present.insert(Operator::Or); break;
      case Op::Cor: sig.present.insert(Operator::Cor); break;
      case Op::Box: sig.present.insert(Operator::Box); break;
      case Op::Diamond: sig.present.insert(Operator::Diamond); break;
    }
    if (g.is_modal()) {
      walk(g.child());
    } else if (g.is_binary()) {
      walk(g.lhs());
      walk(g.rhs());
    }
  };
  walk(f);
  return sig;
}

int modal_depth(const Formula& f) {
  if (f.is_modal()) return 1 + modal_depth(f.child());
  if (f.is_binary()) return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
  return 0;
}

std::set<std::string> propositions(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.op()) {
      case Op::Prop:
      case Op::NegProp:
        out.insert(g.name());
        break;
      case Op::Dep:
      case Op::NegDep:
        out.insert(g.name());
        out.insert(g.dep_args().begin(), g.dep_args().end());
        break;
      default:
        if (g.is_modal()) {
          walk(g.child());
        } else if (g.is_binary()) {
          walk(g.lhs());
          walk(g.rhs());
        }
    }
  };
  walk(f);
  return out;
}

std::size_t count_op(const Formula& f, Op op) {
  std::size_t n = f.op() == op ? 1 : 0;
  if (f.is_modal()) return n + count_op(f.child(), op);
  if (f.is_binary()) return n + count_op(f.lhs(), op) + count_op(f.rhs(), op);
  return n;
}

namespace {

// Rebuilds f bottom-up, applying `leaf` to atoms and `binary` to binary nodes.
// Unchanged subtrees are shared with the input.
Formula rewrite(const Formula& f, const std::function<Formula(const Formula&)>& leaf,
                const std::function<Op(Op)>& binary_op = [](Op op) { return op; }) {
  if (f.is_atomic()) return leaf(f);
  if (f.is_modal()) {
    Formula c = rewrite(f.child(), leaf, binary_op);
    if (c.node() == f.child().node()) return f;
    return f.op() == Op::Box ? Formula::box(std::move(c)) : Formula::diamond(std::move(c));
  }
  Formula l = rewrite(f.lhs(), leaf, binary_op);
  Formula r = rewrite(f.rhs(), leaf, binary_op);
  Op op = binary_op(f.op());
  if (op == f.op() && l.node() == f.lhs().node() && r.node() == f.rhs().node()) return f;
  switch (op) {
    case Op::And: return Formula::conj(std::move(l), std::move(r));
    case Op::Or: return Formula::split(std::move(l), std::move(r));
    default: return Formula::cor(std::move(l), std::move(r));
  }
}

}  // namespace

Formula normalize_neg_dep(const Formula& f) {
  return rewrite(f, [](const Formula& a) { return a.op() == Op::NegDep ? Formula::bot() : a; });
}

Formula monotone_collapse(const Formula& f) {
  static const Formula t = Formula::prop("t");
  return rewrite(f, [](const Formula& a) {
    switch (a.op()) {
      case Op::NegProp:
        throw PreconditionError("monotone_collapse: formula contains atomic negation ~" +
                                a.name());
      case Op::NegDep:
        throw PreconditionError(
            "monotone_collapse: formula contains a negated dependence atom "
            "(apply normalize_neg_dep first)");
      case Op::Prop:
        return a.name() == "t" ? a : t;
      case Op::Dep:
        return t;
      default:
        return a;
    }
  });
}

Formula single_modality_collapse(const Formula& f) {
  FragmentSignature sig = signature(f);
  if (sig.present.contains(Operator::Box) && sig.present.contains(Operator::Diamond))
    throw PreconditionError("single_modality_collapse: formula uses both [] and <>");
  return rewrite(
      f,
      [](const Formula& a) {
        if (a.op() == Op::Dep) return Formula::top();
        if (a.op() == Op::NegDep) return Formula::bot();
        return a;
      },
      [](Op op) { return op == Op::Cor ? Op::Or : op; });
}

namespace {

Formula fold(const std::vector<Formula>& parts, Formula empty,
             Formula (*combine)(Formula, Formula)) {
  if (parts.empty()) return empty;
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = combine(std::move(acc), parts[i]);
  return acc;
}

}  // namespace

Formula conj_all(const std::vector<Formula>& parts) {
  return fold(parts, Formula::top(), &Formula::conj);
}

Formula split_all(const std::vector<Formula>& parts) {
  return fold(parts, Formula::bot(), &Formula::split);
}

Formula cor_all(const std::vector<Formula>& parts) {
  return fold(parts, Formula::bot(), &Formula::cor);
}

Formula boxes(int count, Formula f) {
  for (int i = 0; i < count; ++i) f = Formula::box(std::move(f));
  return f;
}

Formula diamonds(int count, Formula f) {
  for (int i = 0; i < count; ++i) f = Formula::diamond(std::move(f));
  return f;
}

}  // namespace mdl
