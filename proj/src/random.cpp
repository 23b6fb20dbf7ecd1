#include "mdl/random.hpp"

namespace mdl {

namespace {

class Generator {
 public:
  Generator(Rng& rng, const FormulaShape& shape)
      : rng_(rng), shape_(shape), deps_left_(shape.max_dep_atoms), cors_left_(shape.max_cor) {}

  Formula draw(int size, int depth) {
    bool modal_ok = shape_.max_modal_depth < 0 || depth < shape_.max_modal_depth;
    std::vector<Op> unary;
    if (modal_ok && has(Operator::Box)) unary.push_back(Op::Box);
    if (modal_ok && has(Operator::Diamond)) unary.push_back(Op::Diamond);
    std::vector<Op> binary;
    if (has(Operator::And)) binary.push_back(Op::And);
    if (has(Operator::Or)) binary.push_back(Op::Or);
    if (has(Operator::Cor) && cors_left_ != 0) binary.push_back(Op::Cor);

    bool can_unary = size >= 2 && !unary.empty();
    bool can_binary = size >= 3 && !binary.empty();
    if (!can_unary && !can_binary) return atom();
    bool pick_unary = can_unary && (!can_binary || below(rng_, 3) == 0);
    if (pick_unary) {
      Op op = unary[below(rng_, unary.size())];
      Formula c = draw(size - 1, depth + 1);
      return op == Op::Box ? Formula::box(std::move(c)) : Formula::diamond(std::move(c));
    }
    Op op = binary[below(rng_, binary.size())];
    if (op == Op::Cor && cors_left_ > 0) --cors_left_;
    int left = 1 + static_cast<int>(below(rng_, size - 2));
    Formula l = draw(left, depth);
    Formula r = draw(size - 1 - left, depth);
    switch (op) {
      case Op::And: return Formula::conj(std::move(l), std::move(r));
      case Op::Or: return Formula::split(std::move(l), std::move(r));
      default: return Formula::cor(std::move(l), std::move(r));
    }
  }

 private:
  bool has(Operator op) const { return shape_.ops.contains(op); }

  const std::string& prop() { return shape_.props[below(rng_, shape_.props.size())]; }

  Formula atom() {
    std::vector<Op> kinds{Op::Prop};
    if (has(Operator::NegAtom)) kinds.push_back(Op::NegProp);
    if (has(Operator::Top)) kinds.push_back(Op::Top);
    if (has(Operator::Bot)) kinds.push_back(Op::Bot);
    if (has(Operator::Dep) && deps_left_ != 0) {
      kinds.push_back(Op::Dep);
      if (has(Operator::NegAtom)) kinds.push_back(Op::NegDep);
    }
    Op op = kinds[below(rng_, kinds.size())];
    switch (op) {
      case Op::Prop: return Formula::prop(prop());
      case Op::NegProp: return Formula::neg_prop(prop());
      case Op::Top: return Formula::top();
      case Op::Bot: return Formula::bot();
      default: {
        if (deps_left_ > 0) --deps_left_;
        int arity = static_cast<int>(below(rng_, shape_.max_dep_arity + 1));
        std::vector<std::string> args;
        for (int i = 0; i < arity; ++i) args.push_back(prop());
        std::string target = prop();
        return op == Op::Dep ? Formula::dep(std::move(args), std::move(target))
                             : Formula::neg_dep(std::move(args), std::move(target));
      }
    }
  }

  Rng& rng_;
  const FormulaShape& shape_;
  int deps_left_;
  int cors_left_;
};

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  if (shape.size < 1 || shape.props.empty())
    throw std::invalid_argument("random_formula: need a positive size and a proposition");
  Generator g(rng, shape);
  return g.draw(1 + static_cast<int>(below(rng, shape.size)), 0);
}

KripkeStructure random_structure(Rng& rng, int worlds, const std::vector<std::string>& props,
                                 double edge_p, double label_p) {
  KripkeStructure w;
  for (int i = 0; i < worlds; ++i) w.add_world("w" + std::to_string(i));
  for (int i = 0; i < worlds; ++i) {
    for (const auto& p : props)
      if (coin(rng, label_p)) w.add_label(i, p);
    for (int j = 0; j < worlds; ++j)
      if (coin(rng, edge_p)) w.add_edge(i, j);
  }
  return w;
}

Team random_team(Rng& rng, const KripkeStructure& w) {
  Team t = w.empty_team();
  for (WorldId v = 0; v < w.world_count(); ++v)
    if (coin(rng)) t.insert(v);
  return t;
}

}  // namespace mdl
