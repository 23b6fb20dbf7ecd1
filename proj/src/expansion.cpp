#include <unordered_map>

#include "mdl/solver.hpp"

namespace mdl {

BigInt BitVector::to_bigint() const {
  BigInt out = 0;
  for (std::size_t i = words_.size(); i-- > 0;) {
    out <<= 64;
    out += words_[i];
  }
  return out;
}

BitVector BitVector::from_bigint(const BigInt& value, std::size_t bits) {
  if (value < 0 || (bits < 4096 && value >= (BigInt(1) << bits)))
    throw std::out_of_range("index does not fit in " + std::to_string(bits) + " bits");
  BitVector out(bits);
  BigInt rest = value;
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    out.words_[i] = static_cast<std::uint64_t>(rest & BigInt(~std::uint64_t{0}));
    rest >>= 64;
  }
  return out;
}

bool next_differing_index(BitVector& current, const std::vector<std::size_t>& relevant) {
  std::vector<bool> is_relevant(current.size(), false);
  for (std::size_t p : relevant) is_relevant.at(p) = true;
  bool lower_relevant_one = false;
  for (std::size_t x = 0; x < current.size(); ++x) {
    if (!current.get(x) && (is_relevant[x] || lower_relevant_one)) {
      current.set(x, true);
      for (std::size_t y = 0; y < x; ++y) current.set(y, false);
      return true;
    }
    if (is_relevant[x] && current.get(x)) lower_relevant_one = true;
  }
  return false;
}

CorExpansion::CorExpansion(Formula f) : f_(std::move(f)), cor_count_(count_op(f_, Op::Cor)) {}

BigInt CorExpansion::disjunct_count() const { return BigInt(1) << cor_count_; }

namespace {

class CorCounter {
 public:
  std::size_t operator()(const Formula& f) {
    if (f.is_atomic()) return 0;
    auto it = memo_.find(f.node());
    if (it != memo_.end()) return it->second;
    std::size_t n = f.op() == Op::Cor ? 1 : 0;
    if (f.is_modal()) {
      n += (*this)(f.child());
    } else {
      n += (*this)(f.lhs()) + (*this)(f.rhs());
    }
    memo_.emplace(f.node(), n);
    return n;
  }

 private:
  std::unordered_map<const Node*, std::size_t> memo_;
};

Formula rebuild_binary(Op op, Formula l, Formula r) {
  switch (op) {
    case Op::And: return Formula::conj(std::move(l), std::move(r));
    case Op::Or: return Formula::split(std::move(l), std::move(r));
    default: return Formula::cor(std::move(l), std::move(r));
  }
}

}  // namespace

Formula CorExpansion::disjunct(const BitVector& bits, std::vector<std::size_t>* used) const {
  if (bits.size() != cor_count_) throw std::invalid_argument("CorExpansion: wrong index width");
  CorCounter cors;
  std::size_t counter = 0;
  auto build = [&](auto&& self, const Formula& g) -> Formula {
    if (cors(g) == 0) return g;
    if (g.op() == Op::Cor) {
      std::size_t j = counter++;
      if (used) used->push_back(j);
      if (!bits.get(j)) {
        Formula r = self(self, g.lhs());
        counter += cors(g.rhs());
        return r;
      }
      counter += cors(g.lhs());
      return self(self, g.rhs());
    }
    if (g.is_modal()) {
      Formula c = self(self, g.child());
      return g.op() == Op::Box ? Formula::box(std::move(c)) : Formula::diamond(std::move(c));
    }
    Formula l = self(self, g.lhs());
    Formula r = self(self, g.rhs());
    return rebuild_binary(g.op(), std::move(l), std::move(r));
  };
  return build(build, f_);
}

Formula CorExpansion::disjunct(const BigInt& index) const {
  return disjunct(BitVector::from_bigint(index, cor_count_));
}

Formula alpha_encoding(const std::vector<bool>& table, const std::vector<std::string>& vars) {
  std::size_t j = vars.size();
  if (j >= 8 * sizeof(std::size_t) || table.size() != (std::size_t{1} << j))
    throw std::invalid_argument("alpha_encoding: table needs 2^" + std::to_string(j) + " entries");
  std::vector<Formula> minterms;
  for (std::size_t x = table.size(); x-- > 0;) {
    if (!table[x]) continue;
    std::vector<Formula> lits;
    for (std::size_t i = 0; i < j; ++i) {
      bool bit = (x >> (j - 1 - i)) & 1;
      lits.push_back(bit ? Formula::prop(vars[i]) : Formula::neg_prop(vars[i]));
    }
    minterms.push_back(conj_all(lits));
  }
  return split_all(minterms);
}

namespace {

Formula negate_propositional(const Formula& f) {
  switch (f.op()) {
    case Op::Top: return Formula::bot();
    case Op::Bot: return Formula::top();
    case Op::Prop: return Formula::neg_prop(f.name());
    case Op::NegProp: return Formula::prop(f.name());
    case Op::And: return Formula::split(negate_propositional(f.lhs()), negate_propositional(f.rhs()));
    case Op::Or: return Formula::conj(negate_propositional(f.lhs()), negate_propositional(f.rhs()));
    default:
      throw PreconditionError("to_nnf_ml: alpha must be built from literals, constants, & and |");
  }
}

}  // namespace

Formula to_nnf_ml(const Formula& psi) {
  switch (psi.op()) {
    case Op::Dep:
    case Op::NegDep:
      throw PreconditionError("to_nnf_ml: dependence atoms must be translated first");
    case Op::Cor:
      throw PreconditionError("to_nnf_ml: classical disjunction must be expanded first");
    case Op::And: {
      Formula l = to_nnf_ml(psi.lhs());
      Formula r = to_nnf_ml(psi.rhs());
      if (l.op() == Op::Bot || r.op() == Op::Bot) return Formula::bot();
      if (l.op() == Op::Top) return r;
      if (r.op() == Op::Top) return l;
      if (l.node() == psi.lhs().node() && r.node() == psi.rhs().node()) return psi;
      return Formula::conj(std::move(l), std::move(r));
    }
    case Op::Or: {
      Formula l = to_nnf_ml(psi.lhs());
      Formula r = to_nnf_ml(psi.rhs());
      if (l.op() == Op::Top || r.op() == Op::Top) return Formula::top();
      if (l.op() == Op::Bot) return r;
      if (r.op() == Op::Bot) return l;
      if (l.node() == psi.lhs().node() && r.node() == psi.rhs().node()) return psi;
      return Formula::split(std::move(l), std::move(r));
    }
    case Op::Box: {
      Formula c = to_nnf_ml(psi.child());
      if (c.op() == Op::Top) return Formula::top();
      if (c.node() == psi.child().node()) return psi;
      return Formula::box(std::move(c));
    }
    case Op::Diamond: {
      Formula c = to_nnf_ml(psi.child());
      if (c.op() == Op::Bot) return Formula::bot();
      if (c.node() == psi.child().node()) return psi;
      return Formula::diamond(std::move(c));
    }
    default:
      return psi;
  }
}

Formula to_nnf_ml(const Formula& alpha, const std::string& target) {
  Formula positive = Formula::conj(alpha, Formula::prop(target));
  Formula negative = Formula::conj(negate_propositional(alpha), Formula::neg_prop(target));
  return to_nnf_ml(Formula::split(std::move(positive), std::move(negative)));
}

namespace {

constexpr int kMaxTranslatedArity = 20;

}  // namespace

SingletonTranslation::SingletonTranslation(Formula f) : f_(std::move(f)) {
  auto walk = [&](auto&& self, const Formula& g) -> void {
    switch (g.op()) {
      case Op::Cor:
        throw PreconditionError("translate_singleton: expand classical disjunction first");
      case Op::NegDep:
        throw PreconditionError("translate_singleton: normalize negated dependence atoms first");
      case Op::Dep: {
        int k = static_cast<int>(g.dep_args().size());
        if (k > kMaxTranslatedArity)
          throw PreconditionError("translate_singleton: dependence arity " + std::to_string(k) +
                                  " exceeds the supported maximum of " +
                                  std::to_string(kMaxTranslatedArity));
        arities_.push_back(k);
        return;
      }
      default:
        if (g.is_modal()) {
          self(self, g.child());
        } else if (g.is_binary()) {
          self(self, g.lhs());
          self(self, g.rhs());
        }
    }
  };
  walk(walk, f_);
  offsets_.assign(arities_.size(), 0);
  for (std::size_t i = arities_.size(); i-- > 0;) {
    offsets_[i] = total_bits_;
    total_bits_ += std::size_t{1} << arities_[i];
  }
}

BigInt SingletonTranslation::disjunct_count() const { return BigInt(1) << total_bits_; }

Formula SingletonTranslation::disjunct(const BitVector& selection) const {
  if (selection.size() != total_bits_)
    throw std::invalid_argument("SingletonTranslation: wrong index width");
  std::size_t atom = 0;
  auto build = [&](auto&& self, const Formula& g) -> Formula {
    if (g.op() == Op::Dep) {
      std::size_t l = atom++;
      std::vector<bool> table(std::size_t{1} << arities_[l]);
      for (std::size_t x = 0; x < table.size(); ++x) table[x] = selection.get(bit_position(l, x));
      return to_nnf_ml(alpha_encoding(table, g.dep_args()), g.name());
    }
    if (g.is_atomic()) return g;
    if (g.is_modal()) {
      Formula c = self(self, g.child());
      if (c.node() == g.child().node()) return g;
      return g.op() == Op::Box ? Formula::box(std::move(c)) : Formula::diamond(std::move(c));
    }
    Formula l = self(self, g.lhs());
    Formula r = self(self, g.rhs());
    if (l.node() == g.lhs().node() && r.node() == g.rhs().node()) return g;
    return rebuild_binary(g.op(), std::move(l), std::move(r));
  };
  return build(build, f_);
}

Formula SingletonTranslation::disjunct(const BigInt& index) const {
  return disjunct(BitVector::from_bigint(index, total_bits_));
}

}  // namespace mdl
