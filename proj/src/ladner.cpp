#include <algorithm>
#include <iterator>

#include "ladner_engine.hpp"

namespace mdl::detail {

int MlGraph::intern(MlNode n) {
  auto key = std::make_tuple(static_cast<int>(n.kind), n.a, n.b, n.prop, n.positive, n.atom, n.args);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(n));
  index_.emplace(std::move(key), id);
  return id;
}

int MlGraph::prop_id(const std::string& name) {
  auto it = prop_index_.find(name);
  if (it != prop_index_.end()) return it->second;
  int id = static_cast<int>(props_.size());
  props_.push_back(name);
  prop_index_.emplace(name, id);
  return id;
}

int MlGraph::add(const Formula& f) { return add_rec(f); }

int MlGraph::add_rec(const Formula& f) {
  using K = MlNode::Kind;
  MlNode n;
  switch (f.op()) {
    case Op::Top: n.kind = K::Top; break;
    case Op::Bot: n.kind = K::Bot; break;
    case Op::Prop:
    case Op::NegProp:
      n.kind = K::Lit;
      n.prop = prop_id(f.name());
      n.positive = f.op() == Op::Prop;
      break;
    case Op::Dep:
      n.kind = K::Constraint;
      n.atom = static_cast<int>(atom_arity_.size());
      atom_arity_.push_back(static_cast<int>(f.dep_args().size()));
      for (const auto& a : f.dep_args()) n.args.push_back(prop_id(a));
      n.prop = prop_id(f.name());
      break;
    case Op::NegDep:
      throw PreconditionError("negated dependence atoms must be normalized before translation");
    case Op::Cor:
      throw PreconditionError("classical disjunction must be expanded before translation");
    case Op::And:
    case Op::Or: {
      n.kind = f.op() == Op::And ? K::And : K::Or;
      n.a = add_rec(f.lhs());
      n.b = add_rec(f.rhs());
      break;
    }
    case Op::Box:
    case Op::Diamond:
      n.kind = f.op() == Op::Box ? K::Box : K::Diamond;
      n.a = add_rec(f.child());
      break;
  }
  return intern(std::move(n));
}

namespace {

std::vector<std::size_t> merge(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<std::size_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void add_position(std::vector<std::size_t>& v, std::size_t p) {
  auto it = std::lower_bound(v.begin(), v.end(), p);
  if (it == v.end() || *it != p) v.insert(it, p);
}

constexpr std::size_t kCacheEntriesPerKey = 8;

}  // namespace

Ladner::Ladner(const MlGraph& g, std::vector<std::size_t> offsets, std::uint64_t budget,
               std::uint64_t* nodes)
    : g_(g), offsets_(std::move(offsets)), budget_(budget), nodes_(nodes) {}

void Ladner::tick() {
  if (++*nodes_ > budget_) throw BudgetExceeded{};
}

RunResult Ladner::run(int root, const BitVector& table) {
  table_ = &table;
  building_ = false;
  Outcome o = world({root});
  RunResult r{o.sat, {}};
  r.explanation.positions = std::move(o.positions);
  for (std::size_t p : r.explanation.positions) r.explanation.values.push_back(table.get(p));
  return r;
}

std::optional<ModelTree> Ladner::model(int root, const BitVector& table) {
  table_ = &table;
  building_ = true;
  tree_ = ModelTree{};
  built_.clear();
  Outcome o = world({root});
  building_ = false;
  if (!o.sat) return std::nullopt;
  tree_.root = o.children.back();
  return std::move(tree_);
}

Ladner::Outcome Ladner::world(std::vector<int> formulas) {
  std::sort(formulas.begin(), formulas.end());
  formulas.erase(std::unique(formulas.begin(), formulas.end()), formulas.end());

  if (building_) {
    if (auto it = built_.find(formulas); it != built_.end()) return {true, {}, {}, {it->second}};
  }
  auto& entries = cache_[formulas];
  for (const auto& e : entries) {
    if (building_ && e.sat) continue;
    bool agrees = true;
    for (std::size_t i = 0; i < e.positions.size() && agrees; ++i)
      agrees = table_->get(e.positions[i]) == e.values[i];
    if (agrees) return {e.sat, e.positions, {}, {}};
  }

  State s;
  s.pending = formulas;
  s.lits.assign(g_.prop_count(), 0);
  Outcome o = expand(std::move(s));

  CacheEntry entry{o.sat, o.positions, {}};
  for (std::size_t p : o.positions) entry.values.push_back(table_->get(p));
  auto& slot = cache_[formulas];
  if (slot.size() >= kCacheEntriesPerKey) slot.erase(slot.begin());
  slot.push_back(std::move(entry));

  if (building_ && o.sat) {
    int id = static_cast<int>(tree_.worlds.size());
    tree_.worlds.push_back({std::move(o.true_props), std::move(o.children)});
    built_.emplace(std::move(formulas), id);
    return {true, std::move(o.positions), {}, {id}};
  }
  return o;
}

Ladner::Outcome Ladner::expand(State s) {
  using K = MlNode::Kind;
  tick();
  while (!s.pending.empty()) {
    int id = s.pending.back();
    s.pending.pop_back();
    const MlNode& n = g_.node(id);
    switch (n.kind) {
      case K::Top:
        break;
      case K::Bot:
        return {false, {}, {}, {}};
      case K::Lit: {
        std::int8_t want = n.positive ? 1 : -1;
        if (s.lits[n.prop] == -want) return {false, {}, {}, {}};
        s.lits[n.prop] = want;
        break;
      }
      case K::And:
        s.pending.push_back(n.b);
        s.pending.push_back(n.a);
        break;
      case K::Box:
        s.boxes.push_back(n.a);
        break;
      case K::Diamond:
        s.diamonds.push_back(n.a);
        break;
      case K::Or:
      case K::Constraint:
        s.choices.push_back(id);
        break;
    }
  }

  if (!s.choices.empty()) {
    // Disjunctions before constraints: constraints then see more fixed literals.
    auto pick = std::find_if(s.choices.begin(), s.choices.end(),
                             [&](int c) { return g_.node(c).kind == K::Or; });
    if (pick == s.choices.end()) pick = s.choices.begin();
    int id = *pick;
    s.choices.erase(pick);
    const MlNode& n = g_.node(id);
    std::vector<std::size_t> failure;

    if (n.kind == K::Or) {
      for (int alt : {n.a, n.b}) {
        State next = s;
        next.pending.push_back(alt);
        Outcome o = expand(std::move(next));
        if (o.sat) return o;
        failure = merge(failure, o.positions);
      }
      return {false, std::move(failure), {}, {}};
    }

    int k = static_cast<int>(n.args.size());
    std::size_t inputs = std::size_t{1} << k;
    for (std::size_t x = 0; x < inputs; ++x) {
      State next = s;
      bool consistent = true;
      for (int i = 0; i < k && consistent; ++i) {
        std::int8_t want = ((x >> (k - 1 - i)) & 1) ? 1 : -1;
        std::int8_t& lit = next.lits[n.args[i]];
        if (lit == -want) consistent = false;
        lit = want;
      }
      if (!consistent) continue;
      std::size_t position = offsets_[n.atom] + x;
      std::int8_t want = table_->get(position) ? 1 : -1;
      if (next.lits[n.prop] == -want) {
        add_position(failure, position);
        continue;
      }
      next.lits[n.prop] = want;
      Outcome o = expand(std::move(next));
      add_position(o.positions, position);
      if (o.sat) return o;
      failure = merge(failure, o.positions);
    }
    return {false, std::move(failure), {}, {}};
  }

  std::sort(s.boxes.begin(), s.boxes.end());
  s.boxes.erase(std::unique(s.boxes.begin(), s.boxes.end()), s.boxes.end());
  std::sort(s.diamonds.begin(), s.diamonds.end());
  s.diamonds.erase(std::unique(s.diamonds.begin(), s.diamonds.end()), s.diamonds.end());

  Outcome result{true, {}, {}, {}};
  for (int d : s.diamonds) {
    std::vector<int> child = s.boxes;
    child.push_back(d);
    Outcome o = world(std::move(child));
    if (!o.sat) return {false, std::move(o.positions), {}, {}};
    result.positions = merge(result.positions, o.positions);
    if (building_) result.children.push_back(o.children.back());
  }
  if (building_)
    for (std::size_t p = 0; p < s.lits.size(); ++p)
      if (s.lits[p] == 1) result.true_props.push_back(static_cast<int>(p));
  return result;
}

}  // namespace mdl::detail
