#include <cstdlib>
#include <deque>
#include <map>
#include <queue>
#include <stdexcept>

#include "ladner_engine.hpp"
#include "mdl/classifier.hpp"
#include "mdl/teamsem.hpp"

namespace mdl {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Sat: return "sat";
    case Verdict::Unsat: return "unsat";
    case Verdict::BoundedUnsat: return "bounded-unsat";
    case Verdict::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::optional<Engine> engine_from_name(std::string_view name) {
  if (name == "auto") return Engine::Auto;
  if (name == "pipeline") return Engine::Pipeline;
  if (name == "bruteforce") return Engine::Bruteforce;
  if (name == "fastpath") return Engine::Fastpath;
  return std::nullopt;
}

std::uint64_t default_budget() {
  const char* env = std::getenv("MDL_BUDGET");
  if (!env || !*env) return kDefaultBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return kDefaultBudget;
  return v;
}

bool ladner_sat(const Formula& psi) {
  detail::MlGraph g;
  int root = g.add(psi);
  if (g.atom_count() != 0) throw PreconditionError("ladner_sat: dependence atoms are not modal logic");
  std::uint64_t nodes = 0;
  detail::Ladner l(g, {}, ~std::uint64_t{0}, &nodes);
  return l.run(root, BitVector(0)).sat;
}

namespace {

constexpr std::size_t kNogoodWindow = 256;

struct Nogood {
  std::vector<std::size_t> positions;
  std::vector<bool> values;

  bool covers(const BitVector& table) const {
    for (std::size_t i = 0; i < positions.size(); ++i)
      if (table.get(positions[i]) != values[i]) return false;
    return true;
  }
};

// First table (in numeric order) under which `root` is satisfiable.
std::optional<BitVector> search_tables(const detail::MlGraph& g, int root,
                                       const std::vector<std::size_t>& offsets, std::size_t bits,
                                       TableSearch mode, std::uint64_t budget,
                                       std::uint64_t* nodes) {
  BitVector table(bits);
  if (mode == TableSearch::Exhaustive) {
    std::vector<std::size_t> all(bits);
    for (std::size_t i = 0; i < bits; ++i) all[i] = i;
    do {
      detail::Ladner fresh(g, offsets, budget, nodes);
      if (fresh.run(root, table).sat) return table;
    } while (next_differing_index(table, all));
    return std::nullopt;
  }

  detail::Ladner ladner(g, offsets, budget, nodes);
  std::deque<Nogood> nogoods;
  while (true) {
    const Nogood* covering = nullptr;
    for (const auto& ng : nogoods)
      if (ng.covers(table)) {
        covering = &ng;
        break;
      }
    if (covering) {
      if (!next_differing_index(table, covering->positions)) return std::nullopt;
      continue;
    }
    detail::RunResult r = ladner.run(root, table);
    if (r.sat) return table;
    nogoods.push_front({r.explanation.positions, r.explanation.values});
    if (nogoods.size() > kNogoodWindow) nogoods.pop_back();
    if (!next_differing_index(table, r.explanation.positions)) return std::nullopt;
  }
}

KripkeStructure to_structure(const detail::ModelTree& tree, const detail::MlGraph& g) {
  KripkeStructure w;
  std::vector<int> order{tree.root};
  std::map<int, WorldId> ids;
  ids.emplace(tree.root, w.add_world("w0"));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : tree.worlds[order[i]].children) {
      if (ids.count(c)) continue;
      ids.emplace(c, w.add_world("w" + std::to_string(order.size())));
      order.push_back(c);
    }
  }
  for (int t : order) {
    WorldId from = ids.at(t);
    for (int p : tree.worlds[t].true_props) w.add_label(from, g.prop_name(p));
    for (int c : tree.worlds[t].children) w.add_edge(from, ids.at(c));
  }
  return w;
}

void verify_witness(const Formula& f, const Witness& wit, const char* engine) {
  if (wit.team.empty() || !check(wit.structure, wit.team, f))
    throw std::logic_error(std::string(engine) + ": witness does not satisfy the formula");
}

}  // namespace

SatResult sat_pipeline(const Formula& f, const SatOptions& options) {
  SatResult res;
  res.engine = "pipeline";
  std::uint64_t nodes = 0;
  try {
    CorExpansion expansion(f);
    BitVector cor(expansion.cor_count());
    while (true) {
      std::vector<std::size_t> used;
      Formula g = normalize_neg_dep(expansion.disjunct(cor, &used));
      SingletonTranslation tr(g);
      detail::MlGraph graph;
      int root = graph.add(g);
      if (graph.atom_count() != tr.atom_count())
        throw std::logic_error("pipeline: dependence atom numbering mismatch");
      std::vector<std::size_t> offsets;
      for (std::size_t l = 0; l < tr.atom_count(); ++l) offsets.push_back(tr.bit_position(l, 0));

      auto table = search_tables(graph, root, offsets, tr.index_bits(), options.table_search,
                                 options.budget, &nodes);
      if (table) {
        Formula psi = to_nnf_ml(tr.disjunct(*table));
        detail::MlGraph plain;
        int plain_root = plain.add(psi);
        std::uint64_t confirm_nodes = 0;
        detail::Ladner confirm(plain, {}, options.budget, &confirm_nodes);
        auto tree = confirm.model(plain_root, BitVector(0));
        nodes += confirm_nodes;
        if (!tree) throw std::logic_error("pipeline: selected disjunct failed confirmation");
        res.verdict = Verdict::Sat;
        res.disjunct_index.emplace(cor.to_bigint(), table->to_bigint());
        if (options.want_witness) {
          KripkeStructure w = to_structure(*tree, plain);
          Team t = Team::singleton(w.world_count(), 0);
          res.witness = Witness{std::move(w), std::move(t)};
          verify_witness(f, *res.witness, "pipeline");
        }
        break;
      }
      if (!next_differing_index(cor, used)) {
        res.verdict = Verdict::Unsat;
        break;
      }
    }
  } catch (const detail::BudgetExceeded&) {
    res.verdict = Verdict::BudgetExceeded;
    res.disjunct_index.reset();
    res.witness.reset();
  }
  res.nodes = nodes;
  return res;
}

namespace {

void flatten_disjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.op() == Op::Or || f.op() == Op::Cor) {
    flatten_disjuncts(f.lhs(), out);
    flatten_disjuncts(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

// A world satisfying f pointwise, or nothing when f is unsatisfiable. With a
// structure given, worlds are only created on success and the returned world
// is the last one created.
std::optional<WorldId> no_conjunction_model(const Formula& f, KripkeStructure* w) {
  std::vector<Formula> parts;
  flatten_disjuncts(f, parts);
  auto fresh = [&] { return w->add_world("w" + std::to_string(w->world_count())); };
  for (const auto& d : parts) {
    switch (d.op()) {
      case Op::Box:
      case Op::Top:
      case Op::Dep:
      case Op::NegProp:
        return w ? std::optional(fresh()) : std::optional<WorldId>(0);
      case Op::Prop: {
        if (!w) return 0;
        WorldId v = fresh();
        w->add_label(v, d.name());
        return v;
      }
      case Op::Diamond: {
        if (!w) {
          if (no_conjunction_model(d.child(), nullptr)) return 0;
          break;
        }
        if (auto c = no_conjunction_model(d.child(), w)) {
          WorldId v = fresh();
          w->add_edge(v, *c);
          return v;
        }
        break;
      }
      case Op::And:
        throw PreconditionError("sat_no_conjunction: formula contains &");
      default:
        break;
    }
  }
  return std::nullopt;
}

std::optional<std::map<std::string, bool>> literal_assignment(const Formula& f) {
  std::map<std::string, bool> lits;
  std::vector<Formula> stack{f};
  bool ok = true;
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    switch (g.op()) {
      case Op::And:
        stack.push_back(g.rhs());
        stack.push_back(g.lhs());
        break;
      case Op::Top:
      case Op::Dep:
        break;
      case Op::Bot:
      case Op::NegDep:
        ok = false;
        break;
      case Op::Prop:
      case Op::NegProp: {
        bool want = g.op() == Op::Prop;
        auto [it, inserted] = lits.emplace(g.name(), want);
        if (!inserted && it->second != want) ok = false;
        break;
      }
      default:
        throw PreconditionError("sat_conjunction_of_literals: formula contains " +
                                std::string(g.is_modal() ? "a modality" : "a disjunction"));
    }
  }
  if (!ok) return std::nullopt;
  return lits;
}

SatResult fastpath(const Formula& f, EngineChoice choice, bool want_witness) {
  SatResult res;
  res.engine = std::string(engine_choice_name(choice));
  KripkeStructure w;
  bool sat = false;
  switch (choice) {
    case EngineChoice::FastpathTrivial: {
      sat = true;
      WorldId v = w.add_world("w0");
      w.add_edge(v, v);
      for (const auto& p : propositions(f)) w.add_label(v, p);
      break;
    }
    case EngineChoice::FastpathNoConjunction:
      sat = sat_no_conjunction(f);
      if (sat && want_witness) {
        no_conjunction_model(f, &w);
      }
      break;
    case EngineChoice::FastpathLiteralConjunction: {
      auto lits = literal_assignment(f);
      sat = lits.has_value();
      if (sat) {
        WorldId v = w.add_world("w0");
        for (const auto& [p, positive] : *lits)
          if (positive) w.add_label(v, p);
      }
      break;
    }
    case EngineChoice::Pipeline:
      throw std::logic_error("fastpath: no fast path for this fragment");
  }
  res.verdict = sat ? Verdict::Sat : Verdict::Unsat;
  if (sat && want_witness) {
    WorldId root = choice == EngineChoice::FastpathNoConjunction
                       ? static_cast<WorldId>(w.world_count() - 1)
                       : 0;
    res.witness = Witness{w, Team::singleton(w.world_count(), root)};
    verify_witness(f, *res.witness, "fastpath");
  }
  return res;
}

}  // namespace

bool sat_no_conjunction(const Formula& f) {
  if (signature(f).present.contains(Operator::And))
    throw PreconditionError("sat_no_conjunction: formula contains &");
  return no_conjunction_model(f, nullptr).has_value();
}

bool sat_conjunction_of_literals(const Formula& f) { return literal_assignment(f).has_value(); }

SatResult sat(const Formula& f, const SatOptions& options) {
  switch (options.engine) {
    case Engine::Pipeline:
      return sat_pipeline(f, options);
    case Engine::Bruteforce: {
      int depth = options.bf_depth < 0 ? modal_depth(f) : options.bf_depth;
      return sat_bruteforce(f, depth, options.bf_branching, options.bf_candidate_cap,
                            options.want_witness);
    }
    case Engine::Fastpath: {
      EngineChoice choice = recommend_engine(signature(f).present);
      if (choice == EngineChoice::Pipeline)
        throw PreconditionError("no fast path applies to this fragment; use the pipeline");
      return fastpath(f, choice, options.want_witness);
    }
    case Engine::Auto: {
      EngineChoice choice = recommend_engine(signature(f).present);
      if (choice == EngineChoice::Pipeline) return sat_pipeline(f, options);
      return fastpath(f, choice, options.want_witness);
    }
  }
  throw std::logic_error("sat: unknown engine");
}

}  // namespace mdl
