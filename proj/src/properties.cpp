#include "mdl/properties.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "mdl/classifier.hpp"
#include "mdl/random.hpp"
#include "mdl/reductions.hpp"
#include "mdl/solver.hpp"
#include "mdl/teamsem.hpp"

namespace mdl {

PropertyScale PropertyScale::quick() {
  PropertyScale s;
  s.downward_closure = 100;
  s.empty_team_max_size = 4;
  s.cor_expansion = 30;
  s.translation = 20;
  s.translation_exhaustive_worlds = 2;
  s.ladner = 50;
  s.engine_agreement = 40;
  s.modal_decomposition = 20;
  s.collapses = 20;
  s.routing = 20;
  s.qcsp_max_n = 3;
  s.qbf_max_n = 2;
  s.max_clauses = 1;
  return s;
}

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : start_(std::chrono::steady_clock::now()) {
    report_.name = std::move(name);
  }

  void pass() { ++report_.cases; }
  void inconclusive() { ++report_.inconclusive; }
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++report_.cases;
    if (ok) return;
    if (report_.violations++ == 0) report_.first_violation = describe();
  }
  void note(const std::string& text) { report_.note = text; }

  PropertyReport finish() {
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  PropertyReport report_;
  std::chrono::steady_clock::time_point start_;
};

const std::vector<std::string> kTwoProps = {"p", "q"};
const std::vector<std::string> kThreeProps = {"p", "q", "r"};

OperatorSet all_ops() { return OperatorSet::from_mask((1u << kOperatorCount) - 1); }

OperatorSet without(OperatorSet s, std::initializer_list<Operator> ops) {
  for (Operator op : ops) s.erase(op);
  return s;
}

std::string on_structure(const Formula& f, const KripkeStructure& w, const Team& t) {
  std::ostringstream out;
  out << render(f) << " on team {" << format_team(w, t) << "} of\n" << write_structure(w);
  return out.str();
}

SatOptions pipeline_options() {
  SatOptions o;
  o.engine = Engine::Pipeline;
  return o;
}

std::optional<bool> decided(const SatResult& r) {
  if (r.verdict == Verdict::Sat) return true;
  if (r.verdict == Verdict::Unsat) return false;
  return std::nullopt;
}

}  // namespace

PropertyReport check_table_totality() {
  Suite suite("table totality");
  for (unsigned mask = 0; mask < (1u << kOperatorCount); ++mask) {
    for (std::optional<int> bound : {std::optional<int>{}, std::optional<int>{3}}) {
      FragmentSignature sig{OperatorSet::from_mask(mask), std::nullopt};
      if (sig.present.contains(Operator::Dep)) sig.max_dep_arity = 1;
      bool ok = true;
      std::string why;
      try {
        Classification c = classify(sig, bound);
        for (const auto& a : c.matched_rules)
          for (const auto& b : c.matched_rules)
            if (!complexity_comparable(a.complexity, b.complexity)) {
              ok = false;
              why = a.id + " and " + b.id + " are incomparable";
            }
      } catch (const std::exception& e) {
        ok = false;
        why = e.what();
      }
      suite.expect(ok, [&] {
        return to_string(sig.present) + (bound ? " bounded: " : " unbounded: ") + why;
      });
    }
  }
  return suite.finish();
}

PropertyReport check_downward_closure(const PropertyScale& s) {
  Suite suite("downward closure");
  Rng rng(s.seed * 1000 + 2);
  FormulaShape shape;
  shape.size = 10;
  shape.max_dep_arity = 2;
  std::uint64_t nontrivial = 0;
  for (int i = 0; i < s.downward_closure; ++i) {
    Formula f = random_formula(rng, shape);
    KripkeStructure w = random_structure(rng, 1 + static_cast<int>(below(rng, 4)), kTwoProps);
    Team t = random_team(rng, w);
    ModelChecker mc(w);
    if (!mc.check(t, f)) {
      suite.pass();
      continue;
    }
    ++nontrivial;
    auto members = t.members();
    bool ok = true;
    Team bad;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << members.size()) && ok; ++sub) {
      Team u = w.empty_team();
      for (std::size_t j = 0; j < members.size(); ++j)
        if ((sub >> j) & 1) u.insert(members[j]);
      if (!mc.check(u, f)) {
        ok = false;
        bad = u;
      }
    }
    suite.expect(ok, [&] {
      return on_structure(f, w, t) + "fails on subteam {" + format_team(w, bad) + "}";
    });
  }
  suite.note(std::to_string(nontrivial) + " triples satisfied f and had their subteams checked");
  return suite.finish();
}

namespace {

std::vector<Formula> atoms_over(const std::vector<std::string>& props) {
  std::vector<Formula> out{Formula::top(), Formula::bot()};
  for (const auto& p : props) {
    out.push_back(Formula::prop(p));
    out.push_back(Formula::neg_prop(p));
  }
  std::size_t n = props.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::string> args;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) args.push_back(props[i]);
    for (const auto& target : props) {
      out.push_back(Formula::dep(args, target));
      out.push_back(Formula::neg_dep(args, target));
    }
  }
  return out;
}

// Calls visit on every formula of exactly `size` nodes; by_size[i] holds all
// formulas of i nodes for i < size.
template <typename Visit>
void formulas_of_size(int size, const std::vector<std::vector<Formula>>& by_size, Visit&& visit) {
  if (size == 1) {
    for (const auto& a : by_size[1]) visit(a);
    return;
  }
  for (const auto& c : by_size[size - 1]) {
    visit(Formula::box(c));
    visit(Formula::diamond(c));
  }
  for (int left = 1; left + 1 < size; ++left) {
    int right = size - 1 - left;
    for (const auto& l : by_size[left])
      for (const auto& r : by_size[right]) {
        visit(Formula::conj(l, r));
        visit(Formula::split(l, r));
        visit(Formula::cor(l, r));
      }
  }
}

}  // namespace

PropertyReport check_empty_team(const PropertyScale& s) {
  Suite suite("empty team");
  Rng rng(s.seed * 1000 + 3);
  std::vector<KripkeStructure> pool;
  for (int i = 0; i < 8; ++i)
    pool.push_back(random_structure(rng, 1 + static_cast<int>(below(rng, 3)), kTwoProps));
  std::vector<std::vector<Formula>> by_size(2);
  by_size[1] = atoms_over(kTwoProps);
  std::uint64_t counter = 0;
  auto visit = [&](const Formula& f) {
    const KripkeStructure& w = pool[counter++ % pool.size()];
    suite.expect(check(w, w.empty_team(), f), [&] { return on_structure(f, w, w.empty_team()); });
  };
  for (int size = 1; size <= s.empty_team_max_size; ++size) {
    if (size == s.empty_team_max_size) {
      formulas_of_size(size, by_size, visit);
    } else {
      std::vector<Formula> level;
      formulas_of_size(size, by_size, [&](const Formula& f) {
        visit(f);
        level.push_back(f);
      });
      if (size == 1) continue;
      by_size.push_back(std::move(level));
    }
  }
  suite.note("all formulas up to size " + std::to_string(s.empty_team_max_size) + " over p, q");
  return suite.finish();
}

PropertyReport check_cor_expansion(const PropertyScale& s) {
  Suite suite("classical disjunction expansion");
  Rng rng(s.seed * 1000 + 4);
  FormulaShape shape;
  shape.size = 10;
  shape.max_cor = 3;
  shape.max_modal_depth = 2;
  for (int i = 0; i < s.cor_expansion; ++i) {
    Formula f = random_formula(rng, shape);
    CorExpansion exp(f);
    std::vector<Formula> parts;
    for (BigInt j = 0; j < exp.disjunct_count(); ++j) parts.push_back(exp.disjunct(j));

    bool model_ok = true;
    std::string where;
    for (int k = 0; k < 5 && model_ok; ++k) {
      KripkeStructure w = random_structure(rng, 1 + static_cast<int>(below(rng, 4)), kTwoProps);
      Team t = random_team(rng, w);
      bool any = false;
      for (const auto& d : parts) any = any || check(w, t, d);
      if (check(w, t, f) != any) {
        model_ok = false;
        where = on_structure(f, w, t);
      }
    }
    suite.expect(model_ok, [&] { return "model checking differs: " + where; });

    auto whole = decided(sat_pipeline(f, pipeline_options()));
    std::optional<bool> any = false;
    for (const auto& d : parts) {
      auto r = decided(sat_pipeline(d, pipeline_options()));
      if (!r) {
        any.reset();
        break;
      }
      if (*r) {
        any = true;
        break;
      }
    }
    if (!whole || !any) {
      suite.inconclusive();
      continue;
    }
    suite.expect(*whole == *any, [&] { return "satisfiability differs for " + render(f); });
  }
  return suite.finish();
}

namespace {

// Every structure on `worlds` worlds over props.
template <typename Visit>
void all_structures(int worlds, const std::vector<std::string>& props, Visit&& visit) {
  int edges = worlds * worlds;
  int labels = worlds * static_cast<int>(props.size());
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << edges); ++e)
    for (std::uint64_t l = 0; l < (std::uint64_t{1} << labels); ++l) {
      KripkeStructure w;
      for (int i = 0; i < worlds; ++i) w.add_world("w" + std::to_string(i));
      for (int i = 0; i < edges; ++i)
        if ((e >> i) & 1) w.add_edge(i / worlds, i % worlds);
      for (int i = 0; i < labels; ++i)
        if ((l >> i) & 1) w.add_label(i / props.size(), props[i % props.size()]);
      visit(w);
    }
}

}  // namespace

PropertyReport check_singleton_translation(const PropertyScale& s) {
  Suite suite("singleton translation");
  Rng rng(s.seed * 1000 + 5);
  FormulaShape shape;
  shape.size = 10;
  shape.ops = without(all_ops(), {Operator::Cor});
  shape.max_dep_atoms = 2;
  shape.max_dep_arity = 1;
  std::vector<KripkeStructure> structures;
  for (int n = 1; n <= s.translation_exhaustive_worlds; ++n)
    all_structures(n, kTwoProps, [&](const KripkeStructure& w) { structures.push_back(w); });
  std::size_t exhaustive = structures.size();
  for (int i = 0; i < 64; ++i) structures.push_back(random_structure(rng, 4, kTwoProps));

  for (int i = 0; i < s.translation; ++i) {
    Formula f = random_formula(rng, shape);
    SingletonTranslation tr(normalize_neg_dep(f));
    std::vector<Formula> parts;
    for (BigInt j = 0; j < tr.disjunct_count(); ++j) parts.push_back(tr.disjunct(j));
    bool ok = true;
    std::string where;
    for (const auto& w : structures) {
      ModelChecker mc(w);
      for (WorldId v = 0; v < w.world_count() && ok; ++v) {
        bool team = mc.check(Team::singleton(w.world_count(), v), f);
        bool any = false;
        for (const auto& d : parts) any = any || check_ml(w, v, d);
        if (team != any) {
          ok = false;
          where = on_structure(f, w, Team::singleton(w.world_count(), v));
        }
      }
      if (!ok) break;
    }
    suite.expect(ok, [&] { return where; });
  }
  suite.note("every structure with at most " + std::to_string(s.translation_exhaustive_worlds) +
             " worlds (" + std::to_string(exhaustive) + ") plus " +
             std::to_string(structures.size() - exhaustive) + " random 4-world structures");
  return suite.finish();
}

namespace {

struct Subformulas {
  std::vector<Formula> list;  // children before parents
  std::map<std::string, int> index;

  int add(const Formula& f) {
    std::string key = render(f);
    if (auto it = index.find(key); it != index.end()) return it->second;
    if (f.is_modal()) add(f.child());
    if (f.is_binary()) {
      add(f.lhs());
      add(f.rhs());
    }
    int id = static_cast<int>(list.size());
    list.push_back(f);
    index.emplace(std::move(key), id);
    return id;
  }
  int id(const Formula& f) const { return index.at(render(f)); }
};

}  // namespace

int count_distinct_diamonds(const Formula& psi) {
  Subformulas subs;
  subs.add(psi);
  int n = 0;
  for (const auto& f : subs.list) n += f.op() == Op::Diamond;
  return n;
}

bool ml_tree_model_exists(const Formula& psi, int branching) {
  Subformulas subs;
  int root = subs.add(psi);
  for (const auto& f : subs.list)
    if (f.op() == Op::Dep || f.op() == Op::NegDep || f.op() == Op::Cor)
      throw PreconditionError("ml_tree_model_exists: modal-logic formulas only");
  std::set<std::string> prop_set = propositions(psi);
  std::vector<std::string> props(prop_set.begin(), prop_set.end());
  std::size_t n = subs.list.size();
  std::vector<int> child(n, -1), lhs(n, -1), rhs(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Formula& f = subs.list[i];
    if (f.is_modal()) child[i] = subs.id(f.child());
    if (f.is_binary()) {
      lhs[i] = subs.id(f.lhs());
      rhs[i] = subs.id(f.rhs());
    }
  }
  using Vec = std::vector<bool>;
  // all_of/any_of over the successors' truth vectors.
  auto eval = [&](std::uint64_t label, const Vec& all, const Vec& any) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Formula& f = subs.list[i];
      switch (f.op()) {
        case Op::Top: v[i] = true; break;
        case Op::Bot: v[i] = false; break;
        case Op::Prop:
        case Op::NegProp: {
          std::size_t p = std::find(props.begin(), props.end(), f.name()) - props.begin();
          v[i] = (((label >> p) & 1) != 0) == (f.op() == Op::Prop);
          break;
        }
        case Op::And: v[i] = v[lhs[i]] && v[rhs[i]]; break;
        case Op::Or: v[i] = v[lhs[i]] || v[rhs[i]]; break;
        case Op::Box: v[i] = all[child[i]]; break;
        case Op::Diamond: v[i] = any[child[i]]; break;
        default: break;
      }
    }
    return v;
  };

  int depth = modal_depth(psi);
  std::set<Vec> level;
  for (int j = depth; j >= 0; --j) {
    std::set<std::pair<Vec, Vec>> combos{{Vec(n, true), Vec(n, false)}};
    if (j < depth) {
      for (int b = 0; b < branching; ++b) {
        auto next = combos;
        for (const auto& [all, any] : combos)
          for (const auto& v : level) {
            Vec a = all, o = any;
            for (std::size_t i = 0; i < n; ++i) {
              a[i] = a[i] && v[i];
              o[i] = o[i] || v[i];
            }
            next.emplace(std::move(a), std::move(o));
          }
        if (next.size() == combos.size()) break;
        combos = std::move(next);
      }
    }
    std::set<Vec> here;
    for (std::uint64_t label = 0; label < (std::uint64_t{1} << props.size()); ++label)
      for (const auto& [all, any] : combos) here.insert(eval(label, all, any));
    level = std::move(here);
  }
  for (const auto& v : level)
    if (v[root]) return true;
  return false;
}

PropertyReport check_ladner(const PropertyScale& s) {
  Suite suite("tableau vs tree-model search");
  Rng rng(s.seed * 1000 + 6);
  FormulaShape shape;
  shape.size = 12;
  shape.props = kThreeProps;
  shape.ops = without(all_ops(), {Operator::Dep, Operator::Cor});
  shape.max_modal_depth = 2;
  int sat_count = 0;
  for (int i = 0; i < s.ladner; ++i) {
    Formula psi = random_formula(rng, shape);
    bool tableau = ladner_sat(psi);
    bool search = ml_tree_model_exists(psi, std::max(1, count_distinct_diamonds(psi)));
    sat_count += tableau;
    suite.expect(tableau == search, [&] {
      return render(psi) + ": tableau " + (tableau ? "sat" : "unsat") + ", search " +
             (search ? "sat" : "unsat");
    });
  }
  suite.note(std::to_string(sat_count) + " satisfiable");
  return suite.finish();
}

PropertyReport check_engine_agreement(const PropertyScale& s) {
  Suite suite("pipeline vs bounded search");
  Rng rng(s.seed * 1000 + 7);
  FormulaShape shape;
  shape.size = 12;
  shape.props = kThreeProps;
  shape.max_dep_arity = 1;
  shape.max_modal_depth = 2;
  constexpr std::uint64_t kCap = 200'000;
  int lowered = 0, both_sat = 0, bounded_only = 0;
  for (int i = 0; i < s.engine_agreement; ++i) {
    Formula f = random_formula(rng, shape);
    SatOptions o = pipeline_options();
    o.want_witness = true;
    SatResult p = sat_pipeline(f, o);
    int depth = modal_depth(f);
    int branching = 4;
    while (branching > 1 && bruteforce_candidate_count(f, depth, branching) > kCap) --branching;
    lowered += branching < 4;
    SatResult b = sat_bruteforce(f, depth, branching, kCap);
    if (p.verdict == Verdict::BudgetExceeded || b.verdict == Verdict::BudgetExceeded) {
      suite.inconclusive();
      continue;
    }
    bool contradiction = p.verdict == Verdict::Unsat && b.verdict == Verdict::Sat;
    both_sat += p.verdict == Verdict::Sat && b.verdict == Verdict::Sat;
    bounded_only += p.verdict == Verdict::Sat && b.verdict == Verdict::BoundedUnsat;
    suite.expect(!contradiction, [&] {
      return render(f) + ": pipeline unsat, bounded search found a model (branching " +
             std::to_string(branching) + ")";
    });
  }
  suite.note(std::to_string(both_sat) + " sat in both, " + std::to_string(bounded_only) +
             " sat beyond the bounds, " + std::to_string(lowered) +
             " searched with branching below 4 to stay under " + std::to_string(kCap) +
             " candidates");
  return suite.finish();
}

PropertyReport check_modal_decomposition(const PropertyScale& s) {
  Suite suite("diamond/box conjunction decomposition");
  Rng rng(s.seed * 1000 + 8);
  FormulaShape shape;
  shape.size = 6;
  shape.ops = {Operator::Box, Operator::Diamond, Operator::And, Operator::NegAtom, Operator::Top,
               Operator::Bot};
  auto is_sat = [&](const Formula& f) { return sat(f).verdict == Verdict::Sat; };
  for (int i = 0; i < s.modal_decomposition; ++i) {
    int r = static_cast<int>(below(rng, 4));
    int n_box = static_cast<int>(below(rng, 4));
    std::vector<Formula> phis, psis, parts;
    for (int j = 0; j < r; ++j) phis.push_back(random_formula(rng, shape));
    for (int j = 0; j < n_box; ++j) psis.push_back(random_formula(rng, shape));
    for (const auto& phi : phis) parts.push_back(Formula::diamond(phi));
    for (const auto& psi : psis) parts.push_back(Formula::box(psi));
    Formula whole = conj_all(parts);
    bool some_unsat = false;
    for (const auto& phi : phis) {
      std::vector<Formula> branch{phi};
      branch.insert(branch.end(), psis.begin(), psis.end());
      if (!is_sat(conj_all(branch))) some_unsat = true;
    }
    bool whole_sat = is_sat(whole);
    suite.expect(whole_sat == !some_unsat && (r > 0 || whole_sat), [&] {
      return render(whole) + ": " + (whole_sat ? "sat" : "unsat") + " but some branch is " +
             (some_unsat ? "unsat" : "sat in every case");
    });
  }
  return suite.finish();
}

namespace {

// Non-decreasing sequences of length m over 0..n-1.
template <typename Visit>
void multisets(int n, int m, Visit&& visit) {
  std::vector<int> c(m, 0);
  if (m == 0) {
    visit(c);
    return;
  }
  if (n == 0) return;
  while (true) {
    visit(c);
    int i = m - 1;
    while (i >= 0 && c[i] == n - 1) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < m; ++j) c[j] = c[i];
  }
}

std::vector<Clause3> literal_triples(int n) {
  std::vector<Literal> lits;
  for (int v = 1; v <= n; ++v) {
    lits.push_back({v, true});
    lits.push_back({v, false});
  }
  std::vector<Clause3> out;
  multisets(static_cast<int>(lits.size()), 3, [&](const std::vector<int>& c) {
    out.push_back({lits[c[0]], lits[c[1]], lits[c[2]]});
  });
  return out;
}

}  // namespace

PropertyReport check_reductions(const PropertyScale& s) {
  Suite suite("reduction correctness");
  std::uint64_t qcsp = 0, dqbf = 0, qbf3 = 0;
  auto verdict = [&](const Formula& f) { return decided(sat_pipeline(f, pipeline_options())); };

  for (int n = 3; n <= s.qcsp_max_n; ++n) {
    std::vector<std::array<int, 3>> triples;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c) triples.push_back({a, b, c});
    for (int m = 0; m <= s.max_clauses; ++m)
      multisets(static_cast<int>(triples.size()), m, [&](const std::vector<int>& pick) {
        for (int k = 0; k <= n; ++k) {
          QcspInstance inst{n, k, {}};
          for (int t : pick) inst.clauses.push_back(triples[t]);
          try {
            validate(inst);
          } catch (const InstanceError&) {
            continue;
          }
          bool truth = oracle_qcsp(inst);
          for (QcspVariant v : {QcspVariant::Bot, QcspVariant::NegP}) {
            Formula f = reduce_qcsp(inst, v);
            auto r = verdict(f);
            if (!r) {
              suite.inconclusive();
              continue;
            }
            ++qcsp;
            suite.expect(truth == !*r, [&] {
              return "qcsp13 n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + render(f);
            });
          }
        }
      });
  }

  for (int n = 1; n <= s.qbf_max_n; ++n) {
    auto triples = literal_triples(n);
    for (int m = 0; m <= s.max_clauses; ++m)
      multisets(static_cast<int>(triples.size()), m, [&](const std::vector<int>& pick) {
        std::vector<Clause3> clauses;
        for (int t : pick) clauses.push_back(triples[t]);
        for (int k = 0; k <= n; ++k) {
          // Every assignment of a dependency set to each existential.
          int e = n - k;
          std::uint64_t combos = std::uint64_t{1} << (k * e);
          for (std::uint64_t mask = 0; mask < combos; ++mask) {
            DqbfInstance inst{n, k, {}, clauses, {}};
            for (int i = 0; i < e; ++i) {
              std::vector<int> d;
              for (int u = 0; u < k; ++u)
                if ((mask >> (i * k + u)) & 1) d.push_back(u + 1);
              inst.deps.push_back(std::move(d));
            }
            Formula f = reduce_dqbf(inst);
            auto r = verdict(f);
            if (!r) {
              suite.inconclusive();
              continue;
            }
            ++dqbf;
            suite.expect(oracle_dqbf(inst) == *r, [&] { return "dqbf: " + render(f); });
          }
          for (int l = k; l <= n; ++l) {
            Qbf3Instance inst{n, k, l, clauses, {}};
            Formula f = reduce_qbf3(inst);
            auto r = verdict(f);
            if (!r) {
              suite.inconclusive();
              continue;
            }
            ++qbf3;
            suite.expect(oracle_qbf3(inst) == *r, [&] { return "qbf3: " + render(f); });
          }
        }
      });
  }
  suite.note(std::to_string(qcsp) + " qcsp13 (both variants), " + std::to_string(dqbf) +
             " dqbf, " + std::to_string(qbf3) + " qbf3 instances; clause lists up to order");
  return suite.finish();
}

PropertyReport check_binary_tree_frame() {
  Suite suite("binary-tree frame regression");
  auto inst = std::get<DqbfInstance>(
      parse_instance(InstanceKind::Dqbf, "p cnf 2 1\na 1 0\ne 2 0\nd 2 1 0\n-1 2 2 0\n"));
  Formula g = reduce_dqbf(inst);
  KripkeStructure tree = build_full_binary_tree(inst.n, inst.clauses);
  Team root = Team::singleton(tree.world_count(), tree.at("r"));
  suite.expect(check(tree, root, g), [&] { return "tree does not satisfy " + render(g); });
  SatResult r = sat_pipeline(g, pipeline_options());
  suite.expect(r.verdict == Verdict::Sat,
               [&] { return "pipeline verdict " + std::string(verdict_name(r.verdict)); });
  return suite.finish();
}

PropertyReport check_collapses(const PropertyScale& s) {
  Suite suite("collapse preservation");
  Rng rng(s.seed * 1000 + 11);
  auto verdict = [&](const Formula& f) { return decided(sat_pipeline(f, pipeline_options())); };
  auto compare = [&](const char* which, const Formula& f, const Formula& g) {
    auto a = verdict(f), b = verdict(g);
    if (!a || !b) {
      suite.inconclusive();
      return;
    }
    suite.expect(*a == *b, [&] { return std::string(which) + ": " + render(f) + " vs " + render(g); });
  };
  FormulaShape shape;
  shape.size = 10;
  shape.max_dep_arity = 2;
  shape.max_modal_depth = 3;

  FormulaShape monotone = shape;
  monotone.ops = without(all_ops(), {Operator::NegAtom});
  for (int i = 0; i < s.collapses; ++i) {
    Formula f = random_formula(rng, monotone);
    compare("monotone", f, monotone_collapse(f));
  }
  for (int i = 0; i < s.collapses; ++i) {
    FormulaShape one = shape;
    one.ops = without(all_ops(), {i % 2 ? Operator::Box : Operator::Diamond});
    Formula f = random_formula(rng, one);
    compare("single modality", f, single_modality_collapse(f));
  }
  for (int i = 0; i < s.collapses; ++i) {
    Formula f = random_formula(rng, shape);
    compare("negated dependence", f, normalize_neg_dep(f));
  }
  return suite.finish();
}

PropertyReport check_routing(const PropertyScale& s) {
  Suite suite("fast path routing");
  Rng rng(s.seed * 1000 + 12);
  FormulaShape shape;
  shape.size = 10;
  shape.max_dep_arity = 2;
  const OperatorSet fragments[] = {
      without(all_ops(), {Operator::NegAtom, Operator::Bot}),
      without(all_ops(), {Operator::And}),
      {Operator::And, Operator::NegAtom, Operator::Top, Operator::Bot, Operator::Dep},
  };
  for (const auto& ops : fragments) {
    FormulaShape fs = shape;
    fs.ops = ops;
    for (int i = 0; i < s.routing; ++i) {
      Formula f = random_formula(rng, fs);
      SatOptions fast;
      fast.want_witness = true;
      SatResult a = sat(f, fast);
      auto b = decided(sat_pipeline(f, pipeline_options()));
      if (!b) {
        suite.inconclusive();
        continue;
      }
      suite.expect(a.satisfiable() == *b, [&] { return a.engine + " disagrees on " + render(f); });
    }
  }
  return suite.finish();
}

std::vector<PropertyReport> run_all_properties(const PropertyScale& s) {
  return {check_table_totality(),     check_downward_closure(s),      check_empty_team(s),
          check_cor_expansion(s),     check_singleton_translation(s), check_ladner(s),
          check_engine_agreement(s),  check_modal_decomposition(s),                check_reductions(s),
          check_binary_tree_frame(),            check_collapses(s),             check_routing(s)};
}

}  // namespace mdl
