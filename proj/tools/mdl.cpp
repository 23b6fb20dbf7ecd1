#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdl/classifier.hpp"
#include "mdl/formula.hpp"
#include "mdl/kripke.hpp"
#include "mdl/properties.hpp"
#include "mdl/reductions.hpp"
#include "mdl/solver.hpp"
#include "mdl/teamsem.hpp"

namespace {

using nlohmann::json;

// Exit codes.
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;
constexpr int kBounded = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json base(const char* command) { return json{{"schema", 1}, {"command", command}}; }

json operators_json(const mdl::OperatorSet& ops) {
  json out = json::array();
  for (mdl::Operator op : mdl::kAllOperators)
    if (ops.contains(op)) out.push_back(std::string(mdl::operator_name(op)));
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_parse(const std::string& file, bool as_json) {
  mdl::Formula f = mdl::parse(read_input(file));
  mdl::FragmentSignature sig = mdl::signature(f);
  if (as_json) {
    json j = base("parse");
    j["formula"] = mdl::render(f);
    j["size"] = f.size();
    j["modal_depth"] = mdl::modal_depth(f);
    j["operators"] = operators_json(sig.present);
    j["max_dep_arity"] = sig.max_dep_arity ? json(*sig.max_dep_arity) : json(nullptr);
    emit(j);
  } else {
    std::cout << mdl::render(f) << '\n'
              << "signature: " << mdl::to_string(sig.present) << '\n'
              << "max dependence arity: "
              << (sig.max_dep_arity ? std::to_string(*sig.max_dep_arity) : "none") << '\n'
              << "modal depth: " << mdl::modal_depth(f) << '\n'
              << "size: " << f.size() << '\n';
  }
  return kYes;
}

int cmd_classify(const std::string& file, std::optional<int> bound, bool as_json) {
  mdl::Formula f = mdl::parse(read_input(file));
  mdl::FragmentSignature sig = mdl::signature(f);
  mdl::Classification c = mdl::classify(sig, bound);
  mdl::Regime regime = bound ? mdl::Regime::Bounded : mdl::Regime::Unbounded;
  if (as_json) {
    json j = base("classify");
    j["operators"] = operators_json(sig.present);
    j["regime"] = std::string(mdl::regime_name(regime));
    j["arity_bound"] = bound ? json(*bound) : json(nullptr);
    j["complexity"] = std::string(mdl::complexity_name(c.complexity));
    j["complexity_ascii"] = std::string(mdl::complexity_ascii(c.complexity));
    j["result_kind"] = std::string(mdl::result_kind_name(c.result_kind));
    j["recommended_engine"] = std::string(mdl::engine_choice_name(c.recommended_engine));
    j["caveat"] = c.caveat;
    j["caveat_reason"] = c.caveat_reason;
    json rows = json::array();
    for (const auto& r : c.matched_rules)
      rows.push_back({{"id", r.id},
                      {"pattern", r.pattern_string()},
                      {"complexity", std::string(mdl::complexity_name(r.complexity))},
                      {"result_kind", std::string(mdl::result_kind_name(r.result_kind))},
                      {"citation", r.citation}});
    j["matched_rules"] = rows;
    emit(j);
    return kYes;
  }
  std::cout << "signature: " << mdl::to_string(sig.present) << '\n'
            << "regime: " << mdl::regime_name(regime);
  if (bound) std::cout << " (arity <= " << *bound << ")";
  std::cout << '\n'
            << "complexity: " << mdl::complexity_name(c.complexity) << " ("
            << mdl::result_kind_name(c.result_kind) << ")\n"
            << "recommended engine: " << mdl::engine_choice_name(c.recommended_engine) << '\n'
            << "matched rules (columns Box Diamond And Or NegAtom Top Bot Dep Cor):\n";
  for (const auto& r : c.matched_rules)
    std::cout << "  " << r.id << "  " << r.pattern_string() << "  "
              << mdl::complexity_name(r.complexity) << "  " << r.citation << '\n';
  if (c.caveat) std::cout << "caveat: " << c.caveat_reason << '\n';
  return kYes;
}

int cmd_check(const std::string& file, const std::string& model, const std::string& team,
              bool as_json) {
  mdl::Formula f = mdl::parse(read_input(file));
  mdl::KripkeStructure w = mdl::parse_structure(read_input(model));
  mdl::Team t = mdl::parse_team(w, team);
  bool value = mdl::check(w, t, f);
  if (as_json) {
    json j = base("check");
    j["value"] = value;
    emit(j);
  } else {
    std::cout << (value ? "true" : "false") << '\n';
  }
  return value ? kYes : kNo;
}

int verdict_exit(mdl::Verdict v) {
  switch (v) {
    case mdl::Verdict::Sat: return kYes;
    case mdl::Verdict::Unsat: return kNo;
    default: return kBounded;
  }
}

struct SatFlags {
  std::string engine = "auto";
  bool witness = false;
  std::optional<std::uint64_t> budget;
  std::string table_search = "skipping";
  std::optional<int> depth;
  int branching = 2;
  std::uint64_t candidate_cap = 200'000;
};

int cmd_sat(const std::string& file, const SatFlags& flags, bool as_json) {
  mdl::Formula f = mdl::parse(read_input(file));
  mdl::SatOptions o;
  auto engine = mdl::engine_from_name(flags.engine);
  if (!engine) throw UsageError("unknown engine '" + flags.engine + "'");
  o.engine = *engine;
  o.want_witness = flags.witness;
  if (flags.budget) o.budget = *flags.budget;
  o.table_search =
      flags.table_search == "exhaustive" ? mdl::TableSearch::Exhaustive : mdl::TableSearch::Skipping;
  o.bf_depth = flags.depth.value_or(-1);
  o.bf_branching = flags.branching;
  o.bf_candidate_cap = flags.candidate_cap;
  mdl::SatResult r = mdl::sat(f, o);

  if (as_json) {
    json j = base("sat");
    j["verdict"] = std::string(mdl::verdict_name(r.verdict));
    j["satisfiable"] = r.satisfiable();
    j["engine"] = r.engine;
    j["nodes"] = r.nodes;
    j["disjunct_index"] =
        r.disjunct_index
            ? json::array({r.disjunct_index->first.str(), r.disjunct_index->second.str()})
            : json(nullptr);
    if (r.witness) {
      json ids = json::array();
      for (mdl::WorldId v : r.witness->team.members()) ids.push_back(r.witness->structure.id(v));
      j["witness"] = {{"structure", mdl::write_structure(r.witness->structure)}, {"team", ids}};
    } else {
      j["witness"] = nullptr;
    }
    emit(j);
  } else {
    std::cout << mdl::verdict_name(r.verdict) << '\n' << "engine: " << r.engine << '\n';
    if (r.disjunct_index)
      std::cout << "disjunct index: " << r.disjunct_index->first << ' '
                << r.disjunct_index->second << '\n';
    if (r.witness) {
      std::cout << mdl::write_structure(r.witness->structure) << "# team "
                << mdl::format_team(r.witness->structure, r.witness->team) << '\n';
    }
  }
  return verdict_exit(r.verdict);
}

mdl::InstanceKind kind_from(const std::string& name) {
  if (name == "qcsp13") return mdl::InstanceKind::Qcsp13;
  if (name == "dqbf") return mdl::InstanceKind::Dqbf;
  if (name == "qbf3") return mdl::InstanceKind::Qbf3;
  throw UsageError("unknown instance kind '" + name + "'");
}

int cmd_reduce(const std::string& from, const std::string& variant, const std::string& file,
               bool as_json) {
  mdl::Instance inst = mdl::parse_instance(kind_from(from), read_input(file));
  mdl::QcspVariant v = variant == "negp" ? mdl::QcspVariant::NegP : mdl::QcspVariant::Bot;
  mdl::Formula f = mdl::reduce(inst, v);
  if (as_json) {
    json j = base("reduce");
    j["from"] = from;
    if (std::holds_alternative<mdl::QcspInstance>(inst)) j["variant"] = variant;
    j["formula"] = mdl::render(f);
    j["size"] = f.size();
    j["modal_depth"] = mdl::modal_depth(f);
    std::visit(
        [&](const auto& i) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(i)>, mdl::QcspInstance>)
            j["permutation"] = i.permutation;
        },
        inst);
    emit(j);
  } else {
    std::cout << mdl::render(f) << '\n';
  }
  return kYes;
}

int cmd_oracle(const std::string& from, const std::string& file, bool as_json) {
  mdl::Instance inst = mdl::parse_instance(kind_from(from), read_input(file));
  bool value = mdl::oracle(inst);
  if (as_json) {
    json j = base("oracle");
    j["from"] = from;
    j["value"] = value;
    emit(j);
  } else {
    std::cout << (value ? "true" : "false") << '\n';
  }
  return value ? kYes : kNo;
}

int cmd_selftest(bool full, std::uint64_t seed, bool as_json) {
  mdl::PropertyScale s = full ? mdl::PropertyScale::full() : mdl::PropertyScale::quick();
  s.seed = seed;
  auto reports = mdl::run_all_properties(s);
  bool passed = true;
  json suites = json::array();
  for (const auto& r : reports) {
    passed = passed && r.ok();
    if (as_json) {
      suites.push_back({{"name", r.name},
                        {"ok", r.ok()},
                        {"cases", r.cases},
                        {"violations", r.violations},
                        {"inconclusive", r.inconclusive},
                        {"first_violation", r.first_violation}});
    } else {
      std::cout << (r.ok() ? "ok    " : "FAILED") << "  " << r.name << ": " << r.cases
                << " cases, " << r.violations << " violations";
      if (r.inconclusive) std::cout << ", " << r.inconclusive << " inconclusive";
      std::cout << '\n';
      if (r.violations) std::cout << "        first violation: " << r.first_violation << '\n';
    }
  }
  if (as_json) {
    json j = base("selftest");
    j["passed"] = passed;
    j["seed"] = seed;
    j["suites"] = suites;
    emit(j);
  }
  return passed ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Satisfiability, model checking and complexity classification for modal dependence logic"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a single JSON object");

  std::string file = "-";
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Input file, or - for standard input");
  };

  auto* parse = app.add_subcommand("parse", "Print the canonical rendering and signature");
  add_file(parse);

  std::optional<int> bound;
  auto* classify = app.add_subcommand("classify", "Classify the fragment of a formula");
  classify->add_option("--arity-bound", bound, "Use the bounded-arity table")->check(CLI::NonNegativeNumber);
  add_file(classify);

  std::string model, team;
  auto* check = app.add_subcommand("check", "Model-check a formula on a team");
  check->add_option("--model", model, "Kripke structure file")->required();
  check->add_option("--team", team, "Comma-separated world ids")->required();
  add_file(check);

  SatFlags sat_flags;
  auto* sat = app.add_subcommand("sat", "Decide satisfiability");
  sat->add_option("--engine", sat_flags.engine, "auto, pipeline, bruteforce or fastpath")
      ->check(CLI::IsMember({"auto", "pipeline", "bruteforce", "fastpath"}));
  sat->add_flag("--witness", sat_flags.witness, "Print a satisfying structure and team");
  sat->add_option("--budget", sat_flags.budget, "Node budget (overrides MDL_BUDGET)")
      ->check(CLI::PositiveNumber);
  sat->add_option("--table-search", sat_flags.table_search, "skipping or exhaustive")
      ->check(CLI::IsMember({"skipping", "exhaustive"}));
  sat->add_option("--depth", sat_flags.depth, "Bruteforce tree depth (default: modal depth)")
      ->check(CLI::NonNegativeNumber);
  sat->add_option("--branching", sat_flags.branching, "Bruteforce branching")
      ->check(CLI::NonNegativeNumber);
  sat->add_option("--candidate-cap", sat_flags.candidate_cap, "Bruteforce candidate limit");
  add_file(sat);

  std::string from, variant = "bot";
  auto* reduce = app.add_subcommand("reduce", "Translate a problem instance into a formula");
  reduce->add_option("--from", from, "qcsp13, dqbf or qbf3")
      ->required()
      ->check(CLI::IsMember({"qcsp13", "dqbf", "qbf3"}));
  reduce->add_option("--variant", variant, "qcsp13 closing constant: bot or negp")
      ->check(CLI::IsMember({"bot", "negp"}));
  add_file(reduce);

  auto* oracle = app.add_subcommand("oracle", "Decide a problem instance by enumeration");
  oracle->add_option("--from", from, "qcsp13, dqbf or qbf3")
      ->required()
      ->check(CLI::IsMember({"qcsp13", "dqbf", "qbf3"}));
  add_file(oracle);

  bool full = false;
  std::uint64_t seed = 1;
  auto* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_flag("--full", full, "Use the acceptance-size suites");
  selftest->add_option("--seed", seed, "Random seed");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*parse) return cmd_parse(file, as_json);
    if (*classify) return cmd_classify(file, bound, as_json);
    if (*check) return cmd_check(file, model, team, as_json);
    if (*sat) return cmd_sat(file, sat_flags, as_json);
    if (*reduce) return cmd_reduce(from, variant, file, as_json);
    if (*oracle) return cmd_oracle(from, file, as_json);
    if (*selftest) return cmd_selftest(full, seed, as_json);
  } catch (const mdl::ParseError& e) {
    std::cerr << "mdl: parse error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "mdl: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
