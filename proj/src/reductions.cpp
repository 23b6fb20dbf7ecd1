#include "mdl/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

namespace mdl {

InstanceError::InstanceError(std::size_t line, std::size_t column, const std::string& message)
    : std::invalid_argument(line ? std::to_string(line) + ":" + std::to_string(column) + ": " + message
                                 : message),
      line_(line),
      column_(column) {}

namespace {

[[noreturn]] void invalid(const std::string& message) { throw InstanceError(0, 0, message); }

void check_counts(int n, int k) {
  if (n < 0 || k < 0 || k > n) invalid("variable counts must satisfy 0 <= k <= n");
}

void check_literals(const std::vector<Clause3>& clauses, int n) {
  for (std::size_t i = 0; i < clauses.size(); ++i)
    for (const auto& lit : clauses[i])
      if (lit.var < 1 || lit.var > n)
        invalid("clause " + std::to_string(i + 1) + " uses variable " + std::to_string(lit.var) +
                " outside 1.." + std::to_string(n));
}

void check_permutation(const std::vector<int>& perm, int n) {
  if (perm.empty()) return;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(sorted.size()) != n || sorted[i] != i + 1)
      invalid("permutation is not a bijection on 1.." + std::to_string(n));
}

std::string var(int i) { return "p" + std::to_string(i); }

Formula lit_formula(const Literal& l, bool negate) {
  return l.positive != negate ? Formula::prop(var(l.var)) : Formula::neg_prop(var(l.var));
}

bool tautological(const Clause3& c) {
  for (const auto& a : c)
    for (const auto& b : c)
      if (a.var == b.var && a.positive != b.positive) return true;
  return false;
}

bool clause_true(const Clause3& c, const std::vector<bool>& value) {
  for (const auto& l : c)
    if (value[l.var] == l.positive) return true;
  return false;
}

bool all_clauses_true(const std::vector<Clause3>& clauses, const std::vector<bool>& value) {
  for (const auto& c : clauses)
    if (!clause_true(c, value)) return false;
  return true;
}

// Parts (i)-(iii) shared by both tree-forcing reductions, followed by `part4`.
Formula tree_reduction(int n, const std::vector<Clause3>& clauses, const Formula& part4) {
  std::vector<Formula> parts;
  for (int i = 1; i <= n; ++i) {
    Formula pos = Formula::diamond(boxes(n - i, Formula::prop(var(i))));
    Formula neg = Formula::diamond(boxes(n - i, Formula::neg_prop(var(i))));
    parts.push_back(boxes(i - 1, Formula::conj(pos, neg)));
  }
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (tautological(clauses[i])) continue;
    std::string f = "f" + std::to_string(i + 1);
    std::vector<Formula> falsified;
    for (const auto& l : clauses[i]) falsified.push_back(lit_formula(l, true));
    falsified.push_back(Formula::prop(f));
    parts.push_back(diamonds(n, conj_all(falsified)));
  }
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (tautological(clauses[i])) continue;
    std::vector<std::string> args;
    for (const auto& l : clauses[i]) args.push_back(var(l.var));
    parts.push_back(boxes(n, Formula::dep(args, "f" + std::to_string(i + 1))));
  }
  parts.push_back(part4);
  return conj_all(parts);
}

std::vector<Formula> clause_markers_false(const std::vector<Clause3>& clauses) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < clauses.size(); ++i)
    if (!tautological(clauses[i])) out.push_back(Formula::neg_prop("f" + std::to_string(i + 1)));
  return out;
}

// Nabla_{i1}..Nabla_{im} Nabla_{i1}..Nabla_{im} applied to f.
Formula clause_prefix(const QcspInstance& inst, int i, Formula f) {
  int m = static_cast<int>(inst.clauses.size());
  for (int j = 2 * m - 1; j >= 0; --j) {
    const auto& c = inst.clauses[j % m];
    bool in = std::find(c.begin(), c.end(), i) != c.end();
    f = in ? Formula::diamond(std::move(f)) : Formula::box(std::move(f));
  }
  return f;
}

Formula marker(int i, int k) {
  return boxes(i - 1, Formula::diamond(boxes(k - i, Formula::prop("p"))));
}

Formula closing(const QcspInstance& inst, QcspVariant variant) {
  int m = static_cast<int>(inst.clauses.size());
  Formula end = variant == QcspVariant::Bot ? Formula::bot() : Formula::neg_prop("p");
  return boxes(2 * m + inst.k, end);
}

void existential_block(const QcspInstance& inst, std::vector<Formula>& parts) {
  for (int i = inst.k + 1; i <= inst.n; ++i)
    parts.push_back(clause_prefix(inst, i, boxes(inst.k, Formula::prop("p"))));
}

}  // namespace

void validate(const QcspInstance& inst) {
  check_counts(inst.n, inst.k);
  std::vector<bool> seen(inst.n + 1, false);
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    const auto& c = inst.clauses[j];
    for (int v : c) {
      if (v < 1 || v > inst.n)
        invalid("clause " + std::to_string(j + 1) + " uses variable " + std::to_string(v) +
                " outside 1.." + std::to_string(inst.n));
      seen[v] = true;
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
      invalid("clause " + std::to_string(j + 1) + " repeats a variable");
  }
  for (int v = 1; v <= inst.n; ++v)
    if (!seen[v]) invalid("variable " + std::to_string(v) + " occurs in no clause");
}

void validate(const DqbfInstance& inst) {
  check_counts(inst.n, inst.k);
  if (static_cast<int>(inst.deps.size()) != inst.n - inst.k)
    invalid("expected one dependency set per existential variable");
  for (std::size_t i = 0; i < inst.deps.size(); ++i)
    for (int u : inst.deps[i])
      if (u < 1 || u > inst.k)
        invalid("existential " + var(inst.k + 1 + static_cast<int>(i)) + " depends on " +
                std::to_string(u) + ", which is not universal");
  check_literals(inst.clauses, inst.n);
  check_permutation(inst.permutation, inst.n);
}

void validate(const Qbf3Instance& inst) {
  if (inst.k < 0 || inst.l < inst.k || inst.n < inst.l)
    invalid("block bounds must satisfy 0 <= k <= l <= n");
  check_literals(inst.clauses, inst.n);
  check_permutation(inst.permutation, inst.n);
}

Formula reduce_qcsp(const QcspInstance& inst, QcspVariant variant) {
  validate(inst);
  int m = static_cast<int>(inst.clauses.size());
  std::vector<Formula> parts;
  for (int i = 1; i <= inst.k; ++i) {
    Formula chosen = clause_prefix(inst, i, marker(i, inst.k));
    Formula skipped = boxes(2 * m, marker(i, inst.k));
    parts.push_back(Formula::cor(chosen, skipped));
  }
  existential_block(inst, parts);
  parts.push_back(closing(inst, variant));
  return conj_all(parts);
}

Formula qcsp_component(const QcspInstance& inst, const std::vector<bool>& valuation,
                       QcspVariant variant) {
  validate(inst);
  if (static_cast<int>(valuation.size()) != inst.k)
    invalid("valuation must assign every universal variable");
  int m = static_cast<int>(inst.clauses.size());
  std::vector<Formula> parts;
  for (int i = 1; i <= inst.k; ++i)
    if (valuation[i - 1]) parts.push_back(clause_prefix(inst, i, marker(i, inst.k)));
  for (int i = 1; i <= inst.k; ++i)
    if (!valuation[i - 1]) parts.push_back(boxes(2 * m, marker(i, inst.k)));
  existential_block(inst, parts);
  parts.push_back(closing(inst, variant));
  return conj_all(parts);
}

Formula reduce_dqbf(const DqbfInstance& inst) {
  validate(inst);
  std::vector<Formula> inner = clause_markers_false(inst.clauses);
  for (int i = inst.k + 1; i <= inst.n; ++i) {
    std::vector<std::string> args;
    for (int u : inst.deps[i - inst.k - 1]) args.push_back(var(u));
    inner.push_back(Formula::dep(args, var(i)));
  }
  Formula part4 = boxes(inst.k, diamonds(inst.n - inst.k, conj_all(inner)));
  return tree_reduction(inst.n, inst.clauses, part4);
}

Formula reduce_qbf3(const Qbf3Instance& inst) {
  validate(inst);
  std::vector<Formula> inner;
  for (int i = 1; i <= inst.k; ++i) inner.push_back(Formula::dep({}, var(i)));
  for (auto& f : clause_markers_false(inst.clauses)) inner.push_back(f);
  Formula part4 =
      diamonds(inst.k, boxes(inst.l - inst.k, diamonds(inst.n - inst.l, conj_all(inner))));
  return tree_reduction(inst.n, inst.clauses, part4);
}

bool oracle_qcsp(const QcspInstance& inst) {
  check_counts(inst.n, inst.k);
  if (inst.n > 30) invalid("oracle_qcsp: too many variables for enumeration");
  std::vector<bool> value(inst.n + 1);
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << inst.k); ++u) {
    bool extendable = false;
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << (inst.n - inst.k)) && !extendable; ++e) {
      for (int i = 1; i <= inst.n; ++i)
        value[i] = i <= inst.k ? (u >> (i - 1)) & 1 : (e >> (i - inst.k - 1)) & 1;
      extendable = std::all_of(inst.clauses.begin(), inst.clauses.end(), [&](const auto& c) {
        return value[c[0]] + value[c[1]] + value[c[2]] == 1;
      });
    }
    if (!extendable) return false;
  }
  return true;
}

bool oracle_dqbf(const DqbfInstance& inst) {
  validate(inst);
  // Skolem tables laid out consecutively; table of p(k+1+i) indexed by its
  // dependency values with deps[i][0] as bit 0.
  std::vector<std::size_t> offset;
  std::size_t bits = 0;
  for (const auto& d : inst.deps) {
    offset.push_back(bits);
    bits += std::size_t{1} << d.size();
  }
  if (bits > 24 || inst.k > 20) invalid("oracle_dqbf: instance too large for enumeration");
  std::vector<bool> value(inst.n + 1);
  for (std::uint64_t skolem = 0; skolem < (std::uint64_t{1} << bits); ++skolem) {
    bool all = true;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << inst.k) && all; ++u) {
      for (int i = 1; i <= inst.k; ++i) value[i] = (u >> (i - 1)) & 1;
      for (int i = inst.k + 1; i <= inst.n; ++i) {
        const auto& d = inst.deps[i - inst.k - 1];
        std::size_t x = 0;
        for (std::size_t j = 0; j < d.size(); ++j) x |= std::size_t{value[d[j]]} << j;
        value[i] = (skolem >> (offset[i - inst.k - 1] + x)) & 1;
      }
      all = all_clauses_true(inst.clauses, value);
    }
    if (all) return true;
  }
  return false;
}

bool oracle_qbf3(const Qbf3Instance& inst) {
  validate(inst);
  if (inst.n > 24) invalid("oracle_qbf3: too many variables for enumeration");
  std::vector<bool> value(inst.n + 1);
  auto assign = [&](int from, int to, std::uint64_t bits) {
    for (int i = from; i <= to; ++i) value[i] = (bits >> (i - from)) & 1;
  };
  int a = inst.k, b = inst.l - inst.k, c = inst.n - inst.l;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << a); ++x) {
    assign(1, inst.k, x);
    bool all = true;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << b) && all; ++y) {
      assign(inst.k + 1, inst.l, y);
      bool some = false;
      for (std::uint64_t z = 0; z < (std::uint64_t{1} << c) && !some; ++z) {
        assign(inst.l + 1, inst.n, z);
        some = all_clauses_true(inst.clauses, value);
      }
      all = some;
    }
    if (all) return true;
  }
  return false;
}

std::string_view instance_kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::Qcsp13: return "qcsp13";
    case InstanceKind::Dqbf: return "dqbf";
    case InstanceKind::Qbf3: return "qbf3";
  }
  return "?";
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) l.tokens.push_back({line.substr(i, j - i), i + 1});
      i = j;
    }
    if (!l.tokens.empty() && l.tokens[0].text != "c") out.push_back(std::move(l));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

long parse_int(const Line& l, const Token& t) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw InstanceError(l.number, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return v;
}

[[noreturn]] void fail(const Line& l, const Token& t, const std::string& message) {
  throw InstanceError(l.number, t.column, message);
}

// Integers of a 0-terminated line starting at token `from`.
std::vector<std::pair<long, const Token*>> terminated(const Line& l, std::size_t from) {
  std::vector<std::pair<long, const Token*>> out;
  for (std::size_t i = from; i < l.tokens.size(); ++i) {
    long v = parse_int(l, l.tokens[i]);
    if (v == 0) {
      if (i + 1 != l.tokens.size()) fail(l, l.tokens[i + 1], "unexpected token after terminating 0");
      return out;
    }
    out.emplace_back(v, &l.tokens[i]);
  }
  fail(l, l.tokens.back(), "line must end with 0");
}

QcspInstance parse_qcsp(const std::vector<Line>& lines) {
  if (lines.empty()) throw InstanceError(1, 1, "missing header 'p qcsp13 <n> <m> <k>'");
  const Line& h = lines[0];
  if (h.tokens.size() != 5 || h.tokens[0].text != "p" || h.tokens[1].text != "qcsp13")
    fail(h, h.tokens[0], "expected header 'p qcsp13 <n> <m> <k>'");
  QcspInstance inst;
  inst.n = static_cast<int>(parse_int(h, h.tokens[2]));
  long m = parse_int(h, h.tokens[3]);
  inst.k = static_cast<int>(parse_int(h, h.tokens[4]));
  if (inst.n < 0 || m < 0 || inst.k < 0 || inst.k > inst.n)
    fail(h, h.tokens[2], "header counts must satisfy n, m >= 0 and 0 <= k <= n");
  if (static_cast<long>(lines.size()) - 1 != m)
    fail(h, h.tokens[3], "header announces " + std::to_string(m) + " clauses, found " +
                             std::to_string(lines.size() - 1));
  for (std::size_t j = 1; j < lines.size(); ++j) {
    const Line& l = lines[j];
    auto vals = terminated(l, 0);
    if (vals.size() != 3) fail(l, l.tokens[0], "a clause has exactly three variables");
    std::array<int, 3> c{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (vals[i].first < 1 || vals[i].first > inst.n)
        fail(l, *vals[i].second, "variable " + std::to_string(vals[i].first) + " outside 1.." +
                                     std::to_string(inst.n));
      c[i] = static_cast<int>(vals[i].first);
      for (std::size_t p = 0; p < i; ++p)
        if (c[p] == c[i]) fail(l, *vals[i].second, "clause repeats variable " + std::to_string(c[i]));
    }
    inst.clauses.push_back(c);
  }
  try {
    validate(inst);
  } catch (const InstanceError& e) {
    throw InstanceError(h.number, 1, e.what());
  }
  return inst;
}

struct Qdimacs {
  int n = 0;
  struct Block {
    bool universal;
    std::vector<int> vars;
    const Line* line;
  };
  std::vector<Block> blocks;
  std::map<int, std::vector<int>> explicit_deps;
  std::vector<std::vector<Literal>> clauses;
};

Qdimacs parse_qdimacs(const std::vector<Line>& lines, bool allow_deps) {
  if (lines.empty()) throw InstanceError(1, 1, "missing header 'p cnf <n> <m>'");
  const Line& h = lines[0];
  if (h.tokens.size() != 4 || h.tokens[0].text != "p" || h.tokens[1].text != "cnf")
    fail(h, h.tokens[0], "expected header 'p cnf <n> <m>'");
  Qdimacs q;
  q.n = static_cast<int>(parse_int(h, h.tokens[2]));
  long m = parse_int(h, h.tokens[3]);
  if (q.n < 0 || m < 0) fail(h, h.tokens[2], "header counts must be non-negative");
  std::set<int> quantified;
  std::set<int> universal;
  bool in_prefix = true;
  auto check_var = [&](const Line& l, long v, const Token& t) {
    if (v < 1 || v > q.n)
      fail(l, t, "variable " + std::to_string(v) + " outside 1.." + std::to_string(q.n));
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    std::string_view head = l.tokens[0].text;
    if (head == "a" || head == "e") {
      if (!in_prefix) fail(l, l.tokens[0], "quantifier line after the first clause");
      Qdimacs::Block b{head == "a", {}, &l};
      for (auto [v, t] : terminated(l, 1)) {
        check_var(l, v, *t);
        if (!quantified.insert(static_cast<int>(v)).second)
          fail(l, *t, "variable " + std::to_string(v) + " is quantified twice");
        b.vars.push_back(static_cast<int>(v));
        if (b.universal) universal.insert(static_cast<int>(v));
      }
      q.blocks.push_back(std::move(b));
    } else if (head == "d") {
      if (!allow_deps) fail(l, l.tokens[0], "dependency lines are not allowed here");
      if (!in_prefix) fail(l, l.tokens[0], "dependency line after the first clause");
      auto vals = terminated(l, 1);
      if (vals.empty()) fail(l, l.tokens[0], "dependency line names no variable");
      int v = static_cast<int>(vals[0].first);
      check_var(l, v, *vals[0].second);
      bool declared = !quantified.insert(v).second;
      if (declared && universal.count(v))
        fail(l, *vals[0].second, "variable " + std::to_string(v) + " is universal");
      if (q.explicit_deps.count(v))
        fail(l, *vals[0].second, "variable " + std::to_string(v) + " has two dependency lines");
      std::vector<int> deps;
      for (std::size_t j = 1; j < vals.size(); ++j) {
        check_var(l, vals[j].first, *vals[j].second);
        deps.push_back(static_cast<int>(vals[j].first));
      }
      q.explicit_deps[v] = deps;
      if (!declared) q.blocks.push_back({false, {v}, &l});
    } else {
      in_prefix = false;
      auto vals = terminated(l, 0);
      if (vals.empty()) fail(l, l.tokens[0], "empty clause");
      if (vals.size() > 3) fail(l, *vals[3].second, "clauses have at most three literals");
      std::vector<Literal> c;
      for (auto [v, t] : vals) {
        check_var(l, v < 0 ? -v : v, *t);
        c.push_back({static_cast<int>(v < 0 ? -v : v), v > 0});
      }
      q.clauses.push_back(std::move(c));
    }
  }
  if (static_cast<long>(q.clauses.size()) != m)
    fail(h, h.tokens[3], "header announces " + std::to_string(m) + " clauses, found " +
                             std::to_string(q.clauses.size()));
  // Unquantified variables are existential in an outermost block.
  std::vector<int> free_vars;
  for (int v = 1; v <= q.n; ++v)
    if (!quantified.count(v)) free_vars.push_back(v);
  if (!free_vars.empty()) q.blocks.insert(q.blocks.begin(), {false, free_vars, &h});
  return q;
}

std::vector<Clause3> renumber(const std::vector<std::vector<Literal>>& clauses,
                              const std::vector<int>& new_index) {
  std::vector<Clause3> out;
  for (const auto& c : clauses) {
    Clause3 c3;
    for (std::size_t i = 0; i < 3; ++i) {
      const Literal& l = c[std::min(i, c.size() - 1)];
      c3[i] = {new_index[l.var], l.positive};
    }
    out.push_back(c3);
  }
  return out;
}

DqbfInstance parse_dqbf(const std::vector<Line>& lines) {
  Qdimacs q = parse_qdimacs(lines, true);
  std::vector<int> universals;
  std::vector<std::pair<int, std::vector<int>>> existentials;
  std::vector<int> seen_universals;
  std::set<int> universal_set;
  for (const auto& b : q.blocks)
    if (b.universal)
      for (int v : b.vars) universal_set.insert(v);
  for (const auto& b : q.blocks) {
    for (int v : b.vars) {
      if (b.universal) {
        universals.push_back(v);
        seen_universals.push_back(v);
      } else if (auto it = q.explicit_deps.find(v); it != q.explicit_deps.end()) {
        for (int u : it->second)
          if (!universal_set.count(u))
            fail(*b.line, b.line->tokens[0],
                 "variable " + std::to_string(v) + " depends on non-universal " + std::to_string(u));
        existentials.emplace_back(v, it->second);
      } else {
        existentials.emplace_back(v, seen_universals);
      }
    }
  }
  DqbfInstance inst;
  inst.n = q.n;
  inst.k = static_cast<int>(universals.size());
  std::vector<int> new_index(q.n + 1, 0);
  for (int v : universals) {
    inst.permutation.push_back(v);
    new_index[v] = static_cast<int>(inst.permutation.size());
  }
  for (const auto& [v, deps] : existentials) {
    inst.permutation.push_back(v);
    new_index[v] = static_cast<int>(inst.permutation.size());
  }
  for (const auto& [v, deps] : existentials) {
    std::vector<int> d;
    for (int u : deps) d.push_back(new_index[u]);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    inst.deps.push_back(std::move(d));
  }
  inst.clauses = renumber(q.clauses, new_index);
  validate(inst);
  return inst;
}

Qbf3Instance parse_qbf3(const std::vector<Line>& lines) {
  Qdimacs q = parse_qdimacs(lines, false);
  // Merge adjacent blocks of the same quantifier, then require e? a? e?.
  std::vector<Qdimacs::Block> merged;
  for (auto& b : q.blocks) {
    if (b.vars.empty()) continue;
    if (!merged.empty() && merged.back().universal == b.universal) {
      merged.back().vars.insert(merged.back().vars.end(), b.vars.begin(), b.vars.end());
    } else {
      merged.push_back(b);
    }
  }
  std::size_t pos = 0;
  std::vector<int> blocks[3];
  const bool pattern[3] = {false, true, false};
  for (const auto& b : merged) {
    while (pos < 3 && pattern[pos] != b.universal) ++pos;
    if (pos == 3)
      fail(*b.line, b.line->tokens[0], "quantifier prefix is not of the form exists-forall-exists");
    blocks[pos] = b.vars;
    ++pos;
  }
  Qbf3Instance inst;
  inst.n = q.n;
  inst.k = static_cast<int>(blocks[0].size());
  inst.l = inst.k + static_cast<int>(blocks[1].size());
  std::vector<int> new_index(q.n + 1, 0);
  for (const auto& b : blocks)
    for (int v : b) {
      inst.permutation.push_back(v);
      new_index[v] = static_cast<int>(inst.permutation.size());
    }
  inst.clauses = renumber(q.clauses, new_index);
  validate(inst);
  return inst;
}

}  // namespace

Instance parse_instance(InstanceKind kind, std::string_view text) {
  auto lines = tokenize(text);
  switch (kind) {
    case InstanceKind::Qcsp13: return parse_qcsp(lines);
    case InstanceKind::Dqbf: return parse_dqbf(lines);
    case InstanceKind::Qbf3: return parse_qbf3(lines);
  }
  throw std::logic_error("parse_instance: unknown kind");
}

Formula reduce(const Instance& inst, QcspVariant variant) {
  if (auto* q = std::get_if<QcspInstance>(&inst)) return reduce_qcsp(*q, variant);
  if (auto* d = std::get_if<DqbfInstance>(&inst)) return reduce_dqbf(*d);
  return reduce_qbf3(std::get<Qbf3Instance>(inst));
}

bool oracle(const Instance& inst) {
  if (auto* q = std::get_if<QcspInstance>(&inst)) return oracle_qcsp(*q);
  if (auto* d = std::get_if<DqbfInstance>(&inst)) return oracle_dqbf(*d);
  return oracle_qbf3(std::get<Qbf3Instance>(inst));
}

}  // namespace mdl
