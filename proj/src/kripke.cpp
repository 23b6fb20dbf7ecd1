#include "mdl/kripke.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace mdl {

bool Team::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Team::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<WorldId> Team::members() const {
  std::vector<WorldId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int bit = std::countr_zero(w);
      out.push_back(static_cast<WorldId>(i * 64 + bit));
      w &= w - 1;
    }
  }
  return out;
}

bool Team::is_subset_of(const Team& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

Team& Team::operator|=(const Team& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::size_t Team::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

ModelError::ModelError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

WorldId KripkeStructure::add_world(const std::string& id) {
  if (id.empty()) throw ModelError(0, "empty world identifier");
  if (index_.count(id)) throw ModelError(0, "duplicate world '" + id + "'");
  auto w = static_cast<WorldId>(ids_.size());
  ids_.push_back(id);
  index_.emplace(id, w);
  succ_.emplace_back();
  labels_.emplace_back();
  return w;
}

void KripkeStructure::add_edge(WorldId from, WorldId to) {
  if (from >= world_count() || to >= world_count()) throw ModelError(0, "edge endpoint out of range");
  auto& s = succ_[from];
  if (std::find(s.begin(), s.end(), to) == s.end()) s.push_back(to);
}

void KripkeStructure::add_label(WorldId w, const std::string& prop) {
  if (w >= world_count()) throw ModelError(0, "label world out of range");
  if (prop.empty()) throw ModelError(0, "empty proposition name");
  auto it = prop_index_.find(prop);
  int idx;
  if (it == prop_index_.end()) {
    idx = static_cast<int>(props_.size());
    props_.push_back(prop);
    prop_index_.emplace(prop, idx);
  } else {
    idx = it->second;
  }
  auto& l = labels_[w];
  if (l.size() <= static_cast<std::size_t>(idx)) l.resize(idx + 1, false);
  l[idx] = true;
}

std::optional<WorldId> KripkeStructure::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WorldId KripkeStructure::at(std::string_view id) const {
  auto w = find(id);
  if (!w) throw ModelError(0, "unknown world '" + std::string(id) + "'");
  return *w;
}

int KripkeStructure::prop_index(std::string_view prop) const {
  auto it = prop_index_.find(prop);
  return it == prop_index_.end() ? -1 : it->second;
}

std::set<std::string> KripkeStructure::label(WorldId w) const {
  std::set<std::string> out;
  for (std::size_t i = 0; i < labels_[w].size(); ++i)
    if (labels_[w][i]) out.insert(props_[i]);
  return out;
}

Team KripkeStructure::all_worlds() const {
  Team t(world_count());
  for (WorldId w = 0; w < world_count(); ++w) t.insert(w);
  return t;
}

Team successors(const KripkeStructure& w, const Team& t) {
  Team out = w.empty_team();
  for (WorldId s : t.members())
    for (WorldId s2 : w.successors(s)) out.insert(s2);
  return out;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

KripkeStructure parse_structure(std::string_view text) {
  struct Line {
    std::size_t number;
    std::vector<std::string> words;
  };
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto words = split_ws(raw);
    if (!words.empty()) lines.push_back({number, std::move(words)});
    start = end + 1;
  }

  KripkeStructure w;
  for (const auto& l : lines) {
    const auto& kw = l.words[0];
    if (kw == "world") {
      if (l.words.size() != 2) throw ModelError(l.number, "expected 'world <id>'");
      if (w.find(l.words[1])) throw ModelError(l.number, "duplicate world '" + l.words[1] + "'");
      w.add_world(l.words[1]);
    } else if (kw != "edge" && kw != "label") {
      throw ModelError(l.number, "unknown directive '" + kw + "'");
    }
  }
  if (w.world_count() == 0) throw ModelError(0, "structure declares no worlds");

  auto lookup = [&](const Line& l, const std::string& id) {
    auto found = w.find(id);
    if (!found) throw ModelError(l.number, "unknown world '" + id + "'");
    return *found;
  };
  for (const auto& l : lines) {
    const auto& kw = l.words[0];
    if (kw == "edge") {
      if (l.words.size() != 3) throw ModelError(l.number, "expected 'edge <id> <id>'");
      w.add_edge(lookup(l, l.words[1]), lookup(l, l.words[2]));
    } else if (kw == "label") {
      if (l.words.size() < 2) throw ModelError(l.number, "expected 'label <id> <prop>...'");
      WorldId target = lookup(l, l.words[1]);
      for (std::size_t i = 2; i < l.words.size(); ++i) w.add_label(target, l.words[i]);
    }
  }
  return w;
}

std::string write_structure(const KripkeStructure& w) {
  std::string out;
  for (WorldId s = 0; s < w.world_count(); ++s) out += "world " + w.id(s) + "\n";
  for (WorldId s = 0; s < w.world_count(); ++s)
    for (WorldId t : w.successors(s)) out += "edge " + w.id(s) + " " + w.id(t) + "\n";
  for (WorldId s = 0; s < w.world_count(); ++s) {
    auto l = w.label(s);
    if (l.empty()) continue;
    out += "label " + w.id(s);
    for (const auto& p : l) out += " " + p;
    out += "\n";
  }
  return out;
}

Team parse_team(const KripkeStructure& w, std::string_view text) {
  Team t = w.empty_team();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) {
      t.insert(w.at(item));
    } else if (end != text.size() || start != 0) {
      throw ModelError(0, "empty world identifier in team list");
    }
    start = end + 1;
  }
  return t;
}

std::string format_team(const KripkeStructure& w, const Team& t) {
  std::vector<std::string> ids;
  for (WorldId s : t.members()) ids.push_back(w.id(s));
  std::sort(ids.begin(), ids.end());
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += ids[i];
  }
  return out;
}

KripkeStructure build_full_binary_tree(int n, const std::vector<Clause3>& clauses) {
  if (n < 1) throw std::invalid_argument("build_full_binary_tree: n must be positive");
  for (const auto& c : clauses)
    for (const auto& lit : c)
      if (lit.var < 1 || lit.var > n)
        throw std::invalid_argument("build_full_binary_tree: literal variable " +
                                    std::to_string(lit.var) + " outside 1.." + std::to_string(n));

  KripkeStructure w;
  // Path strings: '1' means the p_i-true branch was taken at level i.
  std::vector<std::string> level{""};
  w.add_world("r");
  for (int depth = 1; depth <= n; ++depth) {
    std::vector<std::string> next;
    for (const auto& path : level) {
      WorldId parent = w.at("r" + path);
      for (char bit : {'1', '0'}) {
        std::string child = path + bit;
        WorldId c = w.add_world("r" + child);
        w.add_edge(parent, c);
        next.push_back(child);
      }
    }
    level = std::move(next);
  }
  for (const auto& path : level) {
    WorldId leaf = w.at("r" + path);
    for (int i = 1; i <= n; ++i)
      if (path[i - 1] == '1') w.add_label(leaf, "p" + std::to_string(i));
    for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
      bool satisfied = false;
      for (const auto& lit : clauses[ci]) satisfied |= (path[lit.var - 1] == '1') == lit.positive;
      if (!satisfied) w.add_label(leaf, "f" + std::to_string(ci + 1));
    }
  }
  return w;
}

}  // namespace mdl
