#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mdl {

using WorldId = std::uint32_t;

/// A set of worlds of one structure, stored as a bitset over world indices.
class Team {
 public:
  Team() = default;
  explicit Team(std::size_t world_count) : words_((world_count + 63) / 64, 0) {}

  static Team singleton(std::size_t world_count, WorldId w) {
    Team t(world_count);
    t.insert(w);
    return t;
  }

  void insert(WorldId w) { words_[w / 64] |= std::uint64_t{1} << (w % 64); }
  void erase(WorldId w) { words_[w / 64] &= ~(std::uint64_t{1} << (w % 64)); }
  bool contains(WorldId w) const {
    return w / 64 < words_.size() && (words_[w / 64] >> (w % 64)) & 1;
  }

  bool empty() const;
  std::size_t size() const;
  std::vector<WorldId> members() const;

  bool is_subset_of(const Team& other) const;
  Team& operator|=(const Team& other);

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t hash() const;

  friend bool operator==(const Team&, const Team&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

class ModelError : public std::runtime_error {
 public:
  ModelError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Finite Kripke structure (S, R, pi) with stable string world identifiers.
class KripkeStructure {
 public:
  KripkeStructure() = default;

  WorldId add_world(const std::string& id);
  void add_edge(WorldId from, WorldId to);
  void add_label(WorldId w, const std::string& prop);
  void clear_labels(WorldId w) { labels_.at(w).clear(); }

  std::size_t world_count() const { return ids_.size(); }
  const std::string& id(WorldId w) const { return ids_.at(w); }
  std::optional<WorldId> find(std::string_view id) const;
  WorldId at(std::string_view id) const;

  const std::vector<WorldId>& successors(WorldId w) const { return succ_[w]; }
  /// Index of a labeled proposition, or -1 if no world carries it.
  int prop_index(std::string_view prop) const;
  const std::vector<std::string>& propositions() const { return props_; }
  bool holds(WorldId w, int prop) const {
    return prop >= 0 && labels_[w].size() > static_cast<std::size_t>(prop) && labels_[w][prop];
  }
  bool holds(WorldId w, std::string_view prop) const { return holds(w, prop_index(prop)); }
  std::set<std::string> label(WorldId w) const;

  Team empty_team() const { return Team(world_count()); }
  Team all_worlds() const;

  /// Replaces the successor list of w (used by enumerators that vary one node).
  void set_successors(WorldId w, std::vector<WorldId> succ) { succ_[w] = std::move(succ); }

 private:
  std::vector<std::string> ids_;
  std::map<std::string, WorldId, std::less<>> index_;
  std::vector<std::vector<WorldId>> succ_;
  std::vector<std::string> props_;
  std::map<std::string, int, std::less<>> prop_index_;
  std::vector<std::vector<bool>> labels_;
};

/// R-image of a team.
Team successors(const KripkeStructure& w, const Team& t);

/// Line format: `world <id>`, `edge <id> <id>`, `label <id> <prop>...`, `#` comments.
KripkeStructure parse_structure(std::string_view text);
std::string write_structure(const KripkeStructure& w);

/// Comma-separated world identifiers; the empty string is the empty team.
Team parse_team(const KripkeStructure& w, std::string_view text);
/// Members ordered by identifier.
std::string format_team(const KripkeStructure& w, const Team& t);

/// Literal over variables numbered from 1.
struct Literal {
  int var = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause3 = std::array<Literal, 3>;

/// Complete binary tree of depth n whose leaves carry every valuation of
/// p1..pn exactly once; leaf gets f<i> iff clause i is false there.
/// The child on the p_i-true side comes first. World ids encode the path.
KripkeStructure build_full_binary_tree(int n, const std::vector<Clause3>& clauses);

}  // namespace mdl

template <>
struct std::hash<mdl::Team> {
  std::size_t operator()(const mdl::Team& t) const noexcept { return t.hash(); }
};
