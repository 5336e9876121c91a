/*
 * Copyright 2026 The fcg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FCG_ARENA_HPP
#define FCG_ARENA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fcg/label.hpp"

namespace fcg {

enum class Player : std::uint8_t { zero = 0, one = 1 };

constexpr Player opponent(Player p) { return p == Player::zero ? Player::one : Player::zero; }
constexpr int index(Player p) { return static_cast<int>(p); }
constexpr Player player_from_index(int i) { return i == 0 ? Player::zero : Player::one; }

/// Dense vertex index. Indices follow the canonical vertex order, so comparing
/// ids is the same as comparing names by (length, bytes).
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

struct Edge {
  VertexId target;
  Label label;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A directed (source, target) pair; labels are looked up in the arena.
struct EdgeRef {
  VertexId source;
  VertexId target;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Violated arena invariant (dead end, duplicate edge, unknown vertex, ...).
class ArenaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arena file syntax error; the message carries the 1-based line number.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Canonical vertex-name order: shorter names first, then bytewise.
bool canonical_less(std::string_view a, std::string_view b);

class Arena;
struct MemorylessStrategy;

class ArenaBuilder {
 public:
  explicit ArenaBuilder(LabelKind kind) : kind_(kind) {}

  ArenaBuilder& add_vertex(std::string name, Player owner);
  ArenaBuilder& add_edge(std::string source, std::string target, Label label);

  /// Validates and freezes. Throws ArenaError on any violated invariant.
  Arena build() const;

 private:
  struct PendingEdge {
    std::string source;
    std::string target;
    Label label;
  };
  LabelKind kind_;
  std::vector<std::pair<std::string, Player>> vertices_;
  std::vector<PendingEdge> edges_;
};

/// Immutable labeled game graph with no dead ends.
class Arena {
 public:
  std::size_t size() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  LabelKind label_kind() const { return kind_; }

  const std::string& name(VertexId v) const { return names_.at(v); }
  Player owner(VertexId v) const { return owners_[v]; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws ArenaError for unknown names.
  VertexId id(std::string_view name) const;

  /// Outgoing edges sorted by target id.
  std::span<const Edge> out(VertexId v) const { return out_[v]; }
  bool has_edge(VertexId source, VertexId target) const;
  /// Throws ArenaError when (source, target) is not an edge.
  const Label& label(VertexId source, VertexId target) const;
  const Label& label(EdgeRef e) const { return label(e.source, e.target); }

  std::vector<VertexId> vertices_of(Player p) const;
  bool is_solitaire() const;

  friend bool operator==(const Arena&, const Arena&) = default;

 private:
  friend class ArenaBuilder;
  friend Arena restrict(const Arena& a, const MemorylessStrategy& s);
  Arena() = default;

  LabelKind kind_ = LabelKind::priority;
  std::vector<std::string> names_;
  std::vector<Player> owners_;
  std::vector<std::vector<Edge>> out_;
  std::size_t edge_count_ = 0;
};

Arena parse_arena(std::string_view text);
std::string serialize_arena(const Arena& a);

/// Successor ids of v in canonical order.
std::vector<VertexId> successors(const Arena& a, VertexId v);
/// Successor names of the named vertex in canonical order.
std::vector<std::string> successors(const Arena& a, std::string_view v);

/// Largest absolute weight over all edges; weight and pair arenas only.
std::uint64_t max_abs_weight(const Arena& a);

std::vector<std::string> names_of(const Arena& a, std::span<const VertexId> ids);

/// Successor choice for every vertex of one player; entries for the other
/// player's vertices are kNoVertex.
struct MemorylessStrategy {
  Player player = Player::zero;
  std::vector<VertexId> choice;

  VertexId operator()(VertexId v) const { return choice[v]; }
  friend bool operator==(const MemorylessStrategy&, const MemorylessStrategy&) = default;
};

/// Builds a strategy from vertex names. Throws ArenaError unless the map is
/// total on the player's vertices and every choice is an edge.
MemorylessStrategy make_strategy(const Arena& a, Player player,
                                 std::span<const std::pair<std::string, std::string>> moves);
/// Throws ArenaError when s is not total on its player's vertices or picks a non-edge.
void validate_strategy(const Arena& a, const MemorylessStrategy& s);

/// Keeps only the chosen outgoing edge at each vertex of s.player.
Arena restrict(const Arena& a, const MemorylessStrategy& s);

}  // namespace fcg

#endif  // FCG_ARENA_HPP
