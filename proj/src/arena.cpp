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

#include "fcg/arena.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fcg {

bool canonical_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

struct CanonicalLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return canonical_less(a, b); }
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace

ArenaBuilder& ArenaBuilder::add_vertex(std::string name, Player owner) {
  vertices_.emplace_back(std::move(name), owner);
  return *this;
}

ArenaBuilder& ArenaBuilder::add_edge(std::string source, std::string target, Label label) {
  edges_.push_back({std::move(source), std::move(target), std::move(label)});
  return *this;
}

Arena ArenaBuilder::build() const {
  if (vertices_.empty()) throw ArenaError("arena has no vertices");

  std::map<std::string, Player, CanonicalLess> owners;
  for (const auto& [name, owner] : vertices_) {
    if (name.empty()) throw ArenaError("empty vertex identifier");
    if (!owners.emplace(name, owner).second) throw ArenaError("duplicate vertex '" + name + "'");
  }

  Arena a;
  a.kind_ = kind_;
  std::map<std::string_view, VertexId, CanonicalLess> ids;
  for (const auto& [name, owner] : owners) {
    ids.emplace(name, static_cast<VertexId>(a.names_.size()));
    a.names_.push_back(name);
    a.owners_.push_back(owner);
  }
  a.out_.resize(a.names_.size());

  for (const auto& e : edges_) {
    auto s = ids.find(e.source);
    if (s == ids.end()) throw ArenaError("edge references undeclared vertex '" + e.source + "'");
    auto t = ids.find(e.target);
    if (t == ids.end()) throw ArenaError("edge references undeclared vertex '" + e.target + "'");
    if (e.label.kind() != kind_)
      throw ArenaError("edge (" + e.source + "," + e.target + ") has a " +
                       std::string(to_string(e.label.kind())) + " label in a " +
                       std::string(to_string(kind_)) + " arena");
    a.out_[s->second].push_back({t->second, e.label});
  }

  for (VertexId v = 0; v < a.out_.size(); ++v) {
    auto& out = a.out_[v];
    if (out.empty()) throw ArenaError("dead-end vertex '" + a.names_[v] + "'");
    std::sort(out.begin(), out.end(),
              [](const Edge& x, const Edge& y) { return x.target < y.target; });
    for (std::size_t i = 1; i < out.size(); ++i)
      if (out[i].target == out[i - 1].target)
        throw ArenaError("duplicate edge (" + a.names_[v] + "," + a.names_[out[i].target] + ")");
    a.edge_count_ += out.size();
  }
  return a;
}

std::optional<VertexId> Arena::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string& x, std::string_view y) {
                               return canonical_less(x, y);
                             });
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId Arena::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw ArenaError("unknown vertex '" + std::string(name) + "'");
}

bool Arena::has_edge(VertexId source, VertexId target) const {
  if (source >= out_.size()) return false;
  const auto& out = out_[source];
  auto it = std::lower_bound(out.begin(), out.end(), target,
                             [](const Edge& e, VertexId t) { return e.target < t; });
  return it != out.end() && it->target == target;
}

const Label& Arena::label(VertexId source, VertexId target) const {
  if (source < out_.size()) {
    const auto& out = out_[source];
    auto it = std::lower_bound(out.begin(), out.end(), target,
                               [](const Edge& e, VertexId t) { return e.target < t; });
    if (it != out.end() && it->target == target) return it->label;
  }
  auto show = [this](VertexId v) { return v < names_.size() ? names_[v] : std::to_string(v); };
  throw ArenaError("(" + show(source) + "," + show(target) + ") is not an edge");
}

std::vector<VertexId> Arena::vertices_of(Player p) const {
  std::vector<VertexId> result;
  for (VertexId v = 0; v < owners_.size(); ++v)
    if (owners_[v] == p) result.push_back(v);
  return result;
}

bool Arena::is_solitaire() const {
  return std::all_of(owners_.begin(), owners_.end(),
                     [&](Player p) { return p == owners_.front(); });
}

Arena parse_arena(std::string_view text) {
  std::optional<ArenaBuilder> builder;
  LabelKind kind = LabelKind::priority;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto f = split_fields(line);
    if (f.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    if (!builder) {
      if (f[0] != "arena" || f.size() != 2)
        throw ParseError(line_no, "expected header 'arena <kind>'");
      try {
        kind = parse_label_kind(f[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      builder.emplace(kind);
    } else if (f[0] == "v") {
      if (f.size() != 3) throw ParseError(line_no, "expected 'v <id> <owner>'");
      if (f[2] != "0" && f[2] != "1") throw ParseError(line_no, "owner must be 0 or 1");
      builder->add_vertex(std::string(f[1]), f[2] == "0" ? Player::zero : Player::one);
    } else if (f[0] == "e") {
      if (f.size() != 4) throw ParseError(line_no, "expected 'e <src> <dst> <label>'");
      try {
        builder->add_edge(std::string(f[1]), std::string(f[2]), Label::parse(f[3], kind));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (f[0] == "arena") {
      throw ParseError(line_no, "duplicate header");
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(f[0]) + "'");
    }
    if (nl == text.size()) break;
  }
  if (!builder) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'arena <kind>'");
  return builder->build();
}

std::string serialize_arena(const Arena& a) {
  std::ostringstream os;
  os << "arena " << to_string(a.label_kind()) << '\n';
  for (VertexId v = 0; v < a.size(); ++v) os << "v " << a.name(v) << ' ' << index(a.owner(v)) << '\n';
  for (VertexId v = 0; v < a.size(); ++v)
    for (const auto& e : a.out(v))
      os << "e " << a.name(v) << ' ' << a.name(e.target) << ' ' << e.label.to_string() << '\n';
  return os.str();
}

std::vector<VertexId> successors(const Arena& a, VertexId v) {
  if (v >= a.size()) throw ArenaError("unknown vertex id " + std::to_string(v));
  std::vector<VertexId> result;
  for (const auto& e : a.out(v)) result.push_back(e.target);
  return result;
}

std::vector<std::string> successors(const Arena& a, std::string_view v) {
  std::vector<std::string> result;
  for (const auto& e : a.out(a.id(v))) result.push_back(a.name(e.target));
  return result;
}

std::uint64_t max_abs_weight(const Arena& a) {
  if (a.label_kind() != LabelKind::weight && a.label_kind() != LabelKind::pair)
    throw KindMismatch("max_abs_weight needs a weight or pair arena, got " +
                       std::string(to_string(a.label_kind())));
  std::uint64_t best = 0;
  for (VertexId v = 0; v < a.size(); ++v)
    for (const auto& e : a.out(v)) {
      auto w = e.label.weight_component();
      auto abs = w < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(w)
                       : static_cast<std::uint64_t>(w);
      best = std::max(best, abs);
    }
  return best;
}

std::vector<std::string> names_of(const Arena& a, std::span<const VertexId> ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (auto v : ids) out.push_back(a.name(v));
  return out;
}

MemorylessStrategy make_strategy(const Arena& a, Player player,
                                 std::span<const std::pair<std::string, std::string>> moves) {
  MemorylessStrategy s{player, std::vector<VertexId>(a.size(), kNoVertex)};
  for (const auto& [from, to] : moves) {
    auto v = a.id(from);
    if (a.owner(v) != player)
      throw ArenaError("vertex '" + from + "' is not owned by player " +
                       std::to_string(index(player)));
    s.choice[v] = a.id(to);
  }
  validate_strategy(a, s);
  return s;
}

void validate_strategy(const Arena& a, const MemorylessStrategy& s) {
  if (s.choice.size() != a.size()) throw ArenaError("strategy size does not match arena");
  for (VertexId v = 0; v < a.size(); ++v) {
    if (a.owner(v) != s.player) continue;
    if (s.choice[v] == kNoVertex) throw ArenaError("strategy has no move at '" + a.name(v) + "'");
    if (!a.has_edge(v, s.choice[v]))
      throw ArenaError("strategy move (" + a.name(v) + "," +
                       (s.choice[v] < a.size() ? a.name(s.choice[v]) : std::string("?")) +
                       ") is not an edge");
  }
}

Arena restrict(const Arena& a, const MemorylessStrategy& s) {
  validate_strategy(a, s);
  Arena r = a;
  r.edge_count_ = 0;
  for (VertexId v = 0; v < r.size(); ++v) {
    auto& out = r.out_[v];
    if (r.owner(v) == s.player)
      std::erase_if(out, [&](const Edge& e) { return e.target != s.choice[v]; });
    r.edge_count_ += out.size();
  }
  return r;
}

}  // namespace fcg
