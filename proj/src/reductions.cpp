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

#include "fcg/reductions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace fcg {

std::string_view to_string(GeographyWinner w) {
  return w == GeographyWinner::mover ? "mover" : "opponent";
}

namespace {

struct NameLess {
  bool operator()(const std::string& a, const std::string& b) const { return canonical_less(a, b); }
};

GeographyInstance assemble(const std::vector<std::string>& declared,
                           const std::vector<std::pair<std::string, std::string>>& edges,
                           const std::optional<std::string>& start) {
  if (declared.empty()) throw ArenaError("geography instance has no vertices");
  std::map<std::string, VertexId, NameLess> ids;
  for (const auto& name : declared)
    if (!ids.emplace(name, 0).second) throw ArenaError("duplicate vertex '" + name + "'");
  GeographyInstance g;
  for (auto& [name, id] : ids) {
    id = static_cast<VertexId>(g.names.size());
    g.names.push_back(name);
  }
  g.successors.resize(g.names.size());
  auto lookup = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) throw ArenaError("unknown vertex '" + name + "'");
    return it->second;
  };
  for (const auto& [s, t] : edges) g.successors[lookup(s)].push_back(lookup(t));
  for (auto& succ : g.successors) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  if (!start) throw ArenaError("geography instance has no start vertex");
  g.start = lookup(*start);
  return g;
}

}  // namespace

GeographyInstance parse_geography(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<std::string> start;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string w; fields >> w;) f.push_back(w);
    if (f.empty()) continue;
    if (f[0] == "v" && f.size() == 2) {
      vertices.push_back(f[1]);
    } else if (f[0] == "e" && f.size() == 3) {
      edges.emplace_back(f[1], f[2]);
    } else if (f[0] == "start" && f.size() == 2) {
      if (start) throw ParseError(line_no, "duplicate start line");
      start = f[1];
    } else {
      throw ParseError(line_no, "expected 'v <id>', 'e <src> <dst>' or 'start <id>'");
    }
  }
  return assemble(vertices, edges, start);
}

GeographyInstance make_geography(std::size_t n,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges,
                                 VertexId start) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [s, t] : edges) {
    if (s >= n || t >= n) throw ArenaError("edge endpoint out of range");
    named.emplace_back(std::to_string(s), std::to_string(t));
  }
  if (start >= n) throw ArenaError("start vertex out of range");
  // Names 0..n-1 sort canonically in numeric order, so ids are preserved.
  return assemble(names, named, std::to_string(start));
}

namespace {

class GeographySolver {
 public:
  explicit GeographySolver(const GeographyInstance& g) : g_(g) {}

  // Whether the player about to move from v wins, v already visited.
  bool to_move_wins(VertexId v, std::uint64_t visited) {
    auto key = (visited << 6) | v;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool wins = false;
    for (VertexId w : g_.successors[v]) {
      if (visited >> w & 1) continue;
      if (!to_move_wins(w, visited | (std::uint64_t{1} << w))) {
        wins = true;
        break;
      }
    }
    memo_.emplace(key, wins);
    return wins;
  }

 private:
  const GeographyInstance& g_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

GeographyWinner solve_gg_direct(const GeographyInstance& g) {
  if (g.names.empty() || g.start >= g.names.size())
    throw ArenaError("invalid geography start vertex");
  // The key packs the visited set above a 6-bit vertex index.
  if (g.names.size() > 58) throw ArenaError("direct geography solver supports at most 58 vertices");
  GeographySolver s(g);
  return s.to_move_wins(g.start, std::uint64_t{1} << g.start) ? GeographyWinner::mover
                                                                : GeographyWinner::opponent;
}

GeographyReduction gg_to_fcg(const GeographyInstance& g) {
  if (g.names.empty() || g.start >= g.names.size())
    throw ArenaError("invalid geography start vertex");
  auto copy = [&](VertexId v, int t) { return g.names[v] + "@" + std::to_string(t); };
  ArenaBuilder b(LabelKind::priority);
  for (VertexId v = 0; v < g.names.size(); ++v) {
    for (int t = 0; t < 2; ++t) {
      b.add_vertex(copy(v, t), player_from_index(t));
      b.add_edge(copy(v, t), copy(v, 1 - t), Label::priority(static_cast<std::uint64_t>(t)));
      for (VertexId w : g.successors[v])
        if (w != v)
          b.add_edge(copy(v, t), copy(w, 1 - t), Label::priority(static_cast<std::uint64_t>(1 - t)));
    }
  }
  GeographyReduction r{b.build(), CycleProperty::ends_zero(), 0};
  r.start = r.arena.id(copy(g.start, 0));
  return r;
}

}  // namespace fcg
