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

#include "fcg/strategy.hpp"

#include <algorithm>
#include <limits>

#include "path_search.hpp"

namespace fcg {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) return 0;
  if (x > kSaturated / y) return kSaturated;
  return x * y;
}

const Edge& edge_to(const Arena& a, VertexId v, VertexId w) {
  for (const auto& e : a.out(v))
    if (e.target == w) return e;
  throw ArenaError("(" + a.name(v) + "," + (w < a.size() ? a.name(w) : "?") + ") is not an edge");
}

// Every play from the start consistent with a memoryless strategy.
class MemorylessCheck : public detail::PathSearch {
 public:
  MemorylessCheck(const Arena& a, const CycleProperty& p, const MemorylessStrategy& s,
                  VertexId start)
      : PathSearch(a, p, start), strategy_(s) {}

  bool wins(VertexId v) {
    if (arena().owner(v) == strategy_.player) return follow(edge_to(arena(), v, strategy_(v)));
    for (const auto& e : arena().out(v))
      if (!follow(e)) return false;
    return true;
  }

 private:
  bool follow(const Edge& e) {
    if (on_path(e.target)) return leaf_winner(e) == strategy_.player;
    push(e);
    bool ok = wins(e.target);
    pop();
    return ok;
  }

  const MemorylessStrategy& strategy_;
};

class MooreCheck : public detail::PathSearch {
 public:
  MooreCheck(const Arena& a, const CycleProperty& p, const MooreMachine& m, VertexId start)
      : PathSearch(a, p, start), machine_(m) {}

  // `memory` is the state after reading every vertex before v.
  bool wins(VertexId v, std::size_t memory) {
    const std::size_t next = machine_.delta(v, memory);
    if (arena().owner(v) == machine_.player)
      return follow(edge_to(arena(), v, machine_.rho(v, memory)), next);
    for (const auto& e : arena().out(v))
      if (!follow(e, next)) return false;
    return true;
  }

 private:
  bool follow(const Edge& e, std::size_t memory) {
    if (on_path(e.target)) return leaf_winner(e) == machine_.player;
    push(e);
    bool ok = wins(e.target, memory);
    pop();
    return ok;
  }

  const MooreMachine& machine_;
};

bool covers(const std::vector<bool>& wins, const std::vector<VertexId>& region) {
  return std::all_of(region.begin(), region.end(), [&](VertexId v) { return wins[v]; });
}

void check_vertex(const Arena& a, VertexId v) {
  if (v >= a.size()) throw ArenaError("unknown vertex id " + std::to_string(v));
}

}  // namespace

std::uint64_t memoryless_strategy_count(const Arena& a, Player player) {
  std::uint64_t n = 1;
  for (VertexId v = 0; v < a.size(); ++v)
    if (a.owner(v) == player) n = saturating_mul(n, a.out(v).size());
  return n;
}

void for_each_memoryless_strategy(const Arena& a, Player player,
                                  const std::function<bool(const MemorylessStrategy&)>& fn) {
  auto count = memoryless_strategy_count(a, player);
  if (count > kMemorylessEnumerationBound)
    throw EnumerationBoundExceeded("memoryless enumeration needs " +
                                   (count == kSaturated ? std::string("too many")
                                                        : std::to_string(count)) +
                                   " strategies (bound " +
                                   std::to_string(kMemorylessEnumerationBound) + ")");
  const auto owned = a.vertices_of(player);
  std::vector<std::size_t> digit(owned.size(), 0);
  MemorylessStrategy s{player, std::vector<VertexId>(a.size(), kNoVertex)};
  for (auto v : owned) s.choice[v] = a.out(v)[0].target;
  for (;;) {
    if (!fn(s)) return;
    // Odometer: the last owned vertex changes fastest.
    std::size_t i = owned.size();
    for (; i > 0; --i) {
      VertexId v = owned[i - 1];
      if (++digit[i - 1] < a.out(v).size()) {
        s.choice[v] = a.out(v)[digit[i - 1]].target;
        break;
      }
      digit[i - 1] = 0;
      s.choice[v] = a.out(v)[0].target;
    }
    if (i == 0) return;
  }
}

bool memoryless_wins_fcg(const Arena& a, const CycleProperty& p, const MemorylessStrategy& s,
                         VertexId start) {
  check_vertex(a, start);
  require_kind(p, a.label_kind());
  validate_strategy(a, s);
  MemorylessCheck check(a, p, s, start);
  return check.wins(start);
}

std::vector<bool> memoryless_win_set(const Arena& a, const CycleProperty& p,
                                     const MemorylessStrategy& s) {
  require_kind(p, a.label_kind());
  validate_strategy(a, s);
  std::vector<bool> wins(a.size());
  for (VertexId v = 0; v < a.size(); ++v) {
    MemorylessCheck check(a, p, s, v);
    wins[v] = check.wins(v);
  }
  return wins;
}

std::vector<VertexId> pointwise_memoryless_region(const Arena& a, const CycleProperty& p,
                                                  Player player) {
  require_kind(p, a.label_kind());
  std::vector<bool> any(a.size(), false);
  for_each_memoryless_strategy(a, player, [&](const MemorylessStrategy& s) {
    for (VertexId v = 0; v < a.size(); ++v) {
      if (any[v]) continue;
      MemorylessCheck check(a, p, s, v);
      any[v] = check.wins(v);
    }
    return !std::all_of(any.begin(), any.end(), [](bool b) { return b; });
  });
  std::vector<VertexId> region;
  for (VertexId v = 0; v < a.size(); ++v)
    if (any[v]) region.push_back(v);
  return region;
}

namespace {

std::optional<MemorylessStrategy> find_uniform(const Arena& a, const CycleProperty& p,
                                               Player player,
                                               const std::vector<VertexId>& region) {
  std::optional<MemorylessStrategy> found;
  for_each_memoryless_strategy(a, player, [&](const MemorylessStrategy& s) {
    for (auto v : region) {
      MemorylessCheck check(a, p, s, v);
      if (!check.wins(v)) return true;
    }
    found = s;
    return false;
  });
  return found;
}

}  // namespace

std::optional<MemorylessStrategy> uniform_memoryless_strategy(const Arena& a,
                                                              const CycleProperty& p,
                                                              Player player) {
  require_kind(p, a.label_kind());
  auto regions = fcg_regions(a, p);
  return find_uniform(a, p, player, regions[player]);
}

void validate_machine(const Arena& a, const MooreMachine& m) {
  const auto k = m.memory_size;
  if (k == 0) throw ArenaError("Moore machine needs at least one memory state");
  if (m.initial >= k) throw ArenaError("Moore machine initial state out of range");
  if (m.update.size() != a.size() * k || m.next_move.size() != a.size() * k)
    throw ArenaError("Moore machine tables do not match the arena size");
  for (VertexId v = 0; v < a.size(); ++v)
    for (std::size_t s = 0; s < k; ++s) {
      if (m.delta(v, s) >= k) throw ArenaError("Moore machine update leaves the memory range");
      if (a.owner(v) == m.player && !a.has_edge(v, m.rho(v, s)))
        throw ArenaError("Moore machine moves along a non-edge at '" + a.name(v) + "'");
    }
}

bool moore_wins_fcg(const Arena& a, const CycleProperty& p, const MooreMachine& m,
                    VertexId start) {
  check_vertex(a, start);
  require_kind(p, a.label_kind());
  validate_machine(a, m);
  MooreCheck check(a, p, m, start);
  return check.wins(start, m.initial);
}

std::uint64_t moore_machine_count(const Arena& a, Player player, std::size_t k) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < a.size() * k; ++i) n = saturating_mul(n, k);
  for (VertexId v = 0; v < a.size(); ++v)
    if (a.owner(v) == player)
      for (std::size_t s = 0; s < k; ++s) n = saturating_mul(n, a.out(v).size());
  return n;
}

MemoryResult min_moore_memory(const Arena& a, const CycleProperty& p, Player player,
                              VertexId start, std::size_t k_max) {
  check_vertex(a, start);
  require_kind(p, a.label_kind());
  if (fcg_winner(a, p, start) != player)
    throw std::invalid_argument("player " + std::to_string(index(player)) +
                                " does not win from '" + a.name(start) + "'");

  for (std::size_t k = 1; k <= k_max; ++k) {
    auto count = moore_machine_count(a, player, k);
    if (count > kMooreEnumerationBound)
      throw EnumerationBoundExceeded("Moore enumeration with " + std::to_string(k) +
                                     " memory states exceeds the bound of " +
                                     std::to_string(kMooreEnumerationBound) + " machines");

    // The initial state is fixed to 0; any machine can be renamed to match.
    MooreMachine m;
    m.player = player;
    m.memory_size = k;
    m.initial = 0;
    m.update.assign(a.size() * k, 0);
    m.next_move.assign(a.size() * k, kNoVertex);
    std::vector<std::size_t> move_slots;  // indices into next_move that are choices
    for (VertexId v = 0; v < a.size(); ++v)
      if (a.owner(v) == player)
        for (std::size_t s = 0; s < k; ++s) {
          move_slots.push_back(v * k + s);
          m.next_move[v * k + s] = a.out(v)[0].target;
        }
    std::vector<std::size_t> move_digit(move_slots.size(), 0);

    for (;;) {
      for (;;) {
        MooreCheck check(a, p, m, start);
        if (check.wins(start, m.initial)) return {k, m};
        // Next update table.
        std::size_t i = m.update.size();
        for (; i > 0; --i) {
          if (++m.update[i - 1] < k) break;
          m.update[i - 1] = 0;
        }
        if (i == 0) break;
      }
      // Next move table.
      std::size_t i = move_slots.size();
      for (; i > 0; --i) {
        VertexId v = static_cast<VertexId>(move_slots[i - 1] / k);
        if (++move_digit[i - 1] < a.out(v).size()) {
          m.next_move[move_slots[i - 1]] = a.out(v)[move_digit[i - 1]].target;
          break;
        }
        move_digit[i - 1] = 0;
        m.next_move[move_slots[i - 1]] = a.out(v)[0].target;
      }
      if (i == 0) break;
    }
  }
  return {};
}

DeterminacyReport classify_determinacy(const Arena& a, const CycleProperty& p) {
  require_kind(p, a.label_kind());
  DeterminacyReport r;
  r.property = p.to_string();
  auto regions = fcg_regions(a, p);
  r.determined = regions[Player::zero].size() + regions[Player::one].size() == a.size();

  for (Player player : {Player::zero, Player::one}) {
    auto& pr = r.players[index(player)];
    pr.winning_region = regions[player];
    std::vector<bool> any(a.size(), false);
    for_each_memoryless_strategy(a, player, [&](const MemorylessStrategy& s) {
      std::vector<bool> wins(a.size(), false);
      for (VertexId v = 0; v < a.size(); ++v) {
        MemorylessCheck check(a, p, s, v);
        wins[v] = check.wins(v);
        if (wins[v]) any[v] = true;
      }
      if (!pr.uniform_strategy && covers(wins, pr.winning_region)) pr.uniform_strategy = s;
      return true;
    });
    for (VertexId v = 0; v < a.size(); ++v)
      if (any[v]) pr.pointwise_region.push_back(v);
    pr.pointwise = pr.pointwise_region == pr.winning_region;
    pr.uniform = pr.uniform_strategy.has_value();
  }
  r.pointwise_memoryless_determined =
      r.determined && r.players[0].pointwise && r.players[1].pointwise;
  r.uniform_memoryless_determined = r.determined && r.players[0].uniform && r.players[1].uniform;
  return r;
}

}  // namespace fcg
