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

#ifndef FCG_STRATEGY_HPP
#define FCG_STRATEGY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcg/arena.hpp"
#include "fcg/cycle_property.hpp"
#include "fcg/fcg_solver.hpp"

namespace fcg {

/// Exhaustive enumeration would exceed its feasibility guard.
class EnumerationBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kMemorylessEnumerationBound = 1'000'000;
inline constexpr std::uint64_t kMooreEnumerationBound = 10'000'000;

/// Product of the out-degrees of the player's vertices, saturating at
/// UINT64_MAX.
std::uint64_t memoryless_strategy_count(const Arena& a, Player player);

/// Calls fn on every memoryless strategy of `player` in canonical order
/// (lexicographic in the successor index chosen at each vertex, lowest vertex
/// first) until fn returns false. Throws EnumerationBoundExceeded when the
/// count exceeds kMemorylessEnumerationBound.
void for_each_memoryless_strategy(const Arena& a, Player player,
                                  const std::function<bool(const MemorylessStrategy&)>& fn);

/// Whether s wins the first-cycle game from start against every opponent play.
bool memoryless_wins_fcg(const Arena& a, const CycleProperty& p, const MemorylessStrategy& s,
                         VertexId start);

/// Per-vertex result of memoryless_wins_fcg.
std::vector<bool> memoryless_win_set(const Arena& a, const CycleProperty& p,
                                     const MemorylessStrategy& s);

std::vector<VertexId> pointwise_memoryless_region(const Arena& a, const CycleProperty& p,
                                                  Player player);

/// First strategy in canonical order that wins from the player's whole
/// winning region; with an empty region the first strategy is returned.
std::optional<MemorylessStrategy> uniform_memoryless_strategy(const Arena& a,
                                                              const CycleProperty& p,
                                                              Player player);

/// Finite-memory strategy (M, m_I, delta, rho). Memory is updated from the
/// vertex just left: m_{l+1} = delta(u_l, m_l), and the move at u_l is
/// rho(u_l, m_l).
struct MooreMachine {
  Player player = Player::zero;
  std::size_t memory_size = 1;
  std::size_t initial = 0;
  std::vector<std::size_t> update;   // update[v * memory_size + m]
  std::vector<VertexId> next_move;   // next_move[v * memory_size + m]; kNoVertex off-player

  std::size_t delta(VertexId v, std::size_t m) const { return update[v * memory_size + m]; }
  VertexId rho(VertexId v, std::size_t m) const { return next_move[v * memory_size + m]; }
};

/// Throws ArenaError when the machine is malformed for a.
void validate_machine(const Arena& a, const MooreMachine& m);

bool moore_wins_fcg(const Arena& a, const CycleProperty& p, const MooreMachine& m,
                    VertexId start);

/// Number of machines with k memory states and fixed initial state,
/// saturating at UINT64_MAX.
std::uint64_t moore_machine_count(const Arena& a, Player player, std::size_t k);

struct MemoryResult {
  /// Smallest memory size that wins, absent when none up to k_max does.
  std::optional<std::size_t> minimal;
  std::optional<MooreMachine> machine;
  bool exceeds_bound() const { return !minimal.has_value(); }
};

/// Smallest |M| <= k_max for which some Moore machine wins from start.
/// Throws std::invalid_argument when start is not in the player's winning
/// region and EnumerationBoundExceeded when a size is too large to enumerate.
MemoryResult min_moore_memory(const Arena& a, const CycleProperty& p, Player player,
                              VertexId start, std::size_t k_max);

struct PlayerDeterminacy {
  std::vector<VertexId> winning_region;
  std::vector<VertexId> pointwise_region;
  std::optional<MemorylessStrategy> uniform_strategy;
  bool pointwise = false;
  bool uniform = false;
};

struct DeterminacyReport {
  std::string property;
  std::array<PlayerDeterminacy, 2> players;
  bool determined = false;
  bool pointwise_memoryless_determined = false;
  bool uniform_memoryless_determined = false;

  const PlayerDeterminacy& operator[](Player p) const { return players[index(p)]; }
};

DeterminacyReport classify_determinacy(const Arena& a, const CycleProperty& p);

}  // namespace fcg

#endif  // FCG_STRATEGY_HPP
