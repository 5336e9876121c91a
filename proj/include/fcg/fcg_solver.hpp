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

#ifndef FCG_FCG_SOLVER_HPP
#define FCG_FCG_SOLVER_HPP

#include <array>
#include <map>
#include <vector>

#include "fcg/arena.hpp"
#include "fcg/cycle_property.hpp"

namespace fcg {

/// A simple path from the start vertex, ending at the vertex about to move.
using History = std::vector<VertexId>;

/// Winner of a first-cycle game from one start vertex, with a history-dependent
/// winning strategy for the winner. The witness covers exactly the decision
/// histories reachable when the winner follows it.
struct FcgOutcome {
  VertexId start = 0;
  Player winner = Player::zero;
  std::map<History, VertexId> witness;
};

/// Winning regions, each sorted by vertex id.
struct Regions {
  std::array<std::vector<VertexId>, 2> of;

  const std::vector<VertexId>& operator[](Player p) const { return of[index(p)]; }
  std::vector<VertexId>& operator[](Player p) { return of[index(p)]; }
  friend bool operator==(const Regions&, const Regions&) = default;
};

/// Winner only, by minimax over the tree of simple paths from start. Moves
/// that revisit a vertex are leaves decided by member(p, cycle labels).
Player fcg_winner(const Arena& a, const CycleProperty& p, VertexId start);

/// Winner plus witness strategy; ties go to the first winning successor in
/// canonical order.
FcgOutcome solve_fcg(const Arena& a, const CycleProperty& p, VertexId start);

/// solve_fcg from every vertex, indexed by vertex id.
std::vector<FcgOutcome> solve_fcg_all(const Arena& a, const CycleProperty& p);

Regions fcg_regions(const Arena& a, const CycleProperty& p);

/// True iff every play from the start that follows the witness (against all
/// opponent moves) closes a first cycle won by outcome.winner.
bool witness_is_sound(const Arena& a, const CycleProperty& p, const FcgOutcome& outcome);

}  // namespace fcg

#endif  // FCG_FCG_SOLVER_HPP
