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

#ifndef FCG_REDUCTIONS_HPP
#define FCG_REDUCTIONS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fcg/arena.hpp"
#include "fcg/cycle_property.hpp"

namespace fcg {

/// Vertex geography: from the start vertex the two players alternately move
/// the token along an edge to a vertex not yet visited; a player with no such
/// move loses. The mover makes the first move out of start. Dead ends and
/// self-loops are allowed.
struct GeographyInstance {
  std::vector<std::string> names;                 // canonical order
  std::vector<std::vector<VertexId>> successors;  // sorted, duplicate-free
  VertexId start = 0;
};

enum class GeographyWinner : std::uint8_t { mover, opponent };

std::string_view to_string(GeographyWinner w);

/// Lines `v <id>`, `e <src> <dst>`, `start <id>`; `#` starts a comment.
GeographyInstance parse_geography(std::string_view text);

/// Builds an instance with vertices 0..n-1 named by their index.
GeographyInstance make_geography(std::size_t n,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges,
                                 VertexId start);

/// Backward induction over (token, visited set), memoized. At most 58
/// vertices.
GeographyWinner solve_gg_direct(const GeographyInstance& g);

struct GeographyReduction {
  Arena arena;
  CycleProperty property = CycleProperty::ends_zero();
  VertexId start = 0;
};

/// First-cycle game equivalent to g. Vertex `x@t` is vertex x with player t
/// to move, owned by t; the mover is Player 0. Edge labels name the winner
/// if that edge closes the first cycle, and the property is ends-zero:
///   x@t -> y@(1-t) for every edge x -> y with x != y, label 1-t
///                  (closing a cycle on a graph move loses)
///   x@t -> x@(1-t) link edge, label t
/// Taking a link edge hands the turn over without moving and is answered by
/// the link back, which closes a cycle won by the other side. A player whose
/// opponent re-enters a graph vertex at the other parity wins by taking the
/// link. So every move that is illegal in geography loses, the arena has no
/// dead ends, and Player 0 wins from start@0 iff the mover wins g.
GeographyReduction gg_to_fcg(const GeographyInstance& g);

}  // namespace fcg

#endif  // FCG_REDUCTIONS_HPP
