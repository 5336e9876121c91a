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

#ifndef FCG_DECOMPOSITION_HPP
#define FCG_DECOMPOSITION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcg/arena.hpp"

namespace fcg {

struct PushResult;

/// Stack of the cycles-decomposition. The stacked edges always form a simple
/// path, so at most |V|-1 edges are held.
class DecompositionState {
 public:
  DecompositionState() = default;

  std::span<const EdgeRef> stack() const { return stack_; }
  bool empty() const { return stack_.empty(); }
  std::size_t size() const { return stack_.size(); }

  /// Vertices along the stacked path (source of the first edge, then every target).
  std::vector<VertexId> path() const;

  friend bool operator==(const DecompositionState&, const DecompositionState&) = default;
  friend auto operator<=>(const DecompositionState&, const DecompositionState&) = default;

 private:
  friend PushResult push_edge(const DecompositionState& s, EdgeRef e);
  std::vector<EdgeRef> stack_;
};

struct PushResult {
  DecompositionState state;
  /// Edges of the popped cycle, in traversal order, when the push closed one.
  std::optional<std::vector<EdgeRef>> cycle;
};

/// Pushes e and pops the cycle it closes, if any. Throws std::invalid_argument
/// when e does not continue the stacked path.
PushResult push_edge(const DecompositionState& s, EdgeRef e);

struct CycleRecord {
  std::vector<EdgeRef> edges;
  LabelWord labels;

  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

CycleRecord make_cycle_record(const Arena& a, std::vector<EdgeRef> edges);

/// "(v,w)(w,v)" rendering.
std::string format_edges(const Arena& a, std::span<const EdgeRef> edges);

struct PrefixDecomposition {
  std::vector<CycleRecord> cycles;
  DecompositionState residual;
};

/// Throws ArenaError when a step of the play is not an edge.
PrefixDecomposition decompose_prefix(const Arena& a, std::span<const VertexId> play);
std::optional<CycleRecord> first_cycle(const Arena& a, std::span<const VertexId> play);

/// Ultimately periodic play prefix . loop^omega.
struct Lasso {
  std::vector<VertexId> prefix;
  std::vector<VertexId> loop;

  std::size_t length() const { return prefix.size() + loop.size(); }
  /// Vertex at position i of the infinite play.
  VertexId at(std::size_t i) const {
    return i < prefix.size() ? prefix[i] : loop[(i - prefix.size()) % loop.size()];
  }
  /// The play with its first `shift` vertices dropped.
  Lasso suffix(std::size_t shift) const;

  friend bool operator==(const Lasso&, const Lasso&) = default;
};

/// Throws ArenaError when the loop is empty or a step is not an edge.
void validate_lasso(const Arena& a, const Lasso& l);
Lasso make_lasso(const Arena& a, std::span<const std::string> prefix,
                 std::span<const std::string> loop);

struct LassoDecomposition {
  std::vector<CycleRecord> transient;
  /// Cycles emitted during one period of the decomposition; repeated forever.
  std::vector<CycleRecord> periodic;
  /// Stack contents at the start of the period.
  DecompositionState tail_residual;
  /// Number of steps simulated until the (loop position, stack) state repeated.
  std::size_t steps = 0;
  /// Distinct (loop position, stack) states seen.
  std::size_t distinct_states = 0;
};

LassoDecomposition decompose_lasso(const Arena& a, const Lasso& l);

}  // namespace fcg

#endif  // FCG_DECOMPOSITION_HPP
