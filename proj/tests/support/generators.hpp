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

#ifndef FCG_TESTS_GENERATORS_HPP
#define FCG_TESTS_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fcg/arena.hpp"
#include "fcg/reductions.hpp"

namespace fcg::testing {

/// Unlabelled arena: successor lists and owners.
struct Shape {
  std::vector<std::vector<VertexId>> succ;
  std::vector<Player> owner;

  std::size_t size() const { return owner.size(); }
  std::size_t edge_count() const;
};

enum class Owners { solitaire, both };

/// One shape per isomorphism class (vertex renamings preserving owners) of
/// arenas on n vertices with out-degree 1..max_out, self-loops allowed.
void for_each_shape(std::size_t n, std::size_t max_out, Owners owners,
                    const std::function<void(const Shape&)>& fn);

std::string vertex_name(std::size_t i);

/// labels[i] is the label of the i-th edge in (source, target) order.
Arena build_arena(const Shape& s, LabelKind kind, std::span<const Label> labels);

/// Every labelling of the shape's edges over the alphabet.
void for_each_edge_labelling(const Shape& s, LabelKind kind, std::span<const Label> alphabet,
                             const std::function<void(const Arena&)>& fn);

/// Every labelling where each edge carries the label of its source.
void for_each_vertex_labelling(const Shape& s, LabelKind kind, std::span<const Label> alphabet,
                               const std::function<void(const Arena&)>& fn);

struct RandomArenaSpec {
  std::size_t n = 5;
  std::size_t max_out = 2;
  Owners owners = Owners::both;
  LabelKind kind = LabelKind::priority;
  std::function<Label(std::mt19937_64&)> label;
};

Shape random_shape(std::mt19937_64& rng, std::size_t n, std::size_t max_out, Owners owners);
Arena random_arena(std::mt19937_64& rng, const RandomArenaSpec& spec);

std::function<Label(std::mt19937_64&)> priorities_upto(std::uint64_t max);
std::function<Label(std::mt19937_64&)> weights_within(std::int64_t bound);
/// n/d with |n| <= num_bound and 1 <= d <= den_bound.
std::function<Label(std::mt19937_64&)> payoffs_within(std::int64_t num_bound, std::int64_t den_bound);
std::function<Label(std::mt19937_64&)> pairs_within(std::uint64_t max_priority, std::int64_t bound);

/// Random play of the given number of steps from a random vertex.
std::vector<VertexId> random_play(std::mt19937_64& rng, const Arena& a, std::size_t steps);

/// Random geography instance; each ordered pair is an edge with probability p.
GeographyInstance random_geography(std::mt19937_64& rng, std::size_t n, double p);

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

}  // namespace fcg::testing

#endif  // FCG_TESTS_GENERATORS_HPP
