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

#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace fcg::testing {

std::size_t Shape::edge_count() const {
  std::size_t m = 0;
  for (const auto& s : succ) m += s.size();
  return m;
}

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i); }

namespace {

// Adjacency bitmask (n*n bits, row-major) plus owner bits above it. Fits in
// 64 bits for n <= 7.
std::uint64_t encode(std::size_t n, const std::vector<std::uint32_t>& rows,
                     const std::vector<Player>& owner, std::span<const std::size_t> perm) {
  std::uint64_t code = 0;
  std::vector<std::uint32_t> prow(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (rows[v] >> w & 1) prow[perm[v]] |= std::uint32_t{1} << perm[w];
  for (std::size_t v = 0; v < n; ++v) code |= std::uint64_t{prow[v]} << (v * n);
  for (std::size_t v = 0; v < n; ++v)
    if (owner[v] == Player::one) code |= std::uint64_t{1} << (n * n + perm[v]);
  return code;
}

}  // namespace

void for_each_shape(std::size_t n, std::size_t max_out, Owners owners,
                    const std::function<void(const Shape&)>& fn) {
  if (n == 0 || n > 7) throw std::invalid_argument("for_each_shape supports 1..7 vertices");
  std::vector<std::uint32_t> row_choices;
  for (std::uint32_t r = 1; r < (1u << n); ++r)
    if (static_cast<std::size_t>(__builtin_popcount(r)) <= max_out) row_choices.push_back(r);

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  const std::uint64_t owner_sets = owners == Owners::both ? (std::uint64_t{1} << n) : 1;
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::uint32_t> rows(n);
  std::vector<Player> owner(n);
  const std::vector<std::size_t> identity = perms.front();
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) rows[v] = row_choices[idx[v]];
    for (std::uint64_t os = 0; os < owner_sets; ++os) {
      for (std::size_t v = 0; v < n; ++v) owner[v] = (os >> v & 1) ? Player::one : Player::zero;
      const std::uint64_t code = encode(n, rows, owner, identity);
      bool minimal = true;
      for (std::size_t k = 1; k < perms.size() && minimal; ++k)
        if (encode(n, rows, owner, perms[k]) < code) minimal = false;
      if (!minimal) continue;
      Shape s;
      s.owner = owner;
      s.succ.resize(n);
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
          if (rows[v] >> w & 1) s.succ[v].push_back(static_cast<VertexId>(w));
      fn(s);
    }
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == row_choices.size()) idx[pos++] = 0;
    if (pos == n) break;
  }
}

Arena build_arena(const Shape& s, LabelKind kind, std::span<const Label> labels) {
  ArenaBuilder b(kind);
  for (std::size_t v = 0; v < s.size(); ++v) b.add_vertex(vertex_name(v), s.owner[v]);
  std::size_t i = 0;
  for (std::size_t v = 0; v < s.size(); ++v)
    for (VertexId w : s.succ[v]) b.add_edge(vertex_name(v), vertex_name(w), labels[i++]);
  return b.build();
}

namespace {

void for_each_assignment(std::size_t slots, std::size_t alphabet_size,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(slots, 0);
  for (;;) {
    fn(idx);
    std::size_t pos = 0;
    while (pos < slots && ++idx[pos] == alphabet_size) idx[pos++] = 0;
    if (pos == slots) return;
  }
}

}  // namespace

void for_each_edge_labelling(const Shape& s, LabelKind kind, std::span<const Label> alphabet,
                             const std::function<void(const Arena&)>& fn) {
  std::vector<Label> labels(s.edge_count(), alphabet.front());
  for_each_assignment(labels.size(), alphabet.size(), [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) labels[i] = alphabet[idx[i]];
    fn(build_arena(s, kind, labels));
  });
}

void for_each_vertex_labelling(const Shape& s, LabelKind kind, std::span<const Label> alphabet,
                               const std::function<void(const Arena&)>& fn) {
  std::vector<Label> labels(s.edge_count(), alphabet.front());
  for_each_assignment(s.size(), alphabet.size(), [&](const std::vector<std::size_t>& idx) {
    std::size_t i = 0;
    for (std::size_t v = 0; v < s.size(); ++v)
      for (std::size_t k = 0; k < s.succ[v].size(); ++k) labels[i++] = alphabet[idx[v]];
    fn(build_arena(s, kind, labels));
  });
}

Shape random_shape(std::mt19937_64& rng, std::size_t n, std::size_t max_out, Owners owners) {
  Shape s;
  s.succ.resize(n);
  s.owner.resize(n, Player::zero);
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t d = uniform(rng, 1, std::min(max_out, n));
    std::shuffle(all.begin(), all.end(), rng);
    s.succ[v].assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(d));
    std::sort(s.succ[v].begin(), s.succ[v].end());
    if (owners == Owners::both && uniform(rng, 0, 1)) s.owner[v] = Player::one;
  }
  return s;
}

Arena random_arena(std::mt19937_64& rng, const RandomArenaSpec& spec) {
  Shape s = random_shape(rng, spec.n, spec.max_out, spec.owners);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < s.edge_count(); ++i) labels.push_back(spec.label(rng));
  return build_arena(s, spec.kind, labels);
}

std::function<Label(std::mt19937_64&)> priorities_upto(std::uint64_t max) {
  return [max](std::mt19937_64& rng) { return Label::priority(uniform(rng, 0, max)); };
}

std::function<Label(std::mt19937_64&)> weights_within(std::int64_t bound) {
  return [bound](std::mt19937_64& rng) {
    return Label::weight(std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng));
  };
}

std::function<Label(std::mt19937_64&)> payoffs_within(std::int64_t num_bound, std::int64_t den_bound) {
  return [=](std::mt19937_64& rng) {
    auto num = std::uniform_int_distribution<std::int64_t>(-num_bound, num_bound)(rng);
    auto den = std::uniform_int_distribution<std::int64_t>(1, den_bound)(rng);
    return Label::payoff(num, den);
  };
}

std::function<Label(std::mt19937_64&)> pairs_within(std::uint64_t max_priority, std::int64_t bound) {
  return [=](std::mt19937_64& rng) {
    return Label::pair(uniform(rng, 0, max_priority),
                       std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng));
  };
}

std::vector<VertexId> random_play(std::mt19937_64& rng, const Arena& a, std::size_t steps) {
  std::vector<VertexId> play{static_cast<VertexId>(uniform(rng, 0, a.size() - 1))};
  for (std::size_t i = 0; i < steps; ++i) {
    auto out = a.out(play.back());
    play.push_back(out[uniform(rng, 0, out.size() - 1)].target);
  }
  return play;
}

GeographyInstance random_geography(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return make_geography(n, edges, static_cast<VertexId>(uniform(rng, 0, n - 1)));
}

}  // namespace fcg::testing
