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

#include "fcg/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fcg {

namespace {

// Pushes e onto a stack that forms a simple path; returns the number of
// edges popped (0 when no cycle closed). Popped edges are appended to *out.
std::size_t push_in_place(std::vector<EdgeRef>& stack, EdgeRef e, std::vector<EdgeRef>* out) {
  if (!stack.empty() && stack.back().target != e.source)
    throw std::invalid_argument("edge does not continue the stacked path");
  // The cycle closes at the unique path vertex equal to e.target.
  std::size_t from = stack.size() + 1;  // sentinel: no cycle
  if (e.source == e.target) {
    from = stack.size();
  } else if (!stack.empty() && stack.front().source == e.target) {
    from = 0;
  } else {
    for (std::size_t j = 0; j < stack.size(); ++j)
      if (stack[j].target == e.target) {
        from = j + 1;
        break;
      }
  }
  stack.push_back(e);
  if (from > stack.size() - 1) return 0;
  std::size_t popped = stack.size() - from;
  if (out) out->insert(out->end(), stack.begin() + static_cast<std::ptrdiff_t>(from), stack.end());
  stack.resize(from);
  return popped;
}

}  // namespace

std::vector<VertexId> DecompositionState::path() const {
  std::vector<VertexId> p;
  if (stack_.empty()) return p;
  p.push_back(stack_.front().source);
  for (const auto& e : stack_) p.push_back(e.target);
  return p;
}

PushResult push_edge(const DecompositionState& s, EdgeRef e) {
  PushResult r{s, std::nullopt};
  std::vector<EdgeRef> cycle;
  if (push_in_place(r.state.stack_, e, &cycle) > 0) r.cycle = std::move(cycle);
  return r;
}

CycleRecord make_cycle_record(const Arena& a, std::vector<EdgeRef> edges) {
  CycleRecord c;
  c.labels.reserve(edges.size());
  for (const auto& e : edges) c.labels.push_back(a.label(e));
  c.edges = std::move(edges);
  return c;
}

std::string format_edges(const Arena& a, std::span<const EdgeRef> edges) {
  std::string out;
  for (const auto& e : edges) out += "(" + a.name(e.source) + "," + a.name(e.target) + ")";
  return out;
}

PrefixDecomposition decompose_prefix(const Arena& a, std::span<const VertexId> play) {
  PrefixDecomposition d;
  std::vector<EdgeRef> stack;
  for (std::size_t i = 0; i + 1 < play.size(); ++i) {
    EdgeRef e{play[i], play[i + 1]};
    if (e.source >= a.size() || !a.has_edge(e.source, e.target))
      throw ArenaError("play step " + std::to_string(i) + " is not an edge");
    std::vector<EdgeRef> cycle;
    if (push_in_place(stack, e, &cycle) > 0) d.cycles.push_back(make_cycle_record(a, std::move(cycle)));
  }
  for (const auto& e : stack) d.residual = push_edge(d.residual, e).state;
  return d;
}

std::optional<CycleRecord> first_cycle(const Arena& a, std::span<const VertexId> play) {
  std::vector<EdgeRef> stack;
  for (std::size_t i = 0; i + 1 < play.size(); ++i) {
    EdgeRef e{play[i], play[i + 1]};
    if (e.source >= a.size() || !a.has_edge(e.source, e.target))
      throw ArenaError("play step " + std::to_string(i) + " is not an edge");
    std::vector<EdgeRef> cycle;
    if (push_in_place(stack, e, &cycle) > 0) return make_cycle_record(a, std::move(cycle));
  }
  return std::nullopt;
}

Lasso Lasso::suffix(std::size_t shift) const {
  if (shift < prefix.size())
    return {std::vector<VertexId>(prefix.begin() + static_cast<std::ptrdiff_t>(shift), prefix.end()),
            loop};
  Lasso l{{}, loop};
  auto r = (shift - prefix.size()) % loop.size();
  std::rotate(l.loop.begin(), l.loop.begin() + static_cast<std::ptrdiff_t>(r), l.loop.end());
  return l;
}

void validate_lasso(const Arena& a, const Lasso& l) {
  if (l.loop.empty()) throw ArenaError("lasso loop is empty");
  auto check_vertex = [&](VertexId v) {
    if (v >= a.size()) throw ArenaError("lasso references unknown vertex id " + std::to_string(v));
  };
  for (auto v : l.prefix) check_vertex(v);
  for (auto v : l.loop) check_vertex(v);
  for (std::size_t i = 0; i < l.length(); ++i) {
    auto s = l.at(i), t = l.at(i + 1);
    if (!a.has_edge(s, t))
      throw ArenaError("lasso step (" + a.name(s) + "," + a.name(t) + ") is not an edge");
  }
}

Lasso make_lasso(const Arena& a, std::span<const std::string> prefix,
                 std::span<const std::string> loop) {
  Lasso l;
  for (const auto& v : prefix) l.prefix.push_back(a.id(v));
  for (const auto& v : loop) l.loop.push_back(a.id(v));
  validate_lasso(a, l);
  return l;
}

LassoDecomposition decompose_lasso(const Arena& a, const Lasso& l) {
  validate_lasso(a, l);
  struct Emitted {
    std::size_t step;
    std::vector<EdgeRef> edges;
  };
  std::vector<Emitted> emitted;
  std::map<std::pair<std::size_t, std::vector<EdgeRef>>, std::size_t> seen;
  std::vector<EdgeRef> stack;
  std::size_t period_start = 0;
  std::size_t i = 0;
  for (;; ++i) {
    if (i >= l.prefix.size()) {
      auto phase = (i - l.prefix.size()) % l.loop.size();
      auto [it, fresh] = seen.try_emplace({phase, stack}, i);
      if (!fresh) {
        period_start = it->second;
        break;
      }
    }
    std::vector<EdgeRef> cycle;
    if (push_in_place(stack, {l.at(i), l.at(i + 1)}, &cycle) > 0)
      emitted.push_back({i, std::move(cycle)});
  }

  LassoDecomposition d;
  d.steps = i;
  d.distinct_states = seen.size();
  for (auto& c : emitted) {
    auto rec = make_cycle_record(a, std::move(c.edges));
    (c.step < period_start ? d.transient : d.periodic).push_back(std::move(rec));
  }
  // The stack at the period start is the stack at the current (repeated) state.
  for (const auto& e : stack) d.tail_residual = push_edge(d.tail_residual, e).state;
  return d;
}

}  // namespace fcg
