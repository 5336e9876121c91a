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

#include "fcg/fcg_solver.hpp"

#include "path_search.hpp"

namespace fcg {

namespace {

// AND-OR evaluation of the unwound arena. No transposition table: the value
// of a node depends on the whole ordered path, not just the visited set.
class MinimaxSearch : public detail::PathSearch {
 public:
  using PathSearch::PathSearch;

  Player value(VertexId v) {
    const Player mover = arena().owner(v);
    for (const auto& e : arena().out(v))
      if (outcome(e) == mover) return mover;
    return opponent(mover);
  }

  Player outcome(const Edge& e) {
    if (on_path(e.target)) return leaf_winner(e);
    push(e);
    Player r = value(e.target);
    pop();
    return r;
  }

  // Records the winner's choices on every history reachable while they
  // follow them; `winner` is already known to win from v.
  void build_witness(VertexId v, Player winner, std::map<History, VertexId>& witness) {
    if (arena().owner(v) == winner) {
      for (const auto& e : arena().out(v)) {
        if (outcome(e) != winner) continue;
        witness.emplace(path(), e.target);
        if (!on_path(e.target)) {
          push(e);
          build_witness(e.target, winner, witness);
          pop();
        }
        return;
      }
    } else {
      for (const auto& e : arena().out(v)) {
        if (on_path(e.target)) continue;
        push(e);
        build_witness(e.target, winner, witness);
        pop();
      }
    }
  }

  bool replay(VertexId v, Player winner, const std::map<History, VertexId>& witness) {
    auto follow = [&](const Edge& e) {
      if (on_path(e.target)) return leaf_winner(e) == winner;
      push(e);
      bool ok = replay(e.target, winner, witness);
      pop();
      return ok;
    };
    if (arena().owner(v) == winner) {
      auto it = witness.find(path());
      if (it == witness.end()) return false;
      for (const auto& e : arena().out(v))
        if (e.target == it->second) return follow(e);
      return false;
    }
    for (const auto& e : arena().out(v))
      if (!follow(e)) return false;
    return true;
  }
};

void check_start(const Arena& a, VertexId start) {
  if (start >= a.size()) throw ArenaError("unknown start vertex id " + std::to_string(start));
}

}  // namespace

Player fcg_winner(const Arena& a, const CycleProperty& p, VertexId start) {
  check_start(a, start);
  require_kind(p, a.label_kind());
  MinimaxSearch s(a, p, start);
  return s.value(start);
}

FcgOutcome solve_fcg(const Arena& a, const CycleProperty& p, VertexId start) {
  check_start(a, start);
  require_kind(p, a.label_kind());
  MinimaxSearch s(a, p, start);
  FcgOutcome out;
  out.start = start;
  out.winner = s.value(start);
  s.build_witness(start, out.winner, out.witness);
  return out;
}

std::vector<FcgOutcome> solve_fcg_all(const Arena& a, const CycleProperty& p) {
  require_kind(p, a.label_kind());
  std::vector<FcgOutcome> all;
  all.reserve(a.size());
  for (VertexId v = 0; v < a.size(); ++v) all.push_back(solve_fcg(a, p, v));
  return all;
}

Regions fcg_regions(const Arena& a, const CycleProperty& p) {
  require_kind(p, a.label_kind());
  Regions r;
  for (VertexId v = 0; v < a.size(); ++v) {
    MinimaxSearch s(a, p, v);
    r[s.value(v)].push_back(v);
  }
  return r;
}

bool witness_is_sound(const Arena& a, const CycleProperty& p, const FcgOutcome& outcome) {
  check_start(a, outcome.start);
  require_kind(p, a.label_kind());
  MinimaxSearch s(a, p, outcome.start);
  return s.replay(outcome.start, outcome.winner, outcome.witness);
}

}  // namespace fcg
