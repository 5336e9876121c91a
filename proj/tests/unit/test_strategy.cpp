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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fcg/gallery.hpp"
#include "fcg/strategy.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fcg;
using testing::uniform;

namespace {

const Arena& prop1() { return find_gallery("prop1-evenlen")->get().arena; }
const Arena& maxfirst() { return find_gallery("maxfirst-solitaire")->get().arena; }

MooreMachine from_memoryless(const MemorylessStrategy& s) {
  MooreMachine m;
  m.player = s.player;
  m.memory_size = 1;
  m.update.assign(s.choice.size(), 0);
  m.next_move = s.choice;
  return m;
}

testing::RandomArenaSpec mixed(std::size_t n) {
  return {n, 2, testing::Owners::both, LabelKind::priority, testing::priorities_upto(3)};
}

}  // namespace

TEST_CASE("memoryless enumeration order and count") {
  const Arena& a = prop1();
  CHECK(memoryless_strategy_count(a, Player::zero) == 2);
  CHECK(memoryless_strategy_count(a, Player::one) == 2);
  std::vector<VertexId> at_v1;
  for_each_memoryless_strategy(a, Player::zero, [&](const MemorylessStrategy& s) {
    at_v1.push_back(s(a.id("v1")));
    return true;
  });
  CHECK(at_v1 == std::vector<VertexId>{a.id("v2"), a.id("v3")});
  int seen = 0;
  for_each_memoryless_strategy(a, Player::one, [&](const MemorylessStrategy&) { return ++seen < 1; });
  CHECK(seen == 1);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    Arena r = testing::random_arena(rng, mixed(1 + uniform(rng, 0, 5)));
    std::set<std::vector<VertexId>> distinct;
    for_each_memoryless_strategy(r, Player::zero, [&](const MemorylessStrategy& s) {
      validate_strategy(r, s);
      distinct.insert(s.choice);
      return true;
    });
    CHECK(distinct.size() == memoryless_strategy_count(r, Player::zero));
  }
}

TEST_CASE("enumeration guards") {
  ArenaBuilder b(LabelKind::priority);
  for (int i = 0; i < 24; ++i) b.add_vertex("u" + std::to_string(i), Player::zero);
  for (int i = 0; i < 24; ++i) {
    b.add_edge("u" + std::to_string(i), "u" + std::to_string((i + 1) % 24), Label::priority(0));
    b.add_edge("u" + std::to_string(i), "u" + std::to_string((i + 2) % 24), Label::priority(0));
  }
  Arena a = b.build();
  CHECK(memoryless_strategy_count(a, Player::zero) == (1u << 24));
  CHECK_THROWS_AS(for_each_memoryless_strategy(a, Player::zero, [](const MemorylessStrategy&) { return true; }),
                  EnumerationBoundExceeded);
  CHECK(moore_machine_count(a, Player::zero, 1) == (1u << 24));
  CHECK(moore_machine_count(a, Player::zero, 5) == UINT64_MAX);
  CHECK_THROWS_AS(min_moore_memory(a, CycleProperty::even_len(), fcg_winner(a, CycleProperty::even_len(), 0), 0, 2),
                  EnumerationBoundExceeded);
}

TEST_CASE("even-length arena needs two memory states") {
  const Arena& a = prop1();
  auto p = CycleProperty::even_len();
  CHECK(pointwise_memoryless_region(a, p, Player::zero).empty());
  for_each_memoryless_strategy(a, Player::zero, [&](const MemorylessStrategy& s) {
    CHECK_FALSE(memoryless_wins_fcg(a, p, s, a.id("v2")));
    return true;
  });
  for (auto start : {"v2", "v3"}) {
    auto r = min_moore_memory(a, p, Player::zero, a.id(start), 3);
    REQUIRE(r.minimal);
    CHECK(*r.minimal == 2);
    CHECK(moore_wins_fcg(a, p, *r.machine, a.id(start)));
  }
  CHECK(moore_machine_count(a, Player::zero, 2) == 256 * 4);
  CHECK_THROWS_AS(min_moore_memory(a, p, Player::zero, a.id("v1"), 2), std::invalid_argument);

  // Remember whether v4 was just visited: go to v3 first, then to v2.
  MooreMachine m;
  m.player = Player::zero;
  m.memory_size = 2;
  m.update.assign(8, 0);
  m.next_move.assign(8, kNoVertex);
  m.update[a.id("v4") * 2 + 0] = 1;
  m.next_move[a.id("v1") * 2 + 0] = a.id("v2");
  m.next_move[a.id("v1") * 2 + 1] = a.id("v3");
  CHECK(moore_wins_fcg(a, p, m, a.id("v2")));
  m.next_move[a.id("v1") * 2 + 1] = a.id("v2");
  CHECK_FALSE(moore_wins_fcg(a, p, m, a.id("v2")));
}

TEST_CASE("Moore machines are validated") {
  const Arena& a = prop1();
  MooreMachine m;
  m.memory_size = 0;
  CHECK_THROWS_AS(validate_machine(a, m), ArenaError);
  m.memory_size = 1;
  m.initial = 1;
  CHECK_THROWS_AS(validate_machine(a, m), ArenaError);
  m.initial = 0;
  m.update.assign(4, 0);
  m.next_move.assign(4, kNoVertex);
  CHECK_THROWS_AS(validate_machine(a, m), ArenaError);  // no move at v1
  m.next_move[a.id("v1")] = a.id("v4");
  CHECK_THROWS_AS(validate_machine(a, m), ArenaError);  // not an edge
  m.next_move[a.id("v1")] = a.id("v2");
  m.update[0] = 3;
  CHECK_THROWS_AS(validate_machine(a, m), ArenaError);
}

TEST_CASE("maxfirst solitaire is pointwise but not uniformly memoryless") {
  const Arena& a = maxfirst();
  auto p = CycleProperty::max_first();
  CHECK(pointwise_memoryless_region(a, p, Player::zero).size() == 3);
  CHECK_FALSE(uniform_memoryless_strategy(a, p, Player::zero).has_value());
  auto rep = classify_determinacy(a, p);
  CHECK(rep.determined);
  CHECK(rep.pointwise_memoryless_determined);
  CHECK_FALSE(rep.uniform_memoryless_determined);
  CHECK(rep[Player::one].uniform);
}

TEST_CASE("one-state machines behave like memoryless strategies") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    Arena a = testing::random_arena(rng, mixed(1 + uniform(rng, 0, 4)));
    auto p = i % 2 ? CycleProperty::parity() : CycleProperty::even_len();
    for (Player pl : {Player::zero, Player::one})
      for_each_memoryless_strategy(a, pl, [&](const MemorylessStrategy& s) {
        auto m = from_memoryless(s);
        for (VertexId v = 0; v < a.size(); ++v) CHECK(moore_wins_fcg(a, p, m, v) == memoryless_wins_fcg(a, p, s, v));
        return true;
      });
  }
}

TEST_CASE("minimal memory is within (n-1)! and its machine wins") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    Arena a = testing::random_arena(rng, mixed(2 + uniform(rng, 0, 2)));
    auto p = i % 2 ? CycleProperty::max_first() : CycleProperty::even_len();
    for (VertexId v = 0; v < a.size(); ++v) {
      Player w = fcg_winner(a, p, v);
      auto r = min_moore_memory(a, p, w, v, 2);
      if (!r.minimal) continue;
      CHECK(*r.minimal <= testing::factorial(a.size() - 1));
      CHECK(moore_wins_fcg(a, p, *r.machine, v));
      auto pointwise = pointwise_memoryless_region(a, p, w);
      CHECK((*r.minimal == 1) == std::binary_search(pointwise.begin(), pointwise.end(), v));
    }
  }
}

TEST_CASE("determinacy report agrees with the separate queries") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    Arena a = testing::random_arena(rng, mixed(1 + uniform(rng, 0, 4)));
    auto p = std::vector{CycleProperty::parity(), CycleProperty::even_len(), CycleProperty::max_first()}[i % 3];
    auto rep = classify_determinacy(a, p);
    auto regions = fcg_regions(a, p);
    CHECK(rep.determined);
    for (Player pl : {Player::zero, Player::one}) {
      CHECK(rep[pl].winning_region == regions[pl]);
      CHECK(rep[pl].pointwise_region == pointwise_memoryless_region(a, p, pl));
      CHECK(rep[pl].uniform == uniform_memoryless_strategy(a, p, pl).has_value());
      if (rep[pl].uniform_strategy)
        for (VertexId v : regions[pl]) CHECK(memoryless_wins_fcg(a, p, *rep[pl].uniform_strategy, v));
    }
  }
}
