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

#include "fcg/gallery.hpp"
#include "fcg/infinite_games.hpp"
#include "fcg/strategy.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fcg;
using testing::uniform;

namespace {

// a -(-1)-> b, b -(+1)-> c, c -(0)-> b: the prefix dips, the loop is neutral.
constexpr std::string_view kDip = R"(arena weight
v a 0
v b 0
v c 0
e a b -1
e b c 1
e c b 0
)";

Lasso random_lasso(std::mt19937_64& rng, const Arena& a) {
  LassoSearchOptions o;
  o.budget = 1;
  o.exhaustive_cap = 0;
  o.seed = rng();
  std::optional<Lasso> got;
  for_each_candidate_lasso(a, o, [&](const Lasso& l) {
    got = l;
    return false;
  });
  return *got;
}

Lasso doubled(const Lasso& l) {
  Lasso d = l;
  d.loop.insert(d.loop.end(), l.loop.begin(), l.loop.end());
  return d;
}

}  // namespace

TEST_CASE("winning condition spelling") {
  CHECK(WinningCondition::parse("parity") == WinningCondition::parity());
  CHECK(WinningCondition::parse("meanpayoff:1/2").nu() == Rational(1, 2));
  CHECK(WinningCondition::parse("energy:7").credit() == 7u);
  CHECK(WinningCondition::parse("energyparity:0").kind() == ConditionKind::energy_parity);
  for (auto t : {"parity", "meanpayoff:-1/3", "energy:4", "energyparity:2"})
    CHECK(WinningCondition::parse(t).to_string() == t);
  CHECK_THROWS_AS(WinningCondition::parse("energy:-1"), std::invalid_argument);
  CHECK_THROWS_AS(WinningCondition::parse("energy:"), std::invalid_argument);
  CHECK_THROWS_AS(WinningCondition::parse("buchi"), std::invalid_argument);
  CHECK(WinningCondition::mean_payoff(0).accepts(LabelKind::weight));
  CHECK_FALSE(WinningCondition::energy(0).accepts(LabelKind::payoff));
}

TEST_CASE("lasso evaluation") {
  Arena a = parse_arena(kDip);
  Lasso l{{a.id("a")}, {a.id("b"), a.id("c")}};
  CHECK_FALSE(eval_condition_on_lasso(WinningCondition::energy(0), l, a));
  CHECK(eval_condition_on_lasso(WinningCondition::energy(1), l, a));
  CHECK(eval_condition_on_lasso(WinningCondition::mean_payoff(Rational(1, 2)), l, a));
  CHECK_FALSE(eval_condition_on_lasso(WinningCondition::mean_payoff(Rational(2, 3)), l, a));
  CHECK(eval_ac_on_lasso(CycleProperty::energy(), l, a));
  CHECK_THROWS_AS(eval_condition_on_lasso(WinningCondition::parity(), l, a), KindMismatch);

  const Arena& p = find_gallery("maxfirst-solitaire")->get().arena;
  Lasso loop12{{}, {p.id("v1"), p.id("v2")}};
  CHECK(eval_condition_on_lasso(WinningCondition::parity(), loop12, p));
  Lasso loop23{{p.id("v1")}, {p.id("v3"), p.id("v2")}};
  CHECK_FALSE(eval_condition_on_lasso(WinningCondition::parity(), loop23, p));
}

TEST_CASE("energy verdicts are stable under unrolling the loop") {
  std::mt19937_64 rng(13);
  testing::RandomArenaSpec spec{5, 3, testing::Owners::both, LabelKind::weight, testing::weights_within(3)};
  for (int i = 0; i < 300; ++i) {
    Arena a = testing::random_arena(rng, spec);
    Lasso l = random_lasso(rng, a);
    for (std::uint64_t r : {0u, 1u, 3u, 8u}) {
      auto w = WinningCondition::energy(r);
      CHECK(eval_condition_on_lasso(w, l, a) == eval_condition_on_lasso(w, doubled(l), a));
    }
  }
}

TEST_CASE("six-step lasso: all cycles even from position 0, all odd from position 1") {
  const Arena& a = find_gallery("footnote-lasso")->get().arena;
  std::vector<std::string> loop{"v1", "v2", "v1", "v3", "v2", "v4"};
  Lasso l = make_lasso(a, {}, loop);
  auto even = CycleProperty::even_len();
  CHECK(eval_ac_on_lasso(even, l, a));
  CHECK_FALSE(eval_ac_on_lasso(even.complement(), l, a));
  CHECK(eval_ac_on_lasso(even.complement(), l.suffix(1), a));
  CHECK(eval_eac_on_lasso(even.complement(), l, a));
  auto r = check_unambiguous_bounded(a, even);
  REQUIRE(r.witness);
  CHECK(eval_eac_on_lasso(even, *r.witness, a));
  CHECK(eval_eac_on_lasso(even.complement(), *r.witness, a));
}

TEST_CASE("AC implies EAC, and AC(p), AC(not p) exclude each other") {
  std::mt19937_64 rng(17);
  testing::RandomArenaSpec spec{5, 3, testing::Owners::both, LabelKind::priority, testing::priorities_upto(3)};
  for (int i = 0; i < 300; ++i) {
    Arena a = testing::random_arena(rng, spec);
    Lasso l = random_lasso(rng, a);
    for (auto p : {CycleProperty::parity(), CycleProperty::even_len(), CycleProperty::max_first()}) {
      if (eval_ac_on_lasso(p, l, a)) CHECK(eval_eac_on_lasso(p, l, a));
      CHECK_FALSE((eval_ac_on_lasso(p, l, a) && eval_ac_on_lasso(p.complement(), l, a)));
    }
  }
}

TEST_CASE("associated properties and credits") {
  Arena a = parse_arena(kDip);
  CHECK(sufficient_energy_credit(a) == 2);
  CHECK(associated_property(WinningCondition::energy(2), a) == CycleProperty::energy());
  CHECK_THROWS_AS(associated_property(WinningCondition::energy(1), a), UnsupportedCondition);
  CHECK(associated_property(WinningCondition::mean_payoff(1), a) == CycleProperty::mean_payoff(1));
  const Arena& p = find_gallery("prop1-evenlen")->get().arena;
  CHECK(associated_property(WinningCondition::parity(), p) == CycleProperty::parity());
  CHECK_THROWS_AS(associated_property(WinningCondition::mean_payoff(0), p), KindMismatch);
  CHECK_THROWS_AS(solve_infinite_via_transfer(a, WinningCondition::energy(5)), UnsupportedCondition);
  TransferOptions unsafe;
  unsafe.allow_unregistered_credit = true;
  CHECK_FALSE(solve_infinite_via_transfer(a, WinningCondition::energy(5), unsafe).registered);
}

TEST_CASE("greedy checks") {
  Arena dip = parse_arena(kDip);
  auto bad = check_greedy_bounded(dip, WinningCondition::energy(0), CycleProperty::energy());
  REQUIRE(bad.witness);
  CHECK(eval_ac_on_lasso(CycleProperty::energy(), *bad.witness, dip));
  CHECK_FALSE(eval_condition_on_lasso(WinningCondition::energy(0), *bad.witness, dip));
  CHECK_FALSE(check_greedy_bounded(dip, WinningCondition::energy(2), CycleProperty::energy()).witness);

  std::mt19937_64 rng(19);
  LassoSearchOptions o;
  o.budget = 200;
  o.exhaustive_cap = 2000;
  for (int i = 0; i < 20; ++i) {
    testing::RandomArenaSpec pr{4, 3, testing::Owners::both, LabelKind::priority, testing::priorities_upto(4)};
    Arena a = testing::random_arena(rng, pr);
    CHECK_FALSE(check_greedy_bounded(a, WinningCondition::parity(), CycleProperty::parity(), o).witness);
    testing::RandomArenaSpec mp{4, 3, testing::Owners::both, LabelKind::payoff, testing::payoffs_within(3, 3)};
    Arena b = testing::random_arena(rng, mp);
    CHECK_FALSE(check_greedy_bounded(b, WinningCondition::mean_payoff(Rational(1, 2)),
                                     CycleProperty::mean_payoff(Rational(1, 2)), o)
                    .witness);
    testing::RandomArenaSpec en{4, 3, testing::Owners::both, LabelKind::weight, testing::weights_within(3)};
    Arena c = testing::random_arena(rng, en);
    auto w = WinningCondition::energy(sufficient_energy_credit(c));
    CHECK_FALSE(check_greedy_bounded(c, w, CycleProperty::energy(), o).witness);
  }
  // Parity is not greedy for max-first.
  const Arena& m = find_gallery("maxfirst-solitaire")->get().arena;
  CHECK(check_greedy_bounded(m, WinningCondition::parity(), CycleProperty::max_first()).witness);
}

TEST_CASE("candidate lassos are valid, ordered and reproducible") {
  const Arena& a = find_gallery("prop1-evenlen")->get().arena;
  LassoSearchOptions o;
  o.budget = 50;
  o.seed = 4;
  std::vector<Lasso> first, second;
  for_each_candidate_lasso(a, o, [&](const Lasso& l) {
    validate_lasso(a, l);
    first.push_back(l);
    return true;
  });
  for_each_candidate_lasso(a, o, [&](const Lasso& l) {
    second.push_back(l);
    return true;
  });
  CHECK(first == second);
  CHECK(first.front().prefix.empty());
  std::size_t exhaustive = first.size() - 50;
  for (std::size_t i = 0; i < exhaustive; ++i) {
    if (first[i].prefix.empty()) CHECK(first[i].loop.size() <= 2 * a.size());
    else CHECK(first[i].loop.size() <= a.size());
  }
  o.exhaustive_cap = 3;
  o.budget = 0;
  std::size_t n = 0;
  for_each_candidate_lasso(a, o, [&](const Lasso&) { return ++n, true; });
  CHECK(n == 3);
}

TEST_CASE("verification certifies strategies and rejects losing ones") {
  Arena dip = parse_arena(kDip);
  MemorylessStrategy s{Player::zero, {dip.id("b"), dip.id("c"), dip.id("b")}};
  CHECK(verify_memoryless_wins_infinite(dip, WinningCondition::energy(1), s, dip.id("a")));
  CHECK_FALSE(verify_memoryless_wins_infinite(dip, WinningCondition::energy(0), s, dip.id("a")));
  CHECK(verify_memoryless_wins_infinite(dip, WinningCondition::energy(0), s, dip.id("b")));
  CHECK_THROWS_AS(verify_memoryless_wins_infinite(dip, WinningCondition::energy_parity(0), s, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_memoryless_wins_infinite(dip, WinningCondition::energy(0), s, 9), ArenaError);
}

TEST_CASE("transfer matches the strategy-pair oracle on small arenas") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + uniform(rng, 0, 4);
    std::vector<std::pair<WinningCondition, testing::RandomArenaSpec>> cases{
        {WinningCondition::parity(), {n, 2, testing::Owners::both, LabelKind::priority, testing::priorities_upto(3)}},
        {WinningCondition::mean_payoff(0), {n, 2, testing::Owners::both, LabelKind::weight, testing::weights_within(2)}},
        {WinningCondition::energy(0), {n, 2, testing::Owners::both, LabelKind::weight, testing::weights_within(2)}},
    };
    for (auto& [w0, spec] : cases) {
      Arena a = testing::random_arena(rng, spec);
      auto w = w0.kind() == ConditionKind::energy ? WinningCondition::energy(sufficient_energy_credit(a)) : w0;
      auto t = solve_infinite_via_transfer(a, w);
      CHECK(t.regions == testing::memoryless_pair_regions(a, w));
      for (Player pl : {Player::zero, Player::one})
        for (VertexId v : t.regions[pl]) CHECK(verify_memoryless_wins_infinite(a, w, *t.strategies[index(pl)], v));
    }
  }
}
