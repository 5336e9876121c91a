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

#ifndef FCG_INFINITE_GAMES_HPP
#define FCG_INFINITE_GAMES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fcg/arena.hpp"
#include "fcg/cycle_property.hpp"
#include "fcg/decomposition.hpp"
#include "fcg/fcg_solver.hpp"

namespace fcg {

enum class ConditionKind : std::uint8_t { parity, mean_payoff, energy, energy_parity };

/// Infinite-duration winning condition for Player 0.
///   parity          the largest priority seen infinitely often is even
///   mean_payoff     lim sup of prefix averages is >= nu
///   energy          credit + every prefix sum of weights stays >= 0
///   energy_parity   parity on the priority component, energy on the weights
class WinningCondition {
 public:
  static WinningCondition parity() { return WinningCondition(ConditionKind::parity); }
  static WinningCondition mean_payoff(Rational nu);
  static WinningCondition energy(std::uint64_t credit);
  static WinningCondition energy_parity(std::uint64_t credit);

  /// parity | meanpayoff:<nu> | energy:<credit> | energyparity:<credit>
  static WinningCondition parse(std::string_view text);

  ConditionKind kind() const { return kind_; }
  const std::optional<Rational>& nu() const { return nu_; }
  const std::optional<std::uint64_t>& credit() const { return credit_; }

  bool accepts(LabelKind kind) const;
  std::string to_string() const;

  friend bool operator==(const WinningCondition&, const WinningCondition&) = default;

 private:
  explicit WinningCondition(ConditionKind k) : kind_(k) {}
  ConditionKind kind_;
  std::optional<Rational> nu_;
  std::optional<std::uint64_t> credit_;
};

/// Condition or credit with no registered greedy cycle property.
class UnsupportedCondition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact verdict on prefix . loop^omega.
bool eval_condition_on_lasso(const WinningCondition& w, const Lasso& l, const Arena& a);

/// Every cycle of the decomposition from position 0 is in p.
bool eval_ac_on_lasso(const CycleProperty& p, const Lasso& l, const Arena& a);
/// Some suffix of the play has every decomposed cycle in p. Suffixes starting
/// inside the loop repeat with the loop length, so |prefix| + |loop| start
/// positions cover every distinct suffix.
bool eval_eac_on_lasso(const CycleProperty& p, const Lasso& l, const Arena& a);

/// The cycle property for which w is greedy on a: parity -> parity,
/// mean-payoff(nu) -> mean-payoff(nu, at least), energy with credit
/// W(|V|-1) -> energy. Throws UnsupportedCondition otherwise.
CycleProperty associated_property(const WinningCondition& w, const Arena& a);

/// W(|V|-1) for weight arenas.
std::uint64_t sufficient_energy_credit(const Arena& a);

struct TransferOptions {
  /// Map energy conditions to the energy cycle property whatever the credit.
  bool allow_unregistered_credit = false;
};

struct TransferResult {
  CycleProperty property = CycleProperty::parity();
  Regions regions;
  std::array<std::optional<MemorylessStrategy>, 2> strategies;
  bool registered = true;
};

/// Solves the infinite game through the first-cycle game of its associated
/// property: regions from the first-cycle solver, one uniform memoryless
/// strategy per player from enumeration.
TransferResult solve_infinite_via_transfer(const Arena& a, const WinningCondition& w,
                                           const TransferOptions& opts = {});

/// Certifies that every play from start consistent with s is won by s.player
/// by checking every reachable simple cycle of the restricted arena (and, for
/// Player 0 under energy, every simple path's running sum against the credit).
bool verify_memoryless_wins_infinite(const Arena& a, const WinningCondition& w,
                                     const MemorylessStrategy& s, VertexId start);

struct LassoSearchOptions {
  std::uint64_t budget = 1000;  // random lassos after the exhaustive phases
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_cap = 20000;
};

/// Candidate lassos in a fixed order: loops (closed walks) of length up to
/// 2|V| with empty prefix, then prefixes of length 1..|V| joined to loops of
/// length up to |V|, both capped at exhaustive_cap in total, then `budget`
/// random lassos. fn returns false to stop.
void for_each_candidate_lasso(const Arena& a, const LassoSearchOptions& opts,
                              const std::function<bool(const Lasso&)>& fn);

struct LassoSearchResult {
  std::optional<Lasso> witness;
  std::uint64_t lassos_checked = 0;
};

/// Looks for a lasso in both EAC(p) and EAC(not p).
LassoSearchResult check_unambiguous_bounded(const Arena& a, const CycleProperty& p,
                                            const LassoSearchOptions& opts = {});

/// Looks for a lasso in AC(p) that w rejects, or in AC(not p) that w accepts.
LassoSearchResult check_greedy_bounded(const Arena& a, const WinningCondition& w,
                                       const CycleProperty& p,
                                       const LassoSearchOptions& opts = {});

}  // namespace fcg

#endif  // FCG_INFINITE_GAMES_HPP
