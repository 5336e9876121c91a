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

#ifndef FCG_CYCLE_PROPERTY_HPP
#define FCG_CYCLE_PROPERTY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "fcg/label.hpp"

namespace fcg {

enum class PropertyBase : std::uint8_t {
  even_len,
  parity,
  energy,
  good_for_energy,
  mean_payoff,
  max_first,
  ends_zero,
};

enum class MeanPayoffDirection : std::uint8_t { at_least, at_most };

/// A decidable set of finite label words, optionally complemented.
///
/// Membership:
///   even_len         word length is even
///   parity           largest priority is even
///   energy           weight sum >= 0
///   good_for_energy  weight sum > 0, or sum == 0 and the largest priority is even
///   mean_payoff      average >= nu (at_least) or <= nu (at_most)
///   max_first        the first priority is >= every other one
///   ends_zero        the last priority is 0
class CycleProperty {
 public:
  static CycleProperty even_len() { return CycleProperty(PropertyBase::even_len); }
  static CycleProperty parity() { return CycleProperty(PropertyBase::parity); }
  static CycleProperty energy() { return CycleProperty(PropertyBase::energy); }
  static CycleProperty good_for_energy() { return CycleProperty(PropertyBase::good_for_energy); }
  static CycleProperty max_first() { return CycleProperty(PropertyBase::max_first); }
  static CycleProperty ends_zero() { return CycleProperty(PropertyBase::ends_zero); }
  static CycleProperty mean_payoff(Rational nu,
                                   MeanPayoffDirection dir = MeanPayoffDirection::at_least);

  /// Parses the CLI spelling: evenlen, parity, energy, goodforenergy,
  /// meanpayoff:<num>/<den>[:atmost], maxfirst, endszero, each optionally
  /// prefixed by `not:`.
  static CycleProperty parse(std::string_view text);

  PropertyBase base() const { return base_; }
  bool complemented() const { return complemented_; }
  const std::optional<Rational>& nu() const { return nu_; }
  MeanPayoffDirection direction() const { return direction_; }

  CycleProperty complement() const {
    CycleProperty p = *this;
    p.complemented_ = !p.complemented_;
    return p;
  }
  /// The same property with the complement flag cleared.
  CycleProperty positive() const {
    CycleProperty p = *this;
    p.complemented_ = false;
    return p;
  }

  /// Whether words over labels of this kind can be tested.
  bool accepts(LabelKind kind) const;
  /// Kind used when sampling words (even_len accepts any kind; priorities are used).
  LabelKind sample_kind() const;

  std::string to_string() const;

  friend bool operator==(const CycleProperty&, const CycleProperty&) = default;

 private:
  explicit CycleProperty(PropertyBase base) : base_(base) {}

  PropertyBase base_;
  bool complemented_ = false;
  std::optional<Rational> nu_;
  MeanPayoffDirection direction_ = MeanPayoffDirection::at_least;
};

/// Throws KindMismatch when p cannot judge labels of `kind`.
void require_kind(const CycleProperty& p, LabelKind kind);

/// Word membership. Throws std::invalid_argument on an empty word and
/// KindMismatch when a label's kind is not accepted by p.
bool member(const CycleProperty& p, std::span<const Label> word);
bool member(const CycleProperty& p, std::span<const Label* const> word);

enum class ClosureStatus : std::uint8_t {
  known_closed,
  known_not_closed,
  no_counterexample_found,
  counterexample,
};

std::string_view to_string(ClosureStatus s);

/// Outcome of a closure check. A witness is present iff status is
/// counterexample; the pair is (x, y) for cyclic permutation (x in Y, y the
/// one-letter rotation of x, y not in Y) or (a, b) for concatenation (a, b in
/// Y, ab not in Y).
struct ClosureVerdict {
  ClosureStatus status = ClosureStatus::no_counterexample_found;
  std::optional<std::pair<LabelWord, LabelWord>> witness;
  std::uint64_t trials = 0;
};

struct SamplingOptions {
  std::uint64_t budget = 10000;
  std::size_t max_len = 8;
  std::uint64_t seed = 0;
};

/// Registry lookup first, then random falsification.
ClosureVerdict check_cyclic_closure(const CycleProperty& p, const SamplingOptions& opts = {});
ClosureVerdict check_concat_closure(const CycleProperty& p, const SamplingOptions& opts = {});

/// Random falsification only, bypassing the registry.
ClosureVerdict falsify_cyclic_closure(const CycleProperty& p, const SamplingOptions& opts = {});
ClosureVerdict falsify_concat_closure(const CycleProperty& p, const SamplingOptions& opts = {});

/// Registered facts only; nullopt when nothing is registered for p.
std::optional<ClosureVerdict> registered_cyclic_closure(const CycleProperty& p);
std::optional<ClosureVerdict> registered_concat_closure(const CycleProperty& p);

/// Whether (x, y) witnesses a violation of cyclic-permutation closure.
bool violates_cyclic_closure(const CycleProperty& p, const LabelWord& x, const LabelWord& y);
/// Whether (a, b) witnesses a violation of concatenation closure.
bool violates_concat_closure(const CycleProperty& p, const LabelWord& a, const LabelWord& b);

enum class HypothesisAnswer : std::uint8_t { yes, no, unknown };

struct HypothesisVerdict {
  HypothesisAnswer answer = HypothesisAnswer::unknown;
  ClosureVerdict cyclic;
  ClosureVerdict concat;
  ClosureVerdict complement_concat;
};

/// Cyclic-permutation closure of p plus concatenation closure of p and of its
/// complement; yes only when all three are registered facts.
HypothesisVerdict satisfies_char_hypothesis(const CycleProperty& p,
                                            const SamplingOptions& opts = {});

}  // namespace fcg

#endif  // FCG_CYCLE_PROPERTY_HPP
