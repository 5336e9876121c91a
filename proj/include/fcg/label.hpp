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

#ifndef FCG_LABEL_HPP
#define FCG_LABEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fcg {

/// Exact rational; always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

enum class LabelKind : std::uint8_t { priority, weight, payoff, pair };

std::string_view to_string(LabelKind kind);
LabelKind parse_label_kind(std::string_view text);

struct Priority {
  std::uint64_t value = 0;
  friend bool operator==(const Priority&, const Priority&) = default;
};

struct Weight {
  std::int64_t value = 0;
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// A (priority, weight) product label, as used by energy-parity style games.
struct PairLabel {
  std::uint64_t priority = 0;
  std::int64_t weight = 0;
  friend bool operator==(const PairLabel&, const PairLabel&) = default;
};

class Label {
 public:
  Label() : value_(Priority{}) {}
  Label(Priority p) : value_(p) {}
  Label(Weight w) : value_(w) {}
  Label(Rational r) : value_(std::move(r)) {}
  Label(PairLabel p) : value_(p) {}

  static Label priority(std::uint64_t v) { return Label(Priority{v}); }
  static Label weight(std::int64_t v) { return Label(Weight{v}); }
  static Label payoff(Rational r) { return Label(std::move(r)); }
  static Label payoff(std::int64_t num, std::int64_t den);
  static Label pair(std::uint64_t priority, std::int64_t weight) {
    return Label(PairLabel{priority, weight});
  }

  LabelKind kind() const { return static_cast<LabelKind>(value_.index()); }

  // Accessors throw KindMismatch when the label has a different kind.
  std::uint64_t as_priority() const;
  std::int64_t as_weight() const;
  const Rational& as_payoff() const;
  const PairLabel& as_pair() const;

  /// The weight component of weight and pair labels.
  std::int64_t weight_component() const;

  /// Text form used by the arena file format.
  std::string to_string() const;
  static Label parse(std::string_view text, LabelKind kind);

  friend bool operator==(const Label&, const Label&) = default;

 private:
  std::variant<Priority, Weight, Rational, PairLabel> value_;
};

using LabelWord = std::vector<Label>;

class KindMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const LabelWord& word);

}  // namespace fcg

#endif  // FCG_LABEL_HPP
