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

#include "fcg/label.hpp"

#include <charconv>
#include <limits>

namespace fcg {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::uint64_t parse_natural(std::string_view s) {
  std::uint64_t v = 0;
  if (!is_digits(s))
    throw std::invalid_argument("expected a natural number, got '" + std::string(s) + "'");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("natural number out of range: '" + std::string(s) + "'");
  return v;
}

std::int64_t parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_digits(digits))
    throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("integer out of range: '" + std::string(s) + "'");
  return v;
}

// Arbitrary-precision integer text (optionally signed).
boost::multiprecision::cpp_int parse_big_integer(std::string_view s) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_digits(digits))
    throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
  boost::multiprecision::cpp_int v{std::string(digits)};
  return negative ? boost::multiprecision::cpp_int(-v) : v;
}

}  // namespace

std::string_view to_string(LabelKind kind) {
  switch (kind) {
    case LabelKind::priority: return "priority";
    case LabelKind::weight: return "weight";
    case LabelKind::payoff: return "payoff";
    case LabelKind::pair: return "pair";
  }
  return "?";
}

LabelKind parse_label_kind(std::string_view text) {
  if (text == "priority") return LabelKind::priority;
  if (text == "weight") return LabelKind::weight;
  if (text == "payoff") return LabelKind::payoff;
  if (text == "pair") return LabelKind::pair;
  throw std::invalid_argument("unknown label kind '" + std::string(text) + "'");
}

Label Label::payoff(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("payoff denominator is zero");
  return Label(Rational(num, den));
}

std::uint64_t Label::as_priority() const {
  if (auto* p = std::get_if<Priority>(&value_)) return p->value;
  throw KindMismatch("expected a priority label, got " + std::string(fcg::to_string(kind())));
}

std::int64_t Label::as_weight() const {
  if (auto* w = std::get_if<Weight>(&value_)) return w->value;
  throw KindMismatch("expected a weight label, got " + std::string(fcg::to_string(kind())));
}

const Rational& Label::as_payoff() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r;
  throw KindMismatch("expected a payoff label, got " + std::string(fcg::to_string(kind())));
}

const PairLabel& Label::as_pair() const {
  if (auto* p = std::get_if<PairLabel>(&value_)) return *p;
  throw KindMismatch("expected a pair label, got " + std::string(fcg::to_string(kind())));
}

std::int64_t Label::weight_component() const {
  if (auto* w = std::get_if<Weight>(&value_)) return w->value;
  if (auto* p = std::get_if<PairLabel>(&value_)) return p->weight;
  throw KindMismatch("label of kind " + std::string(fcg::to_string(kind())) +
                     " has no weight component");
}

std::string Label::to_string() const {
  switch (kind()) {
    case LabelKind::priority: return std::to_string(std::get<Priority>(value_).value);
    case LabelKind::weight: return std::to_string(std::get<Weight>(value_).value);
    case LabelKind::payoff: {
      const auto& r = std::get<Rational>(value_);
      if (denominator(r) == 1) return numerator(r).str();
      return numerator(r).str() + "/" + denominator(r).str();
    }
    case LabelKind::pair: {
      const auto& p = std::get<PairLabel>(value_);
      return std::to_string(p.priority) + "," + std::to_string(p.weight);
    }
  }
  return {};
}

Label Label::parse(std::string_view text, LabelKind kind) {
  switch (kind) {
    case LabelKind::priority: return Label::priority(parse_natural(text));
    case LabelKind::weight: return Label::weight(parse_integer(text));
    case LabelKind::payoff: {
      auto slash = text.find('/');
      if (slash == std::string_view::npos) return Label(Rational(parse_big_integer(text)));
      auto num = parse_big_integer(text.substr(0, slash));
      auto den_text = text.substr(slash + 1);
      if (!is_digits(den_text))
        throw std::invalid_argument("payoff denominator must be a positive natural, got '" +
                                    std::string(den_text) + "'");
      boost::multiprecision::cpp_int den(std::string{den_text});
      if (den == 0) throw std::invalid_argument("payoff denominator is zero");
      return Label(Rational(num, den));
    }
    case LabelKind::pair: {
      auto comma = text.find(',');
      if (comma == std::string_view::npos)
        throw std::invalid_argument("pair label must be '<nat>,<int>', got '" + std::string(text) +
                                    "'");
      return Label::pair(parse_natural(text.substr(0, comma)),
                         parse_integer(text.substr(comma + 1)));
    }
  }
  throw std::invalid_argument("unknown label kind");
}

std::string to_string(const LabelWord& word) {
  std::string out = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += word[i].to_string();
  }
  out += ']';
  return out;
}

}  // namespace fcg
