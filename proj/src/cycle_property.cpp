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

#include "fcg/cycle_property.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fcg {

CycleProperty CycleProperty::mean_payoff(Rational nu, MeanPayoffDirection dir) {
  CycleProperty p(PropertyBase::mean_payoff);
  p.nu_ = std::move(nu);
  p.direction_ = dir;
  return p;
}

CycleProperty CycleProperty::parse(std::string_view text) {
  bool negate = false;
  while (text.starts_with("not:")) {
    negate = !negate;
    text.remove_prefix(4);
  }
  auto finish = [&](CycleProperty p) { return negate ? p.complement() : p; };
  if (text == "evenlen") return finish(even_len());
  if (text == "parity") return finish(parity());
  if (text == "energy") return finish(energy());
  if (text == "goodforenergy") return finish(good_for_energy());
  if (text == "maxfirst") return finish(max_first());
  if (text == "endszero") return finish(ends_zero());
  if (text.starts_with("meanpayoff:")) {
    auto rest = text.substr(11);
    auto dir = MeanPayoffDirection::at_least;
    if (rest.ends_with(":atmost")) {
      dir = MeanPayoffDirection::at_most;
      rest.remove_suffix(7);
    } else if (rest.ends_with(":atleast")) {
      rest.remove_suffix(8);
    }
    Label nu;
    try {
      nu = Label::parse(rest, LabelKind::payoff);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("bad mean-payoff threshold in '" + std::string(text) +
                                  "': " + e.what());
    }
    return finish(mean_payoff(nu.as_payoff(), dir));
  }
  throw std::invalid_argument("unknown cycle property '" + std::string(text) + "'");
}

bool CycleProperty::accepts(LabelKind kind) const {
  switch (base_) {
    case PropertyBase::even_len: return true;
    case PropertyBase::parity:
    case PropertyBase::max_first:
    case PropertyBase::ends_zero: return kind == LabelKind::priority;
    case PropertyBase::energy: return kind == LabelKind::weight;
    case PropertyBase::good_for_energy: return kind == LabelKind::pair;
    case PropertyBase::mean_payoff: return kind == LabelKind::payoff || kind == LabelKind::weight;
  }
  return false;
}

LabelKind CycleProperty::sample_kind() const {
  switch (base_) {
    case PropertyBase::energy: return LabelKind::weight;
    case PropertyBase::good_for_energy: return LabelKind::pair;
    case PropertyBase::mean_payoff: return LabelKind::payoff;
    default: return LabelKind::priority;
  }
}

std::string CycleProperty::to_string() const {
  std::string s = complemented_ ? "not:" : "";
  switch (base_) {
    case PropertyBase::even_len: return s + "evenlen";
    case PropertyBase::parity: return s + "parity";
    case PropertyBase::energy: return s + "energy";
    case PropertyBase::good_for_energy: return s + "goodforenergy";
    case PropertyBase::max_first: return s + "maxfirst";
    case PropertyBase::ends_zero: return s + "endszero";
    case PropertyBase::mean_payoff: {
      const Rational& nu = *nu_;
      s += "meanpayoff:" + numerator(nu).str() + "/" + denominator(nu).str();
      if (direction_ == MeanPayoffDirection::at_most) s += ":atmost";
      return s;
    }
  }
  return s;
}

void require_kind(const CycleProperty& p, LabelKind kind) {
  if (!p.accepts(kind))
    throw KindMismatch("property " + p.to_string() + " cannot judge " +
                       std::string(to_string(kind)) + " labels");
}

namespace {

const Label& deref(const Label& l) { return l; }
const Label& deref(const Label* l) { return *l; }

template <class Word>
bool positive_member(const CycleProperty& p, const Word& word) {
  const std::size_t k = word.size();
  auto at = [&](std::size_t i) -> const Label& { return deref(word[i]); };
  for (std::size_t i = 0; i < k; ++i) require_kind(p, at(i).kind());

  switch (p.base()) {
    case PropertyBase::even_len: return k % 2 == 0;
    case PropertyBase::parity: {
      std::uint64_t best = 0;
      for (std::size_t i = 0; i < k; ++i) best = std::max(best, at(i).as_priority());
      return best % 2 == 0;
    }
    case PropertyBase::energy: {
      __int128 sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum += at(i).as_weight();
      return sum >= 0;
    }
    case PropertyBase::good_for_energy: {
      __int128 sum = 0;
      std::uint64_t best = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& pl = at(i).as_pair();
        sum += pl.weight;
        best = std::max(best, pl.priority);
      }
      return sum > 0 || (sum == 0 && best % 2 == 0);
    }
    case PropertyBase::mean_payoff: {
      // Compare sum against nu * k to stay in exact arithmetic.
      Rational bound = *p.nu() * static_cast<long long>(k);
      Rational sum = 0;
      if (at(0).kind() == LabelKind::weight) {
        __int128 s = 0;
        for (std::size_t i = 0; i < k; ++i) s += at(i).as_weight();
        sum = Rational(static_cast<long long>(s));
      } else {
        for (std::size_t i = 0; i < k; ++i) sum += at(i).as_payoff();
      }
      return p.direction() == MeanPayoffDirection::at_least ? sum >= bound : sum <= bound;
    }
    case PropertyBase::max_first: {
      auto first = at(0).as_priority();
      for (std::size_t i = 1; i < k; ++i)
        if (at(i).as_priority() > first) return false;
      return true;
    }
    case PropertyBase::ends_zero: return at(k - 1).as_priority() == 0;
  }
  return false;
}

template <class Word>
bool member_impl(const CycleProperty& p, const Word& word) {
  if (word.empty()) throw std::invalid_argument("cycle words are nonempty");
  return positive_member(p, word) != p.complemented();
}

}  // namespace

bool member(const CycleProperty& p, std::span<const Label> word) { return member_impl(p, word); }

bool member(const CycleProperty& p, std::span<const Label* const> word) {
  return member_impl(p, word);
}

std::string_view to_string(ClosureStatus s) {
  switch (s) {
    case ClosureStatus::known_closed: return "knownClosed";
    case ClosureStatus::known_not_closed: return "knownNotClosed";
    case ClosureStatus::no_counterexample_found: return "noCounterexampleFound";
    case ClosureStatus::counterexample: return "counterexample";
  }
  return "?";
}

namespace {

LabelWord rotate_once(const LabelWord& w) {
  LabelWord r(w.begin() + 1, w.end());
  r.push_back(w.front());
  return r;
}

LabelWord concat(const LabelWord& a, const LabelWord& b) {
  LabelWord ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return ab;
}

LabelWord priorities(std::initializer_list<std::uint64_t> xs) {
  LabelWord w;
  for (auto x : xs) w.push_back(Label::priority(x));
  return w;
}

ClosureVerdict known_closed() { return {ClosureStatus::known_closed, std::nullopt, 0}; }

ClosureVerdict registered_witness(LabelWord x, LabelWord y) {
  return {ClosureStatus::counterexample, std::make_pair(std::move(x), std::move(y)), 0};
}

bool is_items_one_to_five(PropertyBase b) {
  return b == PropertyBase::even_len || b == PropertyBase::parity || b == PropertyBase::energy ||
         b == PropertyBase::good_for_energy || b == PropertyBase::mean_payoff;
}

// Sampling alphabets: priorities 0..5, weights -3..3, payoffs n/d with
// n in -3..3 and d in 1..3, pairs from the product of the first two.
class WordSampler {
 public:
  WordSampler(LabelKind kind, std::uint64_t seed) : kind_(kind), rng_(seed) {}

  Label letter() {
    switch (kind_) {
      case LabelKind::priority: return Label::priority(uniform(0, 5));
      case LabelKind::weight: return Label::weight(uniform(-3, 3));
      case LabelKind::payoff: return Label::payoff(uniform(-3, 3), uniform(1, 3));
      case LabelKind::pair: return Label::pair(uniform(0, 5), uniform(-3, 3));
    }
    return {};
  }

  LabelWord word(std::size_t max_len) {
    auto len = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_len)));
    LabelWord w;
    w.reserve(len);
    for (std::size_t i = 0; i < len; ++i) w.push_back(letter());
    return w;
  }

 private:
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  LabelKind kind_;
  std::mt19937_64 rng_;
};

void require_budget(const SamplingOptions& opts) {
  if (opts.budget < 1) throw std::invalid_argument("closure checks need a budget of at least 1");
  if (opts.max_len < 1) throw std::invalid_argument("closure checks need max_len >= 1");
}

}  // namespace

bool violates_cyclic_closure(const CycleProperty& p, const LabelWord& x, const LabelWord& y) {
  if (x.empty() || y != rotate_once(x)) return false;
  return member(p, x) && !member(p, y);
}

bool violates_concat_closure(const CycleProperty& p, const LabelWord& a, const LabelWord& b) {
  if (a.empty() || b.empty()) return false;
  return member(p, a) && member(p, b) && !member(p, concat(a, b));
}

std::optional<ClosureVerdict> registered_cyclic_closure(const CycleProperty& p) {
  // Closure under cyclic permutations holds for Y iff it holds for not-Y.
  if (is_items_one_to_five(p.base())) return known_closed();
  if (p.base() == PropertyBase::max_first) {
    return p.complemented() ? registered_witness(priorities({1, 2}), priorities({2, 1}))
                            : registered_witness(priorities({2, 1}), priorities({1, 2}));
  }
  return std::nullopt;
}

std::optional<ClosureVerdict> registered_concat_closure(const CycleProperty& p) {
  if (!p.complemented() && is_items_one_to_five(p.base())) return known_closed();
  if (p.complemented()) {
    switch (p.base()) {
      case PropertyBase::parity:
      case PropertyBase::energy:
      case PropertyBase::good_for_energy:
      case PropertyBase::mean_payoff: return known_closed();
      case PropertyBase::even_len: return registered_witness(priorities({0}), priorities({0}));
      default: break;
    }
  }
  return std::nullopt;
}

ClosureVerdict falsify_cyclic_closure(const CycleProperty& p, const SamplingOptions& opts) {
  require_budget(opts);
  WordSampler sampler(p.sample_kind(), opts.seed);
  ClosureVerdict verdict;
  for (std::uint64_t t = 0; t < opts.budget; ++t) {
    ++verdict.trials;
    LabelWord x = sampler.word(opts.max_len);
    // Walking the rotation orbit one letter at a time, any change of
    // membership yields an adjacent (in, out) pair.
    for (std::size_t r = 0; r < x.size(); ++r) {
      LabelWord y = rotate_once(x);
      if (member(p, x) && !member(p, y)) {
        verdict.status = ClosureStatus::counterexample;
        verdict.witness = std::make_pair(std::move(x), std::move(y));
        return verdict;
      }
      x = std::move(y);
    }
  }
  return verdict;
}

ClosureVerdict falsify_concat_closure(const CycleProperty& p, const SamplingOptions& opts) {
  require_budget(opts);
  WordSampler sampler(p.sample_kind(), opts.seed);
  ClosureVerdict verdict;
  for (std::uint64_t t = 0; t < opts.budget; ++t) {
    ++verdict.trials;
    LabelWord a = sampler.word(opts.max_len);
    LabelWord b = sampler.word(opts.max_len);
    if (violates_concat_closure(p, a, b)) {
      verdict.status = ClosureStatus::counterexample;
      verdict.witness = std::make_pair(std::move(a), std::move(b));
      return verdict;
    }
  }
  return verdict;
}

ClosureVerdict check_cyclic_closure(const CycleProperty& p, const SamplingOptions& opts) {
  require_budget(opts);
  if (auto v = registered_cyclic_closure(p)) return *v;
  return falsify_cyclic_closure(p, opts);
}

ClosureVerdict check_concat_closure(const CycleProperty& p, const SamplingOptions& opts) {
  require_budget(opts);
  if (auto v = registered_concat_closure(p)) return *v;
  return falsify_concat_closure(p, opts);
}

HypothesisVerdict satisfies_char_hypothesis(const CycleProperty& p, const SamplingOptions& opts) {
  HypothesisVerdict h;
  h.cyclic = check_cyclic_closure(p, opts);
  h.concat = check_concat_closure(p, opts);
  h.complement_concat = check_concat_closure(p.complement(), opts);
  auto refuted = [](const ClosureVerdict& v) {
    return v.status == ClosureStatus::counterexample ||
           v.status == ClosureStatus::known_not_closed;
  };
  auto proven = [](const ClosureVerdict& v) { return v.status == ClosureStatus::known_closed; };
  if (refuted(h.cyclic) || refuted(h.concat) || refuted(h.complement_concat))
    h.answer = HypothesisAnswer::no;
  else if (proven(h.cyclic) && proven(h.concat) && proven(h.complement_concat))
    h.answer = HypothesisAnswer::yes;
  else
    h.answer = HypothesisAnswer::unknown;
  return h;
}

}  // namespace fcg
