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

#include "fcg/infinite_games.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "fcg/strategy.hpp"

namespace fcg {

WinningCondition WinningCondition::mean_payoff(Rational nu) {
  WinningCondition w(ConditionKind::mean_payoff);
  w.nu_ = std::move(nu);
  return w;
}

WinningCondition WinningCondition::energy(std::uint64_t credit) {
  WinningCondition w(ConditionKind::energy);
  w.credit_ = credit;
  return w;
}

WinningCondition WinningCondition::energy_parity(std::uint64_t credit) {
  WinningCondition w(ConditionKind::energy_parity);
  w.credit_ = credit;
  return w;
}

namespace {

std::uint64_t parse_credit(std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad initial credit '" + std::string(text) + "'");
  return v;
}

}  // namespace

WinningCondition WinningCondition::parse(std::string_view text) {
  if (text == "parity") return parity();
  if (text.starts_with("meanpayoff:"))
    return mean_payoff(Label::parse(text.substr(11), LabelKind::payoff).as_payoff());
  if (text.starts_with("energy:")) return energy(parse_credit(text.substr(7)));
  if (text.starts_with("energyparity:")) return energy_parity(parse_credit(text.substr(13)));
  throw std::invalid_argument("unknown winning condition '" + std::string(text) + "'");
}

bool WinningCondition::accepts(LabelKind kind) const {
  switch (kind_) {
    case ConditionKind::parity: return kind == LabelKind::priority;
    case ConditionKind::mean_payoff: return kind == LabelKind::payoff || kind == LabelKind::weight;
    case ConditionKind::energy: return kind == LabelKind::weight;
    case ConditionKind::energy_parity: return kind == LabelKind::pair;
  }
  return false;
}

std::string WinningCondition::to_string() const {
  switch (kind_) {
    case ConditionKind::parity: return "parity";
    case ConditionKind::mean_payoff:
      return "meanpayoff:" + numerator(*nu_).str() + "/" + denominator(*nu_).str();
    case ConditionKind::energy: return "energy:" + std::to_string(*credit_);
    case ConditionKind::energy_parity: return "energyparity:" + std::to_string(*credit_);
  }
  return {};
}

namespace {

void require_condition_kind(const WinningCondition& w, const Arena& a) {
  if (!w.accepts(a.label_kind()))
    throw KindMismatch("condition " + w.to_string() + " cannot judge " +
                       std::string(to_string(a.label_kind())) + " labels");
}

Rational as_rational(const Label& l) {
  if (l.kind() == LabelKind::weight) return Rational(static_cast<long long>(l.as_weight()));
  return l.as_payoff();
}

// Verdict of the condition on the play c^omega, c = the given cycle labels.
// For energy only the sign of the cycle sum matters here; running dips are
// judged separately against the credit.
template <class Get>
bool repeated_cycle_wins(const WinningCondition& w, std::size_t k, Get label_at) {
  switch (w.kind()) {
    case ConditionKind::parity: {
      std::uint64_t best = 0;
      for (std::size_t i = 0; i < k; ++i) best = std::max(best, label_at(i).as_priority());
      return best % 2 == 0;
    }
    case ConditionKind::mean_payoff: {
      Rational sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum += as_rational(label_at(i));
      return sum >= *w.nu() * static_cast<long long>(k);
    }
    case ConditionKind::energy: {
      __int128 sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum += label_at(i).as_weight();
      return sum >= 0;
    }
    case ConditionKind::energy_parity: {
      __int128 sum = 0;
      std::uint64_t best = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& pl = label_at(i).as_pair();
        sum += pl.weight;
        best = std::max(best, pl.priority);
      }
      return sum >= 0 && best % 2 == 0;
    }
  }
  return false;
}

}  // namespace

bool eval_condition_on_lasso(const WinningCondition& w, const Lasso& l, const Arena& a) {
  require_condition_kind(w, a);
  validate_lasso(a, l);
  const std::size_t p = l.prefix.size(), n = l.loop.size();
  auto loop_label = [&](std::size_t i) -> const Label& { return a.label(l.at(p + i), l.at(p + i + 1)); };
  if (!repeated_cycle_wins(w, n, loop_label)) return false;
  if (w.kind() == ConditionKind::energy || w.kind() == ConditionKind::energy_parity) {
    // The loop sum is >= 0, so the running minimum is reached within the
    // prefix plus one loop traversal.
    __int128 level = static_cast<__int128>(*w.credit());
    for (std::size_t i = 0; i < p + n; ++i) {
      level += a.label(l.at(i), l.at(i + 1)).weight_component();
      if (level < 0) return false;
    }
  }
  return true;
}

namespace {

struct SuffixVerdict {
  bool all_in = true;
  bool all_out = true;
};

SuffixVerdict judge_decomposition(const CycleProperty& p, const LassoDecomposition& d) {
  SuffixVerdict v;
  auto judge = [&](const CycleRecord& c) {
    if (member(p, c.labels))
      v.all_out = false;
    else
      v.all_in = false;
  };
  for (const auto& c : d.transient) judge(c);
  for (const auto& c : d.periodic) judge(c);
  return v;
}

// Per-suffix verdicts for every distinct suffix of the lasso.
std::vector<SuffixVerdict> suffix_verdicts(const CycleProperty& p, const Lasso& l, const Arena& a) {
  std::vector<SuffixVerdict> out;
  out.reserve(l.length());
  for (std::size_t s = 0; s < l.length(); ++s)
    out.push_back(judge_decomposition(p, decompose_lasso(a, l.suffix(s))));
  return out;
}

}  // namespace

bool eval_ac_on_lasso(const CycleProperty& p, const Lasso& l, const Arena& a) {
  require_kind(p, a.label_kind());
  return judge_decomposition(p, decompose_lasso(a, l)).all_in;
}

bool eval_eac_on_lasso(const CycleProperty& p, const Lasso& l, const Arena& a) {
  require_kind(p, a.label_kind());
  validate_lasso(a, l);
  for (std::size_t s = 0; s < l.length(); ++s)
    if (judge_decomposition(p, decompose_lasso(a, l.suffix(s))).all_in) return true;
  return false;
}

std::uint64_t sufficient_energy_credit(const Arena& a) {
  return max_abs_weight(a) * static_cast<std::uint64_t>(a.size() - 1);
}

CycleProperty associated_property(const WinningCondition& w, const Arena& a) {
  require_condition_kind(w, a);
  switch (w.kind()) {
    case ConditionKind::parity: return CycleProperty::parity();
    case ConditionKind::mean_payoff:
      return CycleProperty::mean_payoff(*w.nu(), MeanPayoffDirection::at_least);
    case ConditionKind::energy: {
      auto needed = sufficient_energy_credit(a);
      if (*w.credit() != needed)
        throw UnsupportedCondition("no greedy cycle property is registered for energy with credit " +
                                   std::to_string(*w.credit()) + "; the registered credit is W(|V|-1) = " +
                                   std::to_string(needed));
      return CycleProperty::energy();
    }
    case ConditionKind::energy_parity:
      throw UnsupportedCondition("energy-parity conditions have no registered greedy cycle property");
  }
  throw UnsupportedCondition("unknown condition");
}

TransferResult solve_infinite_via_transfer(const Arena& a, const WinningCondition& w,
                                           const TransferOptions& opts) {
  TransferResult r;
  try {
    r.property = associated_property(w, a);
  } catch (const UnsupportedCondition&) {
    if (!(opts.allow_unregistered_credit && w.kind() == ConditionKind::energy)) throw;
    r.property = CycleProperty::energy();
    r.registered = false;
  }
  r.regions = fcg_regions(a, r.property);
  for (Player player : {Player::zero, Player::one}) {
    r.strategies[index(player)] = uniform_memoryless_strategy(a, r.property, player);
  }
  return r;
}

namespace {

// Depth-first walk over the simple paths of the arena restricted by s.
class CycleCertifier {
 public:
  CycleCertifier(const Arena& a, const WinningCondition& w, const MemorylessStrategy& s)
      : a_(a), w_(w), s_(s), position_(a.size(), -1) {}

  bool run(VertexId start) {
    position_[start] = 0;
    path_len_ = 1;
    level_ = w_.credit() ? static_cast<__int128>(*w_.credit()) : 0;
    return visit(start);
  }

 private:
  bool visit(VertexId v) {
    if (a_.owner(v) == s_.player) {
      for (const auto& e : a_.out(v))
        if (e.target == s_(v)) return follow(e);
      return false;
    }
    for (const auto& e : a_.out(v))
      if (!follow(e)) return false;
    return true;
  }

  bool follow(const Edge& e) {
    if (position_[e.target] >= 0) {
      labels_.push_back(&e.label);
      auto from = static_cast<std::size_t>(position_[e.target]);
      bool zero_wins = repeated_cycle_wins(w_, labels_.size() - from,
                                           [&](std::size_t i) -> const Label& {
                                             return *labels_[from + i];
                                           });
      labels_.pop_back();
      return zero_wins == (s_.player == Player::zero);
    }
    const bool tracks_energy =
        s_.player == Player::zero && w_.kind() == ConditionKind::energy;
    if (tracks_energy && level_ + e.label.as_weight() < 0) return false;
    if (tracks_energy) level_ += e.label.as_weight();
    labels_.push_back(&e.label);
    position_[e.target] = static_cast<int>(path_len_++);
    bool ok = visit(e.target);
    position_[e.target] = -1;
    --path_len_;
    labels_.pop_back();
    if (tracks_energy) level_ -= e.label.as_weight();
    return ok;
  }

  const Arena& a_;
  const WinningCondition& w_;
  const MemorylessStrategy& s_;
  std::vector<int> position_;
  std::vector<const Label*> labels_;
  std::size_t path_len_ = 0;
  __int128 level_ = 0;
};

}  // namespace

bool verify_memoryless_wins_infinite(const Arena& a, const WinningCondition& w,
                                     const MemorylessStrategy& s, VertexId start) {
  require_condition_kind(w, a);
  if (w.kind() == ConditionKind::energy_parity)
    throw UnsupportedCondition("energy-parity strategies cannot be certified by cycle checks");
  if (start >= a.size()) throw ArenaError("unknown start vertex id " + std::to_string(start));
  validate_strategy(a, s);
  CycleCertifier c(a, w, s);
  return c.run(start);
}

namespace {

class LassoEnumerator {
 public:
  LassoEnumerator(const Arena& a, const LassoSearchOptions& opts,
                  const std::function<bool(const Lasso&)>& fn)
      : a_(a), opts_(opts), fn_(fn) {}

  void run() {
    const std::size_t n = a_.size();
    // Closed walks of length <= 2|V| with an empty prefix.
    loops_by_start_.resize(n);
    for (VertexId v = 0; v < n && !stop_; ++v) {
      walk_ = {v};
      closed_walks(v, 2 * n);
    }
    // Prefixes of length 1..|V| joined to loops of length <= |V|.
    for (std::size_t m = 1; m <= n && !stop_; ++m)
      for (VertexId v = 0; v < n && !stop_; ++v) {
        walk_ = {v};
        prefixes(m);
      }
    random_phase();
  }

 private:
  bool emit(const Lasso& l) {
    if (stop_) return false;
    if (!fn_(l)) stop_ = true;
    return !stop_;
  }

  bool capped() {
    if (exhaustive_emitted_ >= opts_.exhaustive_cap) return true;
    ++exhaustive_emitted_;
    return false;
  }

  void closed_walks(VertexId start, std::size_t max_len) {
    if (stop_ || exhaustive_emitted_ >= opts_.exhaustive_cap) return;
    VertexId v = walk_.back();
    for (const auto& e : a_.out(v)) {
      if (stop_) return;
      if (e.target == start) {
        if (walk_.size() <= a_.size()) loops_by_start_[start].push_back(walk_);
        if (capped()) return;
        emit(Lasso{{}, walk_});
      }
      if (walk_.size() < max_len) {
        walk_.push_back(e.target);
        closed_walks(start, max_len);
        walk_.pop_back();
      }
    }
  }

  void prefixes(std::size_t m) {
    if (stop_ || exhaustive_emitted_ >= opts_.exhaustive_cap) return;
    VertexId v = walk_.back();
    for (const auto& e : a_.out(v)) {
      if (stop_) return;
      if (walk_.size() == m) {
        for (const auto& loop : loops_by_start_[e.target]) {
          if (capped()) return;
          if (!emit(Lasso{walk_, loop})) return;
        }
      } else {
        walk_.push_back(e.target);
        prefixes(m);
        walk_.pop_back();
      }
    }
  }

  void random_phase() {
    std::mt19937_64 rng(opts_.seed);
    auto pick = [&](std::size_t n) {
      return static_cast<std::size_t>(std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng));
    };
    const std::size_t n = a_.size();
    for (std::uint64_t t = 0; t < opts_.budget && !stop_; ++t) {
      std::vector<VertexId> w{static_cast<VertexId>(pick(n))};
      std::size_t len = 1 + pick(3 * n);
      auto step = [&] {
        auto out = a_.out(w.back());
        w.push_back(out[pick(out.size())].target);
      };
      for (std::size_t i = 0; i < len; ++i) step();
      std::vector<std::pair<std::size_t, std::size_t>> repeats;
      for (;;) {
        for (std::size_t j = 1; j < w.size(); ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (w[i] == w[j]) repeats.emplace_back(i, j);
        if (!repeats.empty()) break;
        step();
      }
      auto [i, j] = repeats[pick(repeats.size())];
      Lasso l{std::vector<VertexId>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)),
              std::vector<VertexId>(w.begin() + static_cast<std::ptrdiff_t>(i),
                                    w.begin() + static_cast<std::ptrdiff_t>(j))};
      emit(l);
    }
  }

  const Arena& a_;
  const LassoSearchOptions& opts_;
  const std::function<bool(const Lasso&)>& fn_;
  std::vector<std::vector<std::vector<VertexId>>> loops_by_start_;
  std::vector<VertexId> walk_;
  std::uint64_t exhaustive_emitted_ = 0;
  bool stop_ = false;
};

}  // namespace

void for_each_candidate_lasso(const Arena& a, const LassoSearchOptions& opts,
                              const std::function<bool(const Lasso&)>& fn) {
  LassoEnumerator e(a, opts, fn);
  e.run();
}

LassoSearchResult check_unambiguous_bounded(const Arena& a, const CycleProperty& p,
                                            const LassoSearchOptions& opts) {
  require_kind(p, a.label_kind());
  LassoSearchResult r;
  for_each_candidate_lasso(a, opts, [&](const Lasso& l) {
    ++r.lassos_checked;
    bool some_in = false, some_out = false;
    for (const auto& v : suffix_verdicts(p, l, a)) {
      some_in = some_in || v.all_in;
      some_out = some_out || v.all_out;
    }
    if (some_in && some_out) {
      r.witness = l;
      return false;
    }
    return true;
  });
  return r;
}

LassoSearchResult check_greedy_bounded(const Arena& a, const WinningCondition& w,
                                       const CycleProperty& p, const LassoSearchOptions& opts) {
  require_kind(p, a.label_kind());
  require_condition_kind(w, a);
  LassoSearchResult r;
  for_each_candidate_lasso(a, opts, [&](const Lasso& l) {
    ++r.lassos_checked;
    auto v = judge_decomposition(p, decompose_lasso(a, l));
    bool won = eval_condition_on_lasso(w, l, a);
    if ((v.all_in && !won) || (v.all_out && won)) {
      r.witness = l;
      return false;
    }
    return true;
  });
  return r;
}

}  // namespace fcg
