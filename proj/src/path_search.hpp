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

#ifndef FCG_SRC_PATH_SEARCH_HPP
#define FCG_SRC_PATH_SEARCH_HPP

#include <span>
#include <vector>

#include "fcg/arena.hpp"
#include "fcg/cycle_property.hpp"

namespace fcg::detail {

/// Simple-path bookkeeping shared by the searches over first cycles.
class PathSearch {
 public:
  PathSearch(const Arena& a, const CycleProperty& p, VertexId start)
      : arena_(a), property_(p), position_(a.size(), -1) {
    path_.reserve(a.size());
    labels_.reserve(a.size() + 1);
    path_.push_back(start);
    position_[start] = 0;
  }

  const Arena& arena() const { return arena_; }
  const std::vector<VertexId>& path() const { return path_; }
  bool on_path(VertexId v) const { return position_[v] >= 0; }

  void push(const Edge& e) {
    labels_.push_back(&e.label);
    position_[e.target] = static_cast<int>(path_.size());
    path_.push_back(e.target);
  }

  void pop() {
    position_[path_.back()] = -1;
    path_.pop_back();
    labels_.pop_back();
  }

  /// Whether the cycle closed by e (whose target is on the path) is in the property.
  bool closes_member(const Edge& e) {
    labels_.push_back(&e.label);
    std::span<const Label* const> word(labels_);
    bool in = member(property_, word.subspan(static_cast<std::size_t>(position_[e.target])));
    labels_.pop_back();
    return in;
  }

  Player leaf_winner(const Edge& e) { return closes_member(e) ? Player::zero : Player::one; }

 private:
  const Arena& arena_;
  const CycleProperty& property_;
  std::vector<VertexId> path_;
  std::vector<int> position_;
  std::vector<const Label*> labels_;
};

}  // namespace fcg::detail

#endif  // FCG_SRC_PATH_SEARCH_HPP
