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

#include "fcg/gallery.hpp"

#include <vector>

namespace fcg {

namespace {

constexpr std::string_view kProp1 = R"(arena priority
# Player 0 wins from v2 and v3 but only by remembering whether v1 has
# already been left towards v3.
v v1 0
v v2 1
v v3 1
v v4 1
e v1 v2 0
e v1 v3 0
e v2 v1 0
e v2 v4 0
e v3 v2 0
e v4 v1 0
)";

constexpr std::string_view kMaxFirst = R"(arena priority
# Every edge is labelled by the index of its source.
v v1 0
v v2 0
v v3 0
e v1 v2 1
e v1 v3 1
e v2 v1 2
e v2 v3 2
e v3 v2 3
)";

constexpr std::string_view kDecomposition = R"(arena priority
# Realizes the play v w x w v s (x y z)^omega.
v v 0
v w 0
v x 0
v s 0
v y 0
v z 0
e v w 0
e v s 0
e w x 0
e w v 0
e x w 0
e x y 0
e s x 0
e y z 0
e z x 0
)";

constexpr std::string_view kFootnote = R"(arena priority
# Realizes the loop v1 v2 v1 v3 v2 v4.
v v1 0
v v2 0
v v3 0
v v4 0
e v1 v2 0
e v1 v3 0
e v2 v1 0
e v2 v4 0
e v3 v2 0
e v4 v1 0
)";

std::vector<GalleryEntry> build() {
  std::vector<GalleryEntry> g;
  g.push_back({"prop1-evenlen", parse_arena(kProp1), "evenlen",
               "even-length cycles; Player 0 needs two memory states from v2"});
  g.push_back({"maxfirst-solitaire", parse_arena(kMaxFirst), "maxfirst",
               "solitaire; pointwise memoryless but no uniform memoryless strategy"});
  g.push_back({"decomposition-example", parse_arena(kDecomposition), "evenlen",
               "play v w x w v s (x y z)^omega leaves (v,s) on the stack"});
  g.push_back({"footnote-lasso", parse_arena(kFootnote), "evenlen",
               "loop v1 v2 v1 v3 v2 v4: even cycles from position 0, odd from position 1"});
  return g;
}

}  // namespace

std::span<const GalleryEntry> gallery() {
  static const std::vector<GalleryEntry> entries = build();
  return entries;
}

std::optional<std::reference_wrapper<const GalleryEntry>> find_gallery(std::string_view name) {
  const GalleryEntry* match = nullptr;
  for (const auto& e : gallery()) {
    if (e.name == name) return std::cref(e);
    if (e.name.starts_with(name)) {
      if (match) return std::nullopt;
      match = &e;
    }
  }
  if (!match || name.empty()) return std::nullopt;
  return std::cref(*match);
}

}  // namespace fcg
