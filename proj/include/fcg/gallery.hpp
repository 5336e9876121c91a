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

#ifndef FCG_GALLERY_HPP
#define FCG_GALLERY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "fcg/arena.hpp"

namespace fcg {

struct GalleryEntry {
  std::string name;
  Arena arena;
  std::string property;  // CLI spelling, see CycleProperty::parse
  std::string note;
};

/// Built-in arenas: prop1-evenlen, maxfirst-solitaire, decomposition-example,
/// footnote-lasso.
std::span<const GalleryEntry> gallery();

/// Exact name, or the unique entry the name is a prefix of.
std::optional<std::reference_wrapper<const GalleryEntry>> find_gallery(std::string_view name);

}  // namespace fcg

#endif  // FCG_GALLERY_HPP
