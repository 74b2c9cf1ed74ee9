/**************************************************************************
 * Copyright 2026 The linset Authors
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
 **************************************************************************/

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace linset {

// Element of a constructed field, stored as its canonical encoding: the
// little-endian base-p digit integer of its power-basis coordinates.
struct Elem {
  std::uint32_t value = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

constexpr Elem kZero{0};
constexpr Elem kOne{1};

}  // namespace linset

template <>
struct std::hash<linset::Elem> {
  std::size_t operator()(linset::Elem e) const noexcept { return std::hash<std::uint32_t>{}(e.value); }
};
