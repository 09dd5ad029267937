/*
 * Copyright 2026 The sentimic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sentimic::utf8 {

struct Decoded {
  char32_t code_point;
  std::size_t length;  // bytes consumed
};

/// Decodes one scalar value at the front of `s`. Rejects overlong forms,
/// surrogates and values above U+10FFFF.
inline std::optional<Decoded> decode_front(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const auto b0 = static_cast<unsigned char>(s[0]);
  if (b0 < 0x80) return Decoded{b0, 1};

  std::size_t len;
  char32_t cp;
  char32_t min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2; cp = b0 & 0x1F; min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3; cp = b0 & 0x0F; min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4; cp = b0 & 0x07; min = 0x10000;
  } else {
    return std::nullopt;
  }
  if (s.size() < len) return std::nullopt;
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[i]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
  return Decoded{cp, len};
}

inline bool is_valid(std::string_view s) {
  while (!s.empty()) {
    auto d = decode_front(s);
    if (!d) return false;
    s.remove_prefix(d->length);
  }
  return true;
}

/// Number of Unicode scalar values. Invalid sequences count one per byte.
inline std::size_t length(std::string_view s) {
  std::size_t n = 0;
  while (!s.empty()) {
    auto d = decode_front(s);
    s.remove_prefix(d ? d->length : 1);
    ++n;
  }
  return n;
}

inline bool is_space(char32_t c) {
  switch (c) {
    case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

/// Replaces every run of whitespace (ASCII and Unicode spaces) with a single
/// ASCII space and trims both ends.
inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  while (!s.empty()) {
    auto d = decode_front(s);
    const std::size_t len = d ? d->length : 1;
    if (d && is_space(d->code_point)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.append(s.substr(0, len));
    }
    s.remove_prefix(len);
  }
  return out;
}

}  // namespace sentimic::utf8
