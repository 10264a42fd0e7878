// Copyright 2026 The fairmt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small UTF-8 helpers. All text in fairmt is UTF-8 in std::string; offsets
// that cross module boundaries (token spans, slot positions) are counted in
// code points so they agree with Python string indices.

#ifndef FAIRMT_UTF8_H_
#define FAIRMT_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fairmt {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Replaces every invalid or truncated sequence with U+FFFD. `replaced`, if
// given, receives the number of replacements made.
std::string SanitizeUtf8(std::string_view in, int* replaced = nullptr);

// Decodes the code point starting at `pos`, advancing `pos` past it. Input
// must be valid UTF-8.
char32_t DecodeUtf8(std::string_view s, size_t& pos);

void AppendUtf8(std::string& out, char32_t cp);

size_t CodePointCount(std::string_view s);

// Byte offset of every code point, plus s.size() as the final entry, so
// result[i] is the byte offset of code point i for i in [0, count].
std::vector<size_t> CodePointByteOffsets(std::string_view s);

std::string AsciiLower(std::string_view s);

// Upper-cases the first character when it is an ASCII letter.
std::string CapitalizeFirst(std::string_view s);

bool StartsWithAsciiUpper(std::string_view s);

}  // namespace fairmt

#endif  // FAIRMT_UTF8_H_
