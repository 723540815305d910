// Copyright 2026 The homog2p Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Internal Unicode helpers. ICU does the heavy lifting (NFC, character
// classes); this header keeps ICU types out of the public API.

#pragma once

#include <string>
#include <string_view>

namespace homog2p::uni {

inline constexpr char32_t kZwnj = U'‌';

// Strict UTF-8 decode; throws Error(validation, "invalid-utf8").
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

// Canonical composition (Unicode NFC).
std::u32string nfc(std::u32string_view s);

bool is_whitespace(char32_t c);  // Unicode White_Space property
bool is_punct(char32_t c);       // Unicode general categories P*

}  // namespace homog2p::uni
