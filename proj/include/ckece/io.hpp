// Copyright 2026 The CKECE Authors.
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

#ifndef CKECE_IO_HPP_
#define CKECE_IO_HPP_

#include <istream>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ckece {

// Opens `path` for reading. "-" is stdin. With `gzip` the stream is
// decompressed on the fly. Throws Error(kIo) when the file cannot be opened.
std::unique_ptr<std::istream> open_input(const std::string &path, bool gzip = false);

// Opens `path` for writing, truncating. "-" (or empty) is stdout.
std::unique_ptr<std::ostream> open_output(const std::string &path, bool binary = false);

std::unique_ptr<std::istream> open_binary_input(const std::string &path);

// ASCII-only case folding; bytes >= 0x80 pass through so UTF-8 stays intact.
std::string to_lower(std::string_view text);
std::string_view trim(std::string_view text);

// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string_view> split(std::string_view text, char sep);

// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string_view> split_whitespace(std::string_view text);

// Strict decimal parse of the whole field. Returns false on any leftover input.
bool parse_double(std::string_view text, double &out);

// Shortest round-trip rendering with a guaranteed decimal point ("4" -> "4.0").
std::string format_number(double value, int significant_digits = 10);

}  // namespace ckece

#endif  // CKECE_IO_HPP_
