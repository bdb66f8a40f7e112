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

#ifndef CKECE_ERROR_HPP_
#define CKECE_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ckece {

enum class ErrorKind {
  kInvalidArgument,
  kIo,
  kParse,   // malformed text input; carries a line number when known
  kFormat,  // binary store header / version / checksum problems
};

// Single exception type for the library. Line is 1-based; 0 means "no line".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message, std::uint64_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                                : message),
        kind_(kind),
        line_(line) {}

  ErrorKind kind() const { return kind_; }
  std::uint64_t line() const { return line_; }

 private:
  ErrorKind kind_;
  std::uint64_t line_;
};

}  // namespace ckece

#endif  // CKECE_ERROR_HPP_
