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

#include "ckece/io.hpp"

#include <zlib.h>

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "ckece/error.hpp"

namespace ckece {
namespace {

class GzipBuffer : public std::streambuf {
 public:
  explicit GzipBuffer(const std::string &path) : file_(gzopen(path.c_str(), "rb")) {
    if (file_ != nullptr) gzbuffer(file_, 1 << 17);
  }
  ~GzipBuffer() override {
    if (file_ != nullptr) gzclose(file_);
  }
  GzipBuffer(const GzipBuffer &) = delete;
  GzipBuffer &operator=(const GzipBuffer &) = delete;

  bool is_open() const { return file_ != nullptr; }

 protected:
  int_type underflow() override {
    if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
    int n = gzread(file_, buffer_.data(), static_cast<unsigned>(buffer_.size()));
    if (n < 0) {
      int errnum = 0;
      const char *msg = gzerror(file_, &errnum);
      throw Error(ErrorKind::kIo, std::string("gzip read failed: ") + msg);
    }
    if (n == 0) return traits_type::eof();
    setg(buffer_.data(), buffer_.data(), buffer_.data() + n);
    return traits_type::to_int_type(*gptr());
  }

 private:
  gzFile file_;
  std::array<char, 1 << 16> buffer_{};
};

class GzipStream : public std::istream {
 public:
  explicit GzipStream(const std::string &path) : std::istream(nullptr), buffer_(path) {
    rdbuf(&buffer_);
  }
  bool is_open() const { return buffer_.is_open(); }

 private:
  GzipBuffer buffer_;
};

// Non-owning wrapper so stdin/stdout fit the unique_ptr return type.
class BorrowedIn : public std::istream {
 public:
  explicit BorrowedIn(std::istream &in) : std::istream(in.rdbuf()) {}
};
class BorrowedOut : public std::ostream {
 public:
  explicit BorrowedOut(std::ostream &out) : std::ostream(out.rdbuf()) {}
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::unique_ptr<std::istream> open_input(const std::string &path, bool gzip) {
  if (path == "-") return std::make_unique<BorrowedIn>(std::cin);
  if (gzip) {
    auto in = std::make_unique<GzipStream>(path);
    if (!in->is_open()) throw Error(ErrorKind::kIo, "cannot open " + path);
    return in;
  }
  auto in = std::make_unique<std::ifstream>(path);
  if (!*in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return in;
}

std::unique_ptr<std::istream> open_binary_input(const std::string &path) {
  auto in = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return in;
}

std::unique_ptr<std::ostream> open_output(const std::string &path, bool binary) {
  if (path.empty() || path == "-") return std::make_unique<BorrowedOut>(std::cout);
  auto mode = std::ios::out | std::ios::trunc;
  if (binary) mode |= std::ios::binary;
  auto out = std::make_unique<std::ofstream>(path, mode);
  if (!*out) throw Error(ErrorKind::kIo, "cannot write " + path);
  return out;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return text;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(text.substr(start));
      return fields;
    }
    fields.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    size_t begin = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > begin) fields.push_back(text.substr(begin, i - begin));
  }
  return fields;
}

bool parse_double(std::string_view text, double &out) {
  if (text.empty()) return false;
  // from_chars rejects a leading '+', which some dumps emit.
  if (text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

std::string format_number(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace ckece
