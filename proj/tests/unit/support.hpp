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

#ifndef CKECE_TESTS_SUPPORT_HPP_
#define CKECE_TESTS_SUPPORT_HPP_

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ckece/extractor.hpp"

namespace testing {

inline std::string fixture(const std::string &name) {
  return std::string(CKECE_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The toy resources under tests/fixtures, loaded once.
struct Toy {
  ckece::KnowledgeStore store;
  ckece::VadLexicon lexicon;
  ckece::VectorStore vectors;

  static const Toy &get() {
    static const Toy toy = [] {
      std::ifstream kg(fixture("toy_kg.tsv")), vad(fixture("toy_vad.txt")),
          vec(fixture("toy_vectors.txt"));
      return Toy{ckece::KnowledgeStore::ingest(kg), ckece::VadLexicon::load(vad),
                 ckece::VectorStore::load(vec, 6)};
    }();
    return toy;
  }
};

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("ckece-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  std::string file(const std::string &name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::string &path, const std::string &text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace testing

#endif  // CKECE_TESTS_SUPPORT_HPP_
