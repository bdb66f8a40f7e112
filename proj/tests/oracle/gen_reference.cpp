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

// Writes the oracle's output for a contexts file as JSON lines.
// usage: gen_reference <kg.tsv> <vad.txt> <vectors.txt> <dim> <contexts.jsonl>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "ckece/io.hpp"
#include "ckece/records.hpp"
#include "oracle.hpp"

int main(int argc, char **argv) {
  if (argc != 6) {
    std::cerr << "usage: gen_reference <kg.tsv> <vad.txt> <vectors.txt> <dim> <contexts.jsonl>\n";
    return 2;
  }
  try {
    std::ifstream kg(argv[1]), vad(argv[2]), vec(argv[3]), ctx(argv[5]);
    auto store = ckece::KnowledgeStore::ingest(kg);
    auto lexicon = ckece::VadLexicon::load(vad);
    auto vectors = ckece::VectorStore::load(vec, std::strtoul(argv[4], nullptr, 10));
    const auto &stopwords = ckece::StopwordSet::bundled();
    std::string line;
    std::uint64_t n = 0;
    while (std::getline(ctx, line)) {
      ++n;
      if (ckece::trim(line).empty()) continue;
      auto record = ckece::parse_context_record(line, n);
      auto set = oracle::extract(record.text(), store, lexicon, vectors, stopwords);
      std::cout << ckece::concept_set_to_json(set, record.id).dump() << '\n';
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
