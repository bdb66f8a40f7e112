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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string &name) { return std::string(CKECE_FIXTURE_DIR) + "/" + name; }

std::string slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

class Sandbox {
 public:
  Sandbox() {
    dir_ = fs::temp_directory_path() / ("ckece_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  Sandbox(const Sandbox &) = delete;
  Sandbox &operator=(const Sandbox &) = delete;

  fs::path path(const std::string &name) const { return dir_ / name; }

  Run run(const std::string &args) const {
    auto out = path("stdout"), err = path("stderr");
    std::string cmd = std::string(CKECE_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                      err.string();
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  // Ingests the toy graph once per sandbox.
  std::string store() {
    if (!store_ready_) {
      REQUIRE(run("ingest --input " + fixture("toy_kg.tsv") + " --output " + path("toy.store").string())
                  .code == 0);
      store_ready_ = true;
    }
    return path("toy.store").string();
  }

  std::string resources() {
    return "--store " + store() + " --vad " + fixture("toy_vad.txt") + " --vectors " +
           fixture("toy_vectors.txt") + " --dim 6";
  }

 private:
  fs::path dir_;
  bool store_ready_ = false;
};

}  // namespace

TEST_CASE("ingest reports counters") {
  Sandbox box;
  Run r = box.run("ingest --input " + fixture("toy_kg.tsv") + " --output " +
                  box.path("s.bin").string());
  CHECK(r.code == 0);
  CHECK(r.err.find("lines=29\n") != std::string::npos);
  CHECK(r.err.find("assertions=25\n") != std::string::npos);
  CHECK(r.err.find("malformed=1\n") != std::string::npos);
  CHECK(r.err.find("missing_weight=1\n") != std::string::npos);
  CHECK(fs::file_size(box.path("s.bin")) > 0);
}

TEST_CASE("usage errors exit 2") {
  Sandbox box;
  CHECK(box.run("").code == 2);
  CHECK(box.run("ingest --output x").code == 2);
  CHECK(box.run("frobnicate").code == 2);
  CHECK(box.run("eval distinct --n 0 --input " + fixture("gen_two_responses.jsonl")).code == 2);
  CHECK(box.run("extract " + box.resources() + " --alpha 1.5 --input x").code == 2);
  CHECK(box.run("process-corpus --dataset-dir " + fixture("ed_sample") + " --split test").code == 2);
  CHECK(box.run("process-corpus --dataset-dir " + fixture("ed_sample") + " --split train --store " +
                box.store())
            .code == 2);
}

TEST_CASE("data errors exit 1 and name the line") {
  Sandbox box;
  Run r = box.run("ingest --strict --input " + fixture("toy_kg.tsv") + " --output " +
                  box.path("s.bin").string());
  CHECK(r.code == 1);
  CHECK(r.err.find("line 27") != std::string::npos);

  r = box.run("extract " + box.resources() + " --input /no/such/contexts.jsonl");
  CHECK(r.code == 1);

  std::ofstream(box.path("bad.jsonl")) << "{\"context\": [\"fear\"]}\nnot json\n";
  r = box.run("extract " + box.resources() + " --input " + box.path("bad.jsonl").string());
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("extract matches the committed reference for any worker count") {
  Sandbox box;
  const std::string expected = slurp(fixture("toy_expected.jsonl"));
  for (int workers : {1, 2, 8}) {
    Run r = box.run("extract " + box.resources() + " --workers " + std::to_string(workers) +
                    " --input " + fixture("toy_contexts.jsonl"));
    CHECK(r.code == 0);
    CHECK(r.out == expected);
    CHECK(r.err.find("records=8") != std::string::npos);
  }
  Run r = box.run("extract " + box.resources() + " --input " + fixture("toy_contexts.jsonl") +
                  " --output " + box.path("out.jsonl").string());
  CHECK(r.code == 0);
  CHECK(slurp(box.path("out.jsonl")) == expected);
}

TEST_CASE("extract on empty input") {
  Sandbox box;
  std::ofstream(box.path("empty.jsonl")).close();
  Run r = box.run("extract " + box.resources() + " --workers 4 --input " +
                  box.path("empty.jsonl").string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("extract options reach the extractor") {
  Sandbox box;
  Run r = box.run("extract " + box.resources() +
                  " --comma-separator --max-tuples 2 --exclude-relations RelatedTo --input " +
                  fixture("toy_contexts.jsonl"));
  CHECK(r.code == 0);
  auto first = r.out.substr(0, r.out.find('\n'));
  CHECK(first.find("\"rendered\":\"fear <is a> panic, cancer <is a> disease\"") !=
        std::string::npos);
}

TEST_CASE("eval subcommands") {
  Sandbox box;
  Run r = box.run("eval distinct --n 1 --input " + fixture("gen_two_responses.jsonl"));
  CHECK(r.code == 0);
  CHECK(r.out.find("distinct_1=0.5\n") != std::string::npos);
  CHECK(r.out.find("distinct_1_percent=50.0\n") != std::string::npos);

  r = box.run("eval ppl --input " + fixture("gen_uniform.jsonl"));
  CHECK(r.code == 0);
  CHECK(r.out == "metric=perplexity\nperplexity=4.0\ntokens=8\nrecords=3\n");

  r = box.run("eval accuracy --format json --input " + fixture("gen_two_responses.jsonl"));
  CHECK(r.code == 0);
  CHECK(r.out.find("\"emotion_accuracy\":0.5") != std::string::npos);
  CHECK(r.out.find("\"emotion_accuracy_percent\":50.0") != std::string::npos);
}

TEST_CASE("process-corpus") {
  Sandbox box;
  Run r = box.run("process-corpus --dataset-dir " + fixture("ed_sample") + " --split train");
  CHECK(r.code == 0);
  CHECK(r.err.find("examples=3\n") != std::string::npos);
  CHECK(r.err.find("dialogues=2\n") != std::string::npos);

  r = box.run("process-corpus --dataset-dir " + fixture("ed_sample") + " --split valid " +
              box.resources() + " --workers 3");
  CHECK(r.code == 0);
  CHECK(r.err.find("skipped_conversations=1\n") != std::string::npos);
  CHECK(r.out.find("that's horrible, i hope it turns out to be nothing serious. <END>") !=
        std::string::npos);
  CHECK(r.out.find("fear <is a> panic") != std::string::npos);
}

TEST_CASE("version flag") {
  Sandbox box;
  Run r = box.run("--version");
  CHECK(r.code == 0);
  CHECK(!r.out.empty());
}
