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

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "ckece/corpus.hpp"
#include "ckece/error.hpp"
#include "support.hpp"

using namespace ckece;

namespace {

std::vector<Dialogue> load_file(const std::string &name, CorpusLoadStats *stats = nullptr) {
  std::ifstream in(testing::fixture(name));
  return load_dialogues(in, stats);
}

std::vector<Dialogue> load_text(const std::string &text) {
  std::istringstream in(text);
  return load_dialogues(in);
}

std::size_t count(std::string_view hay, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string_view::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("escape rule") {
  CHECK(unescape_field("Hi_comma_ I feel so lonely") == "Hi, I feel so lonely");
  CHECK(escape_field("a, b,c") == "a_comma_ b_comma_c");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> ch(0, 5);
  const char alphabet[] = {'a', ',', ' ', '_', 'c', 'o'};
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int j = 0; j < 20; ++j) s += alphabet[ch(rng)];
    if (s.find(kCommaEscape) != std::string::npos) continue;
    CHECK(unescape_field(escape_field(s)) == s);
  }
}

TEST_CASE("the lonely dialogue") {
  CorpusLoadStats stats;
  auto dialogues = load_file("ed_sample/train.csv", &stats);
  CHECK(stats.rows == 6);
  CHECK(stats.dialogues == 2);
  REQUIRE(dialogues.size() == 2);
  const Dialogue &d = dialogues[0];
  CHECK(d.conversation_id == "hit:1_conv:2");
  CHECK(d.emotion == "lonely");
  CHECK(d.situation == "All my friends live in a different country");
  REQUIRE(d.turns.size() == 4);
  CHECK(d.turns[0].role == Role::kSpeaker);
  CHECK(d.turns[1].role == Role::kListener);
  CHECK(d.turns[2].role == Role::kSpeaker);
  CHECK(d.turns[3].role == Role::kListener);
  CHECK(d.turns[0].text ==
        "Hi, I feel so lonely sometimes because all my friends live in a different country.");

  auto examples = build_examples(d);
  REQUIRE(examples.size() == 2);
  CHECK(examples[0].context_turns.size() == 1);
  CHECK(examples[1].context_turns.size() == 3);
  CHECK(examples[0].target.rfind("Oh, I'm sure you are lonely. ", 0) == 0);
  CHECK(examples[0].emotion == "lonely");
}

TEST_CASE("minimal and degenerate dialogues") {
  auto two = load_text("conv_id,utterance_idx,context,prompt,speaker_idx,utterance\n"
                       "c1,1,sad,p,1,hello\nc1,2,sad,p,2,hi there\n");
  REQUIRE(two.size() == 1);
  CHECK(two[0].turns.size() == 2);
  CHECK(build_examples(two[0]).size() == 1);

  auto one = load_text("c1,1,sad,p,1,hello\n");
  REQUIRE(one.size() == 1);
  CHECK(build_examples(one[0]).empty());
}

TEST_CASE("rows are ordered by utterance index and empty conversations skipped") {
  CorpusLoadStats stats;
  auto dialogues = load_file("ed_sample/valid.csv", &stats);
  CHECK(stats.skipped_conversations == 1);
  REQUIRE(dialogues.size() == 1);
  REQUIRE(dialogues[0].turns.size() == 4);
  CHECK(dialogues[0].turns[1].text == "oh no! Any particular reason why?");
  CHECK(dialogues[0].turns[2].text.rfind("I stared", 0) == 0);
}

TEST_CASE("load errors carry the line") {
  auto line_of = [](const std::string &text) -> std::uint64_t {
    try {
      load_text(text);
    } catch (const Error &e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("conv_id,utterance_idx,context,prompt,speaker_idx,utterance\nc1,1,sad\n") == 2);
  CHECK(line_of("c1,x,sad,p,1,hello\n") == 1);
  CHECK(line_of("c1,1,sad,p,1,hello\nc1,3,sad,p,1,again\n") == 1);
}

TEST_CASE("examples per dialogue equal listener turns") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> turns(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    int n = turns(rng);
    std::string csv;
    for (int i = 1; i <= n; ++i) {
      csv += "c,";
      csv += std::to_string(i) + ",joyful,p," + std::to_string(i % 2) + ",turn " +
             std::to_string(i) + "\n";
    }
    auto d = load_text(csv);
    REQUIRE(d.size() == 1);
    auto ex = build_examples(d[0]);
    CHECK(ex.size() == static_cast<std::size_t>(n / 2));
    for (std::size_t k = 0; k < ex.size(); ++k) {
      CHECK(ex[k].context_turns.size() == 2 * k + 1);
      CHECK_FALSE(ex[k].context_turns.empty());
    }
  }
}

TEST_CASE("encoder input for the fear dialogue") {
  std::vector<std::string> ctx = {
      "I am being in fear lately.", "oh no! Any particular reason why?",
      "I stared to cough blood 3 days ago and I fear it must be cancer."};
  CHECK(format_encoder_input(ctx) ==
        "<CLS> i am being in fear lately. <SEP> oh no! any particular reason why? <SEP> "
        "i stared to cough blood 3 days ago and i fear it must be cancer. <SEP>");
  std::vector<std::string> hi = {"hi"};
  CHECK(format_encoder_input(hi) == "<CLS> hi <SEP>");
  std::vector<std::string> lower = {"already lower"};
  CHECK(format_encoder_input(lower) == "<CLS> already lower <SEP>");
  FormatOptions keep;
  keep.lowercase = false;
  std::vector<std::string> mixed = {"Hi There"};
  CHECK(format_encoder_input(mixed, keep) == "<CLS> Hi There <SEP>");
}

TEST_CASE("encoder structure") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> n(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> ctx(n(rng));
    for (std::size_t i = 0; i < ctx.size(); ++i) ctx[i] = "Turn " + std::to_string(i) + "!";
    auto s = format_encoder_input(ctx);
    CHECK(s.rfind("<CLS>", 0) == 0);
    CHECK(s.substr(s.size() - 5) == "<SEP>");
    CHECK(count(s, "<SEP>") == ctx.size());
  }
}

TEST_CASE("decoder input for the fear dialogue") {
  auto d = format_decoder_input("fear <is a> panic", "That's horrible, ...");
  CHECK(d.text == "fear <is a> panic <SEP> that's horrible, ... <END>");
  CHECK(d.loss_mask_boundary == std::string("fear <is a> panic <SEP> ").size());
  CHECK(d.text.substr(d.loss_mask_boundary, 6) == "that's");

  auto empty = format_decoder_input("", "ok");
  CHECK(empty.text == "<SEP> ok <END>");
  CHECK(empty.loss_mask_boundary == 6);
  CHECK(empty.text[empty.loss_mask_boundary] == 'o');
}

TEST_CASE("decoder boundary invariants") {
  const char *concepts[] = {"", "fear <is a> panic", "cough <related to> sneeze; blood <part of> blood cell"};
  const char *targets[] = {"ok", "That's horrible, I hope you are fine.", "X"};
  for (const auto *c : concepts) {
    for (const auto *t : targets) {
      auto d = format_decoder_input(c, t);
      auto sep = d.text.find("<SEP>");
      CHECK(d.loss_mask_boundary > sep);
      CHECK(d.text.substr(0, d.loss_mask_boundary).find("<END>") == std::string::npos);
      if (*c != '\0') {
        CHECK(d.text.substr(d.loss_mask_boundary).find(c) == std::string::npos);
      }
    }
  }
}

}  // TEST_SUITE
