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

#ifndef CKECE_CORPUS_HPP_
#define CKECE_CORPUS_HPP_

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ckece {

enum class Role { kSpeaker, kListener };

struct Turn {
  Role role = Role::kSpeaker;
  std::string text;
};

struct Dialogue {
  std::string conversation_id;
  std::string emotion;
  std::string situation;
  std::vector<Turn> turns;  // alternating, speaker first
};

struct DialogueExample {
  std::string conversation_id;
  std::string emotion;
  std::vector<std::string> context_turns;
  std::string target;
  std::string concepts_rendered;
};

struct CorpusLoadStats {
  std::size_t rows = 0;
  std::size_t dialogues = 0;
  std::size_t skipped_conversations = 0;
};

// EmpatheticDialogues stores commas inside fields as the literal "_comma_".
inline constexpr std::string_view kCommaEscape = "_comma_";
std::string unescape_field(std::string_view text);
std::string escape_field(std::string_view text);

// Reads the comma-separated split files (header row; columns conv_id,
// utterance_idx, context, prompt, speaker_idx, utterance, ...). Rows are
// grouped by conversation in first-seen order and sorted by utterance index;
// odd indices are speaker turns. Throws Error(kParse) with the line number on
// missing columns or a non-numeric index; conversations without any
// utterance text are skipped with a warning.
std::vector<Dialogue> load_dialogues(std::istream &in, CorpusLoadStats *stats = nullptr);

// One example per listener turn, with every preceding turn as context.
std::vector<DialogueExample> build_examples(const Dialogue &dialogue);

struct FormatOptions {
  bool lowercase = true;
};

inline constexpr std::string_view kClsToken = "<CLS>";
inline constexpr std::string_view kSepToken = "<SEP>";
inline constexpr std::string_view kEndToken = "<END>";

// "<CLS> t1 <SEP> t2 <SEP> ... tn <SEP>"
std::string format_encoder_input(std::span<const std::string> context_turns,
                                 const FormatOptions &options = {});

struct DecoderInput {
  std::string text;
  // Byte offset of the first response character; generation loss applies
  // from here on.
  std::size_t loss_mask_boundary = 0;
};

// "concepts <SEP> response <END>", or "<SEP> response <END>" without concepts.
DecoderInput format_decoder_input(std::string_view concepts_rendered,
                                  std::string_view target_response,
                                  const FormatOptions &options = {});

}  // namespace ckece

#endif  // CKECE_CORPUS_HPP_
