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

#include "ckece/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "ckece/error.hpp"
#include "ckece/io.hpp"
#include "ckece/log.hpp"

namespace ckece {

namespace {

std::string replace_all(std::string_view text, std::string_view from, std::string_view to) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (true) {
    size_t hit = text.find(from, pos);
    if (hit == std::string_view::npos) break;
    out.append(text.substr(pos, hit - pos));
    out.append(to);
    pos = hit + from.size();
  }
  out.append(text.substr(pos));
  return out;
}

struct Row {
  long index;
  std::string speaker_idx;
  std::string text;
};

struct Pending {
  Dialogue dialogue;
  std::vector<Row> rows;
  std::uint64_t first_line = 0;
};

}  // namespace

std::string unescape_field(std::string_view text) { return replace_all(text, kCommaEscape, ","); }
std::string escape_field(std::string_view text) { return replace_all(text, ",", kCommaEscape); }

std::vector<Dialogue> load_dialogues(std::istream &in, CorpusLoadStats *stats) {
  CorpusLoadStats local;
  std::vector<Pending> pending;
  std::unordered_map<std::string, size_t> by_id;

  std::string line;
  std::uint64_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (!header_seen) {
      header_seen = true;
      if (view.substr(0, 7) == "conv_id") continue;
    }
    if (trim(view).empty()) continue;

    auto fields = split(view, ',');
    if (fields.size() < 6) {
      throw Error(ErrorKind::kParse,
                  "expected at least 6 comma-separated columns, got " + std::to_string(fields.size()),
                  line_no);
    }
    auto idx_text = trim(fields[1]);
    long index = 0;
    auto [ptr, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), index);
    if (ec != std::errc() || ptr != idx_text.data() + idx_text.size() || index < 1) {
      throw Error(ErrorKind::kParse, "bad utterance index '" + std::string(idx_text) + "'", line_no);
    }
    ++local.rows;

    std::string id(trim(fields[0]));
    auto [it, inserted] = by_id.try_emplace(id, pending.size());
    if (inserted) {
      Pending p;
      p.dialogue.conversation_id = id;
      p.dialogue.emotion = std::string(trim(fields[2]));
      p.dialogue.situation = unescape_field(trim(fields[3]));
      p.first_line = line_no;
      pending.push_back(std::move(p));
    }
    pending[it->second].rows.push_back(
        {index, std::string(trim(fields[4])), unescape_field(trim(fields[5]))});
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read error while loading dialogues");

  std::vector<Dialogue> dialogues;
  dialogues.reserve(pending.size());
  for (auto &p : pending) {
    auto &rows = p.rows;
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row &a, const Row &b) { return a.index < b.index; });
    bool any_text = std::any_of(rows.begin(), rows.end(),
                                [](const Row &r) { return !r.text.empty(); });
    if (!any_text) {
      log()->warn("conversation {} (line {}) has no utterances; skipped",
                  p.dialogue.conversation_id, p.first_line);
      ++local.skipped_conversations;
      continue;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].index != static_cast<long>(i + 1)) {
        throw Error(ErrorKind::kParse, "conversation " + p.dialogue.conversation_id +
                                           " has non-consecutive utterance indices",
                    p.first_line);
      }
      Role role = rows[i].index % 2 == 1 ? Role::kSpeaker : Role::kListener;
      p.dialogue.turns.push_back({role, std::move(rows[i].text)});
    }
    if (p.dialogue.emotion.empty()) {
      throw Error(ErrorKind::kParse,
                  "conversation " + p.dialogue.conversation_id + " has no emotion label",
                  p.first_line);
    }
    dialogues.push_back(std::move(p.dialogue));
  }
  local.dialogues = dialogues.size();
  if (stats) *stats = local;
  return dialogues;
}

std::vector<DialogueExample> build_examples(const Dialogue &dialogue) {
  std::vector<DialogueExample> examples;
  for (size_t i = 1; i < dialogue.turns.size(); ++i) {
    if (dialogue.turns[i].role != Role::kListener) continue;
    DialogueExample ex;
    ex.conversation_id = dialogue.conversation_id;
    ex.emotion = dialogue.emotion;
    for (size_t j = 0; j < i; ++j) ex.context_turns.push_back(dialogue.turns[j].text);
    ex.target = dialogue.turns[i].text;
    examples.push_back(std::move(ex));
  }
  return examples;
}

std::string format_encoder_input(std::span<const std::string> context_turns,
                                 const FormatOptions &options) {
  std::string out(kClsToken);
  for (const auto &turn : context_turns) {
    out += ' ';
    out += options.lowercase ? to_lower(turn) : turn;
    out += ' ';
    out += kSepToken;
  }
  return out;
}

DecoderInput format_decoder_input(std::string_view concepts_rendered,
                                  std::string_view target_response,
                                  const FormatOptions &options) {
  DecoderInput in;
  if (!concepts_rendered.empty()) {
    in.text = options.lowercase ? to_lower(concepts_rendered) : std::string(concepts_rendered);
    in.text += ' ';
  }
  in.text += kSepToken;
  in.text += ' ';
  in.loss_mask_boundary = in.text.size();
  in.text += options.lowercase ? to_lower(target_response) : std::string(target_response);
  in.text += ' ';
  in.text += kEndToken;
  return in;
}

}  // namespace ckece
