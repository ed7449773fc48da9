// Copyright 2026 The AZP Augment Authors.
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

#include "azp/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "azp/utf8.h"
#include "json.hpp"

namespace azp {

bool Sentence::HasDependencies() const {
  for (const Token &token : tokens) {
    if (token.head >= 0 || !token.deprel.empty()) return true;
  }
  return false;
}

std::vector<std::string> Sentence::Surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &token : tokens) out.push_back(token.surface);
  return out;
}

std::vector<std::string> Sentence::Tags() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &token : tokens) out.push_back(token.pos);
  return out;
}

std::string Sentence::Text() const { return absl::StrJoin(Surfaces(), " "); }

void Sentence::Canonicalize() {
  for (size_t i = 0; i < tokens.size(); ++i) tokens[i].index = i;
  std::sort(azp_gaps.begin(), azp_gaps.end());
  azp_gaps.erase(std::unique(azp_gaps.begin(), azp_gaps.end()),
                 azp_gaps.end());
}

Sentence MakeSentence(const std::vector<std::string> &surfaces,
                      const std::vector<std::string> &tags,
                      std::vector<int> gaps) {
  Sentence sentence;
  for (size_t i = 0; i < surfaces.size(); ++i) {
    Token token;
    token.surface = surfaces[i];
    token.pos = i < tags.size() ? tags[i] : "";
    sentence.tokens.push_back(std::move(token));
  }
  sentence.azp_gaps = std::move(gaps);
  sentence.Canonicalize();
  return sentence;
}

absl::string_view MethodName(Method method) {
  switch (method) {
    case Method::kGold:
      return "gold";
    case Method::kOnp:
      return "onp";
    case Method::kRsm:
      return "rsm";
    case Method::kMcm:
      return "mcm";
    case Method::kBt:
      return "bt";
    case Method::kCsa:
      return "csa";
  }
  return "gold";
}

std::optional<Method> ParseMethod(absl::string_view name) {
  for (Method method : kAllMethods) {
    if (MethodName(method) == name) return method;
  }
  return std::nullopt;
}

bool SampleSource::operator<(const SampleSource &other) const {
  return std::tie(corpus, document, sentence) <
         std::tie(other.corpus, other.document, other.sentence);
}

absl::Status ValidateSample(const AzpSample &sample) {
  const Sentence &azp = sample.azp_sentence;
  const Sentence &ant = sample.antecedent_sentence;
  if (sample.verb_index < 0 || sample.verb_index >= azp.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("verb_index ", sample.verb_index, " out of range"));
  }
  if (!Tagset::IsVerb(azp.tokens[sample.verb_index].pos)) {
    return absl::InvalidArgumentError(
        absl::StrCat("verb_index ", sample.verb_index, " has non-verb tag ",
                     azp.tokens[sample.verb_index].pos));
  }
  if (sample.antecedent_span.empty() || sample.antecedent_span.start < 0 ||
      sample.antecedent_span.end > ant.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "antecedent span [", sample.antecedent_span.start, ", ",
        sample.antecedent_span.end, ") invalid for sentence of ", ant.size(),
        " tokens"));
  }
  if (std::find(azp.azp_gaps.begin(), azp.azp_gaps.end(), sample.gap_index) ==
      azp.azp_gaps.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("gap_index ", sample.gap_index, " not among gaps"));
  }
  for (int gap : azp.azp_gaps) {
    if (gap < 0 || gap > azp.size()) {
      return absl::InvalidArgumentError(absl::StrCat("gap ", gap, " out of range"));
    }
  }
  return absl::OkStatus();
}

int AntecedentHead(const AzpSample &sample) {
  const TokenSpan &span = sample.antecedent_span;
  for (int i = span.end - 1; i >= span.start; --i) {
    if (Tagset::IsNoun(sample.antecedent_sentence.tokens[i].pos)) return i;
  }
  return span.end - 1;
}

void SortSamples(std::vector<AzpSample> *samples) {
  std::stable_sort(samples->begin(), samples->end(),
                   [](const AzpSample &a, const AzpSample &b) {
                     return std::forward_as_tuple(a.source, a.method, a.id) <
                            std::forward_as_tuple(b.source, b.method, b.id);
                   });
}

namespace {

absl::Status LineError(int line, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", message));
}

}  // namespace

absl::StatusOr<std::vector<TaggedDocument>> ParseTagged(
    absl::string_view text, const Tagset &tagset) {
  std::vector<TaggedDocument> documents;
  Sentence current;
  bool in_sentence = false;

  auto current_doc = [&]() -> TaggedDocument & {
    if (documents.empty()) documents.push_back(TaggedDocument{});
    return documents.back();
  };
  auto flush = [&]() {
    if (in_sentence) {
      current.Canonicalize();
      current_doc().sentences.push_back(std::move(current));
    }
    current = Sentence{};
    in_sentence = false;
  };

  int line_number = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_number;
    absl::string_view line = absl::StripSuffix(raw, "\r");
    if (absl::StripAsciiWhitespace(line).empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      absl::string_view body = absl::StripLeadingAsciiWhitespace(line.substr(1));
      if (absl::ConsumePrefix(&body, "doc=")) {
        flush();
        documents.push_back(TaggedDocument{std::string(body), {}});
      }
      continue;
    }
    std::vector<absl::string_view> columns = absl::StrSplit(line, '\t');
    if (columns.size() != 2 && columns.size() != 4) {
      return LineError(line_number,
                       absl::StrCat("expected 2 or 4 tab-separated columns, "
                                    "got ", columns.size()));
    }
    in_sentence = true;
    if (columns[0] == "*") {
      current.azp_gaps.push_back(current.size());
      continue;
    }
    if (columns[0].empty() ||
        utf8::SplitWhitespace(columns[0]).size() != 1 ||
        utf8::SplitWhitespace(columns[0])[0] != columns[0]) {
      return LineError(line_number, "surface must be non-empty without spaces");
    }
    if (!tagset.Contains(columns[1])) {
      return LineError(line_number,
                       absl::StrCat("unknown POS tag '", columns[1], "'"));
    }
    Token token;
    token.surface = std::string(columns[0]);
    token.pos = std::string(columns[1]);
    token.index = current.size();
    if (columns.size() == 4) {
      int head;
      if (!absl::SimpleAtoi(columns[2], &head) || head < 0) {
        return LineError(line_number,
                         absl::StrCat("bad HEAD column '", columns[2], "'"));
      }
      token.head = head - 1;
      token.deprel = std::string(columns[3]);
    }
    current.tokens.push_back(std::move(token));
  }
  flush();

  for (const TaggedDocument &doc : documents) {
    for (const Sentence &sentence : doc.sentences) {
      for (const Token &token : sentence.tokens) {
        if (token.head >= sentence.size()) {
          return absl::InvalidArgumentError(
              absl::StrCat("document '", doc.id, "': head ", token.head + 1,
                           " beyond sentence length ", sentence.size()));
        }
      }
    }
  }
  return documents;
}

absl::StatusOr<std::vector<TaggedDocument>> ReadTaggedFile(
    const std::string &path, const Tagset &tagset) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<std::vector<TaggedDocument>> docs = ParseTagged(*text, tagset);
  if (!docs.ok()) {
    return absl::Status(docs.status().code(),
                        absl::StrCat(path, ": ", docs.status().message()));
  }
  return docs;
}

std::string SerializeTagged(const std::vector<TaggedDocument> &documents) {
  std::string out;
  for (const TaggedDocument &doc : documents) {
    absl::StrAppend(&out, "# doc=", doc.id, "\n");
    for (const Sentence &sentence : doc.sentences) {
      bool deps = sentence.HasDependencies();
      size_t next_gap = 0;
      for (int i = 0; i <= sentence.size(); ++i) {
        while (next_gap < sentence.azp_gaps.size() &&
               sentence.azp_gaps[next_gap] == i) {
          absl::StrAppend(&out, deps ? "*\t-NONE-\t0\t-\n" : "*\t-NONE-\n");
          ++next_gap;
        }
        if (i == sentence.size()) break;
        const Token &token = sentence.tokens[i];
        absl::StrAppend(&out, token.surface, "\t", token.pos);
        if (deps) {
          absl::StrAppend(&out, "\t", token.head + 1, "\t",
                          token.deprel.empty() ? "_" : token.deprel);
        }
        out.push_back('\n');
      }
      out.push_back('\n');
    }
  }
  return out;
}

bool IsSentenceTerminator(char32_t c) {
  return c == '.' || c == '!' || c == U'؟' || c == U'؛' ||
         c == '?';
}

std::vector<std::string> SplitSentences(absl::string_view text) {
  std::vector<std::string> sentences;
  std::u32string current;
  bool after_terminator = false;
  auto emit = [&]() {
    size_t begin = 0;
    while (begin < current.size() && utf8::IsSpace(current[begin])) ++begin;
    if (begin < current.size()) {
      sentences.push_back(
          utf8::Encode(std::u32string_view(current).substr(begin)));
    }
    current.clear();
  };
  for (char32_t c : utf8::Decode(text)) {
    if (after_terminator && !IsSentenceTerminator(c)) {
      emit();
      after_terminator = false;
    }
    current.push_back(c);
    if (IsSentenceTerminator(c)) after_terminator = true;
  }
  // Trailing whitespace after the final terminator is not a sentence.
  size_t end = current.size();
  while (end > 0 && utf8::IsSpace(current[end - 1])) --end;
  if (after_terminator) current.resize(end);
  emit();
  return sentences;
}

namespace {

bool IsDetachedPunctuation(char32_t c) {
  switch (c) {
    case '.':
    case ',':
    case '!':
    case '?':
    case ':':
    case ';':
    case '"':
    case '(':
    case ')':
    case '[':
    case ']':
    case U'،':  // Arabic comma
    case U'؛':  // Arabic semicolon
    case U'؟':  // Arabic question mark
    case U'«':
    case U'»':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<std::string> Tokenize(absl::string_view sentence) {
  std::vector<std::string> tokens;
  for (const std::string &piece : utf8::SplitWhitespace(sentence)) {
    std::u32string chars = utf8::Decode(piece);
    size_t begin = 0;
    size_t end = chars.size();
    std::vector<std::string> trailing;
    while (begin < end && IsDetachedPunctuation(chars[begin])) {
      tokens.push_back(utf8::Encode(chars.substr(begin, 1)));
      ++begin;
    }
    while (end > begin && IsDetachedPunctuation(chars[end - 1])) {
      trailing.push_back(utf8::Encode(chars.substr(end - 1, 1)));
      --end;
    }
    if (end > begin) tokens.push_back(utf8::Encode(chars.substr(begin, end - begin)));
    tokens.insert(tokens.end(), trailing.rbegin(), trailing.rend());
  }
  return tokens;
}

absl::StatusOr<std::vector<RawPage>> ReadPages(const std::string &path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::vector<RawPage> pages;
  std::string line;
  int record = 0;
  while (std::getline(in, line)) {
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    ++record;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": page record ", record, ": not a JSON object"));
    }
    for (const char *field : {"title", "text"}) {
      if (!j.contains(field) || !j[field].is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat(path, ": page record ", record, ": field '", field,
                         "' missing or not a string"));
      }
    }
    RawPage page{j["title"].get<std::string>(), j["text"].get<std::string>()};
    if (absl::StripAsciiWhitespace(page.title).empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": page record ", record, ": empty title"));
    }
    pages.push_back(std::move(page));
  }
  return pages;
}

absl::StatusOr<std::string> ReadFileToString(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteStringToFile(const std::string &path,
                               absl::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out.write(contents.data(), contents.size());
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path));
  return absl::OkStatus();
}

}  // namespace azp
