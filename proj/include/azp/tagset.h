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

#ifndef AZP_TAGSET_H_
#define AZP_TAGSET_H_

#include <set>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"

namespace azp {

// Pseudo-tags that pad pattern windows beyond a sentence edge.
inline constexpr absl::string_view kBeginTag = "<S>";
inline constexpr absl::string_view kEndTag = "</S>";

inline bool IsBoundaryTag(absl::string_view tag) {
  return tag == kBeginTag || tag == kEndTag;
}

// Coarse word classes the pipeline reasons about.
enum class TagClass {
  kVerb,
  kNoun,
  kProperNoun,
  kPronoun,
  kPreposition,
  kOther,
};

// The POS inventory a corpus is tagged with. Class membership is derived
// from the Penn-style tag shape (VB*, NN*, PRP, IN, optional "DT+" prefix),
// so custom inventories work as long as they follow that convention.
class Tagset {
 public:
  // The reduced Arabic Treebank tagset emitted by common Arabic taggers.
  static Tagset ArabicPenn();

  // One tag per line; blank lines and '#' comments are ignored.
  static absl::StatusOr<Tagset> FromFile(const std::string &path);

  explicit Tagset(std::set<std::string> tags) : tags_(std::move(tags)) {}

  bool Contains(absl::string_view tag) const;
  const std::set<std::string> &tags() const { return tags_; }

  static TagClass Classify(absl::string_view tag);
  static bool IsVerb(absl::string_view tag) {
    return Classify(tag) == TagClass::kVerb;
  }
  // Common or proper noun.
  static bool IsNoun(absl::string_view tag) {
    TagClass c = Classify(tag);
    return c == TagClass::kNoun || c == TagClass::kProperNoun;
  }
  static bool IsProperNoun(absl::string_view tag) {
    return Classify(tag) == TagClass::kProperNoun;
  }
  static bool IsPronoun(absl::string_view tag) {
    return Classify(tag) == TagClass::kPronoun;
  }
  static bool IsNominal(absl::string_view tag) {
    return IsNoun(tag) || IsPronoun(tag);
  }
  static bool IsPreposition(absl::string_view tag) {
    return Classify(tag) == TagClass::kPreposition;
  }
  // Perfective (VBD) versus imperfective (VBP, VB) verb forms.
  static bool IsPerfectVerb(absl::string_view tag);
  static bool IsImperfectVerb(absl::string_view tag);

 private:
  std::set<std::string> tags_;
};

}  // namespace azp

#endif  // AZP_TAGSET_H_
