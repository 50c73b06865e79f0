// snrkit/text/normalize.h

// Copyright 2026  snrkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SNRKIT_TEXT_NORMALIZE_H_
#define SNRKIT_TEXT_NORMALIZE_H_

#include <string>
#include <string_view>
#include <vector>

namespace snrkit {

enum class Casing { kCased, kUncased };

std::string_view CasingName(Casing casing);

struct NormalizeOptions {
  // Drop Unicode punctuation before whitespace collapsing. Off by default:
  // text is scored as given.
  bool strip_punctuation = false;
};

/// UTF-8 text that is NFC-composed, trimmed, with single spaces between
/// tokens, and casefolded when casing is kUncased.
class NormalizedText {
 public:
  NormalizedText() = default;

  const std::string &text() const { return text_; }
  Casing casing() const { return casing_; }
  bool empty() const { return text_.empty(); }

  // Maximal runs of non-space characters.
  std::vector<std::string> Tokens() const;
  // One UTF-8 string per Unicode scalar value.
  std::vector<std::string> Characters() const;

  friend bool operator==(const NormalizedText &, const NormalizedText &) = default;

 private:
  friend NormalizedText Normalize(std::string_view, Casing, const NormalizeOptions &);
  std::string text_;
  Casing casing_ = Casing::kCased;
};

// Invalid UTF-8 sequences become U+FFFD.
NormalizedText Normalize(std::string_view raw, Casing casing, const NormalizeOptions &options = {});

// Full Unicode default case folding, NFC afterwards.
std::string CaseFold(std::string_view utf8);

// Canonical decomposition with every combining mark removed, recomposed.
std::string StripDiacritics(std::string_view utf8);

bool IsWhitespaceUnit(std::string_view utf8);

}  // namespace snrkit

#endif  // SNRKIT_TEXT_NORMALIZE_H_
