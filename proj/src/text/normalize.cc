// text/normalize.cc

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

#include "snrkit/text/normalize.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "snrkit/base/snrkit-error.h"

namespace snrkit {

namespace {

const icu::Normalizer2 &Nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error(ErrorCode::kInvalidArgument, "ICU NFC normalizer unavailable");
  return *n;
}

const icu::Normalizer2 &Nfd() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *n = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw Error(ErrorCode::kInvalidArgument, "ICU NFD normalizer unavailable");
  return *n;
}

icu::UnicodeString ToNfc(const icu::UnicodeString &s) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = Nfc().normalize(s, status);
  if (U_FAILURE(status)) throw Error(ErrorCode::kInvalidArgument, "NFC normalization failed");
  return out;
}

std::string ToUtf8(const icu::UnicodeString &s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

}  // namespace

std::string_view CasingName(Casing casing) { return casing == Casing::kCased ? "cased" : "uncased"; }

NormalizedText Normalize(std::string_view raw, Casing casing, const NormalizeOptions &options) {
  icu::UnicodeString s = ToNfc(icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size()))));
  if (casing == Casing::kUncased) {
    s.foldCase(U_FOLD_CASE_DEFAULT);
    s = ToNfc(s);
  }
  icu::UnicodeString collapsed;
  bool pending_space = false;
  for (int32_t i = 0; i < s.length();) {
    const UChar32 c = s.char32At(i);
    i += U16_LENGTH(c);
    if (options.strip_punctuation && u_ispunct(c)) continue;
    if (u_isUWhiteSpace(c)) {
      pending_space = !collapsed.isEmpty();
      continue;
    }
    if (pending_space) collapsed.append(static_cast<UChar>(0x20));
    pending_space = false;
    collapsed.append(c);
  }
  NormalizedText out;
  out.text_ = ToUtf8(collapsed);
  out.casing_ = casing;
  return out;
}

std::vector<std::string> NormalizedText::Tokens() const {
  std::vector<std::string> tokens;
  size_t start = 0;
  while (start < text_.size()) {
    size_t space = text_.find(' ', start);
    if (space == std::string::npos) space = text_.size();
    if (space > start) tokens.push_back(text_.substr(start, space - start));
    start = space + 1;
  }
  return tokens;
}

std::vector<std::string> NormalizedText::Characters() const {
  std::vector<std::string> chars;
  const auto *bytes = reinterpret_cast<const uint8_t *>(text_.data());
  const int32_t length = static_cast<int32_t>(text_.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    (void)c;
    chars.emplace_back(text_.substr(static_cast<size_t>(start), static_cast<size_t>(i - start)));
  }
  return chars;
}

std::string CaseFold(std::string_view utf8) {
  icu::UnicodeString s =
      icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  s.foldCase(U_FOLD_CASE_DEFAULT);
  return ToUtf8(ToNfc(s));
}

std::string StripDiacritics(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::UnicodeString decomposed = Nfd().normalize(
      icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size()))),
      status);
  if (U_FAILURE(status)) throw Error(ErrorCode::kInvalidArgument, "NFD normalization failed");
  icu::UnicodeString base;
  for (int32_t i = 0; i < decomposed.length();) {
    const UChar32 c = decomposed.char32At(i);
    i += U16_LENGTH(c);
    if ((U_GET_GC_MASK(c) & U_GC_M_MASK) == 0) base.append(c);
  }
  return ToUtf8(ToNfc(base));
}

bool IsWhitespaceUnit(std::string_view utf8) {
  if (utf8.empty()) return false;
  const auto *bytes = reinterpret_cast<const uint8_t *>(utf8.data());
  const int32_t length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0 || !u_isUWhiteSpace(c)) return false;
  }
  return true;
}

}  // namespace snrkit
