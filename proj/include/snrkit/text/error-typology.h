// snrkit/text/error-typology.h

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

#ifndef SNRKIT_TEXT_ERROR_TYPOLOGY_H_
#define SNRKIT_TEXT_ERROR_TYPOLOGY_H_

#include <string_view>

#include "snrkit/text/edit-alignment.h"

namespace snrkit {

enum class ErrorType { kSpace, kVowel, kConsonant, kDiacritics };

std::string_view ErrorTypeName(ErrorType type);

struct ErrorBreakdown {
  size_t space = 0;
  size_t vowel = 0;
  size_t consonant = 0;
  size_t diacritics = 0;

  size_t Total() const { return space + vowel + consonant + diacritics; }
  void Add(ErrorType type);
  ErrorBreakdown &operator+=(const ErrorBreakdown &other);
  friend bool operator==(const ErrorBreakdown &, const ErrorBreakdown &) = default;
};

/// Category of one non-match character edit:
///  - whitespace on either side: space
///  - substitution of two characters with the same base letter once
///    combining marks are removed (e vs é): diacritics
///  - otherwise the deciding character (reference side for Sub/Del,
///    hypothesis side for Ins), stripped and casefolded, is a vowel when it
///    is one of a, i, u, e, o and a consonant in every other case, digits and
///    punctuation included.
ErrorType ClassifyEdit(const EditOp &op);

// Every non-match op counted once, so Total() == alignment.Edits().
ErrorBreakdown ClassifyErrors(const AlignmentResult &alignment);

}  // namespace snrkit

#endif  // SNRKIT_TEXT_ERROR_TYPOLOGY_H_
