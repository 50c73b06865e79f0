// text/error-typology.cc

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

#include "snrkit/text/error-typology.h"

#include "snrkit/base/snrkit-error.h"
#include "snrkit/text/normalize.h"

namespace snrkit {

std::string_view ErrorTypeName(ErrorType type) {
  switch (type) {
    case ErrorType::kSpace: return "space";
    case ErrorType::kVowel: return "vowel";
    case ErrorType::kConsonant: return "consonant";
    case ErrorType::kDiacritics: return "diacritics";
  }
  return "";
}

void ErrorBreakdown::Add(ErrorType type) {
  switch (type) {
    case ErrorType::kSpace: ++space; break;
    case ErrorType::kVowel: ++vowel; break;
    case ErrorType::kConsonant: ++consonant; break;
    case ErrorType::kDiacritics: ++diacritics; break;
  }
}

ErrorBreakdown &ErrorBreakdown::operator+=(const ErrorBreakdown &other) {
  space += other.space;
  vowel += other.vowel;
  consonant += other.consonant;
  diacritics += other.diacritics;
  return *this;
}

ErrorType ClassifyEdit(const EditOp &op) {
  if (op.kind == EditKind::kMatch)
    throw Error(ErrorCode::kInvalidArgument, "a match is not an error");
  if (IsWhitespaceUnit(op.ref_unit) || IsWhitespaceUnit(op.hyp_unit)) return ErrorType::kSpace;
  if (op.kind == EditKind::kSub) {
    const std::string ref_base = StripDiacritics(op.ref_unit);
    if (!ref_base.empty() && ref_base == StripDiacritics(op.hyp_unit)) return ErrorType::kDiacritics;
  }
  const std::string &deciding = op.kind == EditKind::kIns ? op.hyp_unit : op.ref_unit;
  const std::string folded = CaseFold(StripDiacritics(deciding));
  if (folded == "a" || folded == "i" || folded == "u" || folded == "e" || folded == "o")
    return ErrorType::kVowel;
  return ErrorType::kConsonant;
}

ErrorBreakdown ClassifyErrors(const AlignmentResult &alignment) {
  ErrorBreakdown breakdown;
  for (const auto &op : alignment.ops)
    if (op.kind != EditKind::kMatch) breakdown.Add(ClassifyEdit(op));
  return breakdown;
}

}  // namespace snrkit
