// snrkit/text/edit-alignment.h

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

#ifndef SNRKIT_TEXT_EDIT_ALIGNMENT_H_
#define SNRKIT_TEXT_EDIT_ALIGNMENT_H_

#include <string>
#include <vector>

#include "snrkit/text/normalize.h"

namespace snrkit {

enum class EditKind { kMatch, kSub, kDel, kIns };

struct EditOp {
  EditKind kind = EditKind::kMatch;
  std::string ref_unit;  // empty for kIns
  std::string hyp_unit;  // empty for kDel

  friend bool operator==(const EditOp &, const EditOp &) = default;
};

struct AlignmentResult {
  size_t substitutions = 0;
  size_t deletions = 0;
  size_t insertions = 0;
  size_t ref_length = 0;
  std::vector<EditOp> ops;  // left to right

  size_t Edits() const { return substitutions + deletions + insertions; }
  size_t Matches() const { return ref_length - substitutions - deletions; }
};

/// Minimal unit-cost edit alignment of two unit sequences. Among minimal
/// scripts the backtrace from the end prefers Match, then Sub, then Del, then
/// Ins, so the chosen script is deterministic.
AlignmentResult AlignSequences(const std::vector<std::string> &ref, const std::vector<std::string> &hyp);

// Whitespace-token alignment. Throws kCasingMismatch.
AlignmentResult WordAlign(const NormalizedText &ref, const NormalizedText &hyp);

// Unicode scalar value alignment. Throws kCasingMismatch.
AlignmentResult CharAlign(const NormalizedText &ref, const NormalizedText &hyp);

// (S + D + I) / N as a fraction; throws kEmptyReference when N = 0.
// Used for both WER (word alignment) and CER (character alignment).
double ErrorRate(const AlignmentResult &alignment);

}  // namespace snrkit

#endif  // SNRKIT_TEXT_EDIT_ALIGNMENT_H_
