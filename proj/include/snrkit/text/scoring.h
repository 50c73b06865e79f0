// snrkit/text/scoring.h

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

#ifndef SNRKIT_TEXT_SCORING_H_
#define SNRKIT_TEXT_SCORING_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "snrkit/text/error-typology.h"
#include "snrkit/text/normalize.h"

namespace snrkit {

struct EditCounts {
  size_t substitutions = 0;
  size_t deletions = 0;
  size_t insertions = 0;
  size_t ref_length = 0;

  size_t Edits() const { return substitutions + deletions + insertions; }
  EditCounts &operator+=(const EditCounts &other);
  friend bool operator==(const EditCounts &, const EditCounts &) = default;
};

EditCounts CountsOf(const AlignmentResult &alignment);

// Word and character scores of one pair under one casing.
struct PairScore {
  EditCounts words;
  EditCounts chars;
  ErrorBreakdown char_errors;
};

// Throws kEmptyReference when the normalized reference is empty.
PairScore ScorePair(const std::string &ref, const std::string &hyp, Casing casing,
                    const NormalizeOptions &options = {});

struct ScoreTotals {
  EditCounts words;
  EditCounts chars;
  ErrorBreakdown char_errors;
  size_t pairs = 0;

  void Add(const PairScore &score);
  // Ratios on the x100 scale; nullopt when the reference total is 0.
  std::optional<double> WerPercent() const;
  std::optional<double> CerPercent() const;
};

// 100 * (cased - uncased) / cased; nullopt (not applicable) when cased == 0.
std::optional<double> ReductionPercent(double cased_total, double uncased_total);

struct CasedUncasedReport {
  ScoreTotals cased;
  ScoreTotals uncased;
  std::optional<double> char_reduction_percent;  // over S+D+I of characters
  std::optional<double> word_reduction_percent;  // over S+D+I of words
  size_t skipped_empty_reference = 0;
};

/// Scores every pair under both casings. Pairs whose normalized reference is
/// empty are skipped and counted. Throws kEmptyInput for an empty list.
CasedUncasedReport CompareCasedUncased(const std::vector<std::pair<std::string, std::string>> &pairs,
                                       const NormalizeOptions &options = {});

nlohmann::json ScoreTotalsToJson(const ScoreTotals &totals);

}  // namespace snrkit

#endif  // SNRKIT_TEXT_SCORING_H_
