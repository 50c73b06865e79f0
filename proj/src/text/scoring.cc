// text/scoring.cc

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

#include "snrkit/text/scoring.h"

#include "snrkit/base/snrkit-error.h"

namespace snrkit {

EditCounts &EditCounts::operator+=(const EditCounts &other) {
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  ref_length += other.ref_length;
  return *this;
}

EditCounts CountsOf(const AlignmentResult &a) {
  return {a.substitutions, a.deletions, a.insertions, a.ref_length};
}

PairScore ScorePair(const std::string &ref, const std::string &hyp, Casing casing,
                    const NormalizeOptions &options) {
  const NormalizedText r = Normalize(ref, casing, options);
  const NormalizedText h = Normalize(hyp, casing, options);
  if (r.empty()) throw Error(ErrorCode::kEmptyReference, "empty reference after normalization");
  PairScore score;
  score.words = CountsOf(WordAlign(r, h));
  const AlignmentResult chars = CharAlign(r, h);
  score.chars = CountsOf(chars);
  score.char_errors = ClassifyErrors(chars);
  return score;
}

void ScoreTotals::Add(const PairScore &score) {
  words += score.words;
  chars += score.chars;
  char_errors += score.char_errors;
  ++pairs;
}

std::optional<double> ScoreTotals::WerPercent() const {
  if (words.ref_length == 0) return std::nullopt;
  return 100.0 * static_cast<double>(words.Edits()) / static_cast<double>(words.ref_length);
}

std::optional<double> ScoreTotals::CerPercent() const {
  if (chars.ref_length == 0) return std::nullopt;
  return 100.0 * static_cast<double>(chars.Edits()) / static_cast<double>(chars.ref_length);
}

std::optional<double> ReductionPercent(double cased_total, double uncased_total) {
  if (cased_total == 0.0) return std::nullopt;
  return 100.0 * (cased_total - uncased_total) / cased_total;
}

CasedUncasedReport CompareCasedUncased(const std::vector<std::pair<std::string, std::string>> &pairs,
                                       const NormalizeOptions &options) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyInput, "no transcript pairs to compare");
  CasedUncasedReport report;
  for (const auto &[ref, hyp] : pairs) {
    if (Normalize(ref, Casing::kCased, options).empty()) {
      ++report.skipped_empty_reference;
      continue;
    }
    report.cased.Add(ScorePair(ref, hyp, Casing::kCased, options));
    report.uncased.Add(ScorePair(ref, hyp, Casing::kUncased, options));
  }
  report.char_reduction_percent =
      ReductionPercent(static_cast<double>(report.cased.char_errors.Total()),
                       static_cast<double>(report.uncased.char_errors.Total()));
  report.word_reduction_percent = ReductionPercent(static_cast<double>(report.cased.words.Edits()),
                                                   static_cast<double>(report.uncased.words.Edits()));
  return report;
}

namespace {
nlohmann::json OptionalToJson(const std::optional<double> &v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}
}  // namespace

nlohmann::json ScoreTotalsToJson(const ScoreTotals &t) {
  return {{"pairs", t.pairs},
          {"wer", OptionalToJson(t.WerPercent())},
          {"cer", OptionalToJson(t.CerPercent())},
          {"words",
           {{"substitutions", t.words.substitutions},
            {"deletions", t.words.deletions},
            {"insertions", t.words.insertions},
            {"ref_words", t.words.ref_length}}},
          {"chars",
           {{"substitutions", t.chars.substitutions},
            {"deletions", t.chars.deletions},
            {"insertions", t.chars.insertions},
            {"ref_chars", t.chars.ref_length}}},
          {"char_errors",
           {{"space", t.char_errors.space},
            {"vowel", t.char_errors.vowel},
            {"consonant", t.char_errors.consonant},
            {"diacritics", t.char_errors.diacritics}}}};
}

}  // namespace snrkit
