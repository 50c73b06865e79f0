// snrkit/text/snr-report.h

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

#ifndef SNRKIT_TEXT_SNR_REPORT_H_
#define SNRKIT_TEXT_SNR_REPORT_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "snrkit/mix/mix-plan.h"
#include "snrkit/mix/snr-level.h"
#include "snrkit/text/scoring.h"

namespace snrkit {

// One line of a scoring file: {"id", "ref", "hyp", optional "snr", optional "condition"}.
struct ScoringRecord {
  std::string id;
  std::string ref;
  std::string hyp;
  std::optional<SnrLevel> snr;
  std::string condition;  // training-condition label; "" when untagged
};

struct ScoringInput {
  std::vector<ScoringRecord> records;
  size_t malformed = 0;
  std::vector<std::string> malformed_messages;  // "line N: ..."
};

// Malformed lines are skipped and counted, never fatal.
ScoringInput ParseScoringRecords(std::istream &in);

// Tags records lacking an SNR with the level their id has in `plan`.
void TagFromPlan(const MixPlan &plan, std::vector<ScoringRecord> *records);

struct UtteranceScore {
  std::string id;
  std::string condition;
  std::optional<SnrLevel> snr;
  std::map<Casing, PairScore> scores;
};

struct CorpusScore {
  std::vector<Casing> casings;
  std::vector<UtteranceScore> utterances;  // sorted by (condition, id, snr)
  std::map<Casing, ScoreTotals> totals;
  // (condition, level) -> casing -> totals, for SNR-tagged records only.
  std::map<std::pair<std::string, SnrLevel>, std::map<Casing, ScoreTotals>> per_level;
  // condition -> casing -> totals, tagged or not.
  std::map<std::string, std::map<Casing, ScoreTotals>> per_condition;
  size_t skipped_empty_reference = 0;
  size_t malformed = 0;
};

struct ScoreOptions {
  std::vector<Casing> casings = {Casing::kCased, Casing::kUncased};
  NormalizeOptions normalize;
  int num_workers = 1;
};

/// Scores every record under each requested casing. Records whose normalized
/// reference is empty are skipped and counted. Results are reduced in sorted
/// order, so they do not depend on num_workers. Throws kEmptyInput when
/// `records` is empty.
CorpusScore ScoreCorpus(const std::vector<ScoringRecord> &records, const ScoreOptions &options);

struct SnrTableRow {
  std::string condition;
  Casing casing = Casing::kCased;
  std::map<SnrLevel, std::optional<double>> wer_by_level;  // x100 scale
  std::optional<double> clean;
  std::optional<double> plus_snr;   // mean over levels > 0 dB
  std::optional<double> minus_snr;  // mean over levels < 0 dB
  std::optional<double> zero_db;
  std::optional<double> overall;    // every record of the condition
};

std::vector<SnrTableRow> BuildSnrTable(const CorpusScore &score);

extern const char kSnrAggregationNote[];

// One row per (condition, casing); dB levels ascending, then clean, +snr, -snr, 0db, all.
void WriteSnrTableCsv(const CorpusScore &score, std::ostream &out);
// Character error types per casing plus the reduction row; one value column named `label`.
void WriteErrorTypeCsv(const CorpusScore &score, const std::string &label, std::ostream &out);
// Word insertions / deletions / substitutions per casing plus the reduction row.
void WriteWordEditCsv(const CorpusScore &score, const std::string &label, std::ostream &out);

nlohmann::json CorpusScoreToJson(const CorpusScore &score, const std::string &label);

}  // namespace snrkit

#endif  // SNRKIT_TEXT_SNR_REPORT_H_
