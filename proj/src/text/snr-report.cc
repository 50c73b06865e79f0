// text/snr-report.cc

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

#include "snrkit/text/snr-report.h"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <set>
#include <thread>
#include <unordered_map>

#include "snrkit/base/csv.h"
#include "snrkit/base/snrkit-error.h"

namespace snrkit {

const char kSnrAggregationNote[] =
    "+SNR is the mean of per-level corpus WER over levels > 0 dB; -SNR over levels < 0 dB; "
    "0 dB is reported separately and belongs to neither";

ScoringInput ParseScoringRecords(std::istream &in) {
  ScoringInput input;
  std::string text;
  size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(text);
      ScoringRecord r;
      r.id = j.at("id").get<std::string>();
      r.ref = j.at("ref").get<std::string>();
      r.hyp = j.at("hyp").get<std::string>();
      if (j.contains("snr") && !j["snr"].is_null()) {
        const auto &snr = j["snr"];
        r.snr = snr.is_number_integer() ? SnrLevel::Decibels(snr.get<int>())
                                        : SnrLevel::Parse(snr.get<std::string>());
      }
      if (j.contains("condition") && !j["condition"].is_null()) r.condition = j["condition"].get<std::string>();
      input.records.push_back(std::move(r));
    } catch (const std::exception &e) {
      ++input.malformed;
      input.malformed_messages.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return input;
}

void TagFromPlan(const MixPlan &plan, std::vector<ScoringRecord> *records) {
  std::unordered_map<std::string, SnrLevel> levels;
  for (const auto &e : plan.entries) levels.emplace(e.utterance_id, e.snr);
  for (auto &r : *records) {
    if (r.snr) continue;
    const auto it = levels.find(r.id);
    if (it != levels.end()) r.snr = it->second;
  }
}

CorpusScore ScoreCorpus(const std::vector<ScoringRecord> &records, const ScoreOptions &options) {
  if (records.empty()) throw Error(ErrorCode::kEmptyInput, "no scoring records");
  if (options.casings.empty()) throw Error(ErrorCode::kInvalidArgument, "no casing requested");
  std::vector<const ScoringRecord *> sorted;
  for (const auto &r : records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const ScoringRecord *a, const ScoringRecord *b) {
    if (a->condition != b->condition) return a->condition < b->condition;
    if (a->id != b->id) return a->id < b->id;
    return a->snr < b->snr;
  });

  std::vector<std::optional<UtteranceScore>> results(sorted.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < sorted.size(); i = next++) {
      const ScoringRecord &r = *sorted[i];
      if (Normalize(r.ref, Casing::kCased, options.normalize).empty()) continue;
      UtteranceScore u{r.id, r.condition, r.snr, {}};
      for (Casing c : options.casings) u.scores[c] = ScorePair(r.ref, r.hyp, c, options.normalize);
      results[i] = std::move(u);
    }
  };
  const int workers = std::clamp(options.num_workers, 1, static_cast<int>(sorted.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto &t : threads) t.join();
  }

  CorpusScore score;
  score.casings = options.casings;
  for (Casing c : options.casings) score.totals[c];
  for (auto &result : results) {
    if (!result) {
      ++score.skipped_empty_reference;
      continue;
    }
    for (const auto &[casing, pair] : result->scores) {
      score.totals[casing].Add(pair);
      score.per_condition[result->condition][casing].Add(pair);
      if (result->snr) score.per_level[{result->condition, *result->snr}][casing].Add(pair);
    }
    score.utterances.push_back(std::move(*result));
  }
  return score;
}

namespace {

std::optional<double> Mean(const std::vector<double> &values) {
  if (values.empty()) return std::nullopt;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

std::string Cell(const std::optional<double> &v) { return v ? FormatFixed(*v, 2) : ""; }

nlohmann::json OptionalJson(const std::optional<double> &v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::vector<SnrTableRow> BuildSnrTable(const CorpusScore &score) {
  std::vector<SnrTableRow> rows;
  for (const auto &[condition, overall] : score.per_condition) {
    for (Casing casing : score.casings) {
      SnrTableRow row;
      row.condition = condition;
      row.casing = casing;
      if (const auto it = overall.find(casing); it != overall.end()) row.overall = it->second.WerPercent();
      std::vector<double> plus, minus;
      for (const auto &[key, by_casing] : score.per_level) {
        if (key.first != condition) continue;
        const auto it = by_casing.find(casing);
        if (it == by_casing.end()) continue;
        const std::optional<double> wer = it->second.WerPercent();
        const SnrLevel &level = key.second;
        row.wer_by_level[level] = wer;
        if (!wer) continue;
        if (level.is_clean())
          row.clean = wer;
        else if (level.db() > 0)
          plus.push_back(*wer);
        else if (level.db() < 0)
          minus.push_back(*wer);
        else
          row.zero_db = wer;
      }
      row.plus_snr = Mean(plus);
      row.minus_snr = Mean(minus);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void WriteSnrTableCsv(const CorpusScore &score, std::ostream &out) {
  const auto rows = BuildSnrTable(score);
  std::set<int> db_levels;
  for (const auto &[key, _] : score.per_level)
    if (!key.second.is_clean()) db_levels.insert(key.second.db());
  out << "# " << kSnrAggregationNote << '\n';
  std::vector<std::string> header = {"condition", "casing"};
  for (int db : db_levels) header.push_back(std::to_string(db));
  for (const char *name : {"clean", "+snr", "-snr", "0db", "all"}) header.push_back(name);
  out << CsvRow(header) << '\n';
  for (const auto &row : rows) {
    std::vector<std::string> fields = {row.condition, std::string(CasingName(row.casing))};
    for (int db : db_levels) {
      const auto it = row.wer_by_level.find(SnrLevel::Decibels(db));
      fields.push_back(it == row.wer_by_level.end() ? "" : Cell(it->second));
    }
    fields.push_back(Cell(row.clean));
    fields.push_back(Cell(row.plus_snr));
    fields.push_back(Cell(row.minus_snr));
    fields.push_back(Cell(row.zero_db));
    fields.push_back(Cell(row.overall));
    out << CsvRow(fields) << '\n';
  }
}

void WriteErrorTypeCsv(const CorpusScore &score, const std::string &label, std::ostream &out) {
  out << CsvRow({"casing", "error_type", label}) << '\n';
  for (Casing c : score.casings) {
    const ErrorBreakdown &e = score.totals.at(c).char_errors;
    const std::string casing(CasingName(c));
    out << CsvRow({casing, "space", std::to_string(e.space)}) << '\n';
    out << CsvRow({casing, "consonant", std::to_string(e.consonant)}) << '\n';
    out << CsvRow({casing, "vowel", std::to_string(e.vowel)}) << '\n';
    out << CsvRow({casing, "diacritics", std::to_string(e.diacritics)}) << '\n';
  }
  if (score.totals.count(Casing::kCased) && score.totals.count(Casing::kUncased)) {
    const auto r = ReductionPercent(static_cast<double>(score.totals.at(Casing::kCased).char_errors.Total()),
                                    static_cast<double>(score.totals.at(Casing::kUncased).char_errors.Total()));
    out << CsvRow({"", "reduction_percent", r ? FormatFixed(*r, 2) : "n/a"}) << '\n';
  }
}

void WriteWordEditCsv(const CorpusScore &score, const std::string &label, std::ostream &out) {
  out << CsvRow({"casing", "edit_type", label}) << '\n';
  for (Casing c : score.casings) {
    const EditCounts &w = score.totals.at(c).words;
    const std::string casing(CasingName(c));
    out << CsvRow({casing, "insertion", std::to_string(w.insertions)}) << '\n';
    out << CsvRow({casing, "deletion", std::to_string(w.deletions)}) << '\n';
    out << CsvRow({casing, "substitution", std::to_string(w.substitutions)}) << '\n';
  }
  if (score.totals.count(Casing::kCased) && score.totals.count(Casing::kUncased)) {
    const auto r = ReductionPercent(static_cast<double>(score.totals.at(Casing::kCased).words.Edits()),
                                    static_cast<double>(score.totals.at(Casing::kUncased).words.Edits()));
    out << CsvRow({"", "reduction_percent", r ? FormatFixed(*r, 2) : "n/a"}) << '\n';
  }
}

nlohmann::json CorpusScoreToJson(const CorpusScore &score, const std::string &label) {
  nlohmann::json j;
  j["label"] = label;
  j["scale"] = "percent";
  j["snr_aggregation"] = kSnrAggregationNote;
  j["skipped_empty_reference"] = score.skipped_empty_reference;
  j["malformed_records"] = score.malformed;
  j["corpus"] = nlohmann::json::object();
  for (const auto &[casing, totals] : score.totals)
    j["corpus"][std::string(CasingName(casing))] = ScoreTotalsToJson(totals);
  if (score.totals.count(Casing::kCased) && score.totals.count(Casing::kUncased)) {
    const auto &cased = score.totals.at(Casing::kCased);
    const auto &uncased = score.totals.at(Casing::kUncased);
    const auto chars = ReductionPercent(static_cast<double>(cased.char_errors.Total()),
                                        static_cast<double>(uncased.char_errors.Total()));
    const auto words = ReductionPercent(static_cast<double>(cased.words.Edits()),
                                        static_cast<double>(uncased.words.Edits()));
    j["reduction"] = {{"char_edits_percent", OptionalJson(chars)},
                      {"word_edits_percent", OptionalJson(words)},
                      {"char_not_applicable", !chars.has_value()},
                      {"word_not_applicable", !words.has_value()}};
  }
  j["per_snr"] = nlohmann::json::array();
  for (const auto &row : BuildSnrTable(score)) {
    nlohmann::json r;
    r["condition"] = row.condition;
    r["casing"] = CasingName(row.casing);
    r["levels"] = nlohmann::json::object();
    for (const auto &[level, wer] : row.wer_by_level) r["levels"][level.Label()] = OptionalJson(wer);
    r["clean"] = OptionalJson(row.clean);
    r["plus_snr"] = OptionalJson(row.plus_snr);
    r["minus_snr"] = OptionalJson(row.minus_snr);
    r["zero_db"] = OptionalJson(row.zero_db);
    r["all"] = OptionalJson(row.overall);
    j["per_snr"].push_back(std::move(r));
  }
  j["utterances"] = nlohmann::json::array();
  for (const auto &u : score.utterances) {
    nlohmann::json e;
    e["id"] = u.id;
    if (!u.condition.empty()) e["condition"] = u.condition;
    e["snr"] = u.snr ? nlohmann::json(u.snr->Label()) : nlohmann::json(nullptr);
    for (const auto &[casing, pair] : u.scores) {
      ScoreTotals one;
      one.Add(pair);
      auto js = ScoreTotalsToJson(one);
      js.erase("pairs");
      e[std::string(CasingName(casing))] = std::move(js);
    }
    j["utterances"].push_back(std::move(e));
  }
  return j;
}

}  // namespace snrkit
