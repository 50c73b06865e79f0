// corpus/corpus-stats.cc

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

#include "snrkit/corpus/corpus-stats.h"

#include <set>

namespace snrkit {

SpeakerOverlapReport CheckSpeakerDisjoint(const Manifest &manifest) {
  std::set<std::string> train, test;
  for (const auto &e : manifest.entries())
    (e.split == Split::kTrain ? train : test).insert(e.speaker_id);
  SpeakerOverlapReport report;
  for (const auto &speaker : train)
    if (test.count(speaker)) report.overlapping_speakers.push_back(speaker);
  return report;
}

CorpusStats ComputeCorpusStats(const Manifest &manifest) {
  CorpusStats stats;
  std::set<std::string> train_speakers, test_speakers, all_speakers;
  bool train_durations = true, test_durations = true;
  double train_seconds = 0.0, test_seconds = 0.0;
  for (const auto &e : manifest.entries()) {
    const bool is_train = e.split == Split::kTrain;
    SplitStats &split = is_train ? stats.train : stats.test;
    ++split.utterances;
    (is_train ? train_speakers : test_speakers).insert(e.speaker_id);
    all_speakers.insert(e.speaker_id);
    if (e.duration_seconds)
      (is_train ? train_seconds : test_seconds) += *e.duration_seconds;
    else
      (is_train ? train_durations : test_durations) = false;
    for (const auto &[key, value] : e.attributes) ++split.attributes[key][value];
  }
  stats.train.unique_speakers = train_speakers.size();
  stats.test.unique_speakers = test_speakers.size();
  stats.unique_speakers = all_speakers.size();
  if (train_durations && stats.train.utterances > 0) stats.train.total_duration_seconds = train_seconds;
  if (test_durations && stats.test.utterances > 0) stats.test.total_duration_seconds = test_seconds;
  return stats;
}

namespace {
nlohmann::json SplitToJson(const SplitStats &s) {
  nlohmann::json j;
  j["utterances"] = s.utterances;
  j["unique_speakers"] = s.unique_speakers;
  j["total_duration_seconds"] =
      s.total_duration_seconds ? nlohmann::json(*s.total_duration_seconds) : nlohmann::json(nullptr);
  j["attributes"] = s.attributes;
  return j;
}
}  // namespace

nlohmann::json CorpusStatsToJson(const CorpusStats &stats) {
  return {{"train", SplitToJson(stats.train)},
          {"test", SplitToJson(stats.test)},
          {"unique_speakers", stats.unique_speakers}};
}

}  // namespace snrkit
