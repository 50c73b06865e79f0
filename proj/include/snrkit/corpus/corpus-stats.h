// snrkit/corpus/corpus-stats.h

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

#ifndef SNRKIT_CORPUS_CORPUS_STATS_H_
#define SNRKIT_CORPUS_CORPUS_STATS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "snrkit/corpus/manifest.h"

namespace snrkit {

struct SpeakerOverlapReport {
  std::vector<std::string> overlapping_speakers;  // sorted
  bool ok() const { return overlapping_speakers.empty(); }
};

// Speakers present in both the train and the test split.
SpeakerOverlapReport CheckSpeakerDisjoint(const Manifest &manifest);

struct SplitStats {
  size_t utterances = 0;
  size_t unique_speakers = 0;
  // Present only when every utterance of the split carries a duration.
  std::optional<double> total_duration_seconds;
  // attribute key -> value -> utterance count
  std::map<std::string, std::map<std::string, size_t>> attributes;
};

struct CorpusStats {
  SplitStats train;
  SplitStats test;
  size_t unique_speakers = 0;
};

CorpusStats ComputeCorpusStats(const Manifest &manifest);
nlohmann::json CorpusStatsToJson(const CorpusStats &stats);

}  // namespace snrkit

#endif  // SNRKIT_CORPUS_CORPUS_STATS_H_
