// snrkit/feat/augment-batch.h

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

#ifndef SNRKIT_FEAT_AUGMENT_BATCH_H_
#define SNRKIT_FEAT_AUGMENT_BATCH_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "snrkit/corpus/manifest.h"
#include "snrkit/feat/log-mel.h"
#include "snrkit/feat/spec-augment.h"

namespace snrkit {

struct AugmentItem {
  std::string utterance_id;
  std::string feature_file;  // relative to the output directory
  size_t frame_count = 0;
  size_t bin_count = 0;
  size_t time_masks = 0;
  size_t freq_masks = 0;
  double masked_fraction = 0.0;
  bool ok = true;
  std::string message;
};

struct AugmentReport {
  std::vector<AugmentItem> items;  // sorted by utterance id
  size_t failed = 0;
  double MeanMaskedFraction() const;  // over successful items; 0 when none
};

/// Extracts log-mel features for every manifest entry, masks them with a
/// per-item seed DeriveSeed(seed, utterance_id) and writes
/// <utterance_id>.feat plus an index.json sidecar into out_dir. Unreadable
/// audio is recorded per item. Output does not depend on num_workers or on
/// manifest order.
AugmentReport AugmentBatch(const Manifest &manifest, const SpecAugmentConfig &config, uint64_t seed,
                           const std::filesystem::path &out_dir, const MelOptions &mel = {},
                           int num_workers = 1);

nlohmann::json AugmentReportToJson(const AugmentReport &report, const SpecAugmentConfig &config,
                                   uint64_t seed);

}  // namespace snrkit

#endif  // SNRKIT_FEAT_AUGMENT_BATCH_H_
