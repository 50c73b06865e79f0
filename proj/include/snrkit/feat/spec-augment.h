// snrkit/feat/spec-augment.h

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

#ifndef SNRKIT_FEAT_SPEC_AUGMENT_H_
#define SNRKIT_FEAT_SPEC_AUGMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "snrkit/feat/log-mel.h"

namespace snrkit {

struct SpecAugmentConfig {
  double time_prob = 0.0;
  int time_len = 0;  // frames
  int time_min = 0;  // minimum number of time masks
  double freq_prob = 0.0;
  int freq_len = 0;  // mel bins
  int freq_min = 0;
  int label = -1;    // preset id, -1 for a custom configuration
  std::string description;

  friend bool operator==(const SpecAugmentConfig &, const SpecAugmentConfig &) = default;
};

constexpr int kNumSpecAugmentPresets = 11;
// Preset 9, frequency-heavy mix, is the configuration used for the reported
// SpecAugment results.
constexpr int kRecommendedSpecAugmentPreset = 9;

// Presets 0..10; throws kInvalidArgument otherwise.
SpecAugmentConfig SpecAugmentPreset(int id);

// Throws kInvalidArgument on negative lengths/counts or probabilities outside [0, 1].
void ValidateSpecAugmentConfig(const SpecAugmentConfig &config);

// max(min, round(prob * dim / len)) when prob > 0 and len > 0, else 0.
int NumMasks(double prob, int len, int min_count, size_t dim);

struct Mask {
  size_t start = 0;
  size_t width = 0;
};

struct SpecAugmentResult {
  FeatureMatrix features;
  std::vector<Mask> time_masks;
  std::vector<Mask> freq_masks;
  double masked_fraction = 0.0;  // masked cells / all cells
  // A mask length reached the axis size, so the whole axis could be masked.
  bool axis_saturated = false;
};

/// Time and frequency masking.
///
/// Per axis the mask count is NumMasks(prob, len, min, dim). Widths are drawn
/// uniformly from [1, min(len, dim)]. When the masks fit with at least one
/// unmasked cell between neighbours they are placed without overlap (the
/// remaining free cells are split into gaps at uniformly drawn cut points);
/// otherwise each start is drawn independently and masks may overlap.
/// Masked cells take the pre-masking matrix minimum; every other cell is
/// copied bit-for-bit. Deterministic in (features, config, seed).
SpecAugmentResult ApplySpecAugment(const FeatureMatrix &features, const SpecAugmentConfig &config,
                                   uint64_t seed);

nlohmann::json SpecAugmentConfigToJson(const SpecAugmentConfig &config);

}  // namespace snrkit

#endif  // SNRKIT_FEAT_SPEC_AUGMENT_H_
