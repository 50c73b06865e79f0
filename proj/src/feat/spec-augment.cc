// feat/spec-augment.cc

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

#include "snrkit/feat/spec-augment.h"

#include <algorithm>
#include <cmath>

#include "snrkit/base/random.h"
#include "snrkit/base/snrkit-error.h"

namespace snrkit {

SpecAugmentConfig SpecAugmentPreset(int id) {
  // time prob/len/min, freq prob/len/min
  static const SpecAugmentConfig kPresets[kNumSpecAugmentPresets] = {
      {0.00, 0, 0, 0.00, 0, 0, 0, "Baseline (no SpecAugment)"},
      {0.05, 10, 2, 0.00, 0, 0, 1, "Light Time Masking Only"},
      {0.10, 15, 2, 0.00, 0, 0, 2, "Medium Time Masking Only"},
      {0.20, 20, 3, 0.00, 0, 0, 3, "Heavy Time Masking Only"},
      {0.00, 0, 0, 0.05, 10, 1, 4, "Light Frequency Masking Only"},
      {0.00, 0, 0, 0.10, 15, 2, 5, "Medium Frequency Masking Only"},
      {0.05, 10, 2, 0.05, 10, 1, 6, "Balanced Light (Time + Freq)"},
      {0.10, 12, 2, 0.10, 12, 2, 7, "Balanced Medium (Time + Freq)"},
      {0.15, 15, 3, 0.05, 8, 1, 8, "Time-Heavy Mix"},
      {0.05, 8, 1, 0.15, 15, 3, 9, "Frequency-Heavy Mix"},
      {0.20, 20, 3, 0.15, 18, 3, 10, "Aggressive (Heavy Time + Freq)"},
  };
  if (id < 0 || id >= kNumSpecAugmentPresets)
    throw Error(ErrorCode::kInvalidArgument,
                "SpecAugment preset must be in 0..10, got " + std::to_string(id));
  return kPresets[id];
}

void ValidateSpecAugmentConfig(const SpecAugmentConfig &c) {
  auto bad_prob = [](double p) { return !(p >= 0.0 && p <= 1.0); };
  if (bad_prob(c.time_prob) || bad_prob(c.freq_prob))
    throw Error(ErrorCode::kInvalidArgument, "masking probabilities must lie in [0, 1]");
  if (c.time_len < 0 || c.freq_len < 0 || c.time_min < 0 || c.freq_min < 0)
    throw Error(ErrorCode::kInvalidArgument, "mask lengths and counts must be non-negative");
}

int NumMasks(double prob, int len, int min_count, size_t dim) {
  if (!(prob > 0.0) || len <= 0) return 0;
  const long coverage = std::lround(prob * static_cast<double>(dim) / len);
  return static_cast<int>(std::max<long>(min_count, coverage));
}

namespace {

std::vector<Mask> DrawMasks(Rng &rng, int count, int len, size_t dim) {
  std::vector<Mask> masks;
  if (count <= 0 || dim == 0) return masks;
  const size_t max_width = std::min<size_t>(static_cast<size_t>(len), dim);
  size_t total = 0;
  for (int i = 0; i < count; ++i) {
    const size_t w = static_cast<size_t>(rng.UniformInt(1, static_cast<int64_t>(max_width)));
    masks.push_back({0, w});
    total += w;
  }
  const size_t separators = static_cast<size_t>(count - 1);
  if (total + separators <= dim) {
    const size_t free_cells = dim - total - separators;
    std::vector<size_t> cuts(masks.size());
    for (auto &c : cuts) c = static_cast<size_t>(rng.UniformInt(0, static_cast<int64_t>(free_cells)));
    std::sort(cuts.begin(), cuts.end());
    size_t used = 0;
    for (size_t i = 0; i < masks.size(); ++i) {
      masks[i].start = cuts[i] + used;
      used += masks[i].width + 1;
    }
  } else {
    for (auto &m : masks) m.start = static_cast<size_t>(rng.UniformInt(0, static_cast<int64_t>(dim - m.width)));
  }
  return masks;
}

}  // namespace

SpecAugmentResult ApplySpecAugment(const FeatureMatrix &features, const SpecAugmentConfig &config,
                                   uint64_t seed) {
  ValidateSpecAugmentConfig(config);
  SpecAugmentResult result;
  result.features = features;
  if (features.empty()) throw Error(ErrorCode::kEmptyInput, "SpecAugment on an empty feature matrix");
  const size_t frames = features.frame_count(), bins = features.bin_count();

  const int time_count = NumMasks(config.time_prob, config.time_len, config.time_min, frames);
  const int freq_count = NumMasks(config.freq_prob, config.freq_len, config.freq_min, bins);
  result.axis_saturated = (time_count > 0 && static_cast<size_t>(config.time_len) >= frames) ||
                          (freq_count > 0 && static_cast<size_t>(config.freq_len) >= bins);
  if (time_count == 0 && freq_count == 0) return result;

  Rng time_rng(DeriveSeed(seed, "time-masks"));
  Rng freq_rng(DeriveSeed(seed, "freq-masks"));
  result.time_masks = DrawMasks(time_rng, time_count, config.time_len, frames);
  result.freq_masks = DrawMasks(freq_rng, freq_count, config.freq_len, bins);

  std::vector<char> frame_masked(frames, 0), bin_masked(bins, 0);
  for (const auto &m : result.time_masks) std::fill_n(frame_masked.begin() + m.start, m.width, 1);
  for (const auto &m : result.freq_masks) std::fill_n(bin_masked.begin() + m.start, m.width, 1);

  const float fill = features.MinValue();
  size_t masked = 0;
  for (size_t f = 0; f < frames; ++f) {
    for (size_t b = 0; b < bins; ++b) {
      if (frame_masked[f] || bin_masked[b]) {
        result.features.at(f, b) = fill;
        ++masked;
      }
    }
  }
  result.masked_fraction = static_cast<double>(masked) / static_cast<double>(frames * bins);
  return result;
}

nlohmann::json SpecAugmentConfigToJson(const SpecAugmentConfig &c) {
  return {{"preset", c.label},
          {"description", c.description},
          {"time_prob", c.time_prob},
          {"time_len", c.time_len},
          {"time_min", c.time_min},
          {"freq_prob", c.freq_prob},
          {"freq_len", c.freq_len},
          {"freq_min", c.freq_min}};
}

}  // namespace snrkit
