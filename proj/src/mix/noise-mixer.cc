// mix/noise-mixer.cc

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

#include "snrkit/mix/noise-mixer.h"

#include <cmath>
#include <string>
#include <vector>

#include "snrkit/base/snrkit-error.h"

namespace snrkit {

double ComputeAlpha(double clean_energy, double noise_energy, double snr_db) {
  if (!(noise_energy > 0.0)) throw Error(ErrorCode::kSilentNoise, "silent noise clip");
  if (!(clean_energy > 0.0)) throw Error(ErrorCode::kSilentUtterance, "silent utterance");
  return std::sqrt(std::pow(10.0, -snr_db / 10.0) * (clean_energy / noise_energy));
}

double ComputeAlpha(const AudioClip &clean, const AudioClip &noise, double snr_db) {
  if (clean.empty() || noise.empty())
    throw Error(ErrorCode::kEmptyInput, "alpha of an empty clip");
  return ComputeAlpha(SumOfSquares(clean.samples()), SumOfSquares(noise.samples()), snr_db);
}

AudioClip AdaptNoise(const AudioClip &noise, size_t offset, size_t length) {
  if (noise.empty()) throw Error(ErrorCode::kEmptyInput, "empty noise clip");
  std::vector<double> out(length);
  auto src = noise.samples();
  size_t pos = offset % src.size();
  for (size_t i = 0; i < length; ++i) {
    out[i] = src[pos];
    if (++pos == src.size()) pos = 0;
  }
  return AudioClip(std::move(out), noise.sample_rate_hz());
}

AudioClip MixAtSnr(const AudioClip &clean, const AudioClip &noise, SnrLevel snr,
                   size_t offset) {
  if (snr.is_clean()) return clean;
  if (clean.sample_rate_hz() != noise.sample_rate_hz())
    throw Error(ErrorCode::kShapeMismatch,
                "sample rate mismatch: speech " + std::to_string(clean.sample_rate_hz()) +
                    " Hz, noise " + std::to_string(noise.sample_rate_hz()) + " Hz");
  if (clean.empty()) throw Error(ErrorCode::kEmptyInput, "empty utterance");
  const AudioClip segment = AdaptNoise(noise, offset, clean.size());
  const double alpha = ComputeAlpha(clean, segment, snr.db());
  std::vector<double> out(clean.size());
  auto c = clean.samples();
  auto n = segment.samples();
  for (size_t i = 0; i < out.size(); ++i) out[i] = c[i] + alpha * n[i];
  return AudioClip(std::move(out), clean.sample_rate_hz());
}

}  // namespace snrkit
