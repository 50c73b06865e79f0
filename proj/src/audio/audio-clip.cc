// audio/audio-clip.cc

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

#include "snrkit/audio/audio-clip.h"

#include <cmath>
#include <string>

#include "snrkit/base/snrkit-error.h"

namespace snrkit {

AudioClip::AudioClip(std::vector<double> samples, int sample_rate_hz)
    : samples_(std::move(samples)), sample_rate_hz_(sample_rate_hz) {
  if (sample_rate_hz_ <= 0)
    throw Error(ErrorCode::kInvalidArgument,
                "sample rate must be positive, got " + std::to_string(sample_rate_hz_));
  for (size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i]))
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite sample at index " + std::to_string(i));
  }
}

AudioClip AudioClip::Scaled(double gain) const {
  std::vector<double> out(samples_);
  for (double &s : out) s *= gain;
  return AudioClip(std::move(out), sample_rate_hz_);
}

double SumOfSquares(std::span<const double> samples) {
  double sum = 0.0, compensation = 0.0;
  for (double s : samples) {
    const double term = s * s;
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      compensation += (sum - t) + term;
    else
      compensation += (term - t) + sum;
    sum = t;
  }
  return sum + compensation;
}

EnergyStats ComputeEnergyStats(const AudioClip &clip) {
  if (clip.empty()) throw Error(ErrorCode::kEmptyInput, "energy of an empty clip");
  EnergyStats stats;
  stats.energy = SumOfSquares(clip.samples());
  stats.rms = std::sqrt(stats.energy / static_cast<double>(clip.size()));
  for (double s : clip.samples()) stats.peak = std::max(stats.peak, std::abs(s));
  return stats;
}

double MeasureSnr(const AudioClip &clean, const AudioClip &noisy) {
  if (clean.size() != noisy.size())
    throw Error(ErrorCode::kShapeMismatch,
                "length mismatch: " + std::to_string(clean.size()) + " vs " +
                    std::to_string(noisy.size()));
  if (clean.sample_rate_hz() != noisy.sample_rate_hz())
    throw Error(ErrorCode::kShapeMismatch,
                "sample rate mismatch: " + std::to_string(clean.sample_rate_hz()) +
                    " vs " + std::to_string(noisy.sample_rate_hz()));
  if (clean.empty()) throw Error(ErrorCode::kEmptyInput, "SNR of empty clips");
  std::vector<double> residual(clean.size());
  auto c = clean.samples();
  auto n = noisy.samples();
  for (size_t i = 0; i < residual.size(); ++i) residual[i] = n[i] - c[i];
  const double noise_energy = SumOfSquares(residual);
  if (noise_energy == 0.0)
    throw Error(ErrorCode::kNoNoisePresent, "no noise present: noisy equals clean");
  return 10.0 * std::log10(SumOfSquares(c) / noise_energy);
}

}  // namespace snrkit
