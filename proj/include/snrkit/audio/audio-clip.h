// snrkit/audio/audio-clip.h

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

#ifndef SNRKIT_AUDIO_AUDIO_CLIP_H_
#define SNRKIT_AUDIO_AUDIO_CLIP_H_

#include <cstddef>
#include <span>
#include <vector>

namespace snrkit {

/// Mono PCM audio held as double-precision samples in nominal range [-1, 1].
/// The constructor enforces sample_rate_hz > 0 and finite samples; an empty
/// clip is representable but rejected by the energy and mixing operations.
class AudioClip {
 public:
  AudioClip() = default;
  AudioClip(std::vector<double> samples, int sample_rate_hz);

  std::span<const double> samples() const { return samples_; }
  int sample_rate_hz() const { return sample_rate_hz_; }
  size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  double duration_seconds() const {
    return static_cast<double>(samples_.size()) / sample_rate_hz_;
  }

  // Returns a copy with every sample multiplied by gain.
  AudioClip Scaled(double gain) const;

  friend bool operator==(const AudioClip &, const AudioClip &) = default;

 private:
  std::vector<double> samples_;
  int sample_rate_hz_ = 16000;
};

struct EnergyStats {
  double energy = 0.0;  // sum of squares
  double rms = 0.0;
  double peak = 0.0;    // max |sample|
};

// Compensated (Neumaier) sum of squares.
double SumOfSquares(std::span<const double> samples);

// Throws kEmptyInput for an empty clip.
EnergyStats ComputeEnergyStats(const AudioClip &clip);

/// SNR in dB of `noisy` relative to `clean`: 10 log10(E_clean / E_residual),
/// residual = noisy - clean. A zero residual throws kNoNoisePresent, which is
/// distinct from the kShapeMismatch thrown for length or rate mismatch.
double MeasureSnr(const AudioClip &clean, const AudioClip &noisy);

}  // namespace snrkit

#endif  // SNRKIT_AUDIO_AUDIO_CLIP_H_
