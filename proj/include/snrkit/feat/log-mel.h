// snrkit/feat/log-mel.h

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

#ifndef SNRKIT_FEAT_LOG_MEL_H_
#define SNRKIT_FEAT_LOG_MEL_H_

#include <array>
#include <span>
#include <vector>

#include "snrkit/audio/audio-clip.h"

namespace snrkit {

/// Row-major [frame][bin] grid of log mel energies.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(size_t frame_count, size_t bin_count, double hop_seconds);
  FeatureMatrix(size_t frame_count, size_t bin_count, double hop_seconds, std::vector<float> values);

  size_t frame_count() const { return frames_; }
  size_t bin_count() const { return bins_; }
  double hop_seconds() const { return hop_seconds_; }
  size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  float &at(size_t frame, size_t bin) { return values_[frame * bins_ + bin]; }
  float at(size_t frame, size_t bin) const { return values_[frame * bins_ + bin]; }
  std::span<const float> values() const { return values_; }
  std::span<float> mutable_values() { return values_; }

  float MinValue() const;

  friend bool operator==(const FeatureMatrix &, const FeatureMatrix &) = default;

 private:
  size_t frames_ = 0;
  size_t bins_ = 0;
  double hop_seconds_ = 0.0;
  std::vector<float> values_;
};

struct MelOptions {
  int sample_rate_hz = 16000;
  size_t window_samples = 400;  // 25 ms
  size_t hop_samples = 160;     // 10 ms
  size_t num_bins = 80;
  double low_hz = 0.0;
  double high_hz = 0.0;         // <= 0 means Nyquist
  double floor = 1e-10;
};

double HzToMel(double hz);
double MelToHz(double mel);

// 1 + floor((num_samples - window) / hop), or 0 when the clip is too short.
size_t NumFrames(size_t num_samples, size_t window, size_t hop);

/// Triangular filters equally spaced on the mel scale (mel = 2595 log10(1 +
/// f/700)), evaluated at the FFT bin centre frequencies.
class MelFilterbank {
 public:
  MelFilterbank(const MelOptions &options, size_t fft_size);

  size_t num_bins() const { return weights_.size(); }
  // Band edges of filter `bin` in Hz: {left, centre, right}.
  std::array<double, 3> BandHz(size_t bin) const;
  void Apply(std::span<const double> power, std::span<double> out) const;

 private:
  std::vector<double> edges_hz_;
  std::vector<size_t> first_fft_bin_;
  std::vector<std::vector<double>> weights_;
};

/// Hann-windowed frames, power spectrum over the next power of two >= window,
/// mel filterbank, then log(max(energy, floor)). Throws kInvalidArgument for a
/// clip shorter than one window or a sample-rate mismatch with `options`.
FeatureMatrix ComputeLogMel(const AudioClip &clip, const MelOptions &options = {});

}  // namespace snrkit

#endif  // SNRKIT_FEAT_LOG_MEL_H_
