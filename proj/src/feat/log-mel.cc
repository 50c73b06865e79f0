// feat/log-mel.cc

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

#include "snrkit/feat/log-mel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "snrkit/base/snrkit-error.h"
#include "snrkit/feat/fft.h"

namespace snrkit {

FeatureMatrix::FeatureMatrix(size_t frame_count, size_t bin_count, double hop_seconds)
    : frames_(frame_count), bins_(bin_count), hop_seconds_(hop_seconds),
      values_(frame_count * bin_count, 0.0f) {}

FeatureMatrix::FeatureMatrix(size_t frame_count, size_t bin_count, double hop_seconds,
                             std::vector<float> values)
    : frames_(frame_count), bins_(bin_count), hop_seconds_(hop_seconds), values_(std::move(values)) {
  if (values_.size() != frames_ * bins_)
    throw Error(ErrorCode::kShapeMismatch, "feature values do not match frame_count x bin_count");
}

float FeatureMatrix::MinValue() const {
  if (values_.empty()) throw Error(ErrorCode::kEmptyInput, "minimum of an empty feature matrix");
  return *std::min_element(values_.begin(), values_.end());
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

size_t NumFrames(size_t num_samples, size_t window, size_t hop) {
  if (window == 0 || hop == 0 || num_samples < window) return 0;
  return 1 + (num_samples - window) / hop;
}

MelFilterbank::MelFilterbank(const MelOptions &options, size_t fft_size) {
  const double nyquist = options.sample_rate_hz / 2.0;
  const double high = options.high_hz > 0.0 ? std::min(options.high_hz, nyquist) : nyquist;
  if (options.num_bins == 0 || options.low_hz < 0.0 || options.low_hz >= high)
    throw Error(ErrorCode::kInvalidArgument, "invalid mel band limits");
  const double mel_low = HzToMel(options.low_hz), mel_high = HzToMel(high);
  const double step = (mel_high - mel_low) / static_cast<double>(options.num_bins + 1);
  edges_hz_.resize(options.num_bins + 2);
  for (size_t i = 0; i < edges_hz_.size(); ++i) edges_hz_[i] = MelToHz(mel_low + step * static_cast<double>(i));

  const size_t num_fft_bins = fft_size / 2 + 1;
  const double hz_per_bin = static_cast<double>(options.sample_rate_hz) / static_cast<double>(fft_size);
  weights_.resize(options.num_bins);
  first_fft_bin_.assign(options.num_bins, 0);
  for (size_t b = 0; b < options.num_bins; ++b) {
    const double left = mel_low + step * static_cast<double>(b);
    const double centre = left + step, right = centre + step;
    bool started = false;
    for (size_t k = 0; k < num_fft_bins; ++k) {
      const double mel = HzToMel(hz_per_bin * static_cast<double>(k));
      double w = 0.0;
      if (mel > left && mel <= centre)
        w = (mel - left) / (centre - left);
      else if (mel > centre && mel < right)
        w = (right - mel) / (right - centre);
      if (w > 0.0) {
        if (!started) {
          first_fft_bin_[b] = k;
          started = true;
        }
        weights_[b].resize(k - first_fft_bin_[b] + 1, 0.0);
        weights_[b][k - first_fft_bin_[b]] = w;
      }
    }
  }
}

std::array<double, 3> MelFilterbank::BandHz(size_t bin) const {
  return {edges_hz_[bin], edges_hz_[bin + 1], edges_hz_[bin + 2]};
}

void MelFilterbank::Apply(std::span<const double> power, std::span<double> out) const {
  for (size_t b = 0; b < weights_.size(); ++b) {
    double sum = 0.0;
    const auto &w = weights_[b];
    for (size_t i = 0; i < w.size(); ++i) sum += w[i] * power[first_fft_bin_[b] + i];
    out[b] = sum;
  }
}

FeatureMatrix ComputeLogMel(const AudioClip &clip, const MelOptions &options) {
  if (clip.sample_rate_hz() != options.sample_rate_hz)
    throw Error(ErrorCode::kInvalidArgument,
                "clip sample rate " + std::to_string(clip.sample_rate_hz()) +
                    " Hz does not match feature rate " + std::to_string(options.sample_rate_hz) + " Hz");
  if (options.window_samples == 0 || options.hop_samples == 0)
    throw Error(ErrorCode::kInvalidArgument, "window and hop must be positive");
  if (!(options.floor > 0.0)) throw Error(ErrorCode::kInvalidArgument, "log floor must be positive");
  const size_t frames = NumFrames(clip.size(), options.window_samples, options.hop_samples);
  if (frames == 0)
    throw Error(ErrorCode::kInvalidArgument,
                "clip of " + std::to_string(clip.size()) + " samples is shorter than one window (" +
                    std::to_string(options.window_samples) + ")");

  const size_t window = options.window_samples;
  const Fft fft(NextPowerOfTwo(window));
  const MelFilterbank bank(options, fft.size());
  std::vector<double> hann(window);
  for (size_t i = 0; i < window; ++i)
    hann[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(i) / static_cast<double>(window));

  FeatureMatrix out(frames, options.num_bins,
                    static_cast<double>(options.hop_samples) / options.sample_rate_hz);
  std::vector<double> frame(window), power, mel(options.num_bins);
  auto samples = clip.samples();
  const double log_floor = std::log(options.floor);
  for (size_t f = 0; f < frames; ++f) {
    const size_t start = f * options.hop_samples;
    for (size_t i = 0; i < window; ++i) frame[i] = samples[start + i] * hann[i];
    fft.PowerSpectrum(frame, &power);
    bank.Apply(power, mel);
    for (size_t b = 0; b < options.num_bins; ++b)
      out.at(f, b) = static_cast<float>(mel[b] > options.floor ? std::log(mel[b]) : log_floor);
  }
  return out;
}

}  // namespace snrkit
