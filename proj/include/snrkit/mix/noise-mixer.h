// snrkit/mix/noise-mixer.h

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

#ifndef SNRKIT_MIX_NOISE_MIXER_H_
#define SNRKIT_MIX_NOISE_MIXER_H_

#include <cstddef>

#include "snrkit/audio/audio-clip.h"
#include "snrkit/mix/snr-level.h"

namespace snrkit {

/// Noise gain that puts an additive mix at `snr_db`:
///   alpha = sqrt(10^(-snr/10) * E_clean / E_noise)
/// with E the sum of squared samples. Throws kSilentNoise when E_noise is 0
/// and kSilentUtterance when E_clean is 0.
double ComputeAlpha(double clean_energy, double noise_energy, double snr_db);
double ComputeAlpha(const AudioClip &clean, const AudioClip &noise, double snr_db);

// The `length` samples of noise starting at `offset` (taken modulo the noise
// length); wraps around when the noise is shorter than requested.
AudioClip AdaptNoise(const AudioClip &noise, size_t offset, size_t length);

/// clean + alpha * segment, where segment = AdaptNoise(noise, offset,
/// clean.size()) and alpha comes from the segment's energy. Clean returns the
/// input untouched. Throws kShapeMismatch on sample-rate mismatch.
AudioClip MixAtSnr(const AudioClip &clean, const AudioClip &noise, SnrLevel snr,
                   size_t offset = 0);

}  // namespace snrkit

#endif  // SNRKIT_MIX_NOISE_MIXER_H_
