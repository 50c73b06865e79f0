// snrkit/audio/wav-io.h

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

#ifndef SNRKIT_AUDIO_WAV_IO_H_
#define SNRKIT_AUDIO_WAV_IO_H_

#include <cstdint>
#include <filesystem>

#include "snrkit/audio/audio-clip.h"

namespace snrkit {

struct WavInfo {
  int sample_rate_hz = 0;
  int num_channels = 0;
  int bits_per_sample = 0;
  bool is_float = false;
  size_t num_frames = 0;
};

// Parses only the header chunks. Errors as for ReadWav.
WavInfo ReadWavInfo(const std::filesystem::path &path);

/// Reads a RIFF WAV with 8/16/24/32-bit integer PCM or 32-bit float samples.
/// Integer samples are scaled by 2^-(bits-1) (8-bit is offset binary),
/// multi-channel audio is averaged down to mono. Throws kIo for a missing
/// file, kMalformedWav for a truncated or inconsistent header and
/// kUnsupportedEncoding for anything else; messages carry the path.
AudioClip ReadWav(const std::filesystem::path &path);

struct WavWriteResult {
  size_t clipped_samples = 0;  // samples outside [-1, 1] before quantization
};

// Writes 16-bit mono PCM, hard-clipping to [-1, 1]. Throws kIo.
WavWriteResult WriteWav(const AudioClip &clip, const std::filesystem::path &path);

// Quantizes as WriteWav would, without touching disk.
AudioClip QuantizeTo16Bit(const AudioClip &clip, size_t *clipped_samples = nullptr);

}  // namespace snrkit

#endif  // SNRKIT_AUDIO_WAV_IO_H_
