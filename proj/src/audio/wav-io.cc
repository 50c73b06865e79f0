// audio/wav-io.cc

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

#include "snrkit/audio/wav-io.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "snrkit/base/snrkit-error.h"

namespace snrkit {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint16_t ReadU16(const unsigned char *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

uint32_t ReadU32(const unsigned char *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

void PutU16(std::vector<unsigned char> *out, uint16_t v) {
  out->push_back(static_cast<unsigned char>(v & 0xff));
  out->push_back(static_cast<unsigned char>(v >> 8));
}

void PutU32(std::vector<unsigned char> *out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
}

struct ParsedWav {
  WavInfo info;
  const unsigned char *data = nullptr;
};

[[noreturn]] void Malformed(const std::filesystem::path &path, const std::string &what) {
  throw Error(ErrorCode::kMalformedWav,
              "malformed WAV header in " + path.string() + ": " + what);
}

std::vector<unsigned char> Slurp(const std::filesystem::path &path, size_t max_bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open WAV file " + path.string());
  std::vector<unsigned char> bytes;
  if (max_bytes == SIZE_MAX) {
    bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    bytes.resize(max_bytes);
    in.read(reinterpret_cast<char *>(bytes.data()), static_cast<std::streamsize>(max_bytes));
    bytes.resize(static_cast<size_t>(in.gcount()));
  }
  return bytes;
}

// With header_only the data chunk may extend past the buffer.
ParsedWav Parse(const std::vector<unsigned char> &bytes, const std::filesystem::path &path,
                bool header_only) {
  if (bytes.size() < 12) Malformed(path, "file shorter than RIFF header");
  if (std::memcmp(bytes.data(), "RIFF", 4) != 0 || std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    Malformed(path, "missing RIFF/WAVE signature");

  ParsedWav parsed;
  bool have_fmt = false;
  uint16_t format = 0, block_align = 0;
  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char *chunk = bytes.data() + pos;
    const uint32_t chunk_size = ReadU32(chunk + 4);
    const size_t body = pos + 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_size < 16 || body + 16 > bytes.size()) Malformed(path, "truncated fmt chunk");
      const unsigned char *f = bytes.data() + body;
      format = ReadU16(f);
      parsed.info.num_channels = ReadU16(f + 2);
      parsed.info.sample_rate_hz = static_cast<int>(ReadU32(f + 4));
      block_align = ReadU16(f + 12);
      parsed.info.bits_per_sample = ReadU16(f + 14);
      if (format == kFormatExtensible) {
        if (chunk_size < 40 || body + 40 > bytes.size())
          Malformed(path, "truncated extensible fmt chunk");
        format = ReadU16(f + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (!have_fmt) Malformed(path, "data chunk before fmt chunk");
      if (parsed.info.num_channels <= 0) Malformed(path, "zero channels");
      if (parsed.info.sample_rate_hz <= 0) Malformed(path, "zero sample rate");
      if (format != kFormatPcm && format != kFormatFloat)
        throw Error(ErrorCode::kUnsupportedEncoding,
                    "unsupported encoding (format tag " + std::to_string(format) + ") in " +
                        path.string());
      const int bits = parsed.info.bits_per_sample;
      const bool int_ok = format == kFormatPcm && (bits == 8 || bits == 16 || bits == 24 || bits == 32);
      const bool float_ok = format == kFormatFloat && bits == 32;
      if (!int_ok && !float_ok)
        throw Error(ErrorCode::kUnsupportedEncoding,
                    "unsupported encoding (" + std::to_string(bits) + "-bit, format tag " +
                        std::to_string(format) + ") in " + path.string());
      if (block_align != parsed.info.num_channels * bits / 8)
        Malformed(path, "block alignment inconsistent with channels and bit depth");
      parsed.info.is_float = format == kFormatFloat;
      size_t available = chunk_size;
      if (!header_only) {
        // Streaming writers leave the size unpatched; keep the whole frames present.
        available = std::min<size_t>(chunk_size, bytes.size() - body);
        parsed.data = bytes.data() + body;
      }
      parsed.info.num_frames = available / block_align;
      return parsed;
    }
    pos = body + chunk_size + (chunk_size & 1u);
  }
  Malformed(path, have_fmt ? "missing data chunk" : "missing fmt chunk");
}

}  // namespace

WavInfo ReadWavInfo(const std::filesystem::path &path) {
  // Headers beyond 64 KiB of metadata chunks are not expected.
  auto bytes = Slurp(path, 1 << 16);
  return Parse(bytes, path, /*header_only=*/true).info;
}

AudioClip ReadWav(const std::filesystem::path &path) {
  const auto bytes = Slurp(path, SIZE_MAX);
  const ParsedWav parsed = Parse(bytes, path, /*header_only=*/false);
  const WavInfo &info = parsed.info;
  const int channels = info.num_channels;
  const int bytes_per_sample = info.bits_per_sample / 8;
  std::vector<double> samples(info.num_frames);
  const unsigned char *p = parsed.data;
  for (size_t frame = 0; frame < info.num_frames; ++frame) {
    double sum = 0.0;
    for (int ch = 0; ch < channels; ++ch, p += bytes_per_sample) {
      double value = 0.0;
      if (info.is_float) {
        float f;
        const uint32_t raw = ReadU32(p);
        std::memcpy(&f, &raw, sizeof(f));
        value = f;
      } else {
        switch (info.bits_per_sample) {
          case 8: value = (static_cast<int>(p[0]) - 128) / 128.0; break;
          case 16: value = static_cast<int16_t>(ReadU16(p)) / 32768.0; break;
          case 24: {
            int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
            if (v & 0x800000) v -= 0x1000000;
            value = v / 8388608.0;
            break;
          }
          case 32: value = static_cast<int32_t>(ReadU32(p)) / 2147483648.0; break;
        }
      }
      sum += value;
    }
    samples[frame] = sum / channels;
  }
  try {
    return AudioClip(std::move(samples), info.sample_rate_hz);
  } catch (const Error &e) {
    throw Error(ErrorCode::kUnsupportedEncoding, std::string(e.what()) + " in " + path.string());
  }
}

AudioClip QuantizeTo16Bit(const AudioClip &clip, size_t *clipped_samples) {
  std::vector<double> out(clip.size());
  size_t clipped = 0;
  auto in = clip.samples();
  for (size_t i = 0; i < out.size(); ++i) {
    double s = in[i];
    if (s > 1.0 || s < -1.0) ++clipped;
    const double q = std::clamp(std::nearbyint(std::clamp(s, -1.0, 1.0) * 32768.0), -32768.0, 32767.0);
    out[i] = q / 32768.0;
  }
  if (clipped_samples != nullptr) *clipped_samples = clipped;
  return AudioClip(std::move(out), clip.sample_rate_hz());
}

WavWriteResult WriteWav(const AudioClip &clip, const std::filesystem::path &path) {
  WavWriteResult result;
  const AudioClip quantized = QuantizeTo16Bit(clip, &result.clipped_samples);
  const uint32_t data_bytes = static_cast<uint32_t>(quantized.size() * 2);
  std::vector<unsigned char> out;
  out.reserve(44 + data_bytes);
  for (char c : std::string_view("RIFF")) out.push_back(static_cast<unsigned char>(c));
  PutU32(&out, 36 + data_bytes);
  for (char c : std::string_view("WAVEfmt ")) out.push_back(static_cast<unsigned char>(c));
  PutU32(&out, 16);
  PutU16(&out, kFormatPcm);
  PutU16(&out, 1);
  PutU32(&out, static_cast<uint32_t>(clip.sample_rate_hz()));
  PutU32(&out, static_cast<uint32_t>(clip.sample_rate_hz()) * 2);
  PutU16(&out, 2);
  PutU16(&out, 16);
  for (char c : std::string_view("data")) out.push_back(static_cast<unsigned char>(c));
  PutU32(&out, data_bytes);
  for (double s : quantized.samples())
    PutU16(&out, static_cast<uint16_t>(static_cast<int16_t>(std::lround(s * 32768.0))));

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIo, "cannot write WAV file " + path.string());
  file.write(reinterpret_cast<const char *>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!file) throw Error(ErrorCode::kIo, "write failed for " + path.string());
  if (result.clipped_samples > 0)
    LogWarning(path.string() + ": clipped " + std::to_string(result.clipped_samples) + " samples");
  return result;
}

}  // namespace snrkit
