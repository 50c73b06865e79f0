// tests/test-util.h

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

#ifndef SNRKIT_TESTS_TEST_UTIL_H_
#define SNRKIT_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "snrkit/audio/audio-clip.h"

namespace snrkit::testing {

inline std::filesystem::path TempDir(const std::string &name) {
  auto dir = std::filesystem::path(SNRKIT_TEST_TMP) / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline void AppendLe(std::string *out, uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out->push_back(static_cast<char>((value >> (8 * i)) & 0xff));
}

// Raw RIFF/WAVE bytes with a plain 16-byte fmt chunk.
inline std::string MakeWavBytes(uint16_t format, uint16_t channels, uint32_t rate, uint16_t bits,
                                const std::string &data) {
  std::string out = "RIFF";
  AppendLe(&out, 36 + data.size(), 4);
  out += "WAVEfmt ";
  AppendLe(&out, 16, 4);
  AppendLe(&out, format, 2);
  AppendLe(&out, channels, 2);
  AppendLe(&out, rate, 4);
  AppendLe(&out, rate * channels * bits / 8, 4);
  AppendLe(&out, channels * bits / 8, 2);
  AppendLe(&out, bits, 2);
  out += "data";
  AppendLe(&out, data.size(), 4);
  out += data;
  return out;
}

inline void WriteBytes(const std::filesystem::path &path, const std::string &bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

inline std::string ReadBytes(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

inline AudioClip RandomClip(std::mt19937_64 &gen, size_t n, double amplitude, int rate = 16000) {
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  std::vector<double> s(n);
  for (double &v : s) v = dist(gen);
  return AudioClip(std::move(s), rate);
}

}  // namespace snrkit::testing

#endif  // SNRKIT_TESTS_TEST_UTIL_H_
