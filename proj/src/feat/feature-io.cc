// feat/feature-io.cc

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

#include "snrkit/feat/feature-io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "snrkit/base/snrkit-error.h"

namespace snrkit {

namespace {

template <typename T>
void PutLe(std::string *out, T value) {
  static_assert(std::endian::native == std::endian::little, "big-endian hosts are not supported");
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out->append(buf, sizeof(T));
}

template <typename T>
T GetLe(const std::string &in, size_t offset) {
  T value;
  std::memcpy(&value, in.data() + offset, sizeof(T));
  return value;
}

}  // namespace

std::string SerializeFeatures(const FeatureMatrix &features) {
  std::string out(kFeatureMagic, 4);
  PutLe<uint32_t>(&out, kFeatureVersion);
  PutLe<uint32_t>(&out, static_cast<uint32_t>(features.frame_count()));
  PutLe<uint32_t>(&out, static_cast<uint32_t>(features.bin_count()));
  PutLe<double>(&out, features.hop_seconds());
  out.reserve(out.size() + features.size() * sizeof(float));
  for (float v : features.values()) PutLe<float>(&out, v);
  return out;
}

FeatureMatrix DeserializeFeatures(const std::string &bytes) {
  if (bytes.size() < kFeatureHeaderBytes || std::memcmp(bytes.data(), kFeatureMagic, 4) != 0)
    throw Error(ErrorCode::kParse, "not a feature file (bad magic)");
  if (GetLe<uint32_t>(bytes, 4) != kFeatureVersion)
    throw Error(ErrorCode::kParse, "unsupported feature file version");
  const size_t frames = GetLe<uint32_t>(bytes, 8);
  const size_t bins = GetLe<uint32_t>(bytes, 12);
  const double hop = GetLe<double>(bytes, 16);
  if (bytes.size() != kFeatureHeaderBytes + frames * bins * sizeof(float))
    throw Error(ErrorCode::kParse, "feature file size does not match its header");
  std::vector<float> values(frames * bins);
  std::memcpy(values.data(), bytes.data() + kFeatureHeaderBytes, values.size() * sizeof(float));
  return FeatureMatrix(frames, bins, hop, std::move(values));
}

void WriteFeatures(const FeatureMatrix &features, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write feature file " + path.string());
  const std::string bytes = SerializeFeatures(features);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

FeatureMatrix ReadFeatures(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open feature file " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return DeserializeFeatures(bytes);
  } catch (const Error &e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace snrkit
