// snrkit/feat/feature-io.h

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

#ifndef SNRKIT_FEAT_FEATURE_IO_H_
#define SNRKIT_FEAT_FEATURE_IO_H_

#include <filesystem>
#include <string>

#include "snrkit/feat/log-mel.h"

namespace snrkit {

// Binary layout, all little-endian:
//   "SKFM" | u32 version (1) | u32 frame_count | u32 bin_count | f64 hop_seconds
//   followed by frame_count * bin_count f32 values, row-major.
constexpr char kFeatureMagic[4] = {'S', 'K', 'F', 'M'};
constexpr uint32_t kFeatureVersion = 1;
constexpr size_t kFeatureHeaderBytes = 24;

std::string SerializeFeatures(const FeatureMatrix &features);
// Throws kParse on a bad magic, version or size.
FeatureMatrix DeserializeFeatures(const std::string &bytes);

void WriteFeatures(const FeatureMatrix &features, const std::filesystem::path &path);
FeatureMatrix ReadFeatures(const std::filesystem::path &path);

}  // namespace snrkit

#endif  // SNRKIT_FEAT_FEATURE_IO_H_
