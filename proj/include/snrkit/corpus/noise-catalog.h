// snrkit/corpus/noise-catalog.h

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

#ifndef SNRKIT_CORPUS_NOISE_CATALOG_H_
#define SNRKIT_CORPUS_NOISE_CATALOG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace snrkit {

struct NoiseClass {
  std::string name;
  std::string description;
  int clip_count = 0;
  bool held_out = false;

  friend bool operator==(const NoiseClass &, const NoiseClass &) = default;
};

struct NoiseClip {
  std::string noise_id;
  std::string class_name;
  std::string audio_path;

  friend bool operator==(const NoiseClip &, const NoiseClip &) = default;
};

// Lowercased and whitespace-trimmed; the key used for every class lookup.
std::string CanonicalClassName(std::string_view name);

class NoiseCatalog {
 public:
  NoiseCatalog() = default;
  // Throws kUnknownName if a clip names a missing class and kDuplicateId for
  // repeated class names or noise ids.
  NoiseCatalog(std::vector<NoiseClass> classes, std::vector<NoiseClip> clips,
               std::filesystem::path base_dir = {});

  const std::vector<NoiseClass> &classes() const { return classes_; }
  const std::vector<NoiseClip> &clips() const { return clips_; }
  const std::filesystem::path &base_dir() const { return base_dir_; }

  const NoiseClass *FindClass(std::string_view name) const;
  const NoiseClip *FindClip(std::string_view noise_id) const;
  std::filesystem::path ResolveAudioPath(const NoiseClip &clip) const;

  friend bool operator==(const NoiseCatalog &a, const NoiseCatalog &b) {
    return a.classes_ == b.classes_ && a.clips_ == b.clips_;
  }

 private:
  std::vector<NoiseClass> classes_;
  std::vector<NoiseClip> clips_;
  std::filesystem::path base_dir_;
};

// The 25-class inventory with descriptions and reference clip counts; the 8
// held-out classes are flagged. Carries no clips.
NoiseCatalog DefaultNoiseCatalog();

// Environmental noise, Pink noise, Boom, Inside public space, Grunt,
// Stomach rumble, Clang, Squeak.
std::vector<std::string> DefaultHeldOutClassNames();

/// Partitions classes and clips into (train, held-out). With explicit names
/// every name must match a class (kUnknownName otherwise). Without names the
/// default held-out list is used, ignoring defaults absent from the catalog.
/// held_out flags on both sides are rewritten to match the partition.
std::pair<NoiseCatalog, NoiseCatalog> SplitNoiseCatalog(
    const NoiseCatalog &catalog,
    const std::optional<std::vector<std::string>> &held_out_names = std::nullopt);

nlohmann::json NoiseCatalogToJson(const NoiseCatalog &catalog);
NoiseCatalog NoiseCatalogFromJson(const nlohmann::json &j, const std::filesystem::path &base_dir = {});
NoiseCatalog LoadNoiseCatalog(const std::filesystem::path &path);
void SaveNoiseCatalog(const NoiseCatalog &catalog, const std::filesystem::path &path);

}  // namespace snrkit

#endif  // SNRKIT_CORPUS_NOISE_CATALOG_H_
