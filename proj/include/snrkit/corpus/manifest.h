// snrkit/corpus/manifest.h

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

#ifndef SNRKIT_CORPUS_MANIFEST_H_
#define SNRKIT_CORPUS_MANIFEST_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace snrkit {

enum class Split { kTrain, kTest };

std::string_view SplitName(Split split);
// Case-insensitive "train" / "test"; throws kParse("unknown split ...").
Split ParseSplit(std::string_view text);

struct ManifestEntry {
  std::string utterance_id;
  std::string audio_path;  // as written; relative paths resolve against the manifest directory
  std::string transcript;
  std::string speaker_id;
  Split split = Split::kTrain;
  std::optional<double> duration_seconds;
  std::map<std::string, std::string> attributes;  // free-form tags, e.g. externally estimated gender

  friend bool operator==(const ManifestEntry &, const ManifestEntry &) = default;
};

class Manifest {
 public:
  Manifest() = default;
  // Throws kDuplicateId / kInvalidArgument on invalid entries.
  explicit Manifest(std::vector<ManifestEntry> entries, std::filesystem::path base_dir = {});

  const std::vector<ManifestEntry> &entries() const { return entries_; }
  const std::filesystem::path &base_dir() const { return base_dir_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const ManifestEntry *Find(std::string_view utterance_id) const;
  std::filesystem::path ResolveAudioPath(const ManifestEntry &entry) const;

  // Entries of one split, preserving order.
  Manifest Filter(Split split) const;

  // Entry equality only; base_dir is a load-time detail.
  friend bool operator==(const Manifest &a, const Manifest &b) { return a.entries_ == b.entries_; }

 private:
  std::vector<ManifestEntry> entries_;
  std::filesystem::path base_dir_;
  std::unordered_map<std::string, size_t> index_;
};

/// JSON lines, one object per utterance with keys utterance_id, audio_path,
/// transcript, speaker_id, split and optional duration_seconds/attributes.
/// Parse failures name the 1-based line number.
Manifest ParseManifest(std::istream &in, const std::filesystem::path &base_dir = {});
Manifest LoadManifest(const std::filesystem::path &path);

void WriteManifest(const Manifest &manifest, std::ostream &out);
void SaveManifest(const Manifest &manifest, const std::filesystem::path &path);

}  // namespace snrkit

#endif  // SNRKIT_CORPUS_MANIFEST_H_
