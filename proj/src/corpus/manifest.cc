// corpus/manifest.cc

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

#include "snrkit/corpus/manifest.h"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "snrkit/base/snrkit-error.h"

namespace snrkit {

std::string_view SplitName(Split split) { return split == Split::kTrain ? "train" : "test"; }

Split ParseSplit(std::string_view text) {
  std::string lower(text);
  for (char &c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "train") return Split::kTrain;
  if (lower == "test") return Split::kTest;
  throw Error(ErrorCode::kParse, "unknown split '" + std::string(text) + "'");
}

Manifest::Manifest(std::vector<ManifestEntry> entries, std::filesystem::path base_dir)
    : entries_(std::move(entries)), base_dir_(std::move(base_dir)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    const auto &e = entries_[i];
    if (e.utterance_id.empty())
      throw Error(ErrorCode::kInvalidArgument, "entry " + std::to_string(i + 1) + " has an empty utterance_id");
    if (e.audio_path.empty())
      throw Error(ErrorCode::kInvalidArgument, "utterance '" + e.utterance_id + "' has an empty audio_path");
    if (!index_.emplace(e.utterance_id, i).second)
      throw Error(ErrorCode::kDuplicateId, "duplicate utterance_id '" + e.utterance_id + "'");
  }
}

const ManifestEntry *Manifest::Find(std::string_view utterance_id) const {
  auto it = index_.find(std::string(utterance_id));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::filesystem::path Manifest::ResolveAudioPath(const ManifestEntry &entry) const {
  std::filesystem::path p(entry.audio_path);
  if (p.is_absolute() || base_dir_.empty()) return p;
  return base_dir_ / p;
}

Manifest Manifest::Filter(Split split) const {
  std::vector<ManifestEntry> kept;
  for (const auto &e : entries_)
    if (e.split == split) kept.push_back(e);
  return Manifest(std::move(kept), base_dir_);
}

Manifest ParseManifest(std::istream &in, const std::filesystem::path &base_dir) {
  std::vector<ManifestEntry> entries;
  std::unordered_map<std::string, size_t> first_line;
  std::string text;
  size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "manifest line " + std::to_string(line_no) + ": ";
    ManifestEntry e;
    try {
      const auto j = nlohmann::json::parse(text);
      e.utterance_id = j.at("utterance_id").get<std::string>();
      e.audio_path = j.at("audio_path").get<std::string>();
      e.transcript = j.at("transcript").get<std::string>();
      e.speaker_id = j.at("speaker_id").get<std::string>();
      e.split = ParseSplit(j.at("split").get<std::string>());
      if (j.contains("duration_seconds") && !j["duration_seconds"].is_null())
        e.duration_seconds = j["duration_seconds"].get<double>();
      if (j.contains("attributes"))
        for (const auto &[key, value] : j["attributes"].items())
          e.attributes[key] = value.is_string() ? value.get<std::string>() : value.dump();
    } catch (const nlohmann::json::exception &ex) {
      throw Error(ErrorCode::kParse, where + "malformed JSON: " + ex.what());
    } catch (const Error &ex) {
      throw Error(ex.code(), where + ex.what());
    }
    if (e.utterance_id.empty()) throw Error(ErrorCode::kParse, where + "empty utterance_id");
    if (e.audio_path.empty()) throw Error(ErrorCode::kParse, where + "empty audio_path");
    auto [it, inserted] = first_line.emplace(e.utterance_id, line_no);
    if (!inserted)
      throw Error(ErrorCode::kDuplicateId,
                  where + "duplicate utterance_id '" + e.utterance_id + "' (first seen on line " +
                      std::to_string(it->second) + ")");
    entries.push_back(std::move(e));
  }
  return Manifest(std::move(entries), base_dir);
}

Manifest LoadManifest(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open manifest " + path.string());
  return ParseManifest(in, path.parent_path());
}

void WriteManifest(const Manifest &manifest, std::ostream &out) {
  for (const auto &e : manifest.entries()) {
    nlohmann::json j;
    j["utterance_id"] = e.utterance_id;
    j["audio_path"] = e.audio_path;
    j["transcript"] = e.transcript;
    j["speaker_id"] = e.speaker_id;
    j["split"] = SplitName(e.split);
    if (e.duration_seconds) j["duration_seconds"] = *e.duration_seconds;
    if (!e.attributes.empty()) j["attributes"] = e.attributes;
    out << j.dump() << '\n';
  }
}

void SaveManifest(const Manifest &manifest, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write manifest " + path.string());
  WriteManifest(manifest, out);
}

}  // namespace snrkit
