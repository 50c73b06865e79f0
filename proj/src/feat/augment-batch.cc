// feat/augment-batch.cc

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

#include "snrkit/feat/augment-batch.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "snrkit/audio/wav-io.h"
#include "snrkit/base/random.h"
#include "snrkit/base/snrkit-error.h"
#include "snrkit/feat/feature-io.h"

namespace snrkit {

double AugmentReport::MeanMaskedFraction() const {
  double sum = 0.0;
  size_t n = 0;
  for (const auto &item : items) {
    if (!item.ok) continue;
    sum += item.masked_fraction;
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

AugmentReport AugmentBatch(const Manifest &manifest, const SpecAugmentConfig &config, uint64_t seed,
                           const std::filesystem::path &out_dir, const MelOptions &mel,
                           int num_workers) {
  ValidateSpecAugmentConfig(config);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create output directory " + out_dir.string());

  std::vector<const ManifestEntry *> entries;
  for (const auto &e : manifest.entries()) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [](const ManifestEntry *a, const ManifestEntry *b) { return a->utterance_id < b->utterance_id; });

  AugmentReport report;
  report.items.resize(entries.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < entries.size(); i = next++) {
      const ManifestEntry &entry = *entries[i];
      AugmentItem &item = report.items[i];
      item.utterance_id = entry.utterance_id;
      try {
        const AudioClip clip = ReadWav(manifest.ResolveAudioPath(entry));
        const FeatureMatrix features = ComputeLogMel(clip, mel);
        const SpecAugmentResult augmented =
            ApplySpecAugment(features, config, DeriveSeed(seed, entry.utterance_id));
        item.feature_file = entry.utterance_id + ".feat";
        WriteFeatures(augmented.features, out_dir / item.feature_file);
        item.frame_count = features.frame_count();
        item.bin_count = features.bin_count();
        item.time_masks = augmented.time_masks.size();
        item.freq_masks = augmented.freq_masks.size();
        item.masked_fraction = augmented.masked_fraction;
        if (augmented.axis_saturated)
          item.message = "mask length reaches axis size; whole axis may be masked";
      } catch (const Error &e) {
        item.ok = false;
        item.feature_file.clear();
        item.message = e.what();
      }
    }
  };
  const int workers = std::clamp(num_workers, 1, static_cast<int>(std::max<size_t>(entries.size(), 1)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto &t : threads) t.join();
  }
  for (const auto &item : report.items)
    if (!item.ok) ++report.failed;

  std::ofstream index(out_dir / "index.json", std::ios::binary | std::ios::trunc);
  if (!index) throw Error(ErrorCode::kIo, "cannot write " + (out_dir / "index.json").string());
  index << AugmentReportToJson(report, config, seed).dump(2) << '\n';
  return report;
}

nlohmann::json AugmentReportToJson(const AugmentReport &report, const SpecAugmentConfig &config,
                                   uint64_t seed) {
  nlohmann::json j;
  j["seed"] = seed;
  j["config"] = SpecAugmentConfigToJson(config);
  j["mean_masked_fraction"] = report.MeanMaskedFraction();
  j["failed"] = report.failed;
  j["items"] = nlohmann::json::array();
  for (const auto &item : report.items) {
    nlohmann::json e;
    e["utterance_id"] = item.utterance_id;
    e["status"] = item.ok ? "ok" : "failed";
    if (item.ok) {
      e["file"] = item.feature_file;
      e["frame_count"] = item.frame_count;
      e["bin_count"] = item.bin_count;
      e["time_masks"] = item.time_masks;
      e["freq_masks"] = item.freq_masks;
      e["masked_fraction"] = item.masked_fraction;
    }
    if (!item.message.empty()) e["message"] = item.message;
    j["items"].push_back(std::move(e));
  }
  return j;
}

}  // namespace snrkit
