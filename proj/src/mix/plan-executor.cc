// mix/plan-executor.cc

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

#include "snrkit/mix/plan-executor.h"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "snrkit/audio/wav-io.h"
#include "snrkit/base/csv.h"
#include "snrkit/base/snrkit-error.h"
#include "snrkit/mix/noise-mixer.h"

namespace snrkit {

std::string MixReportRow::StatusText() const {
  switch (status) {
    case MixStatus::kOk: return "ok";
    case MixStatus::kSkipped: return "skipped: " + message;
    case MixStatus::kFailed: return "failed: " + message;
  }
  return "";
}

std::string MixedFileName(const std::string &utterance_id, const SnrLevel &snr) {
  return utterance_id + "__" + snr.Label() + ".wav";
}

namespace {

MixReportRow MixOne(const MixPlanEntry &entry, const Manifest &manifest,
                    const NoiseCatalog &catalog, const std::filesystem::path &out_dir) {
  MixReportRow row;
  row.utterance_id = entry.utterance_id;
  row.snr_target = entry.snr;
  try {
    const ManifestEntry *utt = manifest.Find(entry.utterance_id);
    if (utt == nullptr)
      throw Error(ErrorCode::kUnknownName, "utterance '" + entry.utterance_id + "' not in manifest");
    const AudioClip clean = ReadWav(manifest.ResolveAudioPath(*utt));
    if (clean.empty()) throw Error(ErrorCode::kEmptyInput, "empty utterance audio");
    const std::string file = MixedFileName(entry.utterance_id, entry.snr);
    if (entry.snr.is_clean()) {
      row.clipped_samples = WriteWav(clean, out_dir / file).clipped_samples;
      row.output_file = file;
      return row;
    }
    const NoiseClip *clip = catalog.FindClip(entry.noise_id);
    if (clip == nullptr)
      throw Error(ErrorCode::kUnknownName, "noise '" + entry.noise_id + "' not in catalog");
    const AudioClip noise = ReadWav(catalog.ResolveAudioPath(*clip));
    if (SumOfSquares(clean.samples()) == 0.0) {
      row.status = MixStatus::kSkipped;
      row.message = "silent utterance";
      LogWarning("skipping silent utterance '" + entry.utterance_id + "'");
      return row;
    }
    const AudioClip mixed = MixAtSnr(clean, noise, entry.snr, entry.noise_offset);
    row.clipped_samples = WriteWav(mixed, out_dir / file).clipped_samples;
    row.output_file = file;
    try {
      row.snr_achieved_db = MeasureSnr(clean, ReadWav(out_dir / file));
    } catch (const Error &e) {
      // Noise fell below one quantization step.
      if (e.code() != ErrorCode::kNoNoisePresent) throw;
    }
  } catch (const Error &e) {
    row.status = MixStatus::kFailed;
    row.message = e.what();
  }
  return row;
}

}  // namespace

MixReport ExecutePlan(const MixPlan &plan, const Manifest &manifest, const NoiseCatalog &catalog,
                      const std::filesystem::path &out_dir, int num_workers) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create output directory " + out_dir.string());

  const size_t n = plan.entries.size();
  std::vector<MixReportRow> rows(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) rows[i] = MixOne(plan.entries[i], manifest, catalog, out_dir);
  };
  const int workers = std::clamp(num_workers, 1, static_cast<int>(std::max<size_t>(n, 1)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto &t : threads) t.join();
  }

  MixReport report;
  std::sort(rows.begin(), rows.end(),
            [](const MixReportRow &a, const MixReportRow &b) { return a.utterance_id < b.utterance_id; });
  for (const auto &row : rows) {
    if (row.status == MixStatus::kFailed) ++report.failed;
    if (row.status == MixStatus::kSkipped) ++report.skipped;
  }
  report.rows = std::move(rows);
  return report;
}

void WriteMixReportCsv(const MixReport &report, std::ostream &out) {
  out << "utterance_id,snr_target,snr_achieved_db,clipped_samples,status\n";
  for (const auto &row : report.rows) {
    out << CsvRow({row.utterance_id, row.snr_target.Label(),
                   row.snr_achieved_db ? FormatFixed(*row.snr_achieved_db, 6) : "",
                   std::to_string(row.clipped_samples), row.StatusText()})
        << '\n';
  }
}

Manifest MixedManifest(const MixReport &report, const MixPlan &plan, const Manifest &source) {
  std::unordered_map<std::string, const MixPlanEntry *> by_id;
  for (const auto &e : plan.entries) by_id[e.utterance_id] = &e;
  std::vector<ManifestEntry> entries;
  for (const auto &row : report.rows) {
    if (row.status != MixStatus::kOk) continue;
    const ManifestEntry *src = source.Find(row.utterance_id);
    if (src == nullptr) continue;
    ManifestEntry e = *src;
    e.audio_path = row.output_file;
    e.attributes["snr"] = row.snr_target.Label();
    const auto it = by_id.find(row.utterance_id);
    if (it != by_id.end() && !it->second->noise_id.empty()) e.attributes["noise_id"] = it->second->noise_id;
    entries.push_back(std::move(e));
  }
  return Manifest(std::move(entries));
}

}  // namespace snrkit
