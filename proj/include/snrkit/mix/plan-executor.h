// snrkit/mix/plan-executor.h

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

#ifndef SNRKIT_MIX_PLAN_EXECUTOR_H_
#define SNRKIT_MIX_PLAN_EXECUTOR_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "snrkit/corpus/manifest.h"
#include "snrkit/corpus/noise-catalog.h"
#include "snrkit/mix/mix-plan.h"

namespace snrkit {

enum class MixStatus { kOk, kSkipped, kFailed };

struct MixReportRow {
  std::string utterance_id;
  SnrLevel snr_target = SnrLevel::Clean();
  std::optional<double> snr_achieved_db;  // measured on the written 16-bit file
  size_t clipped_samples = 0;
  MixStatus status = MixStatus::kOk;
  std::string message;
  std::string output_file;  // file name inside the output directory

  std::string StatusText() const;
};

struct MixReport {
  std::vector<MixReportRow> rows;  // sorted by utterance id
  size_t failed = 0;
  size_t skipped = 0;
};

// "<utterance_id>__<snr label>.wav"
std::string MixedFileName(const std::string &utterance_id, const SnrLevel &snr);

/// Mixes every plan entry and writes one 16-bit WAV per entry into out_dir.
/// Per-entry problems (unresolvable ids, unreadable audio, rate mismatch) are
/// recorded as failed rows; silent utterances are skipped with a warning.
/// Neither aborts the batch. Output is independent of num_workers.
MixReport ExecutePlan(const MixPlan &plan, const Manifest &manifest, const NoiseCatalog &catalog,
                      const std::filesystem::path &out_dir, int num_workers = 1);

// CSV: utterance_id,snr_target,snr_achieved_db,clipped_samples,status
void WriteMixReportCsv(const MixReport &report, std::ostream &out);

// Manifest of the successfully written files, audio paths relative to out_dir.
// Adds "snr" and "noise_id" attributes.
Manifest MixedManifest(const MixReport &report, const MixPlan &plan, const Manifest &source);

}  // namespace snrkit

#endif  // SNRKIT_MIX_PLAN_EXECUTOR_H_
