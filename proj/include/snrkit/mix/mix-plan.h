// snrkit/mix/mix-plan.h

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

#ifndef SNRKIT_MIX_MIX_PLAN_H_
#define SNRKIT_MIX_MIX_PLAN_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "snrkit/mix/snr-level.h"

namespace snrkit {

struct NoiseSource {
  std::string id;
  size_t num_samples = 0;  // 0 when unknown; offsets are then drawn as 0
};

struct MixPlanEntry {
  std::string utterance_id;
  std::string noise_id;  // empty for Clean entries
  SnrLevel snr = SnrLevel::Clean();
  size_t noise_offset = 0;

  friend bool operator==(const MixPlanEntry &, const MixPlanEntry &) = default;
};

struct MixPlan {
  uint64_t seed = 0;
  std::vector<SnrLevel> grid;
  bool allow_reuse = false;
  std::vector<MixPlanEntry> entries;  // in input utterance order

  friend bool operator==(const MixPlan &, const MixPlan &) = default;
};

/// Assigns every utterance an SNR level and, for non-clean levels, a noise
/// clip and a start offset.
///
/// Utterances are visited in a seeded shuffled order and given grid levels
/// round-robin, so each level gets floor(n/|grid|) or ceil(n/|grid|)
/// utterances. Noise clips are handed out in a seeded shuffled order; without
/// allow_reuse each clip is used at most once and a shortfall throws
/// kInsufficientNoise. Offsets are drawn per entry from (seed, entry index),
/// so `num_workers` does not affect the result.
MixPlan BuildMixPlan(const std::vector<std::string> &utterance_ids,
                     const std::vector<NoiseSource> &noises,
                     const std::vector<SnrLevel> &grid, uint64_t seed,
                     bool allow_reuse, int num_workers = 1);

// Checks the plan invariants: unique utterances, levels from the grid, no
// repeated noise without allow_reuse, noise present on every non-clean entry.
// Throws kInvalidArgument / kDuplicateId.
void ValidateMixPlan(const MixPlan &plan);

// Utterance count per grid level, keyed by level.
std::map<SnrLevel, size_t> CountPerLevel(const MixPlan &plan);

// JSON lines: one header line (format, version, seed, grid, allow_reuse)
// followed by one line per entry.
void WriteMixPlan(const MixPlan &plan, std::ostream &out);
MixPlan ReadMixPlan(std::istream &in);

void SaveMixPlan(const MixPlan &plan, const std::string &path);
MixPlan LoadMixPlan(const std::string &path);

}  // namespace snrkit

#endif  // SNRKIT_MIX_MIX_PLAN_H_
