// mix/mix-plan.cc

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

#include "snrkit/mix/mix-plan.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "snrkit/base/random.h"
#include "snrkit/base/snrkit-error.h"

namespace snrkit {

namespace {

constexpr const char *kPlanFormat = "snrkit-mix-plan";
constexpr int kPlanVersion = 1;

nlohmann::json LevelToJson(const SnrLevel &level) {
  if (level.is_clean()) return "clean";
  return level.db();
}

SnrLevel LevelFromJson(const nlohmann::json &j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "clean") return SnrLevel::Clean();
    return SnrLevel::Parse(s);
  }
  if (j.is_number_integer()) return SnrLevel::Decibels(j.get<int>());
  throw Error(ErrorCode::kParse, "snr must be \"clean\" or an integer");
}

}  // namespace

MixPlan BuildMixPlan(const std::vector<std::string> &utterance_ids,
                     const std::vector<NoiseSource> &noises,
                     const std::vector<SnrLevel> &grid, uint64_t seed,
                     bool allow_reuse, int num_workers) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "empty SNR grid");
  {
    std::unordered_set<std::string> seen;
    for (const auto &id : utterance_ids)
      if (!seen.insert(id).second)
        throw Error(ErrorCode::kDuplicateId, "duplicate utterance id '" + id + "'");
  }
  const size_t n = utterance_ids.size();
  MixPlan plan;
  plan.seed = seed;
  plan.grid = grid;
  plan.allow_reuse = allow_reuse;
  plan.entries.resize(n);

  const std::vector<size_t> order = SeededPermutation(n, DeriveSeed(seed, "utterance-order"));
  size_t needed = 0;
  for (size_t k = 0; k < n; ++k) {
    MixPlanEntry &entry = plan.entries[order[k]];
    entry.utterance_id = utterance_ids[order[k]];
    entry.snr = grid[k % grid.size()];
    if (!entry.snr.is_clean()) ++needed;
  }
  if (needed > 0 && noises.empty())
    throw Error(ErrorCode::kInsufficientNoise,
                "no noise clips available for " + std::to_string(needed) + " noisy entries");
  if (!allow_reuse && needed > noises.size())
    throw Error(ErrorCode::kInsufficientNoise,
                "need " + std::to_string(needed) + " distinct noise clips for non-clean entries but only " +
                    std::to_string(noises.size()) + " available (short by " +
                    std::to_string(needed - noises.size()) + "); enable reuse or add noise");

  // Each pass over the noise list uses a fresh shuffle.
  std::vector<size_t> noise_order;
  size_t used = 0;
  std::vector<const NoiseSource *> assigned(n, nullptr);
  for (size_t k = 0; k < n; ++k) {
    const size_t idx = order[k];
    if (plan.entries[idx].snr.is_clean()) continue;
    const size_t cycle = used / noises.size();
    if (used % noises.size() == 0)
      noise_order = SeededPermutation(noises.size(),
                                      DeriveSeed(seed, "noise-order-" + std::to_string(cycle)));
    assigned[idx] = &noises[noise_order[used % noises.size()]];
    plan.entries[idx].noise_id = assigned[idx]->id;
    ++used;
  }

  auto draw_offsets = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      if (assigned[i] == nullptr || assigned[i]->num_samples == 0) continue;
      Rng rng(DeriveSeed(seed, static_cast<uint64_t>(i)));
      plan.entries[i].noise_offset = static_cast<size_t>(
          rng.UniformInt(0, static_cast<int64_t>(assigned[i]->num_samples) - 1));
    }
  };
  const size_t workers = static_cast<size_t>(std::max(1, num_workers));
  if (workers == 1 || n < 2) {
    draw_offsets(0, n);
  } else {
    std::vector<std::thread> threads;
    const size_t chunk = (n + workers - 1) / workers;
    for (size_t begin = 0; begin < n; begin += chunk)
      threads.emplace_back(draw_offsets, begin, std::min(n, begin + chunk));
    for (auto &t : threads) t.join();
  }
  return plan;
}

void ValidateMixPlan(const MixPlan &plan) {
  if (plan.grid.empty()) throw Error(ErrorCode::kInvalidArgument, "plan has an empty grid");
  const std::set<SnrLevel> grid(plan.grid.begin(), plan.grid.end());
  std::unordered_set<std::string> utterances, noises;
  for (const auto &e : plan.entries) {
    if (!utterances.insert(e.utterance_id).second)
      throw Error(ErrorCode::kDuplicateId, "utterance '" + e.utterance_id + "' appears twice in plan");
    if (!grid.count(e.snr))
      throw Error(ErrorCode::kInvalidArgument,
                  "entry '" + e.utterance_id + "' uses SNR " + e.snr.Label() + " outside the grid");
    if (e.snr.is_clean()) continue;
    if (e.noise_id.empty())
      throw Error(ErrorCode::kInvalidArgument, "noisy entry '" + e.utterance_id + "' has no noise id");
    if (!plan.allow_reuse && !noises.insert(e.noise_id).second)
      throw Error(ErrorCode::kDuplicateId,
                  "noise '" + e.noise_id + "' repeats but reuse is disabled");
  }
}

std::map<SnrLevel, size_t> CountPerLevel(const MixPlan &plan) {
  std::map<SnrLevel, size_t> counts;
  for (const auto &level : plan.grid) counts[level] = 0;
  for (const auto &e : plan.entries) ++counts[e.snr];
  return counts;
}

void WriteMixPlan(const MixPlan &plan, std::ostream &out) {
  nlohmann::json header;
  header["format"] = kPlanFormat;
  header["version"] = kPlanVersion;
  header["seed"] = plan.seed;
  header["allow_reuse"] = plan.allow_reuse;
  header["grid"] = nlohmann::json::array();
  for (const auto &level : plan.grid) header["grid"].push_back(LevelToJson(level));
  out << header.dump() << '\n';
  for (const auto &e : plan.entries) {
    nlohmann::json line;
    line["utterance_id"] = e.utterance_id;
    line["noise_id"] = e.snr.is_clean() ? nlohmann::json(nullptr) : nlohmann::json(e.noise_id);
    line["snr"] = LevelToJson(e.snr);
    line["noise_offset"] = e.noise_offset;
    out << line.dump() << '\n';
  }
}

MixPlan ReadMixPlan(std::istream &in) {
  MixPlan plan;
  std::string text;
  size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(text);
      if (!have_header) {
        if (j.value("format", "") != kPlanFormat)
          throw Error(ErrorCode::kParse, "missing mix-plan header");
        if (j.at("version").get<int>() != kPlanVersion)
          throw Error(ErrorCode::kParse, "unsupported plan version");
        plan.seed = j.at("seed").get<uint64_t>();
        plan.allow_reuse = j.at("allow_reuse").get<bool>();
        for (const auto &level : j.at("grid")) plan.grid.push_back(LevelFromJson(level));
        have_header = true;
        continue;
      }
      MixPlanEntry e;
      e.utterance_id = j.at("utterance_id").get<std::string>();
      const auto &noise = j.at("noise_id");
      e.noise_id = noise.is_null() ? "" : noise.get<std::string>();
      e.snr = LevelFromJson(j.at("snr"));
      e.noise_offset = j.at("noise_offset").get<size_t>();
      plan.entries.push_back(std::move(e));
    } catch (const nlohmann::json::exception &ex) {
      throw Error(ErrorCode::kParse, "plan line " + std::to_string(line_no) + ": " + ex.what());
    } catch (const Error &ex) {
      throw Error(ErrorCode::kParse, "plan line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  if (!have_header) throw Error(ErrorCode::kParse, "empty mix plan");
  ValidateMixPlan(plan);
  return plan;
}

void SaveMixPlan(const MixPlan &plan, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write plan " + path);
  WriteMixPlan(plan, out);
}

MixPlan LoadMixPlan(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open plan " + path);
  return ReadMixPlan(in);
}

}  // namespace snrkit
