// tests/cli-test.cc

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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "snrkit/audio/wav-io.h"
#include "snrkit/base/csv.h"
#include "snrkit/cli/commands.h"
#include "snrkit/corpus/manifest.h"
#include "snrkit/corpus/noise-catalog.h"
#include "snrkit/feat/feature-io.h"
#include "snrkit/feat/log-mel.h"
#include "snrkit/mix/mix-plan.h"
#include "test-util.h"

using namespace snrkit;
using namespace snrkit::testing;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Run(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "-q");
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadText(const std::filesystem::path &path) { return ReadBytes(path); }

// n utterances (0.25 s of quiet noise) and m noise clips under a train-side class.
void MakeCorpus(const std::filesystem::path &dir, size_t n, size_t m) {
  std::mt19937_64 gen(3);
  std::vector<ManifestEntry> entries;
  for (size_t i = 0; i < n; ++i) {
    const std::string id = "u" + std::to_string(1000 + i);
    WriteWav(RandomClip(gen, 4000, 0.02), dir / (id + ".wav"));
    entries.push_back({id, id + ".wav", "aku mangan sega", "s" + std::to_string(i % 7), Split::kTrain, {}, {}});
  }
  SaveManifest(Manifest(entries), dir / "manifest.jsonl");
  std::vector<NoiseClip> clips;
  for (size_t i = 0; i < m; ++i) {
    const std::string id = "n" + std::to_string(i);
    WriteWav(RandomClip(gen, 3000, 0.1), dir / (id + ".wav"));
    clips.push_back({id, "White noise", id + ".wav"});
  }
  SaveNoiseCatalog(NoiseCatalog(DefaultNoiseCatalog().classes(), clips), dir / "catalog.json");
}

}  // namespace

TEST_CASE("plan summary, shortfall and determinism") {
  auto dir = TempDir("cli-plan");
  MakeCorpus(dir, 100, 95);
  const std::string m = (dir / "manifest.jsonl").string(), c = (dir / "catalog.json").string();
  CliResult r = Run({"plan", "--manifest", m, "--catalog", c, "--out", (dir / "a.jsonl").string(), "--seed", "4"});
  REQUIRE(r.code == kExitOk);
  for (const char *level : {"-20", "-15", "-10", "-5", "0", "5", "10", "15", "20", "clean"})
    CHECK(r.out.find(std::string("snr ") + level + ": 10 utterances") != std::string::npos);
  CHECK(r.out.find("noise reuse: off, 90 distinct clips over 90 noisy entries") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "a.jsonl.config.json"));

  CHECK(Run({"plan", "--manifest", m, "--catalog", c, "--out", (dir / "b.jsonl").string(), "--seed", "4",
             "--workers", "3"})
            .code == kExitOk);
  CHECK(ReadBytes(dir / "a.jsonl") == ReadBytes(dir / "b.jsonl"));

  auto small = TempDir("cli-plan-short");
  MakeCorpus(small, 100, 50);
  r = Run({"plan", "--manifest", (small / "manifest.jsonl").string(), "--catalog", (small / "catalog.json").string(),
           "--out", (small / "p.jsonl").string()});
  CHECK(r.code == kExitInvalid);
  CHECK(r.err.find("insufficient") != std::string::npos);
  CHECK(r.err.find("short by 40") != std::string::npos);
  CHECK(Run({"plan", "--manifest", (small / "manifest.jsonl").string(), "--catalog",
             (small / "catalog.json").string(), "--out", (small / "p.jsonl").string(), "--allow-reuse"})
            .code == kExitOk);

  CHECK(Run({"plan", "--manifest", m}).code == kExitInvalid);
  CHECK(Run({"plan", "--manifest", m, "--catalog", c, "--out", "x", "--grid", "1,loud"}).code == kExitInvalid);
  CHECK(Run({}).code == kExitInvalid);
}

TEST_CASE("mix writes one file per entry and isolates failures") {
  auto dir = TempDir("cli-mix");
  MakeCorpus(dir, 10, 10);
  const std::string m = (dir / "manifest.jsonl").string(), c = (dir / "catalog.json").string();
  const std::string plan = (dir / "plan.jsonl").string();
  REQUIRE(Run({"plan", "--manifest", m, "--catalog", c, "--out", plan, "--seed", "1"}).code == kExitOk);

  CliResult r = Run({"mix", "--plan", plan, "--manifest", m, "--catalog", c, "--out-dir", (dir / "ok").string()});
  CHECK(r.code == kExitOk);
  size_t wavs = 0;
  for (const auto &f : std::filesystem::directory_iterator(dir / "ok")) wavs += f.path().extension() == ".wav";
  CHECK(wavs == 10);
  const std::string csv = ReadText(dir / "ok" / "mix_report.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
  // Achieved SNR column is close to each target after re-measurement.
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const auto cells = CsvSplit(line);
    if (cells[1] == "clean") continue;
    CHECK(std::abs(std::stod(cells[2]) - std::stod(cells[1])) < 0.5);
  }
  CHECK(LoadManifest(dir / "ok" / "manifest.jsonl").size() == 10);

  // Remove the noise of one noisy entry.
  MixPlan p = LoadMixPlan(plan);
  std::string victim;
  for (const auto &e : p.entries)
    if (!e.noise_id.empty()) victim = e.noise_id;
  std::filesystem::remove(dir / (victim + ".wav"));
  r = Run({"mix", "--plan", plan, "--manifest", m, "--catalog", c, "--out-dir", (dir / "partial").string()});
  CHECK(r.code == kExitOk);
  wavs = 0;
  for (const auto &f : std::filesystem::directory_iterator(dir / "partial")) wavs += f.path().extension() == ".wav";
  CHECK(wavs == 9);
  CHECK(ReadText(dir / "partial" / "mix_report.csv").find("failed: ") != std::string::npos);
  r = Run({"mix", "--plan", plan, "--manifest", m, "--catalog", c, "--out-dir", (dir / "strict").string(), "--strict"});
  CHECK(r.code == kExitPartial);
}

TEST_CASE("score command") {
  auto dir = TempDir("cli-score");
  {
    std::ofstream f(dir / "one.jsonl");
    f << "{\"id\":\"a\",\"ref\":\"aku mangan sega\",\"hyp\":\"aku mangan\"}\n";
  }
  CliResult r = Run({"score", "--input", (dir / "one.jsonl").string(), "--out-dir", (dir / "one").string()});
  REQUIRE(r.code == kExitOk);
  const std::string csv = ReadText(dir / "one" / "wer_by_snr.csv");
  CHECK(csv.find("\n,cased,,,,,33.33\n") != std::string::npos);
  const auto report = nlohmann::json::parse(ReadText(dir / "one" / "report.json"));
  CHECK(report.dump().find("33.33") != std::string::npos);
  CHECK(r.out.find("WER 33.33") != std::string::npos);
  for (const char *f : {"char_errors.csv", "word_edits.csv", "run-config.json"})
    CHECK(std::filesystem::exists(dir / "one" / f));

  {
    std::ofstream f(dir / "perfect.jsonl");
    for (int i = 0; i < 5; ++i)
      f << "{\"id\":\"p" << i << "\",\"ref\":\"kula\",\"hyp\":\"kula\",\"snr\":" << (i * 5 - 10) << "}\n";
  }
  r = Run({"score", "--input", (dir / "perfect.jsonl").string(), "--out-dir", (dir / "perfect").string()});
  REQUIRE(r.code == kExitOk);
  std::istringstream rows(ReadText(dir / "perfect" / "wer_by_snr.csv"));
  std::string line;
  std::getline(rows, line);
  std::getline(rows, line);
  CHECK(line == "condition,casing,-10,-5,0,5,10,clean,+snr,-snr,0db,all");
  while (std::getline(rows, line)) {
    const auto cells = CsvSplit(line);
    for (size_t i = 2; i < cells.size(); ++i) CHECK((cells[i] == "0.00" || cells[i].empty()));
  }

  {
    std::ofstream f(dir / "empty.jsonl");
    f << "garbage\n";
  }
  r = Run({"score", "--input", (dir / "empty.jsonl").string(), "--out-dir", (dir / "empty").string()});
  CHECK(r.code == kExitInvalid);
  CHECK(r.err.find("line 1") != std::string::npos);
  CHECK(Run({"score", "--input", (dir / "one.jsonl").string(), "--out-dir", "x", "--casing", "lower"}).code ==
        kExitInvalid);
}

TEST_CASE("augment command") {
  auto dir = TempDir("cli-augment");
  MakeCorpus(dir, 6, 0);
  const std::string m = (dir / "manifest.jsonl").string();
  CliResult bad = Run({"augment", "--manifest", m, "--out-dir", (dir / "bad").string(), "--preset", "11"});
  CHECK(bad.code == kExitInvalid);
  CHECK(!std::filesystem::exists(dir / "bad"));

  REQUIRE(Run({"augment", "--manifest", m, "--out-dir", (dir / "p0").string(), "--preset", "0"}).code == kExitOk);
  REQUIRE(Run({"augment", "--manifest", m, "--out-dir", (dir / "p9").string(), "--preset", "9"}).code == kExitOk);
  REQUIRE(Run({"augment", "--manifest", m, "--out-dir", (dir / "p9b").string(), "--preset", "9"}).code == kExitOk);
  const Manifest manifest = LoadManifest(m);
  for (const auto &e : manifest.entries()) {
    const FeatureMatrix plain = ComputeLogMel(ReadWav(manifest.ResolveAudioPath(e)));
    CHECK(ReadFeatures(dir / "p0" / (e.utterance_id + ".feat")) == plain);
    CHECK(!(ReadFeatures(dir / "p9" / (e.utterance_id + ".feat")) == plain));
    CHECK(ReadBytes(dir / "p9" / (e.utterance_id + ".feat")) == ReadBytes(dir / "p9b" / (e.utterance_id + ".feat")));
  }
  const auto i0 = nlohmann::json::parse(ReadText(dir / "p0" / "index.json"));
  const auto i9 = nlohmann::json::parse(ReadText(dir / "p9" / "index.json"));
  CHECK(i0["mean_masked_fraction"].get<double>() == 0.0);
  CHECK(i9["mean_masked_fraction"].get<double>() > 0.0);
  CHECK(ReadBytes(dir / "p9" / "index.json") == ReadBytes(dir / "p9b" / "index.json"));

  // Overrides replace single preset fields.
  REQUIRE(Run({"augment", "--manifest", m, "--out-dir", (dir / "custom").string(), "--preset", "0", "--freq-prob",
               "0.1", "--freq-len", "5", "--freq-min", "2"})
              .code == kExitOk);
  const auto ic = nlohmann::json::parse(ReadText(dir / "custom" / "index.json"));
  CHECK(ic["mean_masked_fraction"].get<double>() > 0.0);
}

TEST_CASE("stats, split-noise and catalog commands") {
  auto dir = TempDir("cli-stats");
  MakeCorpus(dir, 8, 4);
  CliResult r = Run({"stats", "--manifest", (dir / "manifest.jsonl").string()});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["speaker_disjoint"] == true);

  std::vector<ManifestEntry> entries = LoadManifest(dir / "manifest.jsonl").entries();
  entries[0].split = Split::kTest;  // its speaker also has train utterances
  SaveManifest(Manifest(entries), dir / "overlap.jsonl");
  r = Run({"stats", "--manifest", (dir / "overlap.jsonl").string()});
  CHECK(r.code == kExitInvalid);
  CHECK(nlohmann::json::parse(r.out)["overlapping_speakers"] == nlohmann::json::array({"s0"}));

  REQUIRE(Run({"catalog", "--out", (dir / "default.json").string()}).code == kExitOk);
  r = Run({"split-noise", "--catalog", (dir / "default.json").string(), "--out-train", (dir / "tr.json").string(),
           "--out-heldout", (dir / "ho.json").string()});
  REQUIRE(r.code == kExitOk);
  CHECK(LoadNoiseCatalog(dir / "ho.json").classes().size() == 8);
  CHECK(LoadNoiseCatalog(dir / "tr.json").classes().size() == 17);
  r = Run({"split-noise", "--catalog", (dir / "default.json").string(), "--held-out", "Boom; clang",
           "--out-train", (dir / "tr2.json").string(), "--out-heldout", (dir / "ho2.json").string()});
  REQUIRE(r.code == kExitOk);
  CHECK(LoadNoiseCatalog(dir / "ho2.json").classes().size() == 2);
  r = Run({"split-noise", "--catalog", (dir / "default.json").string(), "--held-out", "Nonexistent", "--out-train",
           (dir / "tr3.json").string(), "--out-heldout", (dir / "ho3.json").string()});
  CHECK(r.code == kExitInvalid);
  CHECK(r.err.find("Nonexistent") != std::string::npos);
}
