// tests/noise-mixer-test.cc

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

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "snrkit/audio/wav-io.h"
#include "snrkit/base/snrkit-error.h"
#include "snrkit/mix/mix-plan.h"
#include "snrkit/mix/noise-mixer.h"
#include "snrkit/mix/plan-executor.h"
#include "test-util.h"

using namespace snrkit;
using namespace snrkit::testing;

namespace {

ErrorCode CodeOf(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an snrkit::Error");
  return ErrorCode::kInvalidArgument;
}

// Alpha through logarithms, independent of the pow/sqrt route.
double AlphaOracle(double clean_energy, double noise_energy, double snr_db) {
  return std::exp(0.5 * (-snr_db / 10.0 * std::log(10.0) + std::log(clean_energy) - std::log(noise_energy)));
}

std::vector<std::string> Ids(const std::string &prefix, size_t n) {
  std::vector<std::string> ids;
  for (size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

std::vector<NoiseSource> Noises(size_t n, size_t length = 1000) {
  std::vector<NoiseSource> out;
  for (size_t i = 0; i < n; ++i) out.push_back({"n" + std::to_string(i), length});
  return out;
}

}  // namespace

TEST_CASE("SnrLevel parsing, labels and ordering") {
  CHECK(SnrLevel::Parse("clean").is_clean());
  CHECK(SnrLevel::Parse("CLEAN").is_clean());
  CHECK(SnrLevel::Parse("-15").db() == -15);
  CHECK(SnrLevel::Parse("+5").db() == 5);
  CHECK(SnrLevel::Decibels(-5).Label() == "-5");
  CHECK(CodeOf([] { SnrLevel::Parse("loud"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { SnrLevel::Parse("5dB"); }) == ErrorCode::kParse);
  CHECK(SnrLevel::Decibels(-20) < SnrLevel::Decibels(0));
  CHECK(SnrLevel::Decibels(20) < SnrLevel::Clean());

  const auto grid = DefaultSnrGrid();
  REQUIRE(grid.size() == 10);
  const int expected[] = {-20, -15, -10, -5, 0, 5, 10, 15, 20};
  for (int i = 0; i < 9; ++i) CHECK(grid[i] == SnrLevel::Decibels(expected[i]));
  CHECK(grid[9].is_clean());
  CHECK(ParseSnrGrid("-20,-15,-10,-5,0,5,10,15,20,clean") == grid);
  CHECK(ParseSnrGrid("3, clean") == std::vector<SnrLevel>{SnrLevel::Decibels(3), SnrLevel::Clean()});
}

TEST_CASE("compute_alpha anchors and guards") {
  CHECK(ComputeAlpha(1.0, 1.0, 0) == 1.0);
  CHECK(std::abs(ComputeAlpha(1.0, 1.0, 10) - 0.31622776601683794) < 1e-15);
  CHECK(ComputeAlpha(4.0, 1.0, 0) == 2.0);
  CHECK(CodeOf([] { ComputeAlpha(1.0, 0.0, 0); }) == ErrorCode::kSilentNoise);
  CHECK(CodeOf([] { ComputeAlpha(0.0, 1.0, 0); }) == ErrorCode::kSilentUtterance);
  CHECK(ComputeAlpha(AudioClip({1, 0, 0, 0}, 16000), AudioClip({0, 1, 0, 0}, 16000), 0) == 1.0);
  CHECK(CodeOf([] { ComputeAlpha(AudioClip({1}, 16000), AudioClip({0.0}, 16000), 0); }) == ErrorCode::kSilentNoise);
}

TEST_CASE("compute_alpha matches the logarithmic oracle") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> log_energy(-8, 8);
  std::uniform_int_distribution<int> snr(-30, 30);
  for (int i = 0; i < 2000; ++i) {
    const double ec = std::pow(10.0, log_energy(gen)), en = std::pow(10.0, log_energy(gen));
    const int s = snr(gen);
    const double oracle = AlphaOracle(ec, en, s);
    CHECK(std::abs(ComputeAlpha(ec, en, s) - oracle) <= 1e-12 * oracle);
  }
}

TEST_CASE("mix_at_snr examples") {
  AudioClip clean({1, 0, 0, 0}, 16000);
  AudioClip noise({0, 1, 0, 0}, 16000);
  CHECK(MixAtSnr(clean, noise, SnrLevel::Clean(), 0) == clean);
  AudioClip mixed = MixAtSnr(clean, noise, SnrLevel::Decibels(0), 0);
  CHECK(mixed == AudioClip({1, 1, 0, 0}, 16000));

  std::mt19937_64 gen(23);
  for (int i = 0; i < 50; ++i) {
    AudioClip c = RandomClip(gen, 500 + gen() % 500, 0.3);
    AudioClip n = RandomClip(gen, 200 + gen() % 2000, 0.1);
    AudioClip out = MixAtSnr(c, n, SnrLevel::Decibels(-15), gen() % 5000);
    CHECK(out.size() == c.size());
    CHECK(std::abs(MeasureSnr(c, out) + 15.0) <= 1e-6);
  }
}

TEST_CASE("noise shorter than the utterance loops from the offset") {
  AudioClip noise({1, 2, 3}, 16000);
  AudioClip seg = AdaptNoise(noise, 2, 7);
  CHECK(seg == AudioClip({3, 1, 2, 3, 1, 2, 3}, 16000));
  CHECK(AdaptNoise(noise, 4, 2) == AudioClip({2, 3}, 16000));

  // Alpha comes from the adapted segment: only the first two samples are used.
  AudioClip clean({1, 1}, 16000);
  AudioClip long_noise({1, 0, 0, 0, 5, 5, 5}, 16000);
  AudioClip out = MixAtSnr(clean, long_noise, SnrLevel::Decibels(0), 0);
  CHECK(std::abs(MeasureSnr(clean, out)) < 1e-9);
}

TEST_CASE("mix_at_snr errors") {
  AudioClip clean({0.5, 0.5, 0.5}, 16000);
  CHECK(CodeOf([&] { MixAtSnr(clean, AudioClip({0.1}, 8000), SnrLevel::Decibels(0)); }) ==
        ErrorCode::kShapeMismatch);
  CHECK(CodeOf([&] { MixAtSnr(clean, AudioClip({0, 0, 0, 0, 1}, 16000), SnrLevel::Decibels(0), 0); }) ==
        ErrorCode::kSilentNoise);
  CHECK(CodeOf([&] { MixAtSnr(AudioClip({0, 0}, 16000), AudioClip({1, 1}, 16000), SnrLevel::Decibels(0)); }) ==
        ErrorCode::kSilentUtterance);
}

TEST_CASE("mixing is covariant under clean gain") {
  std::mt19937_64 gen(29);
  for (int i = 0; i < 50; ++i) {
    AudioClip c = RandomClip(gen, 300, 0.4);
    AudioClip n = RandomClip(gen, 300, 0.2);
    const double g = 0.1 + 4.0 * std::uniform_real_distribution<double>()(gen);
    const int snr = static_cast<int>(gen() % 41) - 20;
    CHECK(std::abs(ComputeAlpha(c.Scaled(g), n, snr) - g * ComputeAlpha(c, n, snr)) <=
          1e-12 * g * ComputeAlpha(c, n, snr));
    AudioClip lhs = MixAtSnr(c.Scaled(g), n, SnrLevel::Decibels(snr));
    AudioClip rhs = MixAtSnr(c, n.Scaled(1.0 / g), SnrLevel::Decibels(snr)).Scaled(g);
    for (size_t k = 0; k < lhs.size(); ++k) CHECK(std::abs(lhs.samples()[k] - rhs.samples()[k]) <= 1e-9);
  }
}

TEST_CASE("build_mix_plan: ten utterances over the default grid") {
  for (uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL}) {
    MixPlan plan = BuildMixPlan(Ids("u", 10), Noises(10), DefaultSnrGrid(), seed, false);
    REQUIRE(plan.entries.size() == 10);
    for (const auto &[level, count] : CountPerLevel(plan)) CHECK(count == 1);
    std::set<std::string> noises;
    for (const auto &e : plan.entries) {
      if (e.snr.is_clean()) {
        CHECK(e.noise_id.empty());
        continue;
      }
      CHECK(noises.insert(e.noise_id).second);
      CHECK(e.noise_offset < 1000);
    }
    // Nine noisy levels, nine distinct clips; the Clean entry takes none.
    CHECK(noises.size() == 9);
    CHECK_NOTHROW(ValidateMixPlan(plan));
  }
}

TEST_CASE("build_mix_plan is deterministic and seed-sensitive") {
  const auto ids = Ids("utt", 57);
  const auto noises = Noises(80, 48000);
  MixPlan a = BuildMixPlan(ids, noises, DefaultSnrGrid(), 99, false);
  MixPlan b = BuildMixPlan(ids, noises, DefaultSnrGrid(), 99, false);
  CHECK(a == b);
  std::ostringstream sa, sb;
  WriteMixPlan(a, sa);
  WriteMixPlan(b, sb);
  CHECK(sa.str() == sb.str());
  CHECK(!(BuildMixPlan(ids, noises, DefaultSnrGrid(), 100, false) == a));
  for (int workers : {2, 3, 8, 64}) CHECK(BuildMixPlan(ids, noises, DefaultSnrGrid(), 99, false, workers) == a);
}

TEST_CASE("build_mix_plan guards") {
  CHECK(CodeOf([] { BuildMixPlan(Ids("u", 5), Noises(3), DefaultSnrGrid(), 1, false); }) ==
        ErrorCode::kInsufficientNoise);
  try {
    BuildMixPlan(Ids("u", 5), Noises(3), DefaultSnrGrid(), 1, false);
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("short by 2") != std::string::npos);
  }
  CHECK_NOTHROW(BuildMixPlan(Ids("u", 5), Noises(3), DefaultSnrGrid(), 1, true));
  CHECK(CodeOf([] { BuildMixPlan({"a", "a"}, Noises(3), DefaultSnrGrid(), 1, false); }) == ErrorCode::kDuplicateId);
  CHECK(CodeOf([] { BuildMixPlan({"a"}, Noises(3), {}, 1, false); }) == ErrorCode::kInvalidArgument);
  // All-clean grid needs no noise at all.
  CHECK_NOTHROW(BuildMixPlan(Ids("u", 4), {}, {SnrLevel::Clean()}, 1, false));
}

TEST_CASE("build_mix_plan: level balance and noise use on random inputs") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t n = gen() % 60;
    std::vector<SnrLevel> grid;
    const size_t levels = 1 + gen() % 12;
    for (size_t i = 0; i < levels; ++i) grid.push_back(SnrLevel::Decibels(static_cast<int>(i) * 3 - 10));
    if (gen() % 2) grid.push_back(SnrLevel::Clean());
    const bool reuse = gen() % 2;
    const size_t num_noise = reuse ? 1 + gen() % 10 : n + gen() % 5 + 1;
    MixPlan plan = BuildMixPlan(Ids("u", n), Noises(num_noise, gen() % 3 == 0 ? 0 : 500), grid, gen(), reuse);
    REQUIRE(plan.entries.size() == n);
    for (const auto &[level, count] : CountPerLevel(plan)) {
      CHECK(count >= n / grid.size());
      CHECK(count <= (n + grid.size() - 1) / grid.size());
    }
    CHECK_NOTHROW(ValidateMixPlan(plan));
    std::map<std::string, size_t> uses;
    for (const auto &e : plan.entries)
      if (!e.snr.is_clean()) ++uses[e.noise_id];
    // With reuse, clips are used evenly: cycles reshuffle the full list.
    size_t lo = SIZE_MAX, hi = 0;
    for (const auto &[id, count] : uses) {
      lo = std::min(lo, count);
      hi = std::max(hi, count);
    }
    if (!uses.empty() && uses.size() == num_noise) CHECK(hi - lo <= 1);
    if (!reuse) CHECK(hi <= 1);
  }
}

TEST_CASE("mix plan file round-trip and validation") {
  MixPlan plan = BuildMixPlan(Ids("u", 23), Noises(30, 777), DefaultSnrGrid(), 12345678901234ULL, false);
  std::stringstream ss;
  WriteMixPlan(plan, ss);
  const std::string text = ss.str();
  CHECK(text.find("\"format\":\"snrkit-mix-plan\"") != std::string::npos);
  CHECK(text.find("\"snr\":\"clean\"") != std::string::npos);
  std::istringstream in(text);
  CHECK(ReadMixPlan(in) == plan);

  std::istringstream bad_json("{\"format\":\"snrkit-mix-plan\",\"version\":1,\"seed\":1,\"allow_reuse\":false,\"grid\":[0]}\n{oops\n");
  CHECK(CodeOf([&] { ReadMixPlan(bad_json); }) == ErrorCode::kParse);

  MixPlan repeat = plan;
  repeat.entries[1].noise_id = repeat.entries[0].noise_id;
  repeat.entries[1].snr = SnrLevel::Decibels(0);
  repeat.entries[0].snr = SnrLevel::Decibels(0);
  if (repeat.entries[0].noise_id.empty()) repeat.entries[0].noise_id = repeat.entries[1].noise_id = "x";
  CHECK(CodeOf([&] { ValidateMixPlan(repeat); }) == ErrorCode::kDuplicateId);

  MixPlan off_grid = plan;
  off_grid.entries[0].snr = SnrLevel::Decibels(7);
  off_grid.entries[0].noise_id = "n0";
  CHECK(CodeOf([&] { ValidateMixPlan(off_grid); }) == ErrorCode::kInvalidArgument);
}

// ---- execute_plan ------------------------------------------------------------

namespace {

struct Fixture {
  std::filesystem::path dir;
  Manifest manifest;
  NoiseCatalog catalog;
};

// Utterances: sinusoids with peak 0.2; one silent utterance "silent".
Fixture MakeFixture(const std::string &name, size_t num_utts) {
  Fixture f;
  f.dir = TempDir(name);
  std::mt19937_64 gen(41);
  std::vector<ManifestEntry> entries;
  for (size_t i = 0; i < num_utts; ++i) {
    std::vector<double> s(8000 + 100 * i);
    for (size_t k = 0; k < s.size(); ++k) s[k] = 0.2 * std::sin(0.05 * static_cast<double>(k * (i + 1)));
    const std::string id = "u" + std::to_string(i);
    WriteWav(AudioClip(s, 16000), f.dir / (id + ".wav"));
    entries.push_back({id, id + ".wav", "text", "spk", Split::kTrain, {}, {}});
  }
  WriteWav(AudioClip(std::vector<double>(4000, 0.0), 16000), f.dir / "silent.wav");
  entries.push_back({"silent", "silent.wav", "", "spk", Split::kTrain, {}, {}});
  f.manifest = Manifest(entries, f.dir);
  std::vector<NoiseClip> clips;
  for (size_t i = 0; i < num_utts + 2; ++i) {
    const std::string id = "n" + std::to_string(i);
    WriteWav(RandomClip(gen, 12000, 0.3), f.dir / (id + ".wav"));
    clips.push_back({id, "White noise", id + ".wav"});
  }
  f.catalog = NoiseCatalog({{"White noise", "", 0, false}}, clips, f.dir);
  return f;
}

}  // namespace

TEST_CASE("execute_plan: clean identity, achieved SNR and error isolation") {
  Fixture f = MakeFixture("exec", 4);
  MixPlan plan;
  plan.seed = 3;
  plan.grid = {SnrLevel::Clean(), SnrLevel::Decibels(20), SnrLevel::Decibels(-5)};
  plan.entries = {{"u0", "", SnrLevel::Clean(), 0},
                  {"u1", "n1", SnrLevel::Decibels(20), 17},
                  {"u2", "missing-noise", SnrLevel::Decibels(-5), 0},
                  {"u3", "n3", SnrLevel::Decibels(-5), 11999},
                  {"silent", "n4", SnrLevel::Decibels(20), 0},
                  {"ghost", "n5", SnrLevel::Decibels(20), 0}};
  const auto out = f.dir / "out";
  MixReport report = ExecutePlan(plan, f.manifest, f.catalog, out);
  REQUIRE(report.rows.size() == 6);
  CHECK(report.failed == 2);
  CHECK(report.skipped == 1);
  std::map<std::string, MixReportRow> rows;
  for (const auto &r : report.rows) rows[r.utterance_id] = r;

  CHECK(rows["u0"].status == MixStatus::kOk);
  CHECK(ReadWav(out / "u0__clean.wav") == ReadWav(f.dir / "u0.wav"));
  // Same PCM payload byte for byte (both files carry the canonical 44-byte header).
  CHECK(ReadBytes(out / "u0__clean.wav") == ReadBytes(f.dir / "u0.wav"));
  CHECK(!rows["u0"].snr_achieved_db.has_value());

  REQUIRE(rows["u1"].snr_achieved_db.has_value());
  CHECK(std::abs(*rows["u1"].snr_achieved_db - 20.0) < 0.1);
  REQUIRE(rows["u3"].snr_achieved_db.has_value());
  CHECK(std::abs(*rows["u3"].snr_achieved_db + 5.0) < 0.1);
  CHECK(std::abs(MeasureSnr(ReadWav(f.dir / "u1.wav"), ReadWav(out / "u1__20.wav")) - 20.0) < 0.1);

  CHECK(rows["u2"].status == MixStatus::kFailed);
  CHECK(rows["u2"].message.find("missing-noise") != std::string::npos);
  CHECK(rows["ghost"].status == MixStatus::kFailed);
  CHECK(rows["silent"].status == MixStatus::kSkipped);
  CHECK(!std::filesystem::exists(out / "u2__-5.wav"));

  std::ostringstream csv;
  WriteMixReportCsv(report, csv);
  const std::string text = csv.str();
  CHECK(text.rfind("utterance_id,snr_target,snr_achieved_db,clipped_samples,status\n", 0) == 0);
  CHECK(text.find("u0,clean,,0,ok\n") != std::string::npos);
  CHECK(text.find("silent,20,,0,skipped: silent utterance\n") != std::string::npos);

  Manifest mixed = MixedManifest(report, plan, f.manifest);
  CHECK(mixed.size() == 3);
  CHECK(mixed.Find("u1")->attributes.at("snr") == "20");
  CHECK(mixed.Find("u1")->attributes.at("noise_id") == "n1");
}

TEST_CASE("execute_plan output does not depend on worker count") {
  Fixture f = MakeFixture("exec-workers", 12);
  std::vector<std::string> ids;
  for (const auto &e : f.manifest.entries())
    if (e.utterance_id != "silent") ids.push_back(e.utterance_id);
  std::vector<NoiseSource> noises;
  for (const auto &c : f.catalog.clips()) noises.push_back({c.noise_id, 12000});
  MixPlan plan = BuildMixPlan(ids, noises, DefaultSnrGrid(), 8, false);
  MixReport one = ExecutePlan(plan, f.manifest, f.catalog, f.dir / "w1", 1);
  MixReport four = ExecutePlan(plan, f.manifest, f.catalog, f.dir / "w4", 4);
  std::ostringstream a, b;
  WriteMixReportCsv(one, a);
  WriteMixReportCsv(four, b);
  CHECK(a.str() == b.str());
  for (const auto &row : one.rows)
    CHECK(ReadBytes(f.dir / "w1" / row.output_file) == ReadBytes(f.dir / "w4" / row.output_file));
}
