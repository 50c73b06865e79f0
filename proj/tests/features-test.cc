// tests/features-test.cc

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
#include <complex>
#include <cstring>
#include <numbers>
#include <random>

#include "snrkit/audio/wav-io.h"
#include "snrkit/base/snrkit-error.h"
#include "snrkit/corpus/manifest.h"
#include "snrkit/feat/augment-batch.h"
#include "snrkit/feat/fft.h"
#include "snrkit/feat/feature-io.h"
#include "snrkit/feat/log-mel.h"
#include "snrkit/feat/spec-augment.h"
#include "test-util.h"

using namespace snrkit;
using namespace snrkit::testing;

namespace {

FeatureMatrix RandomFeatures(std::mt19937_64 &gen, size_t frames, size_t bins) {
  std::normal_distribution<float> d(-5.0f, 3.0f);
  std::vector<float> v(frames * bins);
  for (auto &x : v) x = d(gen);
  return FeatureMatrix(frames, bins, 0.01, std::move(v));
}

// Rows (or columns) that are fully masked, i.e. every cell equals the fill.
std::vector<bool> MaskedLines(const FeatureMatrix &in, const FeatureMatrix &out, bool time_axis) {
  const float fill = in.MinValue();
  const size_t n = time_axis ? out.frame_count() : out.bin_count();
  const size_t m = time_axis ? out.bin_count() : out.frame_count();
  std::vector<bool> masked(n);
  for (size_t i = 0; i < n; ++i) {
    bool all = true;
    for (size_t j = 0; j < m && all; ++j) {
      const size_t t = time_axis ? i : j, f = time_axis ? j : i;
      all = out.at(t, f) == fill;
    }
    masked[i] = all;
  }
  return masked;
}

size_t CountRuns(const std::vector<bool> &v) {
  size_t runs = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] && (i == 0 || !v[i - 1])) ++runs;
  return runs;
}

double OracleMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double OracleHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

}  // namespace

TEST_CASE("fft matches a naive dft") {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> d;
  for (size_t n : {1u, 2u, 4u, 8u, 64u, 512u}) {
    std::vector<std::complex<double>> x(n);
    for (auto &v : x) v = {d(gen), d(gen)};
    std::vector<std::complex<double>> y = x;
    Fft(n).Forward(y);
    for (size_t k = 0; k < n; ++k) {
      std::complex<double> acc = 0;
      for (size_t t = 0; t < n; ++t)
        acc += x[t] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k * t) / static_cast<double>(n));
      CHECK(std::abs(acc - y[k]) < 1e-9 * static_cast<double>(n));
    }
  }
  CHECK_THROWS_AS(Fft(12), Error);
  CHECK(NextPowerOfTwo(400) == 512);
  CHECK(NextPowerOfTwo(512) == 512);
  CHECK(IsPowerOfTwo(1));
  CHECK(!IsPowerOfTwo(0));
}

TEST_CASE("frame count agrees with a brute-force enumerator") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 1000; ++i) {
    const size_t window = 1 + gen() % 500, hop = 1 + gen() % 300, n = gen() % 5000;
    size_t frames = 0;
    for (size_t start = 0; start + window <= n; start += hop) ++frames;
    CHECK(NumFrames(n, window, hop) == frames);
  }
  MelOptions opts;
  AudioClip clip(std::vector<double>(opts.window_samples + opts.hop_samples, 0.01), 16000);
  CHECK(ComputeLogMel(clip, opts).frame_count() == 2);
}

TEST_CASE("log-mel of silence is the log floor") {
  MelOptions opts;
  FeatureMatrix m = ComputeLogMel(AudioClip(std::vector<double>(16000, 0.0), 16000), opts);
  CHECK(m.frame_count() == 98);
  CHECK(m.bin_count() == 80);
  CHECK(m.hop_seconds() == doctest::Approx(0.01));
  for (float v : m.values()) CHECK(v == static_cast<float>(std::log(opts.floor)));
}

TEST_CASE("filterbank edges follow the mel formula") {
  MelOptions opts;
  MelFilterbank fb(opts, 512);
  const double top = OracleMel(8000.0);
  for (size_t b = 0; b < opts.num_bins; ++b) {
    auto band = fb.BandHz(b);
    for (int k = 0; k < 3; ++k)
      CHECK(band[k] == doctest::Approx(OracleHz(top * static_cast<double>(b + k) / (opts.num_bins + 1))).epsilon(1e-9));
  }
  CHECK(HzToMel(1000.0) == doctest::Approx(OracleMel(1000.0)).epsilon(1e-12));
}

TEST_CASE("a 1 kHz tone peaks in the band containing 1 kHz") {
  for (size_t bins : {23u, 40u, 80u}) {
    MelOptions opts;
    opts.num_bins = bins;
    std::vector<double> s(16000);
    for (size_t k = 0; k < s.size(); ++k) s[k] = 0.5 * std::sin(2.0 * std::numbers::pi * 1000.0 * k / 16000.0);
    FeatureMatrix m = ComputeLogMel(AudioClip(s, 16000), opts);
    std::vector<double> mean(bins, 0.0);
    for (size_t t = 0; t < m.frame_count(); ++t)
      for (size_t b = 0; b < bins; ++b) mean[b] += m.at(t, b);
    const size_t best = std::max_element(mean.begin(), mean.end()) - mean.begin();
    const double top = OracleMel(8000.0);
    const double lo = OracleHz(top * best / (bins + 1)), hi = OracleHz(top * (best + 2) / (bins + 1));
    CHECK(lo <= 1000.0);
    CHECK(hi >= 1000.0);
  }
}

TEST_CASE("log-mel is monotone in gain") {
  std::mt19937_64 gen(9);
  for (int i = 0; i < 10; ++i) {
    AudioClip clip = RandomClip(gen, 4000, 0.2);
    const double g = 1.0 + 3.0 * std::uniform_real_distribution<double>()(gen);
    FeatureMatrix a = ComputeLogMel(clip), b = ComputeLogMel(clip.Scaled(g));
    for (size_t k = 0; k < a.size(); ++k) CHECK(b.values()[k] >= a.values()[k]);
  }
}

TEST_CASE("log-mel errors") {
  CHECK_THROWS_AS(ComputeLogMel(AudioClip(std::vector<double>(399, 0.1), 16000)), Error);
  CHECK_THROWS_AS(ComputeLogMel(AudioClip(std::vector<double>(4000, 0.1), 8000)), Error);
}

TEST_CASE("masking presets hold their reference values") {
  struct Row {
    double tp;
    int tl, tm;
    double fp;
    int fl, fm;
    const char *desc;
  };
  const Row rows[] = {{0, 0, 0, 0, 0, 0, "Baseline"},
                      {.05, 10, 2, 0, 0, 0, "Light Time Masking Only"},
                      {.10, 15, 2, 0, 0, 0, "Medium Time Masking Only"},
                      {.20, 20, 3, 0, 0, 0, "Heavy Time Masking Only"},
                      {0, 0, 0, .05, 10, 1, "Light Frequency Masking Only"},
                      {0, 0, 0, .10, 15, 2, "Medium Frequency Masking Only"},
                      {.05, 10, 2, .05, 10, 1, "Balanced Light"},
                      {.10, 12, 2, .10, 12, 2, "Balanced Medium"},
                      {.15, 15, 3, .05, 8, 1, "Time-Heavy Mix"},
                      {.05, 8, 1, .15, 15, 3, "Frequency-Heavy Mix"},
                      {.20, 20, 3, .15, 18, 3, "Aggressive"}};
  REQUIRE(kNumSpecAugmentPresets == 11);
  for (int id = 0; id < 11; ++id) {
    const SpecAugmentConfig c = SpecAugmentPreset(id);
    const Row &r = rows[id];
    CHECK(c.label == id);
    CHECK(c.time_prob == r.tp);
    CHECK(c.time_len == r.tl);
    CHECK(c.time_min == r.tm);
    CHECK(c.freq_prob == r.fp);
    CHECK(c.freq_len == r.fl);
    CHECK(c.freq_min == r.fm);
    CHECK(c.description.find(r.desc) != std::string::npos);
  }
  CHECK(kRecommendedSpecAugmentPreset == 9);
  CHECK_THROWS_AS(SpecAugmentPreset(11), Error);
  CHECK_THROWS_AS(SpecAugmentPreset(-1), Error);
}

TEST_CASE("mask count rule") {
  CHECK(NumMasks(0.0, 10, 5, 100) == 0);
  CHECK(NumMasks(0.5, 0, 5, 100) == 0);
  CHECK(NumMasks(0.15, 15, 3, 80) == 3);
  CHECK(NumMasks(0.05, 8, 1, 3000) == 19);
  CHECK(NumMasks(0.20, 20, 3, 3000) == 30);
  SpecAugmentConfig bad;
  bad.time_prob = 1.5;
  CHECK_THROWS_AS(ValidateSpecAugmentConfig(bad), Error);
}

TEST_CASE("preset 0 is the identity") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 20; ++i) {
    FeatureMatrix m = RandomFeatures(gen, 1 + gen() % 200, 1 + gen() % 90);
    SpecAugmentResult r = ApplySpecAugment(m, SpecAugmentPreset(0), gen());
    CHECK(r.features == m);
    CHECK(r.masked_fraction == 0.0);
    CHECK(r.time_masks.empty());
    CHECK(r.freq_masks.empty());
  }
}

TEST_CASE("preset 9 on 3000x80") {
  std::mt19937_64 gen(13);
  FeatureMatrix m = RandomFeatures(gen, 3000, 80);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    SpecAugmentResult r = ApplySpecAugment(m, SpecAugmentPreset(9), seed);
    CHECK(CountRuns(MaskedLines(m, r.features, true)) >= 1);
    CHECK(CountRuns(MaskedLines(m, r.features, false)) >= 3);
    const float fill = m.MinValue();
    for (size_t k = 0; k < m.size(); ++k) {
      const float v = r.features.values()[k];
      CHECK((v == fill || std::memcmp(&v, &m.values()[k], sizeof v) == 0));
    }
    CHECK(!r.axis_saturated);
  }
  SpecAugmentResult a = ApplySpecAugment(m, SpecAugmentPreset(9), 77);
  SpecAugmentResult b = ApplySpecAugment(m, SpecAugmentPreset(9), 77);
  CHECK(SerializeFeatures(a.features) == SerializeFeatures(b.features));
  CHECK(!(ApplySpecAugment(m, SpecAugmentPreset(9), 78).features == a.features));
}

TEST_CASE("masking properties on random matrices") {
  std::mt19937_64 gen(17);
  for (int i = 0; i < 300; ++i) {
    FeatureMatrix m = RandomFeatures(gen, 1 + gen() % 300, 1 + gen() % 100);
    const SpecAugmentConfig c = SpecAugmentPreset(gen() % 11);
    SpecAugmentResult r = ApplySpecAugment(m, c, gen());
    REQUIRE(r.features.frame_count() == m.frame_count());
    REQUIRE(r.features.bin_count() == m.bin_count());
    const float fill = m.MinValue();
    size_t masked = 0;
    for (size_t k = 0; k < m.size(); ++k) {
      const float v = r.features.values()[k];
      CHECK((v == m.values()[k] || v == fill));
      if (v != m.values()[k]) ++masked;
    }
    CHECK(static_cast<double>(masked) / m.size() <= r.masked_fraction + 1e-12);
    CHECK(r.time_masks.size() ==
          static_cast<size_t>(NumMasks(c.time_prob, c.time_len, c.time_min, m.frame_count())));
    CHECK(r.freq_masks.size() == static_cast<size_t>(NumMasks(c.freq_prob, c.freq_len, c.freq_min, m.bin_count())));
    for (const Mask &mk : r.time_masks) {
      CHECK(mk.width >= 1);
      CHECK(mk.width <= static_cast<size_t>(c.time_len));
      CHECK(mk.start + mk.width <= m.frame_count());
    }
    for (const Mask &mk : r.freq_masks) {
      CHECK(mk.width >= 1);
      CHECK(mk.width <= static_cast<size_t>(c.freq_len));
      CHECK(mk.start + mk.width <= m.bin_count());
    }
    // A second pass never raises a value.
    SpecAugmentResult again = ApplySpecAugment(r.features, c, gen());
    for (size_t k = 0; k < m.size(); ++k) CHECK(again.features.values()[k] <= r.features.values()[k]);
  }
}

TEST_CASE("feature file round-trip") {
  std::mt19937_64 gen(19);
  FeatureMatrix m = RandomFeatures(gen, 37, 13);
  const std::string bytes = SerializeFeatures(m);
  CHECK(bytes.size() == 24 + 37 * 13 * 4);
  CHECK(bytes.substr(0, 4) == "SKFM");
  CHECK(DeserializeFeatures(bytes) == m);
  CHECK_THROWS_AS(DeserializeFeatures(bytes.substr(0, 30)), Error);
  CHECK_THROWS_AS(DeserializeFeatures("XXXX" + bytes.substr(4)), Error);
  auto dir = TempDir("feat-io");
  WriteFeatures(m, dir / "m.feat");
  CHECK(ReadFeatures(dir / "m.feat") == m);
}

namespace {

Manifest ToneManifest(const std::filesystem::path &dir, size_t n) {
  std::mt19937_64 gen(23);
  std::vector<ManifestEntry> entries;
  for (size_t i = 0; i < n; ++i) {
    const std::string id = "t" + std::to_string(i);
    WriteWav(RandomClip(gen, 8000 + 160 * (i % 7), 0.2), dir / (id + ".wav"));
    entries.push_back({id, id + ".wav", "x", "s", Split::kTrain, {}, {}});
  }
  return Manifest(entries, dir);
}

}  // namespace

TEST_CASE("augment_batch determinism, order independence and coverage ordering") {
  auto dir = TempDir("augment");
  Manifest manifest = ToneManifest(dir, 100);
  AugmentReport a = AugmentBatch(manifest, SpecAugmentPreset(9), 5, dir / "a", {}, 1);
  AugmentReport b = AugmentBatch(manifest, SpecAugmentPreset(9), 5, dir / "b", {}, 4);
  REQUIRE(a.items.size() == 100);
  CHECK(a.failed == 0);
  for (size_t i = 0; i < a.items.size(); ++i)
    CHECK(ReadBytes(dir / "a" / a.items[i].feature_file) == ReadBytes(dir / "b" / b.items[i].feature_file));
  CHECK(std::filesystem::exists(dir / "a" / "index.json"));

  std::vector<ManifestEntry> reversed(manifest.entries().rbegin(), manifest.entries().rend());
  AugmentReport c = AugmentBatch(Manifest(reversed, dir), SpecAugmentPreset(9), 5, dir / "c");
  for (size_t i = 0; i < a.items.size(); ++i)
    CHECK(ReadBytes(dir / "a" / a.items[i].feature_file) == ReadBytes(dir / "c" / c.items[i].feature_file));

  AugmentReport light = AugmentBatch(manifest, SpecAugmentPreset(1), 5, dir / "p1");
  AugmentReport heavy = AugmentBatch(manifest, SpecAugmentPreset(10), 5, dir / "p10");
  CHECK(heavy.MeanMaskedFraction() > light.MeanMaskedFraction());

  AugmentReport none = AugmentBatch(manifest, SpecAugmentPreset(0), 5, dir / "p0");
  CHECK(none.MeanMaskedFraction() == 0.0);
  CHECK(ReadFeatures(dir / "p0" / none.items[3].feature_file) ==
        ComputeLogMel(ReadWav(manifest.ResolveAudioPath(*manifest.Find(none.items[3].utterance_id)))));
}

TEST_CASE("augment_batch edge cases") {
  auto dir = TempDir("augment-edge");
  AugmentReport empty = AugmentBatch(Manifest({}, dir), SpecAugmentPreset(9), 1, dir / "e");
  CHECK(empty.items.empty());
  CHECK(empty.failed == 0);
  CHECK(empty.MeanMaskedFraction() == 0.0);

  Manifest m = ToneManifest(dir, 3);
  std::vector<ManifestEntry> entries = m.entries();
  entries.push_back({"gone", "gone.wav", "x", "s", Split::kTrain, {}, {}});
  AugmentReport r = AugmentBatch(Manifest(entries, dir), SpecAugmentPreset(9), 1, dir / "f");
  CHECK(r.items.size() == 4);
  CHECK(r.failed == 1);
  for (const auto &item : r.items) CHECK(item.ok == (item.utterance_id != "gone"));
}
