// corpus/synthetic-corpus.cc

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

#include "snrkit/corpus/synthetic-corpus.h"

#include <cctype>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "snrkit/audio/wav-io.h"
#include "snrkit/base/random.h"
#include "snrkit/base/snrkit-error.h"
#include "snrkit/corpus/manifest.h"
#include "snrkit/corpus/noise-catalog.h"

namespace snrkit {

namespace {

const std::vector<std::string> &Vocabulary() {
  static const std::vector<std::string> kWords = {
      "aku",    "mangan", "sega",    "omah",   "banyu",   "dalan",  "kali",   "gunung",
      "sawah",  "pasar",  "sekolah", "kanca",  "bapak",   "ibu",    "adhik",  "kakang",
      "esuk",   "sore",   "wengi",   "panas",  "adhem",   "gedhe",  "cilik",  "apik",
      "rame",   "sepi",   "lunga",   "teka",   "turu",    "maca",   "nulis",  "mlaku",
      "udan",   "srengenge", "rembulan", "lintang", "wit", "kembang", "manuk",  "iwak"};
  return kWords;
}

AudioClip MakeTone(size_t index, int rate, Rng &rng) {
  const size_t n = static_cast<size_t>(rate) + static_cast<size_t>(rng.UniformInt(0, rate / 2));
  const double f0 = 110.0 + 12.0 * static_cast<double>(index);
  std::vector<double> s(n);
  for (size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / rate;
    const double envelope = 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n - 1));
    double v = 0.0;
    for (int h = 1; h <= 4; ++h) v += std::sin(2.0 * M_PI * f0 * h * t) / h;
    s[i] = 0.12 * envelope * v;
  }
  return AudioClip(std::move(s), rate);
}

AudioClip MakeNoise(size_t index, int rate, Rng &rng) {
  const size_t n = 2 * static_cast<size_t>(rate);
  std::vector<double> s(n);
  double state = 0.0;
  const bool lowpass = index % 2 == 1;
  for (size_t i = 0; i < n; ++i) {
    const double white = rng.Gaussian();
    state = 0.95 * state + 0.05 * white;
    s[i] = lowpass ? state : white;
  }
  // Normalize to rms 0.1.
  double energy = 0.0;
  for (double v : s) energy += v * v;
  const double gain = 0.1 / std::sqrt(energy / static_cast<double>(n));
  for (double &v : s) v *= gain;
  return AudioClip(std::move(s), rate);
}

std::string Join(const std::vector<std::string> &words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i];
  }
  return out;
}

}  // namespace

SyntheticCorpus GenerateSyntheticCorpus(const std::filesystem::path &out_dir,
                                        const SyntheticCorpusOptions &options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir / "audio", ec);
  std::filesystem::create_directories(out_dir / "noise", ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + out_dir.string());

  SyntheticCorpus corpus;
  corpus.manifest_path = out_dir / "manifest.jsonl";
  corpus.catalog_path = out_dir / "noise-catalog.json";
  corpus.hypotheses_path = out_dir / "hypotheses.jsonl";

  Rng rng(options.seed);
  const auto &vocab = Vocabulary();
  const size_t num_speakers = std::max<size_t>(2, options.num_utterances / 2);
  const size_t test_speakers = std::max<size_t>(1, num_speakers / 5);

  std::vector<ManifestEntry> entries;
  std::ofstream hyps(corpus.hypotheses_path, std::ios::binary | std::ios::trunc);
  if (!hyps) throw Error(ErrorCode::kIo, "cannot write " + corpus.hypotheses_path.string());
  for (size_t i = 0; i < options.num_utterances; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "utt%03zu", i);
    const AudioClip clip = MakeTone(i, options.sample_rate_hz, rng);
    const std::string rel = "audio/" + std::string(id) + ".wav";
    WriteWav(clip, out_dir / rel);

    // Distinct words, so any token absent from the reference forces one edit.
    const size_t length = 4 + i % 4;
    std::vector<size_t> pick = SeededPermutation(vocab.size(), DeriveSeed(options.seed, i));
    std::vector<std::string> ref;
    for (size_t k = 0; k < length; ++k) ref.push_back(vocab[pick[k]]);

    PlantedErrors planted;
    planted.id = id;
    planted.ref_words = length;
    planted.substitutions = i % 3;
    planted.deletions = (i / 3) % 2;
    planted.case_changes = i % 4 == 0 ? 1 : 0;

    std::vector<std::string> ref_out = ref;
    std::vector<std::string> hyp = ref;
    // Position 0 carries the case change: capitalized in the reference only.
    if (planted.case_changes) ref_out[0][0] = static_cast<char>(std::toupper(static_cast<unsigned char>(ref_out[0][0])));
    for (size_t s = 0; s < planted.substitutions; ++s) hyp[1 + s] = "zz" + std::to_string(s) + "q";
    if (planted.deletions) hyp.erase(hyp.begin() + static_cast<std::ptrdiff_t>(length - 1));
    corpus.planted.push_back(planted);

    ManifestEntry e;
    e.utterance_id = id;
    e.audio_path = rel;
    e.transcript = Join(ref_out);
    const size_t speaker = i % num_speakers;
    e.speaker_id = "spk" + std::to_string(speaker);
    e.split = speaker >= num_speakers - test_speakers ? Split::kTest : Split::kTrain;
    e.duration_seconds = clip.duration_seconds();
    entries.push_back(e);

    nlohmann::json line = {{"id", id}, {"ref", e.transcript}, {"hyp", Join(hyp)}};
    hyps << line.dump() << '\n';
  }
  SaveManifest(Manifest(std::move(entries)), corpus.manifest_path);

  // Noise clips: round-robin over train-side and held-out classes.
  NoiseCatalog defaults = DefaultNoiseCatalog();
  auto [train_side, held_side] = SplitNoiseCatalog(defaults);
  std::vector<NoiseClip> clips;
  size_t noise_index = 0;
  for (const NoiseCatalog *side : {&train_side, &held_side}) {
    for (size_t k = 0; k < options.noise_clips_per_side; ++k, ++noise_index) {
      const NoiseClass &cls = side->classes()[k % side->classes().size()];
      char id[32];
      std::snprintf(id, sizeof(id), "noise%03zu", noise_index);
      const std::string rel = "noise/" + std::string(id) + ".wav";
      WriteWav(MakeNoise(noise_index, options.sample_rate_hz, rng), out_dir / rel);
      clips.push_back({id, cls.name, rel});
    }
  }
  SaveNoiseCatalog(NoiseCatalog(defaults.classes(), std::move(clips)), corpus.catalog_path);
  return corpus;
}

}  // namespace snrkit
