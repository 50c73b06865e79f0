// cli/commands.cc

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

#include "snrkit/cli/commands.h"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "snrkit/audio/wav-io.h"
#include "snrkit/base/snrkit-error.h"
#include "snrkit/corpus/corpus-stats.h"
#include "snrkit/corpus/manifest.h"
#include "snrkit/corpus/noise-catalog.h"
#include "snrkit/corpus/synthetic-corpus.h"
#include "snrkit/feat/augment-batch.h"
#include "snrkit/feat/spec-augment.h"
#include "snrkit/mix/mix-plan.h"
#include "snrkit/mix/plan-executor.h"
#include "snrkit/text/snr-report.h"

namespace snrkit {

namespace {

// Sidecar written next to every output so an artifact can be regenerated.
struct RunConfig {
  std::string command;
  uint64_t seed = 0;
  std::vector<SnrLevel> snr_grid;
  std::optional<SpecAugmentConfig> spec_augment;
  std::string casing;
  std::map<std::string, std::string> paths;
  std::map<std::string, std::string> options;

  nlohmann::json ToJson() const {
    nlohmann::json j;
    j["command"] = command;
    j["seed"] = seed;
    if (!snr_grid.empty()) {
      j["snr_grid"] = nlohmann::json::array();
      for (const auto &level : snr_grid) j["snr_grid"].push_back(level.Label());
    }
    if (spec_augment) j["spec_augment"] = SpecAugmentConfigToJson(*spec_augment);
    if (!casing.empty()) j["casing"] = casing;
    j["paths"] = paths;
    j["options"] = options;
    return j;
  }

  void Save(const std::filesystem::path &path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    out << ToJson().dump(2) << '\n';
  }
};

void EnsureDir(const std::filesystem::path &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create directory " + dir.string());
}

std::ofstream OpenOut(const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  return out;
}

// ---- plan -----------------------------------------------------------------

struct PlanArgs {
  std::string manifest, catalog, out, grid = "-20,-15,-10,-5,0,5,10,15,20,clean";
  std::string split = "train", noise_side = "auto";
  uint64_t seed = 0;
  bool allow_reuse = false;
  int workers = 1;
};

int CmdPlan(const PlanArgs &a, std::ostream &out) {
  const Manifest manifest = LoadManifest(a.manifest);
  const NoiseCatalog catalog = LoadNoiseCatalog(a.catalog);
  const std::vector<SnrLevel> grid = ParseSnrGrid(a.grid);

  std::vector<std::string> ids;
  for (const auto &e : manifest.entries())
    if (a.split == "all" || SplitName(e.split) == a.split) ids.push_back(e.utterance_id);

  std::string side = a.noise_side;
  if (side == "auto") side = a.split == "train" ? "train" : a.split == "test" ? "heldout" : "all";
  const auto [train_noise, heldout_noise] = SplitNoiseCatalog(catalog);
  const NoiseCatalog &pool = side == "train" ? train_noise : side == "heldout" ? heldout_noise : catalog;

  std::vector<NoiseSource> noises;
  for (const auto &clip : pool.clips()) {
    NoiseSource source{clip.noise_id, 0};
    try {
      source.num_samples = ReadWavInfo(pool.ResolveAudioPath(clip)).num_frames;
    } catch (const Error &e) {
      LogWarning("noise '" + clip.noise_id + "': " + e.what() + "; offset fixed at 0");
    }
    noises.push_back(std::move(source));
  }

  const MixPlan plan = BuildMixPlan(ids, noises, grid, a.seed, a.allow_reuse, a.workers);
  SaveMixPlan(plan, a.out);

  RunConfig config;
  config.command = "plan";
  config.seed = a.seed;
  config.snr_grid = grid;
  config.paths = {{"manifest", a.manifest}, {"catalog", a.catalog}, {"plan", a.out}};
  config.options = {{"split", a.split}, {"noise_side", side}, {"allow_reuse", a.allow_reuse ? "true" : "false"}};
  config.Save(a.out + ".config.json");

  out << "plan: " << plan.entries.size() << " utterances, " << noises.size() << " noise clips ("
      << side << " side)\n";
  for (const auto &[level, count] : CountPerLevel(plan))
    out << "  snr " << level.Label() << ": " << count << " utterances\n";
  std::set<std::string> distinct;
  size_t noisy = 0;
  for (const auto &e : plan.entries)
    if (!e.snr.is_clean()) {
      ++noisy;
      distinct.insert(e.noise_id);
    }
  out << "  noise reuse: " << (a.allow_reuse ? "allowed" : "off") << ", " << distinct.size()
      << " distinct clips over " << noisy << " noisy entries\n";
  return kExitOk;
}

// ---- mix ------------------------------------------------------------------

struct MixArgs {
  std::string plan, manifest, catalog, out_dir;
  bool strict = false;
  int workers = 1;
};

int CmdMix(const MixArgs &a, std::ostream &out) {
  const MixPlan plan = LoadMixPlan(a.plan);
  const Manifest manifest = LoadManifest(a.manifest);
  const NoiseCatalog catalog = LoadNoiseCatalog(a.catalog);
  EnsureDir(a.out_dir);
  const MixReport report = ExecutePlan(plan, manifest, catalog, a.out_dir, a.workers);
  {
    auto csv = OpenOut(std::filesystem::path(a.out_dir) / "mix_report.csv");
    WriteMixReportCsv(report, csv);
  }
  SaveManifest(MixedManifest(report, plan, manifest), std::filesystem::path(a.out_dir) / "manifest.jsonl");

  RunConfig config;
  config.command = "mix";
  config.seed = plan.seed;
  config.snr_grid = plan.grid;
  config.paths = {{"plan", a.plan}, {"manifest", a.manifest}, {"catalog", a.catalog}, {"out_dir", a.out_dir}};
  config.options = {{"strict", a.strict ? "true" : "false"}};
  config.Save(std::filesystem::path(a.out_dir) / "run-config.json");

  const size_t ok = report.rows.size() - report.failed - report.skipped;
  out << "mix: " << ok << " written, " << report.skipped << " skipped, " << report.failed << " failed\n";
  for (const auto &row : report.rows)
    if (row.status == MixStatus::kFailed) out << "  " << row.utterance_id << ": " << row.message << '\n';
  return report.failed > 0 && a.strict ? kExitPartial : kExitOk;
}

// ---- augment --------------------------------------------------------------

struct AugmentArgs {
  std::string manifest, out_dir;
  uint64_t seed = 0;
  int preset = kRecommendedSpecAugmentPreset;
  std::optional<double> time_prob, freq_prob;
  std::optional<int> time_len, time_min, freq_len, freq_min;
  size_t num_mel_bins = 80;
  bool strict = false;
  int workers = 1;
};

int CmdAugment(const AugmentArgs &a, std::ostream &out) {
  SpecAugmentConfig config = SpecAugmentPreset(a.preset);
  bool custom = false;
  auto override_value = [&custom](auto &field, const auto &value) {
    if (value) {
      field = *value;
      custom = true;
    }
  };
  override_value(config.time_prob, a.time_prob);
  override_value(config.time_len, a.time_len);
  override_value(config.time_min, a.time_min);
  override_value(config.freq_prob, a.freq_prob);
  override_value(config.freq_len, a.freq_len);
  override_value(config.freq_min, a.freq_min);
  if (custom) config.description += " (with overrides)";
  ValidateSpecAugmentConfig(config);

  const Manifest manifest = LoadManifest(a.manifest);
  MelOptions mel;
  mel.num_bins = a.num_mel_bins;
  const AugmentReport report = AugmentBatch(manifest, config, a.seed, a.out_dir, mel, a.workers);

  RunConfig run;
  run.command = "augment";
  run.seed = a.seed;
  run.spec_augment = config;
  run.paths = {{"manifest", a.manifest}, {"out_dir", a.out_dir}};
  run.options = {{"num_mel_bins", std::to_string(a.num_mel_bins)}};
  run.Save(std::filesystem::path(a.out_dir) / "run-config.json");

  out << "augment: preset " << config.label << " (" << config.description << "), "
      << report.items.size() - report.failed << " items, " << report.failed
      << " failed, mean masked fraction " << report.MeanMaskedFraction() << '\n';
  return report.failed > 0 && a.strict ? kExitPartial : kExitOk;
}

// ---- score ----------------------------------------------------------------

struct ScoreArgs {
  std::string input, out_dir, casing = "both", plan, condition, label = "hyp";
  bool strip_punctuation = false;
  int workers = 1;
};

int CmdScore(const ScoreArgs &a, std::ostream &out, std::ostream &err) {
  std::ifstream in(a.input, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open scoring file " + a.input);
  ScoringInput input = ParseScoringRecords(in);
  for (const auto &message : input.malformed_messages) err << "skipped malformed record, " << message << '\n';
  if (input.records.empty()) throw Error(ErrorCode::kEmptyInput, "no valid scoring records in " + a.input);
  if (!a.plan.empty()) TagFromPlan(LoadMixPlan(a.plan), &input.records);
  if (!a.condition.empty())
    for (auto &r : input.records)
      if (r.condition.empty()) r.condition = a.condition;

  ScoreOptions options;
  if (a.casing == "cased") options.casings = {Casing::kCased};
  else if (a.casing == "uncased") options.casings = {Casing::kUncased};
  options.normalize.strip_punctuation = a.strip_punctuation;
  options.num_workers = a.workers;
  CorpusScore score = ScoreCorpus(input.records, options);
  score.malformed = input.malformed;

  const std::filesystem::path dir(a.out_dir);
  EnsureDir(dir);
  {
    auto f = OpenOut(dir / "report.json");
    f << CorpusScoreToJson(score, a.label).dump(2) << '\n';
  }
  {
    auto f = OpenOut(dir / "wer_by_snr.csv");
    WriteSnrTableCsv(score, f);
  }
  {
    auto f = OpenOut(dir / "char_errors.csv");
    WriteErrorTypeCsv(score, a.label, f);
  }
  {
    auto f = OpenOut(dir / "word_edits.csv");
    WriteWordEditCsv(score, a.label, f);
  }
  RunConfig run;
  run.command = "score";
  run.casing = a.casing;
  run.paths = {{"input", a.input}, {"out_dir", a.out_dir}, {"plan", a.plan}};
  run.options = {{"label", a.label},
                 {"condition", a.condition},
                 {"strip_punctuation", a.strip_punctuation ? "true" : "false"}};
  run.Save(dir / "run-config.json");

  out << "score: " << score.utterances.size() << " pairs scored, " << score.skipped_empty_reference
      << " empty references skipped, " << score.malformed << " malformed records\n";
  for (const auto &[casing, totals] : score.totals) {
    const auto wer = totals.WerPercent(), cer = totals.CerPercent();
    out << "  " << CasingName(casing) << ": WER " << (wer ? std::to_string(*wer) : "n/a") << "  CER "
        << (cer ? std::to_string(*cer) : "n/a") << '\n';
  }
  return kExitOk;
}

// ---- stats / split-noise / catalog / demo ---------------------------------

int CmdStats(const std::string &manifest_path, std::ostream &out) {
  const Manifest manifest = LoadManifest(manifest_path);
  const SpeakerOverlapReport overlap = CheckSpeakerDisjoint(manifest);
  nlohmann::json j = CorpusStatsToJson(ComputeCorpusStats(manifest));
  j["speaker_disjoint"] = overlap.ok();
  j["overlapping_speakers"] = overlap.overlapping_speakers;
  out << j.dump(2) << '\n';
  return overlap.ok() ? kExitOk : kExitInvalid;
}

struct SplitNoiseArgs {
  std::string catalog, held_out, out_train, out_heldout;
};

int CmdSplitNoise(const SplitNoiseArgs &a, std::ostream &out) {
  const NoiseCatalog catalog = LoadNoiseCatalog(a.catalog);
  std::optional<std::vector<std::string>> names;
  if (!a.held_out.empty()) {
    names.emplace();
    std::stringstream ss(a.held_out);
    std::string name;
    while (std::getline(ss, name, ';')) names->push_back(name);
  }
  const auto [train, held] = SplitNoiseCatalog(catalog, names);
  SaveNoiseCatalog(train, a.out_train);
  SaveNoiseCatalog(held, a.out_heldout);
  out << "split-noise: train " << train.classes().size() << " classes / " << train.clips().size()
      << " clips, held-out " << held.classes().size() << " classes / " << held.clips().size() << " clips\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"snrkit: noisy-corpus construction, SpecAugment batches and ASR error scoring"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress log messages");

  PlanArgs plan;
  auto *plan_cmd = app.add_subcommand("plan", "Assign utterances to noise clips and SNR levels");
  plan_cmd->add_option("--manifest", plan.manifest, "Utterance manifest (JSON lines)")->required();
  plan_cmd->add_option("--catalog", plan.catalog, "Noise catalog (JSON)")->required();
  plan_cmd->add_option("--out", plan.out, "Plan file to write")->required();
  plan_cmd->add_option("--seed", plan.seed, "Random seed");
  plan_cmd->add_option("--grid", plan.grid, "Comma-separated SNR levels")->capture_default_str();
  plan_cmd->add_option("--split", plan.split, "Utterances to plan")->check(CLI::IsMember({"train", "test", "all"}));
  plan_cmd->add_option("--noise-side", plan.noise_side, "Noise clips to draw from")
      ->check(CLI::IsMember({"auto", "train", "heldout", "all"}));
  plan_cmd->add_flag("--allow-reuse", plan.allow_reuse, "Allow a noise clip to serve several utterances");
  plan_cmd->add_option("--workers", plan.workers)->check(CLI::PositiveNumber);

  MixArgs mix;
  auto *mix_cmd = app.add_subcommand("mix", "Execute a plan and write the noisy corpus");
  mix_cmd->add_option("--plan", mix.plan)->required();
  mix_cmd->add_option("--manifest", mix.manifest)->required();
  mix_cmd->add_option("--catalog", mix.catalog)->required();
  mix_cmd->add_option("--out-dir", mix.out_dir)->required();
  mix_cmd->add_flag("--strict", mix.strict, "Exit 1 when any entry fails");
  mix_cmd->add_option("--workers", mix.workers)->check(CLI::PositiveNumber);

  AugmentArgs aug;
  auto *aug_cmd = app.add_subcommand("augment", "Extract log-mel features and apply SpecAugment");
  aug_cmd->add_option("--manifest", aug.manifest)->required();
  aug_cmd->add_option("--out-dir", aug.out_dir)->required();
  aug_cmd->add_option("--seed", aug.seed);
  aug_cmd->add_option("--preset", aug.preset, "Masking preset 0..10 (9 = frequency-heavy mix, the recommended setup)")
      ->check(CLI::Range(0, kNumSpecAugmentPresets - 1));
  aug_cmd->add_option("--time-prob", aug.time_prob)->check(CLI::Range(0.0, 1.0));
  aug_cmd->add_option("--time-len", aug.time_len)->check(CLI::NonNegativeNumber);
  aug_cmd->add_option("--time-min", aug.time_min)->check(CLI::NonNegativeNumber);
  aug_cmd->add_option("--freq-prob", aug.freq_prob)->check(CLI::Range(0.0, 1.0));
  aug_cmd->add_option("--freq-len", aug.freq_len)->check(CLI::NonNegativeNumber);
  aug_cmd->add_option("--freq-min", aug.freq_min)->check(CLI::NonNegativeNumber);
  aug_cmd->add_option("--num-mel-bins", aug.num_mel_bins)->check(CLI::PositiveNumber);
  aug_cmd->add_flag("--strict", aug.strict);
  aug_cmd->add_option("--workers", aug.workers)->check(CLI::PositiveNumber);

  ScoreArgs score;
  auto *score_cmd = app.add_subcommand("score", "Score hypotheses against references");
  score_cmd->add_option("--input", score.input, "JSON lines with id, ref, hyp[, snr, condition]")->required();
  score_cmd->add_option("--out-dir", score.out_dir)->required();
  score_cmd->add_option("--casing", score.casing)->check(CLI::IsMember({"cased", "uncased", "both"}));
  score_cmd->add_option("--plan", score.plan, "Take SNR tags from a mix plan");
  score_cmd->add_option("--condition", score.condition, "Condition label for untagged records");
  score_cmd->add_option("--label", score.label, "Column label for the error tables");
  score_cmd->add_flag("--strip-punctuation", score.strip_punctuation);
  score_cmd->add_option("--workers", score.workers)->check(CLI::PositiveNumber);

  std::string stats_manifest;
  auto *stats_cmd = app.add_subcommand("stats", "Corpus statistics and speaker-disjointness check");
  stats_cmd->add_option("--manifest", stats_manifest)->required();

  SplitNoiseArgs split;
  auto *split_cmd = app.add_subcommand("split-noise", "Partition a noise catalog into train and held-out");
  split_cmd->add_option("--catalog", split.catalog)->required();
  split_cmd->add_option("--held-out", split.held_out, "Semicolon-separated class names (default: the 8 held-out classes)");
  split_cmd->add_option("--out-train", split.out_train)->required();
  split_cmd->add_option("--out-heldout", split.out_heldout)->required();

  std::string catalog_out;
  auto *catalog_cmd = app.add_subcommand("catalog", "Write the bundled default noise-class catalog");
  catalog_cmd->add_option("--out", catalog_out)->required();

  std::string demo_dir;
  SyntheticCorpusOptions demo;
  auto *demo_cmd = app.add_subcommand("demo", "Generate the synthetic demo corpus");
  demo_cmd->add_option("--out-dir", demo_dir)->required();
  demo_cmd->add_option("--seed", demo.seed);
  demo_cmd->add_option("--utterances", demo.num_utterances)->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"snrkit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  SetLogQuiet(quiet);

  try {
    if (*plan_cmd) return CmdPlan(plan, out);
    if (*mix_cmd) return CmdMix(mix, out);
    if (*aug_cmd) return CmdAugment(aug, out);
    if (*score_cmd) return CmdScore(score, out, err);
    if (*stats_cmd) return CmdStats(stats_manifest, out);
    if (*split_cmd) return CmdSplitNoise(split, out);
    if (*catalog_cmd) {
      SaveNoiseCatalog(DefaultNoiseCatalog(), catalog_out);
      out << "catalog: wrote " << catalog_out << '\n';
      return kExitOk;
    }
    if (*demo_cmd) {
      const SyntheticCorpus corpus = GenerateSyntheticCorpus(demo_dir, demo);
      out << "demo: manifest " << corpus.manifest_path.string() << ", catalog "
          << corpus.catalog_path.string() << ", hypotheses " << corpus.hypotheses_path.string() << '\n';
      return kExitOk;
    }
  } catch (const Error &e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace snrkit
