// snrkit/corpus/synthetic-corpus.h

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

#ifndef SNRKIT_CORPUS_SYNTHETIC_CORPUS_H_
#define SNRKIT_CORPUS_SYNTHETIC_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace snrkit {

struct PlantedErrors {
  std::string id;
  size_t ref_words = 0;
  size_t substitutions = 0;  // words replaced by tokens absent from the reference
  size_t deletions = 0;
  size_t case_changes = 0;   // words differing from the reference only in case
  size_t CasedEdits() const { return substitutions + deletions + case_changes; }
  size_t UncasedEdits() const { return substitutions + deletions; }
};

struct SyntheticCorpus {
  std::filesystem::path manifest_path;   // manifest.jsonl
  std::filesystem::path catalog_path;    // noise-catalog.json
  std::filesystem::path hypotheses_path; // hypotheses.jsonl, {id, ref, hyp}
  std::vector<PlantedErrors> planted;    // in utterance order
};

struct SyntheticCorpusOptions {
  size_t num_utterances = 20;
  size_t noise_clips_per_side = 20;  // per train / held-out side of the catalog
  int sample_rate_hz = 16000;
  uint64_t seed = 7;
};

/// Writes a small self-contained corpus: harmonic-tone "utterances" with
/// scripted transcripts, speaker-disjoint train/test splits, generated noise
/// clips filed under train and held-out classes of the default catalog, and
/// hypotheses with planted errors whose minimal edit counts are known by
/// construction (every substituted or case-changed token is absent from the
/// reference, so no cheaper script exists).
SyntheticCorpus GenerateSyntheticCorpus(const std::filesystem::path &out_dir,
                                        const SyntheticCorpusOptions &options = {});

}  // namespace snrkit

#endif  // SNRKIT_CORPUS_SYNTHETIC_CORPUS_H_
