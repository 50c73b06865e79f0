// corpus/noise-catalog.cc

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

#include "snrkit/corpus/noise-catalog.h"

#include <cctype>
#include <fstream>
#include <set>

#include "snrkit/base/snrkit-error.h"

namespace snrkit {

std::string CanonicalClassName(std::string_view name) {
  size_t b = 0, e = name.size();
  while (b < e && std::isspace(static_cast<unsigned char>(name[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(name[e - 1]))) --e;
  std::string out(name.substr(b, e - b));
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

NoiseCatalog::NoiseCatalog(std::vector<NoiseClass> classes, std::vector<NoiseClip> clips,
                           std::filesystem::path base_dir)
    : classes_(std::move(classes)), clips_(std::move(clips)), base_dir_(std::move(base_dir)) {
  std::set<std::string> names;
  for (const auto &c : classes_)
    if (!names.insert(CanonicalClassName(c.name)).second)
      throw Error(ErrorCode::kDuplicateId, "duplicate noise class '" + c.name + "'");
  std::set<std::string> ids;
  for (const auto &clip : clips_) {
    if (!names.count(CanonicalClassName(clip.class_name)))
      throw Error(ErrorCode::kUnknownName,
                  "noise clip '" + clip.noise_id + "' names unknown class '" + clip.class_name + "'");
    if (!ids.insert(clip.noise_id).second)
      throw Error(ErrorCode::kDuplicateId, "duplicate noise id '" + clip.noise_id + "'");
  }
}

const NoiseClass *NoiseCatalog::FindClass(std::string_view name) const {
  const std::string key = CanonicalClassName(name);
  for (const auto &c : classes_)
    if (CanonicalClassName(c.name) == key) return &c;
  return nullptr;
}

const NoiseClip *NoiseCatalog::FindClip(std::string_view noise_id) const {
  for (const auto &clip : clips_)
    if (clip.noise_id == noise_id) return &clip;
  return nullptr;
}

std::filesystem::path NoiseCatalog::ResolveAudioPath(const NoiseClip &clip) const {
  std::filesystem::path p(clip.audio_path);
  if (p.is_absolute() || base_dir_.empty()) return p;
  return base_dir_ / p;
}

std::vector<std::string> DefaultHeldOutClassNames() {
  return {"Environmental noise", "Pink noise",     "Boom",  "Inside, public space",
          "Grunt",               "Stomach rumble", "Clang", "Squeak"};
}

NoiseCatalog DefaultNoiseCatalog() {
  // AudioSet class names with a one-line summary and the clip count of each class.
  std::vector<NoiseClass> classes = {
      {"Siren", "Warning device with a pitch that sweeps or steps.", 2188, false},
      {"Car passing by", "Single vehicle driving past a nearby listener.", 1010, false},
      {"Clatter", "Cluster of irregular rattling transients.", 772, false},
      {"White noise", "Flat-spectrum random noise.", 738, false},
      {"Crackle", "Irregular series of sharp pops, as from a fire.", 662, false},
      {"Wind noise (microphone)", "Air turbulence striking a microphone.", 548, false},
      {"Environmental noise", "Mixed background of traffic, industry and recreation.", 322, true},
      {"Pink noise", "Random noise with equal energy per octave.", 283, true},
      {"Boom", "Deep, loud and prolonged noise.", 283, true},
      {"Firecracker", "Small explosive device going off.", 279, false},
      {"Microwave oven", "Kitchen appliance running, with its fan and hum.", 250, false},
      {"Traffic noise, roadway noise", "Many road vehicles heard together.", 196, false},
      {"Air horn, truck horn", "Very loud pneumatic horn on a large vehicle.", 161, false},
      {"Hubbub, speech noise, speech babble", "Many overlapping talkers, unintelligible.", 146, false},
      {"Static", "Electrical hiss or crackle.", 101, false},
      {"Inside, public space", "Indoor ambience of a shop, restaurant or station.", 98, true},
      {"Rumble", "Low, dull and continuous noise.", 90, false},
      {"Grunt", "Short low gruff vocal noise from a person.", 73, true},
      {"Stomach rumble", "Gurgling from the digestive tract.", 64, true},
      {"Noise", "Generic unstructured sound.", 58, false},
      {"Knock", "Deliberate sharp strikes on a hard surface.", 54, false},
      {"Clang", "Loud metallic ringing impact.", 49, true},
      {"Bang", "Brief loud noise.", 38, false},
      {"Squeak", "Short high-pitched sound with a soft onset.", 27, true},
      {"Creak", "High-pitched noise of a surface under strain.", 16, false},
  };
  return NoiseCatalog(std::move(classes), {});
}

std::pair<NoiseCatalog, NoiseCatalog> SplitNoiseCatalog(
    const NoiseCatalog &catalog, const std::optional<std::vector<std::string>> &held_out_names) {
  std::set<std::string> held;
  if (held_out_names) {
    for (const auto &name : *held_out_names) {
      if (catalog.FindClass(name) == nullptr)
        throw Error(ErrorCode::kUnknownName, "unknown noise class '" + name + "'");
      held.insert(CanonicalClassName(name));
    }
  } else {
    for (const auto &name : DefaultHeldOutClassNames())
      if (catalog.FindClass(name) != nullptr) held.insert(CanonicalClassName(name));
  }
  std::vector<NoiseClass> train_classes, held_classes;
  for (NoiseClass c : catalog.classes()) {
    c.held_out = held.count(CanonicalClassName(c.name)) > 0;
    (c.held_out ? held_classes : train_classes).push_back(std::move(c));
  }
  std::vector<NoiseClip> train_clips, held_clips;
  for (const auto &clip : catalog.clips())
    (held.count(CanonicalClassName(clip.class_name)) ? held_clips : train_clips).push_back(clip);
  return {NoiseCatalog(std::move(train_classes), std::move(train_clips), catalog.base_dir()),
          NoiseCatalog(std::move(held_classes), std::move(held_clips), catalog.base_dir())};
}

nlohmann::json NoiseCatalogToJson(const NoiseCatalog &catalog) {
  nlohmann::json j;
  j["classes"] = nlohmann::json::array();
  for (const auto &c : catalog.classes())
    j["classes"].push_back({{"name", c.name},
                            {"description", c.description},
                            {"clip_count", c.clip_count},
                            {"held_out", c.held_out}});
  j["clips"] = nlohmann::json::array();
  for (const auto &clip : catalog.clips())
    j["clips"].push_back(
        {{"noise_id", clip.noise_id}, {"class_name", clip.class_name}, {"audio_path", clip.audio_path}});
  return j;
}

NoiseCatalog NoiseCatalogFromJson(const nlohmann::json &j, const std::filesystem::path &base_dir) {
  std::vector<NoiseClass> classes;
  std::vector<NoiseClip> clips;
  try {
    for (const auto &c : j.at("classes"))
      classes.push_back({c.at("name").get<std::string>(), c.value("description", std::string()),
                         c.value("clip_count", 0), c.value("held_out", false)});
    if (j.contains("clips"))
      for (const auto &clip : j["clips"])
        clips.push_back({clip.at("noise_id").get<std::string>(),
                         clip.at("class_name").get<std::string>(),
                         clip.at("audio_path").get<std::string>()});
  } catch (const nlohmann::json::exception &ex) {
    throw Error(ErrorCode::kParse, std::string("noise catalog: ") + ex.what());
  }
  return NoiseCatalog(std::move(classes), std::move(clips), base_dir);
}

NoiseCatalog LoadNoiseCatalog(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open noise catalog " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &ex) {
    throw Error(ErrorCode::kParse, "noise catalog " + path.string() + ": " + ex.what());
  }
  return NoiseCatalogFromJson(j, path.parent_path());
}

void SaveNoiseCatalog(const NoiseCatalog &catalog, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write noise catalog " + path.string());
  out << NoiseCatalogToJson(catalog).dump(2) << '\n';
}

}  // namespace snrkit
