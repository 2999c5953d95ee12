#include "swingseq/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "swingseq/common.hpp"
#include "swingseq/rng.hpp"

namespace swingseq {

using nlohmann::json;

const char* event_short_name(int event_index) {
  static const char* kNames[kNumClasses] = {"A", "TU", "MB", "T", "MD", "I", "MFT", "F", "none"};
  return kNames[event_index];
}

const char* to_string(Club c) {
  switch (c) {
    case Club::kDriver: return "driver";
    case Club::kWood: return "wood";
    case Club::kIron: return "iron";
    case Club::kWedge: return "wedge";
    default: return "other";
  }
}

const char* to_string(View v) {
  switch (v) {
    case View::kFaceOn: return "face-on";
    case View::kDownTheLine: return "down-the-line";
    default: return "other";
  }
}

const char* to_string(Sex s) { return s == Sex::kMale ? "male" : "female"; }

Club club_from_string(const std::string& s) {
  if (s == "driver") return Club::kDriver;
  if (s == "wood") return Club::kWood;
  if (s == "iron") return Club::kIron;
  if (s == "wedge") return Club::kWedge;
  if (s == "other") return Club::kOther;
  throw DataError("unknown club type: " + s);
}

View view_from_string(const std::string& s) {
  if (s == "face-on") return View::kFaceOn;
  if (s == "down-the-line") return View::kDownTheLine;
  if (s == "other") return View::kOther;
  throw DataError("unknown view type: " + s);
}

Sex sex_from_string(const std::string& s) {
  if (s == "male") return Sex::kMale;
  if (s == "female") return Sex::kFemale;
  throw DataError("unknown sex: " + s);
}

std::vector<Violation> validate_annotation(const SwingAnnotation& ann) {
  std::vector<Violation> out;
  auto add = [&out](const std::string& field, const std::string& reason) {
    out.push_back({field, reason});
  };

  if (ann.sample_id.empty()) add("sample_id", "must be non-empty");
  if (ann.source_video_id.empty()) add("source_video_id", "must be non-empty");
  if (ann.num_frames < kNumClasses) add("num_frames", "must be at least 9");
  if (ann.start_frame != 0) add("start_frame", "trimmed clips start at frame 0");
  if (ann.end_frame != ann.num_frames - 1) add("end_frame", "must equal num_frames - 1");

  for (int e = 1; e < kNumEvents; ++e) {
    if (ann.event_frames[e] <= ann.event_frames[e - 1]) {
      add("event_frames",
          std::string("ordering: ") + event_short_name(e) + " must come after " +
              event_short_name(e - 1));
    }
  }
  if (ann.event_frames[0] < 0) add("event_frames", "Address before clip start");
  if (ann.event_frames[kNumEvents - 1] > ann.end_frame) {
    add("event_frames", "Finish beyond clip end");
  }

  const auto& b = ann.bbox;
  for (int i = 0; i < 4; ++i) {
    if (b[i] < 0.0 || b[i] > 1.0) {
      add("bbox", "component out of [0,1]");
      break;
    }
  }
  if (b[0] + b[2] > 1.0 + 1e-12) add("bbox", "bbox exceeds frame: x + w > 1");
  if (b[1] + b[3] > 1.0 + 1e-12) add("bbox", "bbox exceeds frame: y + h > 1");

  if (!(ann.fps > 0.0)) add("fps", "must be positive");
  return out;
}

std::vector<std::string> SplitAssignment::samples_in_fold(int fold) const {
  std::vector<std::string> out;
  for (const auto& [id, f] : fold_of_sample) {
    if (f == fold) out.push_back(id);
  }
  return out;
}

SplitAssignment generate_splits(std::span<const SwingAnnotation> samples, int n_folds,
                                std::uint64_t seed) {
  if (n_folds < 2) throw ConfigError("n_folds must be at least 2");

  // Group sample ids by source video, keeping first-seen order for
  // reproducibility independent of container iteration details.
  std::vector<std::string> group_order;
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& ann : samples) {
    auto [it, inserted] = groups.try_emplace(ann.source_video_id);
    if (inserted) group_order.push_back(ann.source_video_id);
    it->second.push_back(ann.sample_id);
  }
  if (static_cast<int>(group_order.size()) < n_folds) {
    throw ConfigError("need at least as many source videos as folds: have " +
                      std::to_string(group_order.size()) + ", want " + std::to_string(n_folds));
  }

  Rng rng(seed);
  for (size_t i = group_order.size(); i > 1; --i) {
    std::swap(group_order[i - 1], group_order[rng.uniform_int(static_cast<int>(i))]);
  }

  SplitAssignment split;
  split.n_folds = n_folds;
  split.seed = seed;
  std::vector<int> groups_in_fold(n_folds, 0);
  for (const auto& gid : group_order) {
    const int fold = static_cast<int>(
        std::min_element(groups_in_fold.begin(), groups_in_fold.end()) - groups_in_fold.begin());
    ++groups_in_fold[fold];
    for (const auto& sid : groups[gid]) split.fold_of_sample[sid] = fold;
  }
  return split;
}

double tempo(const SwingAnnotation& ann) {
  const int address = ann.event_frames[static_cast<int>(Event::kAddress)];
  const int top = ann.event_frames[static_cast<int>(Event::kTop)];
  const int impact = ann.event_frames[static_cast<int>(Event::kImpact)];
  if (impact == top) throw DataError("degenerate swing: Impact coincides with Top");
  return static_cast<double>(top - address) / static_cast<double>(impact - top);
}

CorpusStats corpus_stats(std::span<const SwingAnnotation> samples) {
  if (samples.empty()) throw ConfigError("corpus_stats requires a non-empty corpus");
  CorpusStats stats;
  stats.num_samples = static_cast<int>(samples.size());
  double tempo_sum = 0.0;
  for (const auto& ann : samples) {
    stats.total_frames += ann.num_frames;
    ++stats.club_counts[to_string(ann.club)];
    ++stats.view_counts[to_string(ann.view)];
    ++stats.sex_counts[to_string(ann.sex)];
    ++stats.slow_motion_counts[ann.slow_motion ? "slow_motion" : "real_time"];
    tempo_sum += tempo(ann);
  }
  stats.events_per_frame =
      static_cast<double>(kNumEvents) * stats.num_samples / static_cast<double>(stats.total_frames);
  stats.mean_tempo = tempo_sum / stats.num_samples;
  return stats;
}

namespace {

json annotation_to_json_obj(const SwingAnnotation& a) {
  return json{{"sample_id", a.sample_id},
              {"source_video_id", a.source_video_id},
              {"num_frames", a.num_frames},
              {"event_frames", a.event_frames},
              {"start_frame", a.start_frame},
              {"end_frame", a.end_frame},
              {"bbox", a.bbox},
              {"slow_motion", a.slow_motion},
              {"club", to_string(a.club)},
              {"view", to_string(a.view)},
              {"player_name", a.player_name},
              {"sex", to_string(a.sex)},
              {"fps", a.fps}};
}

SwingAnnotation annotation_from_json_obj(const json& j) {
  SwingAnnotation a;
  a.sample_id = j.at("sample_id").get<std::string>();
  a.source_video_id = j.at("source_video_id").get<std::string>();
  a.num_frames = j.at("num_frames").get<int>();
  const auto ev = j.at("event_frames").get<std::vector<int>>();
  if (ev.size() != kNumEvents) throw DataError("event_frames must hold exactly 8 entries");
  std::copy(ev.begin(), ev.end(), a.event_frames.begin());
  a.start_frame = j.at("start_frame").get<int>();
  a.end_frame = j.at("end_frame").get<int>();
  const auto bb = j.at("bbox").get<std::vector<double>>();
  if (bb.size() != 4) throw DataError("bbox must hold exactly 4 entries");
  std::copy(bb.begin(), bb.end(), a.bbox.begin());
  a.slow_motion = j.at("slow_motion").get<bool>();
  a.club = club_from_string(j.at("club").get<std::string>());
  a.view = view_from_string(j.at("view").get<std::string>());
  a.player_name = j.at("player_name").get<std::string>();
  a.sex = sex_from_string(j.at("sex").get<std::string>());
  a.fps = j.value("fps", 30.0);
  return a;
}

}  // namespace

std::string annotation_to_json(const SwingAnnotation& ann) {
  return annotation_to_json_obj(ann).dump(2);
}

std::vector<SwingAnnotation> load_corpus(const std::filesystem::path& json_file) {
  std::ifstream in(json_file);
  if (!in) throw DataError("cannot open corpus file: " + json_file.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw DataError("corpus is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array()) throw DataError("corpus document must be a top-level list");
  std::vector<SwingAnnotation> out;
  out.reserve(doc.size());
  for (const auto& item : doc) out.push_back(annotation_from_json_obj(item));
  return out;
}

void save_corpus(std::span<const SwingAnnotation> samples,
                 const std::filesystem::path& json_file) {
  json doc = json::array();
  for (const auto& ann : samples) doc.push_back(annotation_to_json_obj(ann));
  atomic_write_text(json_file, doc.dump(2) + "\n");
}

void save_split(const SplitAssignment& split, const std::filesystem::path& json_file) {
  json doc(split.fold_of_sample);
  atomic_write_text(json_file, doc.dump(2) + "\n");
}

SplitAssignment load_split(const std::filesystem::path& json_file) {
  std::ifstream in(json_file);
  if (!in) throw DataError("cannot open split file: " + json_file.string());
  json doc;
  in >> doc;
  SplitAssignment split;
  int max_fold = 0;
  for (const auto& [key, value] : doc.items()) {
    split.fold_of_sample[key] = value.get<int>();
    max_fold = std::max(max_fold, value.get<int>());
  }
  split.n_folds = max_fold + 1;
  return split;
}

std::string stats_to_json(const CorpusStats& s) {
  json doc{{"num_samples", s.num_samples},
           {"total_frames", s.total_frames},
           {"events_per_frame", s.events_per_frame},
           {"mean_tempo", s.mean_tempo},
           {"club", s.club_counts},
           {"view", s.view_counts},
           {"sex", s.sex_counts},
           {"slow_motion", s.slow_motion_counts}};
  return doc.dump(2);
}

void atomic_write_text(const std::filesystem::path& file, const std::string& content) {
  namespace fs = std::filesystem;
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write file: " + tmp.string());
    out << content;
    if (!out) throw DataError("failed writing file: " + tmp.string());
  }
  fs::rename(tmp, file);
}

}  // namespace swingseq
