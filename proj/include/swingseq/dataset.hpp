#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace swingseq {

// The nine per-frame classes. Indices 0-7 are the ordered swing events; 8 is
// the background class assigned to every unannotated frame.
enum class Event : int {
  kAddress = 0,
  kToeUp = 1,
  kMidBackswing = 2,
  kTop = 3,
  kMidDownswing = 4,
  kImpact = 5,
  kMidFollowThrough = 6,
  kFinish = 7,
  kNoEvent = 8,
};

inline constexpr int kNumEvents = 8;
inline constexpr int kNumClasses = 9;

// Short names in canonical order: A, TU, MB, T, MD, I, MFT, F, none.
const char* event_short_name(int event_index);

enum class Club { kDriver, kWood, kIron, kWedge, kOther };
enum class View { kFaceOn, kDownTheLine, kOther };
enum class Sex { kMale, kFemale };

const char* to_string(Club c);
const char* to_string(View v);
const char* to_string(Sex s);
Club club_from_string(const std::string& s);
View view_from_string(const std::string& s);
Sex sex_from_string(const std::string& s);

// Labels for one trimmed swing clip. Event frames are indices into the
// stored clip, relative to frame 0; the bounding box is normalized to [0,1]
// frame coordinates.
struct SwingAnnotation {
  std::string sample_id;
  std::string source_video_id;
  int num_frames = 0;
  std::array<int, kNumEvents> event_frames{};
  int start_frame = 0;
  int end_frame = 0;
  std::array<double, 4> bbox{};  // x, y, w, h
  bool slow_motion = false;
  Club club = Club::kOther;
  View view = View::kOther;
  std::string player_name;
  Sex sex = Sex::kMale;
  double fps = 30.0;
};

struct Violation {
  std::string field;
  std::string reason;
};

// Reports every invariant violation; an empty result means the annotation is
// well formed. Violations are data, not failures.
std::vector<Violation> validate_annotation(const SwingAnnotation& ann);

struct SplitAssignment {
  int n_folds = 4;
  std::uint64_t seed = 0;
  std::map<std::string, int> fold_of_sample;

  std::vector<std::string> samples_in_fold(int fold) const;
};

// Seeded grouped k-fold assignment: source-video groups are shuffled, then
// each group goes to the fold currently holding the fewest groups, so no two
// samples of one source video are ever separated and fold sizes stay within
// one group of balanced.
SplitAssignment generate_splits(std::span<const SwingAnnotation> samples, int n_folds,
                                std::uint64_t seed);

// Backswing duration over downswing duration, in frames: (Top - Address) /
// (Impact - Top). Throws DataError when Impact == Top.
double tempo(const SwingAnnotation& ann);

struct CorpusStats {
  int num_samples = 0;
  long long total_frames = 0;
  double events_per_frame = 0.0;  // 8 * num_samples / total_frames
  double mean_tempo = 0.0;
  std::map<std::string, int> club_counts;
  std::map<std::string, int> view_counts;
  std::map<std::string, int> sex_counts;
  std::map<std::string, int> slow_motion_counts;  // keys "slow_motion", "real_time"
};

CorpusStats corpus_stats(std::span<const SwingAnnotation> samples);

// Corpus persistence: one JSON document per corpus, a top-level list of
// annotation records. Frames for sample S live in <corpus dir>/S/.
std::vector<SwingAnnotation> load_corpus(const std::filesystem::path& json_file);
void save_corpus(std::span<const SwingAnnotation> samples, const std::filesystem::path& json_file);

std::string annotation_to_json(const SwingAnnotation& ann);

void save_split(const SplitAssignment& split, const std::filesystem::path& json_file);
SplitAssignment load_split(const std::filesystem::path& json_file);

std::string stats_to_json(const CorpusStats& stats);

// Writes via a temp file in the target directory plus rename, so interrupted
// runs never leave a partial file behind.
void atomic_write_text(const std::filesystem::path& file, const std::string& content);

}  // namespace swingseq
