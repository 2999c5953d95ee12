#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <vector>

#include "swingseq/dataset.hpp"
#include "swingseq/image.hpp"
#include "swingseq/rng.hpp"

namespace swingseq {

// Reference channel statistics applied to [0,1]-scaled RGB pixels.
inline constexpr std::array<float, 3> kPixelMean = {0.485f, 0.456f, 0.406f};
inline constexpr std::array<float, 3> kPixelStd = {0.229f, 0.224f, 0.225f};

struct FrameSequence {
  std::vector<Image> frames;
  double fps = 30.0;
};

// Model-ready window: pixels is T contiguous planar 3*d*d frames, labels one
// class per frame.
struct PreparedWindow {
  int seq_len = 0;
  int input_size = 0;
  std::vector<float> pixels;  // seq_len * 3 * d * d
  std::vector<int> labels;    // seq_len, values 0..8
  std::string source_sample_id;
  int window_start = 0;

  float* frame_pixels(int t) {
    return pixels.data() + static_cast<size_t>(t) * 3 * input_size * input_size;
  }
};

struct AugmentParams {
  double horizontal_flip_prob = 0.5;
  double max_rotation_deg = 5.0;
  double max_shear_deg = 5.0;
  bool enabled = true;
};

// Pluggable clip decoder. The toolkit ships the numbered-image-directory
// implementation; video decoders can be injected behind the same interface.
class FrameSource {
 public:
  virtual ~FrameSource() = default;
  virtual int num_frames() const = 0;
  virtual Image frame(int index) const = 0;
};

class ImageDirSource : public FrameSource {
 public:
  explicit ImageDirSource(const std::filesystem::path& dir);
  int num_frames() const override { return static_cast<int>(files_.size()); }
  Image frame(int index) const override;

 private:
  std::vector<std::filesystem::path> files_;
};

// Loads every frame of a clip directory into memory.
FrameSequence load_clip(const std::filesystem::path& dir, double fps = 30.0);

// Converts a normalized bbox to integer pixels, clamped inside the frame.
struct PixelRect {
  int x = 0, y = 0, w = 0, h = 0;
};
PixelRect bbox_to_pixels(const std::array<double, 4>& bbox, int frame_w, int frame_h);

// bbox crop -> bilinear resize so max(h,w) == d -> center-pad the short side
// with the reference channel means -> subtract means, divide by std.
// Padded pixels come out exactly 0. Output is planar 3*d*d into `out`.
void crop_resize_normalize(const Image& frame, const std::array<double, 4>& bbox, int d,
                           float* out);

// Float-path core used by the byte overload; `crop` is a [0,1] RGB crop.
void resize_normalize(const ImageF& crop, int d, float* out);

// One flip decision and one affine draw per window, applied identically to
// every frame. Labels are untouched by construction.
struct WindowAugment {
  bool flip = false;
  double rotation_deg = 0.0;
  double shear_deg = 0.0;
};
WindowAugment draw_window_augment(const AugmentParams& params, Rng& rng);
std::vector<Image> augment(const std::vector<Image>& crops, const WindowAugment& aug);

// Frame labels for the given window indices: event frames get their event
// class, everything else NoEvent.
std::vector<int> label_frames(const SwingAnnotation& ann, const std::vector<int>& window_indices);

// Uniform random start with wrap-around: indices are (start + i) mod
// num_frames for i in [0, T).
std::vector<int> looped_window_indices(int num_frames, int seq_len, int start);

// Full training-window assembly: random start, loop, crop, optional augment,
// resize/pad/normalize, per-frame labels.
PreparedWindow sample_training_window(const SwingAnnotation& ann, const FrameSequence& frames,
                                      int seq_len, int input_size, const AugmentParams& params,
                                      Rng& rng);

// Deterministic stream for (seed, sample_id, epoch): the contract that lets a
// data-loading pipeline fan out across workers.
Rng window_rng(std::uint64_t seed, const std::string& sample_id, int epoch);

}  // namespace swingseq
