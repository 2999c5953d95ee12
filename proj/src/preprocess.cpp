#include "swingseq/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "swingseq/common.hpp"

namespace swingseq {

ImageDirSource::ImageDirSource(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DataError("clip directory not found: " + dir.string());
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ppm") {
      files_.push_back(entry.path());
    }
  }
  std::sort(files_.begin(), files_.end());
  if (files_.empty()) throw DataError("clip directory holds no frames: " + dir.string());
}

Image ImageDirSource::frame(int index) const {
  if (index < 0 || index >= num_frames()) {
    throw DataError("frame index out of range in " + files_.front().parent_path().string());
  }
  return load_ppm(files_[index]);
}

FrameSequence load_clip(const std::filesystem::path& dir, double fps) {
  ImageDirSource source(dir);
  FrameSequence seq;
  seq.fps = fps;
  seq.frames.reserve(source.num_frames());
  for (int i = 0; i < source.num_frames(); ++i) seq.frames.push_back(source.frame(i));
  return seq;
}

PixelRect bbox_to_pixels(const std::array<double, 4>& bbox, int frame_w, int frame_h) {
  PixelRect r;
  r.x = std::clamp(static_cast<int>(std::lround(bbox[0] * frame_w)), 0, frame_w - 1);
  r.y = std::clamp(static_cast<int>(std::lround(bbox[1] * frame_h)), 0, frame_h - 1);
  r.w = std::clamp(static_cast<int>(std::lround(bbox[2] * frame_w)), 1, frame_w - r.x);
  r.h = std::clamp(static_cast<int>(std::lround(bbox[3] * frame_h)), 1, frame_h - r.y);
  return r;
}

void resize_normalize(const ImageF& crop, int d, float* out) {
  if (crop.width <= 0 || crop.height <= 0) throw DataError("degenerate crop");
  int out_h, out_w;
  if (crop.height >= crop.width) {
    out_h = d;
    out_w = std::max(1, static_cast<int>(std::lround(static_cast<double>(crop.width) * d / crop.height)));
  } else {
    out_w = d;
    out_h = std::max(1, static_cast<int>(std::lround(static_cast<double>(crop.height) * d / crop.width)));
  }
  const ImageF resized = resize_bilinear(crop, out_h, out_w);

  // Pad split evenly, extra pixel trailing. Pad value equals the channel
  // mean, so normalization maps padding to exactly zero.
  const int pad_top = (d - out_h) / 2;
  const int pad_left = (d - out_w) / 2;
  for (int c = 0; c < 3; ++c) {
    const float inv_std = 1.0f / kPixelStd[c];
    float* plane = out + static_cast<size_t>(c) * d * d;
    std::fill_n(plane, static_cast<size_t>(d) * d, 0.0f);
    for (int y = 0; y < out_h; ++y) {
      float* row = plane + static_cast<size_t>(pad_top + y) * d + pad_left;
      for (int x = 0; x < out_w; ++x) {
        row[x] = (resized.at(c, y, x) - kPixelMean[c]) * inv_std;
      }
    }
  }
}

void crop_resize_normalize(const Image& frame, const std::array<double, 4>& bbox, int d,
                           float* out) {
  if (d < 32) throw ConfigError("input size d must be at least 32");
  const PixelRect r = bbox_to_pixels(bbox, frame.width, frame.height);
  if (r.w <= 0 || r.h <= 0) throw DataError("zero-area bounding box");
  resize_normalize(to_float(crop(frame, r.x, r.y, r.w, r.h)), d, out);
}

WindowAugment draw_window_augment(const AugmentParams& params, Rng& rng) {
  WindowAugment aug;
  if (!params.enabled) return aug;
  aug.flip = rng.bernoulli(params.horizontal_flip_prob);
  aug.rotation_deg = rng.uniform(-params.max_rotation_deg, params.max_rotation_deg);
  aug.shear_deg = rng.uniform(-params.max_shear_deg, params.max_shear_deg);
  return aug;
}

std::vector<Image> augment(const std::vector<Image>& crops, const WindowAugment& aug) {
  std::vector<Image> out;
  out.reserve(crops.size());
  const bool warp = aug.rotation_deg != 0.0 || aug.shear_deg != 0.0;
  for (const auto& img : crops) {
    Image x = aug.flip ? flip_horizontal(img) : img;
    if (warp) {
      const auto m = make_affine_inverse(aug.rotation_deg, aug.shear_deg,
                                         (img.width - 1) / 2.0, (img.height - 1) / 2.0);
      x = warp_affine(x, m);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<int> label_frames(const SwingAnnotation& ann, const std::vector<int>& window_indices) {
  std::vector<int> labels(window_indices.size(), static_cast<int>(Event::kNoEvent));
  for (size_t i = 0; i < window_indices.size(); ++i) {
    for (int e = 0; e < kNumEvents; ++e) {
      if (window_indices[i] == ann.event_frames[e]) {
        labels[i] = e;
        break;
      }
    }
  }
  return labels;
}

std::vector<int> looped_window_indices(int num_frames, int seq_len, int start) {
  std::vector<int> indices(seq_len);
  for (int i = 0; i < seq_len; ++i) indices[i] = (start + i) % num_frames;
  return indices;
}

PreparedWindow sample_training_window(const SwingAnnotation& ann, const FrameSequence& frames,
                                      int seq_len, int input_size, const AugmentParams& params,
                                      Rng& rng) {
  if (seq_len < 1) throw ConfigError("seq_len must be at least 1");
  const int n = static_cast<int>(frames.frames.size());
  const int start = rng.uniform_int(n);
  const auto indices = looped_window_indices(n, seq_len, start);

  std::vector<Image> crops;
  crops.reserve(seq_len);
  for (int idx : indices) {
    const Image& f = frames.frames[idx];
    const PixelRect r = bbox_to_pixels(ann.bbox, f.width, f.height);
    crops.push_back(crop(f, r.x, r.y, r.w, r.h));
  }
  if (params.enabled) crops = augment(crops, draw_window_augment(params, rng));

  PreparedWindow window;
  window.seq_len = seq_len;
  window.input_size = input_size;
  window.source_sample_id = ann.sample_id;
  window.window_start = start;
  window.pixels.resize(static_cast<size_t>(seq_len) * 3 * input_size * input_size);
  for (int t = 0; t < seq_len; ++t) {
    resize_normalize(to_float(crops[t]), input_size, window.frame_pixels(t));
  }
  window.labels = label_frames(ann, indices);
  return window;
}

Rng window_rng(std::uint64_t seed, const std::string& sample_id, int epoch) {
  std::uint64_t x = seed ^ Rng::hash_string(sample_id);
  x ^= 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(epoch) + 1);
  return Rng(Rng::splitmix64(x));
}

}  // namespace swingseq
