#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace swingseq {

// 8-bit RGB image, interleaved rows (data[(y*width + x)*3 + c]).
struct Image {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> data;

  Image() = default;
  Image(int h, int w) : height(h), width(w), data(static_cast<size_t>(h) * w * 3, 0) {}

  std::uint8_t* px(int y, int x) { return data.data() + (static_cast<size_t>(y) * width + x) * 3; }
  const std::uint8_t* px(int y, int x) const {
    return data.data() + (static_cast<size_t>(y) * width + x) * 3;
  }
};

// Float RGB image, planar (data[c*height*width + y*width + x]), values
// nominally in [0,1] until normalized.
struct ImageF {
  int height = 0;
  int width = 0;
  std::vector<float> data;

  ImageF() = default;
  ImageF(int h, int w) : height(h), width(w), data(static_cast<size_t>(3) * h * w, 0.0f) {}

  float& at(int c, int y, int x) {
    return data[(static_cast<size_t>(c) * height + y) * width + x];
  }
  float at(int c, int y, int x) const {
    return data[(static_cast<size_t>(c) * height + y) * width + x];
  }
};

// Binary PPM (P6), the frame-on-disk format used by the synthetic corpus.
Image load_ppm(const std::filesystem::path& file);
void save_ppm(const Image& img, const std::filesystem::path& file);

ImageF to_float(const Image& img);

Image crop(const Image& img, int x, int y, int w, int h);
Image flip_horizontal(const Image& img);

// Bilinear resampling with half-pixel centers; border samples are clamped.
ImageF resize_bilinear(const ImageF& img, int out_h, int out_w);

// Applies the inverse pixel map [a b c; d e f] (output (x,y) samples input
// (a*x + b*y + c, d*x + e*y + f)) with bilinear interpolation and clamped
// borders.
Image warp_affine(const Image& img, const std::array<double, 6>& inverse_map);

// Inverse map for a rotation (degrees, about the image center) followed by a
// horizontal shear (degrees).
std::array<double, 6> make_affine_inverse(double rotation_deg, double shear_deg,
                                          double center_x, double center_y);

// --- drawing helpers for the synthetic renderer -----------------------------

void draw_line_aa(Image& img, double x0, double y0, double x1, double y1,
                  double half_width, const std::array<std::uint8_t, 3>& rgb);
void draw_disc_aa(Image& img, double cx, double cy, double radius,
                  const std::array<std::uint8_t, 3>& rgb);

}  // namespace swingseq
