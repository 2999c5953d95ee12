#include "swingseq/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "swingseq/common.hpp"

namespace swingseq {

Image load_ppm(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError("cannot open image file: " + file.string());
  std::string magic;
  in >> magic;
  if (magic != "P6") throw DataError("not a binary PPM (P6): " + file.string());
  auto next_int = [&in, &file]() {
    // Skips whitespace and '#' comment lines per the PPM grammar.
    for (;;) {
      int c = in.peek();
      if (c == '#') {
        std::string line;
        std::getline(in, line);
      } else if (std::isspace(c)) {
        in.get();
      } else {
        break;
      }
    }
    int v = -1;
    in >> v;
    if (!in || v < 0) throw DataError("malformed PPM header: " + file.string());
    return v;
  };
  const int w = next_int();
  const int h = next_int();
  const int maxval = next_int();
  if (maxval != 255) throw DataError("unsupported PPM maxval: " + file.string());
  in.get();  // single whitespace after maxval
  Image img(h, w);
  in.read(reinterpret_cast<char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
  if (!in) throw DataError("truncated PPM payload: " + file.string());
  return img;
}

void save_ppm(const Image& img, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write image file: " + file.string());
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
  if (!out) throw DataError("failed writing image file: " + file.string());
}

ImageF to_float(const Image& img) {
  ImageF out(img.height, img.width);
  const size_t plane = static_cast<size_t>(img.height) * img.width;
  for (size_t i = 0; i < plane; ++i) {
    out.data[i] = img.data[i * 3 + 0] * (1.0f / 255.0f);
    out.data[plane + i] = img.data[i * 3 + 1] * (1.0f / 255.0f);
    out.data[2 * plane + i] = img.data[i * 3 + 2] * (1.0f / 255.0f);
  }
  return out;
}

Image crop(const Image& img, int x, int y, int w, int h) {
  if (w <= 0 || h <= 0) throw DataError("degenerate crop rectangle");
  x = std::clamp(x, 0, img.width - 1);
  y = std::clamp(y, 0, img.height - 1);
  w = std::min(w, img.width - x);
  h = std::min(h, img.height - y);
  Image out(h, w);
  for (int r = 0; r < h; ++r) {
    std::copy_n(img.px(y + r, x), static_cast<size_t>(w) * 3, out.px(r, 0));
  }
  return out;
}

Image flip_horizontal(const Image& img) {
  Image out(img.height, img.width);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const std::uint8_t* s = img.px(y, img.width - 1 - x);
      std::uint8_t* d = out.px(y, x);
      d[0] = s[0];
      d[1] = s[1];
      d[2] = s[2];
    }
  }
  return out;
}

ImageF resize_bilinear(const ImageF& img, int out_h, int out_w) {
  ImageF out(out_h, out_w);
  const double sy = static_cast<double>(img.height) / out_h;
  const double sx = static_cast<double>(img.width) / out_w;
  for (int y = 0; y < out_h; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    fy = std::clamp(fy, 0.0, static_cast<double>(img.height - 1));
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const float wy = static_cast<float>(fy - y0);
    for (int x = 0; x < out_w; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      fx = std::clamp(fx, 0.0, static_cast<double>(img.width - 1));
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const float wx = static_cast<float>(fx - x0);
      for (int c = 0; c < 3; ++c) {
        const float top = img.at(c, y0, x0) * (1 - wx) + img.at(c, y0, x1) * wx;
        const float bot = img.at(c, y1, x0) * (1 - wx) + img.at(c, y1, x1) * wx;
        out.at(c, y, x) = top * (1 - wy) + bot * wy;
      }
    }
  }
  return out;
}

Image warp_affine(const Image& img, const std::array<double, 6>& m) {
  Image out(img.height, img.width);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      double sx = m[0] * x + m[1] * y + m[2];
      double sy = m[3] * x + m[4] * y + m[5];
      sx = std::clamp(sx, 0.0, static_cast<double>(img.width - 1));
      sy = std::clamp(sy, 0.0, static_cast<double>(img.height - 1));
      const int x0 = static_cast<int>(sx);
      const int y0 = static_cast<int>(sy);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const int y1 = std::min(y0 + 1, img.height - 1);
      const double wx = sx - x0;
      const double wy = sy - y0;
      std::uint8_t* d = out.px(y, x);
      for (int c = 0; c < 3; ++c) {
        const double top = img.px(y0, x0)[c] * (1 - wx) + img.px(y0, x1)[c] * wx;
        const double bot = img.px(y1, x0)[c] * (1 - wx) + img.px(y1, x1)[c] * wx;
        d[c] = static_cast<std::uint8_t>(std::lround(std::clamp(top * (1 - wy) + bot * wy, 0.0, 255.0)));
      }
    }
  }
  return out;
}

std::array<double, 6> make_affine_inverse(double rotation_deg, double shear_deg,
                                          double center_x, double center_y) {
  constexpr double kDegToRad = 3.141592653589793 / 180.0;
  const double r = rotation_deg * kDegToRad;
  const double s = std::tan(shear_deg * kDegToRad);
  // Forward map: rotate then shear about the center; invert analytically.
  // F = Sh * R, F^-1 = R^-1 * Sh^-1 where Sh^-1 has shear -s.
  const double cr = std::cos(r);
  const double sr = std::sin(r);
  // R^-1 = [cr sr; -sr cr], Sh^-1 = [1 -s; 0 1] => M = R^-1 * Sh^-1
  const double a = cr;
  const double b = -cr * s + sr;
  const double d = -sr;
  const double e = sr * s + cr;
  const double c = center_x - a * center_x - b * center_y;
  const double f = center_y - d * center_x - e * center_y;
  return {a, b, c, d, e, f};
}

namespace {

inline void blend_px(Image& img, int y, int x, double alpha,
                     const std::array<std::uint8_t, 3>& rgb) {
  if (x < 0 || y < 0 || x >= img.width || y >= img.height || alpha <= 0.0) return;
  alpha = std::min(alpha, 1.0);
  std::uint8_t* p = img.px(y, x);
  for (int c = 0; c < 3; ++c) {
    p[c] = static_cast<std::uint8_t>(std::lround(p[c] * (1.0 - alpha) + rgb[c] * alpha));
  }
}

}  // namespace

void draw_line_aa(Image& img, double x0, double y0, double x1, double y1,
                  double half_width, const std::array<std::uint8_t, 3>& rgb) {
  const double dx = x1 - x0;
  const double dy = y1 - y0;
  const double len2 = dx * dx + dy * dy;
  const int min_x = static_cast<int>(std::floor(std::min(x0, x1) - half_width - 1));
  const int max_x = static_cast<int>(std::ceil(std::max(x0, x1) + half_width + 1));
  const int min_y = static_cast<int>(std::floor(std::min(y0, y1) - half_width - 1));
  const int max_y = static_cast<int>(std::ceil(std::max(y0, y1) + half_width + 1));
  for (int y = min_y; y <= max_y; ++y) {
    for (int x = min_x; x <= max_x; ++x) {
      double t = 0.0;
      if (len2 > 0.0) t = std::clamp(((x - x0) * dx + (y - y0) * dy) / len2, 0.0, 1.0);
      const double px = x0 + t * dx;
      const double py = y0 + t * dy;
      const double dist = std::hypot(x - px, y - py);
      blend_px(img, y, x, half_width + 0.5 - dist, rgb);
    }
  }
}

void draw_disc_aa(Image& img, double cx, double cy, double radius,
                  const std::array<std::uint8_t, 3>& rgb) {
  const int min_x = static_cast<int>(std::floor(cx - radius - 1));
  const int max_x = static_cast<int>(std::ceil(cx + radius + 1));
  const int min_y = static_cast<int>(std::floor(cy - radius - 1));
  const int max_y = static_cast<int>(std::ceil(cy + radius + 1));
  for (int y = min_y; y <= max_y; ++y) {
    for (int x = min_x; x <= max_x; ++x) {
      const double dist = std::hypot(x - cx, y - cy);
      blend_px(img, y, x, radius + 0.5 - dist, rgb);
    }
  }
}

}  // namespace swingseq
