#include "pcsr/resample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace pcsr {

std::array<double, 4> catmull_rom_weights(double t) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  return {
      -0.5 * t3 + t2 - 0.5 * t,
      1.5 * t3 - 2.5 * t2 + 1.0,
      -1.5 * t3 + 2.0 * t2 + 0.5 * t,
      0.5 * t3 - 0.5 * t2,
  };
}

double bicubic_clamped(const Image& img, double x, double y) {
  const int w = img.width();
  const int h = img.height();
  x = std::clamp(x, 0.0, static_cast<double>(w - 1));
  y = std::clamp(y, 0.0, static_cast<double>(h - 1));
  double ix, iy;
  const double fx = std::modf(x, &ix);
  const double fy = std::modf(y, &iy);
  const int x0 = static_cast<int>(ix);
  const int y0 = static_cast<int>(iy);
  const auto wx = catmull_rom_weights(fx);
  const auto wy = catmull_rom_weights(fy);
  double acc = 0.0;
  for (int j = 0; j < 4; ++j) {
    const int yy = std::clamp(y0 + j - 1, 0, h - 1);
    double row = 0.0;
    for (int i = 0; i < 4; ++i) {
      const int xx = std::clamp(x0 + i - 1, 0, w - 1);
      row += wx[i] * img.at(xx, yy);
    }
    acc += wy[j] * row;
  }
  return acc;
}

double sample_bicubic(const Image& img, double x, double y) {
  if (!(x >= 0.0 && x <= img.width() - 1 && y >= 0.0 && y <= img.height() - 1))
    throw std::invalid_argument("sample_bicubic: coordinate out of bounds");
  return bicubic_clamped(img, x, y);
}

Image warp_bicubic(const Image& src, const GeomTransform& t) {
  if (t.is_identity()) return src;
  Image out(src.width(), src.height());
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const Vec2 q = t.apply(x + 0.5, y + 0.5);
      out.at(x, y) = bicubic_clamped(src, q.x - 0.5, q.y - 0.5);
    }
  }
  return out;
}

Image gaussian_blur(const Image& img, double sigma) {
  if (sigma <= 0.0) return img;
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    k[i + radius] = std::exp(-0.5 * (i * i) / (sigma * sigma));
    sum += k[i + radius];
  }
  for (double& v : k) v /= sum;

  const int w = img.width();
  const int h = img.height();
  Image tmp(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i)
        acc += k[i + radius] * img.at(std::clamp(x + i, 0, w - 1), y);
      tmp.at(x, y) = acc;
    }
  Image out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i)
        acc += k[i + radius] * tmp.at(x, std::clamp(y + i, 0, h - 1));
      out.at(x, y) = acc;
    }
  return out;
}

Image decimate2(const Image& img) {
  const int w = img.width() / 2;
  const int h = img.height() / 2;
  if (w < 1 || h < 1) throw std::invalid_argument("decimate2: image too small");
  Image out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out.at(x, y) = img.at(2 * x, 2 * y);
  return out;
}

Image upsample_bicubic(const Image& img, int factor) {
  if (factor < 1) throw std::invalid_argument("upsample_bicubic: factor must be >= 1");
  if (factor == 1) return img;
  Image out(img.width() * factor, img.height() * factor);
  for (int r = 0; r < out.height(); ++r)
    for (int c = 0; c < out.width(); ++c) {
      const double sx = (c + 0.5) / factor - 0.5;
      const double sy = (r + 0.5) / factor - 0.5;
      out.at(c, r) = bicubic_clamped(img, sx, sy);
    }
  return out;
}

}  // namespace pcsr
