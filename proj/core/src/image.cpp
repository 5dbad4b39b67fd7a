#include "pcsr/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcsr {

Image::Image(int width, int height, double fill) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("Image: dimensions must be >= 1");
  width_ = width;
  height_ = height;
  data_.assign(static_cast<std::size_t>(width) * height, fill);
}

Image Image::from_data(int width, int height, std::vector<double> data) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("Image: dimensions must be >= 1");
  if (data.size() != static_cast<std::size_t>(width) * height)
    throw std::invalid_argument("Image: data length != width * height");
  for (double v : data)
    if (!std::isfinite(v))
      throw std::invalid_argument("Image: non-finite sample");
  Image img;
  img.width_ = width;
  img.height_ = height;
  img.data_ = std::move(data);
  return img;
}

double Image::mean() const {
  double s = 0.0;
  for (double v : data_) s += v;
  return s / static_cast<double>(data_.size());
}

Image Image::cropped(int w, int h) const {
  if (w < 1 || h < 1 || w > width_ || h > height_)
    throw std::invalid_argument("Image::cropped: bad size");
  if (w == width_ && h == height_) return *this;
  Image out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out.at(x, y) = at(x, y);
  return out;
}

unsigned char quantize_u8(double v) {
  const long q = std::lround(v);
  return static_cast<unsigned char>(std::clamp(q, 0L, 255L));
}

void clip_to_range(Image& img) {
  for (double& v : img.pixels()) v = std::clamp(v, 0.0, 255.0);
}

}  // namespace pcsr
