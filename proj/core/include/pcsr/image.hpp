#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pcsr {

// Single-channel raster, row-major doubles, nominal range [0, 255].
// Quantization to 8 bits happens only at PGM save time.
class Image {
 public:
  Image() = default;
  Image(int width, int height, double fill = 0.0);

  // Takes ownership of `data` (size must be width*height, all finite).
  static Image from_data(int width, int height, std::vector<double> data);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }

  double& at(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }
  double at(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }

  std::span<double> pixels() { return data_; }
  std::span<const double> pixels() const { return data_; }

  double mean() const;

  // Top-left w x h sub-image.
  Image cropped(int w, int h) const;

  bool same_size(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

// clamp(lround(v), 0, 255); the one place sample values become 8-bit.
unsigned char quantize_u8(double v);

// In-place clip to [0, 255].
void clip_to_range(Image& img);

}  // namespace pcsr
