#include "pcsr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcsr {

QualityReport compare(const Image& a, const Image& b, int margin, double psnr_cap) {
  if (!a.same_size(b))
    throw std::invalid_argument("compare: dimension mismatch");
  if (margin < 0 || 2 * margin >= std::min(a.width(), a.height()))
    throw std::invalid_argument("compare: margin too large for image");

  double sum = 0.0;
  std::size_t n = 0;
  for (int y = margin; y < a.height() - margin; ++y)
    for (int x = margin; x < a.width() - margin; ++x) {
      const double d = a.at(x, y) - b.at(x, y);
      sum += d * d;
      ++n;
    }
  QualityReport r;
  r.valid_margin = margin;
  r.mse = sum / static_cast<double>(n);
  r.psnr = (r.mse > 0.0)
               ? std::min(10.0 * std::log10(255.0 * 255.0 / r.mse), psnr_cap)
               : psnr_cap;
  return r;
}

}  // namespace pcsr
