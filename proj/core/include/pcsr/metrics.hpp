#pragma once

#include "pcsr/image.hpp"

namespace pcsr {

struct QualityReport {
  double mse = 0.0;
  double psnr = 0.0;   // dB, capped
  int valid_margin = 0;
};

// MSE/PSNR over the interior excluding `margin` pixels at each border.
// psnr = 10*log10(255^2 / mse), reported as `psnr_cap` when mse == 0 and
// capped there otherwise so PSNR stays monotone in MSE.
// Throws std::invalid_argument on dimension mismatch or margin too large.
QualityReport compare(const Image& a, const Image& b, int margin,
                      double psnr_cap = 99.0);

}  // namespace pcsr
