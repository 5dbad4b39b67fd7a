#pragma once

#include "pcsr/image.hpp"
#include "pcsr/transform.hpp"

#include <array>

namespace pcsr {

// Catmull-Rom weights (a = -0.5) for taps at offsets -1..2, frac t in [0,1).
// Interpolating kernel: reproduces samples at t = 0 and affine surfaces exactly.
std::array<double, 4> catmull_rom_weights(double t);

// Bicubic sample at (x, y) where integer coordinates hit pixel values
// (x = 3, y = 5 returns img[5][3]). Domain [0, w-1] x [0, h-1]; throws
// std::invalid_argument outside. Border taps clamp to the edge.
double sample_bicubic(const Image& img, double x, double y);

// Same kernel, no domain check: the coordinate is clamped to the image
// first (clamp-to-edge resampling). Used by warping and basis evaluation.
double bicubic_clamped(const Image& img, double x, double y);

// out(x, y) = src(t(x+0.5, y+0.5)), coordinates corner-anchored (pixel i
// covers [i, i+1)). t maps output-frame coords to source-frame coords.
// Exact copy when t is the identity.
Image warp_bicubic(const Image& src, const GeomTransform& t);

// Separable Gaussian, kernel radius ceil(3*sigma), clamp-to-edge.
Image gaussian_blur(const Image& img, double sigma);

// Every 2nd pixel, offset 0; dimensions floor-halved.
Image decimate2(const Image& img);

// factor-x bicubic enlargement: output node (c, r) samples the input at
// corner coords ((c+0.5)/factor, (r+0.5)/factor). The single-frame baseline.
Image upsample_bicubic(const Image& img, int factor);

}  // namespace pcsr
