/*
 * Copyright 2026 the fairgen authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FAIRGEN_IMAGE_OPS_HPP
#define FAIRGEN_IMAGE_OPS_HPP

#include <cstdint>
#include <vector>

#include "fairgen/image/image.hpp"

namespace fairgen {

struct SsimOptions {
  std::size_t window_size = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;
};

// Mean structural similarity over all valid window positions (Gaussian
// window, per-channel results averaged). Returns a value in [-1, 1];
// ssim(x, x) = 1 exactly. Throws ShapeMismatch, ImageTooSmall.
double ssim(const Image& x, const Image& y, const SsimOptions& opts = {});

// (1 - ssim) / 2, in [0, 1].
double dssim(const Image& x, const Image& y, const SsimOptions& opts = {});

// Antialiased bilinear (triangle-kernel) downsampling: the kernel support
// is widened by the scale factor, out-of-range taps fold back onto the edge
// pixels, and weights are normalized to sum 1 per output pixel. Throws
// Upscale when the requested size exceeds the input.
Image downsample_bilinear_aa(const Image& img, std::size_t out_w,
                             std::size_t out_h);

// Pixel-wise arithmetic mean. Throws EmptyList, ShapeMismatch.
Image mean_image(const std::vector<Image>& images);

// Adds N(0, noise_scale^2) noise per pixel, clips to [0, 255] and rounds to
// 8 bits. Deterministic given seed; noise_scale = 0 reduces to rounding.
Image perturb_gaussian(const Image& img, double noise_scale,
                       std::uint64_t seed);

// Variance of the 3x3 Laplacian response on the luma plane; higher means
// sharper. The reporting layer negates it so that lower is better like the
// other losses. Throws ImageTooSmall below 3x3.
double blur_index(const Image& img);

}  // namespace fairgen

#endif  // FAIRGEN_IMAGE_OPS_HPP
