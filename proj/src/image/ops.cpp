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

#include "fairgen/image/ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "fairgen/core/errors.hpp"

namespace fairgen {

Image Image::create(std::size_t width, std::size_t height,
                    std::size_t channels, double fill) {
  Image img;
  img.width = width;
  img.height = height;
  img.channels = channels;
  img.pixels.assign(width * height * channels, fill);
  img.validate();
  return img;
}

void Image::validate() const {
  if (width == 0 || height == 0 || (channels != 1 && channels != 3)) {
    throw ShapeMismatch("invalid image shape " + std::to_string(width) + "x" +
                        std::to_string(height) + "x" +
                        std::to_string(channels));
  }
  if (pixels.size() != width * height * channels) {
    throw ShapeMismatch("pixel buffer holds " +
                        std::to_string(pixels.size()) + " values, expected " +
                        std::to_string(width * height * channels));
  }
  for (double v : pixels) {
    if (!std::isfinite(v) || v < 0.0 || v > 255.0) {
      throw DomainError("pixel value " + std::to_string(v) +
                        " outside [0, 255]");
    }
  }
}

namespace {

void require_same_shape(const Image& x, const Image& y) {
  if (!x.same_shape(y)) {
    throw ShapeMismatch("images have different shapes: " +
                        std::to_string(x.width) + "x" +
                        std::to_string(x.height) + "x" +
                        std::to_string(x.channels) + " vs " +
                        std::to_string(y.width) + "x" +
                        std::to_string(y.height) + "x" +
                        std::to_string(y.channels));
  }
}

std::vector<double> gaussian_window(std::size_t size, double sigma) {
  std::vector<double> g(size);
  const double center = (double(size) - 1.0) / 2.0;
  for (std::size_t i = 0; i < size; ++i) {
    const double d = double(i) - center;
    g[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
  }
  std::vector<double> w(size * size);
  double total = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      w[i * size + j] = g[i] * g[j];
      total += w[i * size + j];
    }
  }
  for (double& v : w) v /= total;
  return w;
}

struct Tap {
  std::size_t src;
  double weight;
};

// Triangle-kernel taps for one output index along one axis. The support is
// widened by the scale factor; taps falling outside the input fold onto the
// nearest edge pixel, and the weights are normalized to sum 1.
std::vector<std::vector<Tap>> triangle_taps(std::size_t in_n,
                                            std::size_t out_n) {
  const double scale = double(in_n) / double(out_n);
  std::vector<std::vector<Tap>> taps(out_n);
  for (std::size_t i = 0; i < out_n; ++i) {
    const double c = (double(i) + 0.5) * scale;
    const long lo = long(std::floor(c - scale - 0.5));
    const long hi = long(std::ceil(c + scale - 0.5));
    auto& row = taps[i];
    double sum = 0.0;
    for (long j = lo; j <= hi; ++j) {
      const double t = (double(j) + 0.5 - c) / scale;
      const double w = 1.0 - std::abs(t);
      if (w <= 0.0) continue;
      const std::size_t src = std::size_t(
          std::clamp(j, long{0}, long(in_n) - 1));
      if (!row.empty() && row.back().src == src) {
        row.back().weight += w;
      } else {
        row.push_back({src, w});
      }
      sum += w;
    }
    for (auto& tap : row) tap.weight /= sum;
  }
  return taps;
}

double luma(const Image& img, std::size_t y, std::size_t x) {
  if (img.channels == 1) return img.at(y, x, 0);
  return 0.299 * img.at(y, x, 0) + 0.587 * img.at(y, x, 1) +
         0.114 * img.at(y, x, 2);
}

}  // namespace

double ssim(const Image& x, const Image& y, const SsimOptions& opts) {
  require_same_shape(x, y);
  const std::size_t win = opts.window_size;
  if (x.width < win || x.height < win) {
    throw ImageTooSmall("image " + std::to_string(x.width) + "x" +
                        std::to_string(x.height) + " is smaller than the " +
                        std::to_string(win) + "x" + std::to_string(win) +
                        " window");
  }
  const auto w = gaussian_window(win, opts.sigma);
  const double c1 = (opts.k1 * opts.dynamic_range) *
                    (opts.k1 * opts.dynamic_range);
  const double c2 = (opts.k2 * opts.dynamic_range) *
                    (opts.k2 * opts.dynamic_range);

  double total = 0.0;
  std::size_t positions = 0;
  for (std::size_t c = 0; c < x.channels; ++c) {
    for (std::size_t y0 = 0; y0 + win <= x.height; ++y0) {
      for (std::size_t x0 = 0; x0 + win <= x.width; ++x0) {
        double mu_x = 0.0, mu_y = 0.0;
        double sxx = 0.0, syy = 0.0, sxy = 0.0;
        for (std::size_t dy = 0; dy < win; ++dy) {
          for (std::size_t dx = 0; dx < win; ++dx) {
            const double wi = w[dy * win + dx];
            const double px = x.at(y0 + dy, x0 + dx, c);
            const double py = y.at(y0 + dy, x0 + dx, c);
            mu_x += wi * px;
            mu_y += wi * py;
            sxx += wi * px * px;
            syy += wi * py * py;
            sxy += wi * px * py;
          }
        }
        const double var_x = sxx - mu_x * mu_x;
        const double var_y = syy - mu_y * mu_y;
        const double cov = sxy - mu_x * mu_y;
        const double num = (2.0 * mu_x * mu_y + c1) * (2.0 * cov + c2);
        const double den =
            (mu_x * mu_x + mu_y * mu_y + c1) * (var_x + var_y + c2);
        total += num / den;
        ++positions;
      }
    }
  }
  return total / double(positions);
}

double dssim(const Image& x, const Image& y, const SsimOptions& opts) {
  return (1.0 - ssim(x, y, opts)) / 2.0;
}

Image downsample_bilinear_aa(const Image& img, std::size_t out_w,
                             std::size_t out_h) {
  if (out_w == 0 || out_h == 0) {
    throw DomainError("output size must be positive");
  }
  if (out_w > img.width || out_h > img.height) {
    throw Upscale("requested " + std::to_string(out_w) + "x" +
                  std::to_string(out_h) + " from " +
                  std::to_string(img.width) + "x" +
                  std::to_string(img.height));
  }
  const auto tx = triangle_taps(img.width, out_w);
  const auto ty = triangle_taps(img.height, out_h);

  // horizontal pass, then vertical
  Image mid = Image::create(out_w, img.height, img.channels);
  for (std::size_t y = 0; y < img.height; ++y) {
    for (std::size_t i = 0; i < out_w; ++i) {
      for (std::size_t c = 0; c < img.channels; ++c) {
        double acc = 0.0;
        for (const Tap& tap : tx[i]) {
          acc += tap.weight * img.at(y, tap.src, c);
        }
        mid.at(y, i, c) = std::clamp(acc, 0.0, 255.0);
      }
    }
  }
  Image out = Image::create(out_w, out_h, img.channels);
  for (std::size_t i = 0; i < out_h; ++i) {
    for (std::size_t xo = 0; xo < out_w; ++xo) {
      for (std::size_t c = 0; c < img.channels; ++c) {
        double acc = 0.0;
        for (const Tap& tap : ty[i]) {
          acc += tap.weight * mid.at(tap.src, xo, c);
        }
        out.at(i, xo, c) = std::clamp(acc, 0.0, 255.0);
      }
    }
  }
  return out;
}

Image mean_image(const std::vector<Image>& images) {
  if (images.empty()) throw EmptyList("mean of zero images");
  const Image& first = images.front();
  Image out = Image::create(first.width, first.height, first.channels);
  for (const Image& img : images) {
    require_same_shape(first, img);
    for (std::size_t i = 0; i < out.pixels.size(); ++i) {
      out.pixels[i] += img.pixels[i];
    }
  }
  for (double& v : out.pixels) v /= double(images.size());
  return out;
}

Image perturb_gaussian(const Image& img, double noise_scale,
                       std::uint64_t seed) {
  if (noise_scale < 0.0 || !std::isfinite(noise_scale)) {
    throw DomainError("noise_scale must be nonnegative");
  }
  Image out = img;
  if (noise_scale == 0.0) {
    for (double& v : out.pixels) v = double(std::llround(v));
    return out;
  }
  std::mt19937_64 rng(seed);
  // Box-Muller on raw 53-bit draws keeps the stream identical across
  // standard libraries.
  bool has_spare = false;
  double spare = 0.0;
  auto next_normal = [&]() {
    if (has_spare) {
      has_spare = false;
      return spare;
    }
    const double u1 = 1.0 - std::ldexp(double(rng() >> 11), -53);  // (0, 1]
    const double u2 = std::ldexp(double(rng() >> 11), -53);        // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare = r * std::sin(theta);
    has_spare = true;
    return r * std::cos(theta);
  };
  for (double& v : out.pixels) {
    const double noisy = v + noise_scale * next_normal();
    v = double(std::llround(std::clamp(noisy, 0.0, 255.0)));
  }
  return out;
}

double blur_index(const Image& img) {
  if (img.width < 3 || img.height < 3) {
    throw ImageTooSmall("Laplacian needs at least 3x3, got " +
                        std::to_string(img.width) + "x" +
                        std::to_string(img.height));
  }
  std::vector<double> gray(img.width * img.height);
  for (std::size_t y = 0; y < img.height; ++y) {
    for (std::size_t x = 0; x < img.width; ++x) {
      gray[y * img.width + x] = luma(img, y, x);
    }
  }
  const std::size_t n = (img.height - 2) * (img.width - 2);
  std::vector<double> lap;
  lap.reserve(n);
  double sum = 0.0;
  for (std::size_t y = 1; y + 1 < img.height; ++y) {
    for (std::size_t x = 1; x + 1 < img.width; ++x) {
      const double v = gray[(y - 1) * img.width + x] +
                       gray[(y + 1) * img.width + x] +
                       gray[y * img.width + x - 1] +
                       gray[y * img.width + x + 1] -
                       4.0 * gray[y * img.width + x];
      lap.push_back(v);
      sum += v;
    }
  }
  const double mean = sum / double(n);
  double var = 0.0;
  for (double v : lap) var += (v - mean) * (v - mean);
  return var / double(n);
}

}  // namespace fairgen
