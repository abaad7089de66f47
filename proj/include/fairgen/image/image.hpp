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

#ifndef FAIRGEN_IMAGE_IMAGE_HPP
#define FAIRGEN_IMAGE_IMAGE_HPP

#include <cstddef>
#include <vector>

namespace fairgen {

// H x W x C raster, row-major, channel-interleaved, values in [0, 255]
// (real-valued; quantization happens only at PNG boundaries and in
// perturb_gaussian).
struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t channels = 0;  // 1 or 3
  std::vector<double> pixels;

  static Image create(std::size_t width, std::size_t height,
                      std::size_t channels, double fill = 0.0);

  double& at(std::size_t y, std::size_t x, std::size_t c) {
    return pixels[(y * width + x) * channels + c];
  }
  double at(std::size_t y, std::size_t x, std::size_t c) const {
    return pixels[(y * width + x) * channels + c];
  }

  bool same_shape(const Image& other) const {
    return width == other.width && height == other.height &&
           channels == other.channels;
  }

  // Checks the type invariants; throws on violation.
  void validate() const;
};

}  // namespace fairgen

#endif  // FAIRGEN_IMAGE_IMAGE_HPP
