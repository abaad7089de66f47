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

#ifndef FAIRGEN_IMAGE_PNG_IO_HPP
#define FAIRGEN_IMAGE_PNG_IO_HPP

#include <string>

#include "fairgen/image/image.hpp"

namespace fairgen {

// Reads an 8-bit PNG as grayscale (1 channel) or RGB (3 channels); other
// depths and layouts are converted on read, alpha is dropped. Throws
// IoError on read or decode failure.
Image load_png(const std::string& path);

// Writes grayscale or RGB 8-bit PNG; pixels are rounded to integers.
void save_png(const Image& img, const std::string& path);

}  // namespace fairgen

#endif  // FAIRGEN_IMAGE_PNG_IO_HPP
