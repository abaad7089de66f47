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

#ifndef FAIRGEN_DATASET_CONDITIONS_HPP
#define FAIRGEN_DATASET_CONDITIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "fairgen/image/image.hpp"

namespace fairgen {

struct ConditionImage {
  std::string class_name;
  Image image;
};

// One uninformative condition per class: the class mean image downsampled
// to out_size x out_size. Throws EmptyGroup for a class without images,
// ShapeMismatch on mixed shapes within a class.
std::vector<ConditionImage> build_uninformative_conditions(
    const std::vector<std::pair<std::string, std::vector<Image>>>& groups,
    std::size_t out_size = 4);

}  // namespace fairgen

#endif  // FAIRGEN_DATASET_CONDITIONS_HPP
