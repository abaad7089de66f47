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

#include "fairgen/dataset/conditions.hpp"

#include "fairgen/core/errors.hpp"
#include "fairgen/image/ops.hpp"

namespace fairgen {

std::vector<ConditionImage> build_uninformative_conditions(
    const std::vector<std::pair<std::string, std::vector<Image>>>& groups,
    std::size_t out_size) {
  std::vector<ConditionImage> conditions;
  conditions.reserve(groups.size());
  for (const auto& [class_name, images] : groups) {
    if (images.empty()) {
      throw EmptyGroup("class '" + class_name + "' has no images");
    }
    Image mean = mean_image(images);
    conditions.push_back(
        {class_name, downsample_bilinear_aa(mean, out_size, out_size)});
  }
  return conditions;
}

}  // namespace fairgen
