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

#include "fairgen/core/types.hpp"

#include <cmath>
#include <utility>

namespace fairgen {

ClassPartition::ClassPartition(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.size() < 2) {
    throw InvalidK("a class partition needs at least 2 classes, got " +
                   std::to_string(names_.size()));
  }
  for (std::size_t j = 0; j < names_.size(); ++j) {
    if (names_[j].empty()) {
      throw MalformedManifest("empty class label at position " +
                              std::to_string(j));
    }
    if (!index_.emplace(names_[j], j).second) {
      throw MalformedManifest("duplicate class label '" + names_[j] + "'");
    }
  }
}

std::size_t ClassPartition::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw UnknownClass("'" + name + "' is not in the class partition");
  }
  return it->second;
}

std::vector<std::size_t> EvalSet::class_counts() const {
  std::vector<std::size_t> counts(partition.size(), 0);
  for (const auto& r : records) ++counts.at(r.true_class);
  return counts;
}

std::vector<std::size_t> EvalSet::correct_counts() const {
  std::vector<std::size_t> counts(partition.size(), 0);
  for (const auto& r : records) {
    if (r.recon_class == r.true_class) ++counts.at(r.true_class);
  }
  return counts;
}

std::vector<std::size_t> EvalSet::recon_counts() const {
  std::vector<std::size_t> counts(partition.size(), 0);
  for (const auto& r : records) ++counts.at(r.recon_class);
  return counts;
}

std::size_t DiversitySet::total_replicates() const {
  std::size_t total = 0;
  for (const auto& c : conditions) total += c.recon_classes.size();
  return total;
}

std::vector<std::size_t> DiversitySet::counts_for(std::size_t m) const {
  const auto& cond = conditions.at(m);
  std::vector<std::size_t> counts(partition.size(), 0);
  for (std::size_t cls : cond.recon_classes) ++counts.at(cls);
  return counts;
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs)
    : p_(std::move(probs)) {
  if (p_.empty()) {
    throw InvalidDistribution("probability vector is empty");
  }
  double sum = 0.0;
  for (double v : p_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidDistribution("entries must be finite and nonnegative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw InvalidDistribution("entries sum to " + std::to_string(sum) +
                              ", expected 1");
  }
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t k) {
  if (k < 2) {
    throw InvalidK("uniform distribution needs k >= 2, got " +
                   std::to_string(k));
  }
  return DiscreteDistribution(std::vector<double>(k, 1.0 / double(k)));
}

std::vector<std::size_t> LabeledIndex::class_counts() const {
  std::vector<std::size_t> counts(partition.size(), 0);
  for (std::size_t c : classes) ++counts.at(c);
  return counts;
}

}  // namespace fairgen
