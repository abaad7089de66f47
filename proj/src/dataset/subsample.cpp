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

#include "fairgen/dataset/subsample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "fairgen/core/errors.hpp"

namespace fairgen {
namespace {

// Absorbs the rounding error of n * target_j when n * target_j lands on an
// integer boundary; far below the spacing of meaningful targets.
constexpr double kFeasibilityTol = 1e-7;

bool quota_fits(double target_j, std::size_t n, std::size_t available_j) {
  return double(n) * target_j <= double(available_j) + kFeasibilityTol;
}

std::size_t uniform_below(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return std::size_t(x % n);
}

}  // namespace

std::vector<std::size_t> largest_remainder_quotas(
    const DiscreteDistribution& target, std::size_t n) {
  const std::size_t k = target.size();
  std::vector<std::size_t> quotas(k, 0);
  std::vector<double> remainders(k, 0.0);
  std::size_t assigned = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const double share = double(n) * target[j];
    quotas[j] = std::size_t(std::floor(share));
    remainders[j] = share - double(quotas[j]);
    assigned += quotas[j];
  }
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < k; ++j) {
    if (target[j] > 0.0) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return remainders[a] > remainders[b];
                   });
  for (std::size_t i = 0; assigned < n; ++i) {
    ++quotas[order[i % order.size()]];
    ++assigned;
  }
  return quotas;
}

std::size_t max_feasible_n(const std::vector<std::size_t>& available,
                           const DiscreteDistribution& target) {
  if (available.size() != target.size()) {
    throw DimensionMismatch("availability lists " +
                            std::to_string(available.size()) +
                            " classes, target " +
                            std::to_string(target.size()));
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (target[j] == 0.0) continue;
    if (available[j] == 0) {
      throw InfeasibleTarget("class " + std::to_string(j) +
                             " has positive target probability but no "
                             "available samples");
    }
    std::size_t n = std::size_t(
        std::floor((double(available[j]) + kFeasibilityTol) / target[j]));
    while (n > 0 && !quota_fits(target[j], n, available[j])) --n;
    while (quota_fits(target[j], n + 1, available[j])) ++n;
    best = std::min(best, n);
  }
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw InfeasibleTarget("target assigns zero probability everywhere");
  }
  return best;
}

std::vector<std::string> max_biased_subset(const LabeledIndex& index,
                                           const DiscreteDistribution& target,
                                           std::uint64_t seed) {
  const std::size_t k = index.partition.size();
  if (target.size() != k) {
    throw DimensionMismatch("target has " + std::to_string(target.size()) +
                            " entries for " + std::to_string(k) + " classes");
  }
  const auto available = index.class_counts();
  const std::size_t n = max_feasible_n(available, target);
  auto quotas = largest_remainder_quotas(target, n);
  // Guard against a tolerance-induced off-by-one in the apportionment.
  for (std::size_t j = 0; j < k; ++j) {
    quotas[j] = std::min(quotas[j], available[j]);
  }

  std::vector<std::vector<std::size_t>> by_class(k);
  for (std::size_t i = 0; i < index.size(); ++i) {
    by_class[index.classes[i]].push_back(i);
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> picked;
  for (std::size_t j = 0; j < k; ++j) {
    auto& pool = by_class[j];
    // partial Fisher-Yates: the first quota entries become the sample
    for (std::size_t i = 0; i < quotas[j]; ++i) {
      const std::size_t r = i + uniform_below(rng, pool.size() - i);
      std::swap(pool[i], pool[r]);
      picked.push_back(pool[i]);
    }
  }
  std::sort(picked.begin(), picked.end());
  std::vector<std::string> ids;
  ids.reserve(picked.size());
  for (std::size_t i : picked) ids.push_back(index.sample_ids[i]);
  return ids;
}

DiscreteDistribution unfairface_target(const ClassPartition& partition) {
  static const std::vector<std::pair<const char*, double>> kDefault = {
      {"White", 0.81},          {"Latino_Hispanic", 0.06},
      {"East Asian", 0.045},    {"Black", 0.035},
      {"Middle Eastern", 0.0295}, {"Indian", 0.02},
      {"Southeast Asian", 0.0005},
  };
  if (partition.size() != kDefault.size()) {
    throw WrongPartition("expected the 7 canonical race labels, got " +
                         std::to_string(partition.size()) + " classes");
  }
  std::vector<double> probs(partition.size(), 0.0);
  for (const auto& [label, p] : kDefault) {
    if (!partition.contains(label)) {
      throw WrongPartition(std::string("partition lacks the label '") +
                           label + "'");
    }
    probs[partition.index_of(label)] = p;
  }
  return DiscreteDistribution(std::move(probs));
}

}  // namespace fairgen
