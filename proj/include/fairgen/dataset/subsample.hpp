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

#ifndef FAIRGEN_DATASET_SUBSAMPLE_HPP
#define FAIRGEN_DATASET_SUBSAMPLE_HPP

#include <cstdint>
#include <vector>

#include "fairgen/core/types.hpp"

namespace fairgen {

// Hamilton (largest remainder) apportionment of n into k integer quotas
// proportional to target. Quotas sum to n; zero-probability classes never
// receive leftover seats.
std::vector<std::size_t> largest_remainder_quotas(
    const DiscreteDistribution& target, std::size_t n);

// Largest n with n * target_j <= available_j for every positive-target
// class. Throws InfeasibleTarget when a positive-target class has no
// samples at all.
std::size_t max_feasible_n(const std::vector<std::size_t>& available,
                           const DiscreteDistribution& target);

// Maximal subset of the pool matching the target class distribution: sizes
// the subset with max_feasible_n, apportions per-class quotas by largest
// remainder, then samples each quota uniformly without replacement.
// Returned ids keep the pool's file order; the result is a pure function of
// (index, target, seed).
std::vector<std::string> max_biased_subset(const LabeledIndex& index,
                                           const DiscreteDistribution& target,
                                           std::uint64_t seed);

// The built-in biased target over the 7 canonical race labels (White
// above 0.80, Southeast Asian at 0.0005). The partition may list them in
// any order; other label sets throw WrongPartition. The non-extreme entries
// are editable defaults, typically overridden by a target file.
DiscreteDistribution unfairface_target(const ClassPartition& partition);

}  // namespace fairgen

#endif  // FAIRGEN_DATASET_SUBSAMPLE_HPP
