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

#ifndef FAIRGEN_DATASET_SIMULATE_HPP
#define FAIRGEN_DATASET_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairgen/core/types.hpp"

namespace fairgen {

// Row j = distribution of the recognized reconstruction class given true
// class j.
struct ConfusionMatrix {
  std::vector<DiscreteDistribution> rows;

  std::size_t size() const noexcept { return rows.size(); }
  static ConfusionMatrix identity(std::size_t k);
};

// Confusion file: CSV with header `class,<label_1>,...,<label_k>` and one
// row per class (same order as the columns), each summing to 1.
std::pair<ClassPartition, ConfusionMatrix> load_confusion(
    const std::string& path);

// Draws count_j records of true class j with recon_class sampled from row
// j. Pure function of (inputs, seed); emits no embeddings.
EvalSet simulate_eval_set(const ConfusionMatrix& confusion,
                          const ClassPartition& partition,
                          const std::vector<std::size_t>& per_class_counts,
                          std::uint64_t seed);

// Analytic population distributions from the diagonal, mirroring the two
// empirical estimators. Throw DegenerateAllCorrect / DegenerateAllWrong
// when the respective normalizer vanishes.
DiscreteDistribution expected_rdp(const ConfusionMatrix& confusion);
DiscreteDistribution expected_rdp_correct(const ConfusionMatrix& confusion);

struct ExpectedDistributions {
  DiscreteDistribution pr;
  // Empty when the respective normalizer is degenerate (e.g. the identity
  // confusion has no misclassification mass for the estimator variant).
  std::optional<DiscreteDistribution> rdp;
  std::optional<DiscreteDistribution> rdp_correct;
};

// Analytic population distributions under a confusion matrix and a class
// prior: PR by total probability over classes, the RDP variants from the
// diagonal.
ExpectedDistributions expected_distributions(
    const ConfusionMatrix& confusion, const DiscreteDistribution& class_prior);

}  // namespace fairgen

#endif  // FAIRGEN_DATASET_SIMULATE_HPP
