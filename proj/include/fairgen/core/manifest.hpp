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

#ifndef FAIRGEN_CORE_MANIFEST_HPP
#define FAIRGEN_CORE_MANIFEST_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fairgen/core/types.hpp"

namespace fairgen {

// Every entry equals 1/k. Throws InvalidK for k < 2.
DiscreteDistribution uniform_distribution(std::size_t k);

struct EvalLoadOptions {
  // JSONL sidecar with per-sample embeddings:
  //   {"sample_id": ..., "true": [...], "recon": [...]}
  std::optional<std::string> embeddings_path;
  // Keep only the first N records per true class, in file order (0 = keep
  // all). The manifest carries classifier labels only, so "correctly
  // labeled" cannot be re-derived here; the filter is purely positional.
  std::size_t first_per_class = 0;
  // Overrides the default set name (the file stem).
  std::optional<std::string> name;
};

// Evaluation manifest: CSV, header `sample_id,true_class,recon_class`
// followed by zero or more `scalar:<name>` columns. Empty scalar cells mean
// the record does not carry that metric.
EvalSet load_eval_manifest(const std::string& path,
                           const ClassPartition& partition,
                           const EvalLoadOptions& opts = {});

// Writes the CSV (scalar columns = sorted union of carried metric names)
// and, when embeddings_path is given, the JSONL sidecar for records that
// have embeddings. Numbers are printed so that loading reproduces the exact
// doubles.
void save_eval_manifest(const EvalSet& set, const std::string& path,
                        const std::optional<std::string>& embeddings_path =
                            std::nullopt);

// Diversity manifest: CSV, header `condition_id,replicate,recon_class`.
// Rows are grouped by condition_id (first-appearance order), replicate
// order is file order.
DiversitySet load_diversity_manifest(const std::string& path,
                                     const ClassPartition& partition);
void save_diversity_manifest(const DiversitySet& dset,
                             const std::string& path);

// LabeledIndex: CSV, header `sample_id,class`.
LabeledIndex load_labeled_index(const std::string& path,
                                const ClassPartition& partition);

// Target distribution: CSV, header `class,probability`. Classes absent from
// the file get probability 0; each class may appear at most once.
DiscreteDistribution load_target_distribution(const std::string& path,
                                              const ClassPartition& partition);

// Subset files are newline-separated sample ids.
void save_subset(const std::vector<std::string>& ids, const std::string& path);
std::vector<std::string> load_subset(const std::string& path);

// Scans the label columns and returns the distinct class names in
// first-appearance order. Used when no partition is supplied externally.
ClassPartition infer_eval_partition(const std::string& path);
ClassPartition infer_diversity_partition(const std::string& path);
ClassPartition infer_index_partition(const std::string& path);

}  // namespace fairgen

#endif  // FAIRGEN_CORE_MANIFEST_HPP
