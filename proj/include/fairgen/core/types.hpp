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

#ifndef FAIRGEN_CORE_TYPES_HPP
#define FAIRGEN_CORE_TYPES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fairgen/core/errors.hpp"

namespace fairgen {

// Ordered set of sensitive-attribute classes. Order is significant: all
// per-class vectors produced by the library follow it.
class ClassPartition {
 public:
  ClassPartition() = default;
  explicit ClassPartition(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t j) const { return names_.at(j); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool contains(const std::string& name) const {
    return index_.count(name) != 0;
  }

  // Throws UnknownClass for names outside the partition.
  std::size_t index_of(const std::string& name) const;

  bool operator==(const ClassPartition& other) const {
    return names_ == other.names_;
  }
  bool operator!=(const ClassPartition& other) const {
    return !(*this == other);
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

// One evaluated sample: the ground-truth class, the class recognized on the
// reconstruction, and any precomputed per-sample scalar metrics keyed by
// metric name. Embeddings are optional; attribute losses that need them
// throw MissingEmbedding when absent.
struct EvalRecord {
  std::string sample_id;
  std::size_t true_class = 0;
  std::size_t recon_class = 0;
  std::map<std::string, double> scalars;
  std::optional<std::vector<double>> true_embedding;
  std::optional<std::vector<double>> recon_embedding;
};

struct EvalSet {
  ClassPartition partition;
  std::vector<EvalRecord> records;
  std::string name;

  std::size_t size() const noexcept { return records.size(); }

  // Number of samples whose true class is j.
  std::vector<std::size_t> class_counts() const;
  // Number of samples of true class j with recon_class == true_class.
  std::vector<std::size_t> correct_counts() const;
  // Number of samples recognized as class j, regardless of truth.
  std::vector<std::size_t> recon_counts() const;
};

// All replicates generated under one condition, reduced to the class the
// recognizer assigned to each. Replicate order is the file order.
struct DiversityCondition {
  std::string condition_id;
  std::vector<std::size_t> recon_classes;
};

struct DiversitySet {
  ClassPartition partition;
  std::vector<DiversityCondition> conditions;
  // Set by the loader when conditions carry different replicate counts.
  bool uneven_replicates = false;

  std::size_t size() const noexcept { return conditions.size(); }
  std::size_t total_replicates() const;
  // Per-class replicate counts for condition m.
  std::vector<std::size_t> counts_for(std::size_t m) const;
};

// Probability vector over a class partition. Entries are validated to be
// finite, nonnegative and to sum to 1 within `kSumTolerance`.
class DiscreteDistribution {
 public:
  static constexpr double kSumTolerance = 1e-9;

  DiscreteDistribution() = default;
  explicit DiscreteDistribution(std::vector<double> probs);

  static DiscreteDistribution uniform(std::size_t k);

  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t j) const { return p_.at(j); }
  const std::vector<double>& probs() const noexcept { return p_; }

 private:
  std::vector<double> p_;
};

// Labeled sample ids, the input to the biased subsampler.
struct LabeledIndex {
  ClassPartition partition;
  std::vector<std::string> sample_ids;
  std::vector<std::size_t> classes;  // parallel to sample_ids

  std::size_t size() const noexcept { return sample_ids.size(); }
  std::vector<std::size_t> class_counts() const;
};

}  // namespace fairgen

#endif  // FAIRGEN_CORE_TYPES_HPP
