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

#ifndef FAIRGEN_METRICS_FAIRNESS_HPP
#define FAIRGEN_METRICS_FAIRNESS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fairgen/core/types.hpp"

namespace fairgen {

enum class FairnessKind { RDP, RDP_correct, PR, UCPR };

std::string to_string(FairnessKind kind);

// Which RDP estimator reports use: the plug-in normalization of the 0-1
// loss (estimator, the default) or the correct-rate normalization of the
// definitional form.
enum class RdpVariant { estimator, correct };

FairnessKind kind_of(RdpVariant variant);
std::string to_string(RdpVariant variant);
RdpVariant rdp_variant_from_string(const std::string& name);

struct FairnessScores {
  FairnessKind kind = FairnessKind::RDP;
  DiscreteDistribution distribution;
  double chi2_divergence = 0.0;  // in [0, k-1]
  double chebyshev = 0.0;        // in [0, 1 - 1/k]
};

// Plug-in estimator: entry j is the mean 0-1 loss on class j, normalized by
// the sum over classes. Throws EmptyClass when some class has no records,
// DegenerateAllCorrect when every class mean is zero.
DiscreteDistribution rdp_distribution(const EvalSet& set);

// Definitional variant: entry j is the correct-classification rate on class
// j, normalized. Throws EmptyClass, DegenerateAllWrong.
DiscreteDistribution rdp_distribution_correct(const EvalSet& set);

// Marginal class distribution of the reconstructions.
DiscreteDistribution pr_distribution(const EvalSet& set);

// Empirical class frequencies among one condition's replicates.
DiscreteDistribution cpr_distribution(
    const std::vector<std::size_t>& recon_classes, std::size_t k);

// Unweighted mean of the per-condition distributions; conditions count
// equally even when replicate counts differ.
DiscreteDistribution ucpr_distribution(const DiversitySet& dset);

// k * sum_j (p_j - 1/k)^2, in [0, k-1]; zero exactly for the uniform input.
double chi2_divergence_to_uniform(const DiscreteDistribution& d);

// max_j |p_j - 1/k|, in [0, 1 - 1/k].
double chebyshev_to_uniform(const DiscreteDistribution& d);

// Bundles a distribution with both discrepancies.
FairnessScores score_distribution(FairnessKind kind,
                                  const DiscreteDistribution& d);

// Kind must be RDP, RDP_correct or PR.
FairnessScores score(FairnessKind kind, const EvalSet& set);
// Kind is UCPR.
FairnessScores score(const DiversitySet& dset);

}  // namespace fairgen

#endif  // FAIRGEN_METRICS_FAIRNESS_HPP
