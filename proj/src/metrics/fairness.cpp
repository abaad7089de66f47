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

#include "fairgen/metrics/fairness.hpp"

#include <cmath>

#include "fairgen/core/errors.hpp"

namespace fairgen {
namespace {

// Per-class rates with a shared normalizer; the two RDP variants differ
// only in which rate enters.
DiscreteDistribution normalize_rates(const std::vector<double>& rates) {
  double sum = 0.0;
  for (double r : rates) sum += r;
  std::vector<double> probs(rates.size());
  for (std::size_t j = 0; j < rates.size(); ++j) probs[j] = rates[j] / sum;
  return DiscreteDistribution(std::move(probs));
}

void require_all_classes(const EvalSet& set,
                         const std::vector<std::size_t>& counts) {
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) {
      throw EmptyClass("class '" + set.partition.name(j) + "' has no "
                       "records");
    }
  }
}

}  // namespace

std::string to_string(FairnessKind kind) {
  switch (kind) {
    case FairnessKind::RDP:
      return "RDP";
    case FairnessKind::RDP_correct:
      return "RDP-correct";
    case FairnessKind::PR:
      return "PR";
    case FairnessKind::UCPR:
      return "UCPR";
  }
  return "?";
}

FairnessKind kind_of(RdpVariant variant) {
  return variant == RdpVariant::estimator ? FairnessKind::RDP
                                          : FairnessKind::RDP_correct;
}

std::string to_string(RdpVariant variant) {
  return variant == RdpVariant::estimator ? "estimator" : "correct";
}

RdpVariant rdp_variant_from_string(const std::string& name) {
  if (name == "estimator") return RdpVariant::estimator;
  if (name == "correct") return RdpVariant::correct;
  throw DomainError("unknown RDP variant '" + name +
                    "' (expected 'estimator' or 'correct')");
}

DiscreteDistribution rdp_distribution(const EvalSet& set) {
  const auto n = set.class_counts();
  require_all_classes(set, n);
  const auto correct = set.correct_counts();
  std::vector<double> rates(n.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    rates[j] = double(n[j] - correct[j]) / double(n[j]);
    sum += rates[j];
  }
  if (sum == 0.0) {
    throw DegenerateAllCorrect(
        "every class is reconstructed perfectly; the 0-1 loss normalizer "
        "vanishes");
  }
  return normalize_rates(rates);
}

DiscreteDistribution rdp_distribution_correct(const EvalSet& set) {
  const auto n = set.class_counts();
  require_all_classes(set, n);
  const auto correct = set.correct_counts();
  std::vector<double> rates(n.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    rates[j] = double(correct[j]) / double(n[j]);
    sum += rates[j];
  }
  if (sum == 0.0) {
    throw DegenerateAllWrong(
        "no class is ever reconstructed correctly; the correct-rate "
        "normalizer vanishes");
  }
  return normalize_rates(rates);
}

DiscreteDistribution pr_distribution(const EvalSet& set) {
  if (set.records.empty()) throw EmptySet("evaluation set has no records");
  const auto recon = set.recon_counts();
  std::vector<double> probs(recon.size());
  for (std::size_t j = 0; j < recon.size(); ++j) {
    probs[j] = double(recon[j]) / double(set.size());
  }
  return DiscreteDistribution(std::move(probs));
}

DiscreteDistribution cpr_distribution(
    const std::vector<std::size_t>& recon_classes, std::size_t k) {
  if (k < 2) throw InvalidK("need k >= 2, got " + std::to_string(k));
  if (recon_classes.empty()) {
    throw EmptyCondition("condition has no replicates");
  }
  std::vector<double> probs(k, 0.0);
  for (std::size_t cls : recon_classes) {
    if (cls >= k) {
      throw UnknownClass("class index " + std::to_string(cls) +
                         " out of range for k = " + std::to_string(k));
    }
    probs[cls] += 1.0;
  }
  for (double& p : probs) p /= double(recon_classes.size());
  return DiscreteDistribution(std::move(probs));
}

DiscreteDistribution ucpr_distribution(const DiversitySet& dset) {
  if (dset.conditions.empty()) {
    throw EmptyDiversitySet("diversity set has no conditions");
  }
  const std::size_t k = dset.partition.size();
  std::vector<double> acc(k, 0.0);
  for (const auto& cond : dset.conditions) {
    const auto cpr = cpr_distribution(cond.recon_classes, k);
    for (std::size_t j = 0; j < k; ++j) acc[j] += cpr[j];
  }
  for (double& v : acc) v /= double(dset.conditions.size());
  return DiscreteDistribution(std::move(acc));
}

double chi2_divergence_to_uniform(const DiscreteDistribution& d) {
  const std::size_t k = d.size();
  const double u = 1.0 / double(k);
  double sum = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const double dev = d[j] - u;
    sum += dev * dev;
  }
  return double(k) * sum;
}

double chebyshev_to_uniform(const DiscreteDistribution& d) {
  const double u = 1.0 / double(d.size());
  double max_dev = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    max_dev = std::max(max_dev, std::abs(d[j] - u));
  }
  return max_dev;
}

FairnessScores score_distribution(FairnessKind kind,
                                  const DiscreteDistribution& d) {
  FairnessScores s;
  s.kind = kind;
  s.distribution = d;
  s.chi2_divergence = chi2_divergence_to_uniform(d);
  s.chebyshev = chebyshev_to_uniform(d);
  return s;
}

FairnessScores score(FairnessKind kind, const EvalSet& set) {
  switch (kind) {
    case FairnessKind::RDP:
      return score_distribution(kind, rdp_distribution(set));
    case FairnessKind::RDP_correct:
      return score_distribution(kind, rdp_distribution_correct(set));
    case FairnessKind::PR:
      return score_distribution(kind, pr_distribution(set));
    case FairnessKind::UCPR:
      break;
  }
  throw DomainError("UCPR scores come from a DiversitySet");
}

FairnessScores score(const DiversitySet& dset) {
  return score_distribution(FairnessKind::UCPR, ucpr_distribution(dset));
}

}  // namespace fairgen
