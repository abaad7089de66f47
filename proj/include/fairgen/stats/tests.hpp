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

#ifndef FAIRGEN_STATS_TESTS_HPP
#define FAIRGEN_STATS_TESTS_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fairgen/core/types.hpp"

namespace fairgen {

struct TestResult {
  std::string name;
  double statistic = 0.0;
  // dof for chi-squared tests; the effective sample size for the Wilcoxon
  // and Anderson-Darling tests.
  std::size_t dof = 0;
  double p_value = 1.0;
  double alpha = 0.05;
  bool reject = false;
};

// Pearson goodness-of-fit against an arbitrary reference with strictly
// positive entries. Statistic sum (O_j - n q_j)^2 / (n q_j), dof k - 1.
TestResult chi2_gof(const std::vector<std::size_t>& counts,
                    const DiscreteDistribution& reference,
                    double alpha = 0.05);

// Goodness-of-fit against the uniform reference. Satisfies the identity
// statistic = n * chi2_divergence_to_uniform(counts / n).
TestResult chi2_gof_uniform(const std::vector<std::size_t>& counts,
                            double alpha = 0.05);

// Pearson test of independence on a k x 2 table (row = class, columns =
// e.g. correct/incorrect counts), dof k - 1. Throws DegenerateMargin when a
// row or column total is zero.
TestResult chi2_homogeneity(
    const std::vector<std::array<std::size_t, 2>>& table, double alpha = 0.05);

// Two-sided paired Wilcoxon signed-rank test. Zero differences are
// discarded, tied absolute differences get average ranks. Exact p by
// enumeration of sign assignments for effective n <= 25, normal
// approximation with tie and continuity corrections beyond. The reported
// statistic is min(W+, W-).
TestResult wilcoxon_signed_rank(const std::vector<double>& a,
                                const std::vector<double>& b,
                                double alpha = 0.05);

// Anderson-Darling normality test with mean and variance estimated from the
// sample (case 3). The statistic is the small-sample adjusted
// A*^2 = A^2 (1 + 0.75/n + 2.25/n^2). For the tabulated significance
// levels {0.15, 0.10, 0.05, 0.025, 0.01} the rejection decision compares
// A*^2 against Stephens' critical values (0.752 at 0.05); for any other
// alpha it falls back to p < alpha with p from the standard case-3
// approximation.
TestResult anderson_darling_normal(const std::vector<double>& sample,
                                   double alpha = 0.05);

// Pearson chi-squared comparison of two binary 0/1 loss vectors via the
// 2 x 2 (variant x outcome) contingency table, dof 1.
TestResult chi2_binary_paired(const std::vector<int>& a,
                              const std::vector<int>& b, double alpha = 0.05);

}  // namespace fairgen

#endif  // FAIRGEN_STATS_TESTS_HPP
