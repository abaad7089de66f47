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

#include "fairgen/stats/tests.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <utility>

#include "fairgen/core/errors.hpp"
#include "fairgen/stats/special.hpp"

namespace fairgen {
namespace {

constexpr std::size_t kExactWilcoxonLimit = 25;

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1), got " +
                      std::to_string(alpha));
  }
}

double clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }

// Average ranks of |d|, doubled so ties (.5 averages) stay integral.
std::vector<long long> doubled_ranks(const std::vector<double>& absd) {
  const std::size_t n = absd.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return absd[a] < absd[b]; });
  std::vector<long long> r2(n, 0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && absd[order[j]] == absd[order[i]]) ++j;
    // ranks i+1 .. j share the average (i+1+j)/2
    for (std::size_t t = i; t < j; ++t) {
      r2[order[t]] = static_cast<long long>(i + 1 + j);
    }
    i = j;
  }
  return r2;
}

// Exact two-sided p over all sign assignments, via a subset-sum count table
// on the doubled ranks.
double wilcoxon_exact_p(const std::vector<long long>& r2, long long w2_plus) {
  const std::size_t n = r2.size();
  long long max_sum = 0;
  for (long long r : r2) max_sum += r;
  std::vector<double> count(static_cast<std::size_t>(max_sum) + 1, 0.0);
  count[0] = 1.0;
  for (long long r : r2) {
    for (long long s = max_sum; s >= r; --s) {
      count[static_cast<std::size_t>(s)] +=
          count[static_cast<std::size_t>(s - r)];
    }
  }
  const double total = std::ldexp(1.0, static_cast<int>(n));
  double below = 0.0, above = 0.0;
  for (long long s = 0; s <= max_sum; ++s) {
    if (s <= w2_plus) below += count[static_cast<std::size_t>(s)];
    if (s >= w2_plus) above += count[static_cast<std::size_t>(s)];
  }
  return clamp01(2.0 * std::min(below, above) / total);
}

double wilcoxon_normal_p(const std::vector<long long>& r2, double w_plus) {
  const double n = double(r2.size());
  const double mu = n * (n + 1.0) / 4.0;
  double sigma2 = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
  // tie correction over groups of equal doubled ranks
  std::vector<long long> sorted = r2;
  std::sort(sorted.begin(), sorted.end());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = double(j - i);
    sigma2 -= (t * t * t - t) / 48.0;
    i = j;
  }
  const double sigma = std::sqrt(sigma2);
  double delta = w_plus - mu;
  if (delta > 0.5) {
    delta -= 0.5;
  } else if (delta < -0.5) {
    delta += 0.5;
  } else {
    delta = 0.0;
  }
  const double z = delta / sigma;
  return clamp01(2.0 * (1.0 - normal_cdf(std::abs(z))));
}

double anderson_darling_p(double z) {
  double p;
  if (z >= 0.6) {
    p = std::exp(1.2937 - 5.709 * z + 0.0186 * z * z);
  } else if (z >= 0.34) {
    p = std::exp(0.9177 - 4.279 * z - 1.38 * z * z);
  } else if (z > 0.2) {
    p = 1.0 - std::exp(-8.318 + 42.796 * z - 59.938 * z * z);
  } else {
    p = 1.0 - std::exp(-13.436 + 101.14 * z - 223.73 * z * z);
  }
  return clamp01(p);
}

// Stephens' case-3 critical values for A*^2.
constexpr std::array<std::pair<double, double>, 5> kAdCritical = {{
    {0.15, 0.576},
    {0.10, 0.631},
    {0.05, 0.752},
    {0.025, 0.873},
    {0.01, 1.035},
}};

}  // namespace

TestResult chi2_gof(const std::vector<std::size_t>& counts,
                    const DiscreteDistribution& reference, double alpha) {
  check_alpha(alpha);
  const std::size_t k = counts.size();
  if (k < 2) throw EmptyCounts("need at least 2 cells, got " +
                               std::to_string(k));
  if (reference.size() != k) {
    throw DimensionMismatch("reference has " +
                            std::to_string(reference.size()) +
                            " entries for " + std::to_string(k) + " cells");
  }
  const double n =
      double(std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
  if (n == 0.0) throw EmptyCounts("all cell counts are zero");
  double t = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const double q = reference[j];
    if (!(q > 0.0)) {
      throw DomainError("reference probability for cell " +
                        std::to_string(j) + " must be positive");
    }
    const double e = n * q;
    const double d = double(counts[j]) - e;
    t += d * d / e;
  }
  TestResult res;
  res.name = "chi2-gof";
  res.statistic = t;
  res.dof = k - 1;
  res.alpha = alpha;
  res.p_value = clamp01(1.0 - chi2_cdf(t, k - 1));
  res.reject = res.p_value < alpha;
  return res;
}

TestResult chi2_gof_uniform(const std::vector<std::size_t>& counts,
                            double alpha) {
  if (counts.size() < 2) {
    throw EmptyCounts("need at least 2 cells, got " +
                      std::to_string(counts.size()));
  }
  TestResult res =
      chi2_gof(counts, DiscreteDistribution::uniform(counts.size()), alpha);
  res.name = "chi2-gof-uniform";
  return res;
}

TestResult chi2_homogeneity(
    const std::vector<std::array<std::size_t, 2>>& table, double alpha) {
  check_alpha(alpha);
  const std::size_t k = table.size();
  if (k < 2) throw EmptyCounts("need at least 2 rows, got " +
                               std::to_string(k));
  std::array<double, 2> col = {0.0, 0.0};
  std::vector<double> row(k, 0.0);
  double n = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    row[i] = double(table[i][0] + table[i][1]);
    if (row[i] == 0.0) {
      throw DegenerateMargin("row " + std::to_string(i) + " has no "
                             "observations");
    }
    col[0] += double(table[i][0]);
    col[1] += double(table[i][1]);
    n += row[i];
  }
  if (col[0] == 0.0 || col[1] == 0.0) {
    throw DegenerateMargin("a column total is zero; the table carries no "
                           "contrast");
  }
  double t = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const double e = row[i] * col[j] / n;
      const double d = double(table[i][j]) - e;
      t += d * d / e;
    }
  }
  TestResult res;
  res.name = "chi2-homogeneity";
  res.statistic = t;
  res.dof = k - 1;
  res.alpha = alpha;
  res.p_value = clamp01(1.0 - chi2_cdf(t, k - 1));
  res.reject = res.p_value < alpha;
  return res;
}

TestResult wilcoxon_signed_rank(const std::vector<double>& a,
                                const std::vector<double>& b, double alpha) {
  check_alpha(alpha);
  if (a.size() != b.size()) {
    throw DimensionMismatch("paired vectors have sizes " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
  if (a.empty()) throw EmptyCounts("no pairs given");
  std::vector<double> absd;
  std::vector<int> sign;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d == 0.0) continue;
    absd.push_back(std::abs(d));
    sign.push_back(d > 0.0 ? 1 : -1);
  }
  if (absd.empty()) {
    throw AllZeroDifferences("every paired difference is zero");
  }
  const std::size_t n = absd.size();
  const auto r2 = doubled_ranks(absd);
  long long w2_plus = 0;
  long long w2_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w2_total += r2[i];
    if (sign[i] > 0) w2_plus += r2[i];
  }
  const long long w2_minus = w2_total - w2_plus;

  TestResult res;
  res.name = "wilcoxon-signed-rank";
  res.statistic = double(std::min(w2_plus, w2_minus)) / 2.0;
  res.dof = n;
  res.alpha = alpha;
  res.p_value = n <= kExactWilcoxonLimit
                    ? wilcoxon_exact_p(r2, w2_plus)
                    : wilcoxon_normal_p(r2, double(w2_plus) / 2.0);
  res.reject = res.p_value < alpha;
  return res;
}

TestResult anderson_darling_normal(const std::vector<double>& sample,
                                   double alpha) {
  check_alpha(alpha);
  const std::size_t n = sample.size();
  if (n < 8) {
    throw TooFewSamples("Anderson-Darling needs n >= 8, got " +
                        std::to_string(n));
  }
  const double mean =
      std::accumulate(sample.begin(), sample.end(), 0.0) / double(n);
  double ss = 0.0;
  for (double v : sample) ss += (v - mean) * (v - mean);
  const double var = ss / double(n - 1);
  if (var <= 0.0) throw ZeroVariance("sample is constant");
  const double sd = std::sqrt(var);

  std::vector<double> z(sample);
  std::sort(z.begin(), z.end());
  for (double& v : z) v = (v - mean) / sd;

  double a2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = std::max(normal_cdf(z[i]), 1e-300);
    const double hi = std::max(normal_cdf(-z[n - 1 - i]), 1e-300);
    a2 += double(2 * i + 1) * (std::log(lo) + std::log(hi));
  }
  a2 = -double(n) - a2 / double(n);
  const double adj =
      a2 * (1.0 + 0.75 / double(n) + 2.25 / (double(n) * double(n)));

  TestResult res;
  res.name = "anderson-darling-normal";
  res.statistic = adj;
  res.dof = n;
  res.alpha = alpha;
  res.p_value = anderson_darling_p(adj);
  res.reject = res.p_value < alpha;
  for (const auto& [a, crit] : kAdCritical) {
    if (std::abs(alpha - a) < 1e-12) {
      res.reject = adj > crit;
      break;
    }
  }
  return res;
}

TestResult chi2_binary_paired(const std::vector<int>& a,
                              const std::vector<int>& b, double alpha) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("paired vectors have sizes " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
  if (a.empty()) throw EmptyCounts("no pairs given");
  std::vector<std::array<std::size_t, 2>> table(2, {0, 0});
  auto tally = [](const std::vector<int>& v, std::array<std::size_t, 2>& row) {
    for (int x : v) {
      if (x != 0 && x != 1) {
        throw DomainError("binary losses must be 0 or 1, got " +
                          std::to_string(x));
      }
      ++row[static_cast<std::size_t>(x)];
    }
  };
  tally(a, table[0]);
  tally(b, table[1]);
  TestResult res = chi2_homogeneity(table, alpha);
  res.name = "chi2-binary-paired";
  return res;
}

}  // namespace fairgen
