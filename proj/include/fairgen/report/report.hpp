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

#ifndef FAIRGEN_REPORT_REPORT_HPP
#define FAIRGEN_REPORT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "fairgen/core/types.hpp"
#include "fairgen/metrics/fairness.hpp"
#include "fairgen/stats/tests.hpp"

namespace fairgen {

struct ReportConfig {
  double alpha = 0.05;
  RdpVariant rdp_variant = RdpVariant::estimator;
  // Metrics to include, in order; empty selects every carried metric
  // (the known ones first, extra scalar channels alphabetically).
  std::vector<std::string> metrics;
};

// Plain-text `key = value` file with keys alpha, rdp_variant and metrics
// (comma-separated); '#' starts a comment. Unknown keys are rejected.
void apply_config_file(const std::string& path, ReportConfig& config);

// The two model variants under comparison, with optional diversity runs.
struct VariantPair {
  EvalSet a;
  EvalSet b;
  std::optional<DiversitySet> div_a;
  std::optional<DiversitySet> div_b;
};

struct PerformanceRow {
  std::string metric;
  // Displayed means (sign already flipped for "blur"); absent when the
  // variant does not carry the metric.
  std::optional<double> mean_a;
  std::optional<double> mean_b;
  std::optional<TestResult> difference;  // paired comparison
  std::optional<TestResult> normality;   // Anderson-Darling diagnostic
  // Bold marker: true iff the paired test does not reject, or no contrast
  // exists (identical losses).
  bool not_significant = false;
  std::string note;
};

// One fairness or diversity line: a distribution's discrepancies plus the
// uniformity-test verdict (the cross marker).
struct DistributionRow {
  std::string variant;
  FairnessKind kind = FairnessKind::RDP;
  std::optional<FairnessScores> scores;   // absent on degenerate input
  std::optional<TestResult> uniformity;
  std::string note;
};

// Bar-chart style data: one value per class for a variant and a metric
// (per-class metric means, or a distribution's probabilities).
struct ClassBreakdownRow {
  std::string variant;
  std::string metric;
  std::vector<std::optional<double>> per_class;
};

struct BenchmarkReport {
  std::vector<std::string> classes;
  std::vector<std::string> variants;  // the two set names
  double alpha = 0.05;
  std::string rdp_variant;            // "estimator" or "correct"
  std::vector<PerformanceRow> performance;
  std::vector<DistributionRow> fairness;
  std::vector<DistributionRow> diversity;
  std::vector<ClassBreakdownRow> breakdown;
};

// Assembles the full comparison: paired performance tests per metric
// (Wilcoxon for continuous values, the chi-squared binary test for the 0-1
// loss), fairness and diversity distributions with uniformity tests, and
// per-class breakdowns. Throws NoPairedSamples when the sets share no
// sample ids.
BenchmarkReport build_report(const VariantPair& pair,
                             const ReportConfig& config);

enum class ReportFormat { json, csv, markdown };

ReportFormat report_format_from_string(const std::string& name);

// JSON is the canonical machine format and parses back losslessly; CSV is
// a flat long-format table; Markdown renders the three tables with bold
// and cross markers.
void emit(const BenchmarkReport& report, ReportFormat format,
          const std::string& path);

// Round-trip support for the canonical format.
std::string to_json_string(const BenchmarkReport& report);
BenchmarkReport report_from_json_string(const std::string& text);

}  // namespace fairgen

#endif  // FAIRGEN_REPORT_REPORT_HPP
