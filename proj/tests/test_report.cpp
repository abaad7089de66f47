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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fairgen/core/errors.hpp"
#include "fairgen/dataset/simulate.hpp"
#include "fairgen/metrics/attribute.hpp"
#include "fairgen/report/report.hpp"
#include "test_util.hpp"

using namespace fairgen;
using testutil::TempDir;

namespace {

ConfusionMatrix heavy_bias() {
  return ConfusionMatrix{{DiscreteDistribution({0.95, 0.025, 0.025}),
                          DiscreteDistribution({0.45, 0.5, 0.05}),
                          DiscreteDistribution({0.45, 0.05, 0.5})}};
}

ConfusionMatrix mild_bias() {
  return ConfusionMatrix{{DiscreteDistribution({0.90, 0.05, 0.05}),
                          DiscreteDistribution({0.10, 0.85, 0.05}),
                          DiscreteDistribution({0.10, 0.05, 0.85})}};
}

EvalSet simulated(const ConfusionMatrix& confusion, const std::string& name,
                  std::size_t per_class, std::uint64_t seed) {
  ClassPartition partition({"a", "b", "c"});
  auto set = simulate_eval_set(
      confusion, partition,
      std::vector<std::size_t>(partition.size(), per_class), seed);
  set.name = name;
  return set;
}

const DistributionRow* find_row(const std::vector<DistributionRow>& rows,
                                const std::string& variant,
                                FairnessKind kind) {
  for (const auto& row : rows) {
    if (row.variant == variant && row.kind == kind) return &row;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("identical variants never flag significance") {
  auto set = simulated(mild_bias(), "same", 800, 3);
  for (std::size_t i = 0; i < set.records.size(); ++i) {
    set.records[i].scalars["lpips"] = 0.1 + 0.001 * double(i % 50);
  }
  VariantPair pair{set, set, std::nullopt, std::nullopt};
  auto report = build_report(pair, ReportConfig{});
  REQUIRE(report.variants.size() == 2);
  CHECK(report.variants[0] == "same (a)");
  CHECK(report.variants[1] == "same (b)");
  REQUIRE_FALSE(report.performance.empty());
  for (const auto& row : report.performance) {
    CHECK(row.not_significant);
    CHECK(*row.mean_a == *row.mean_b);
  }
  // the continuous metric ran into the all-zero-differences convention
  bool noted = false;
  for (const auto& row : report.performance) {
    if (row.metric == "lpips") noted = !row.note.empty();
  }
  CHECK(noted);
}

TEST_CASE("biased variant scores strictly larger and both reject") {
  auto biased = simulated(heavy_bias(), "biased", 10000, 11);
  auto mild = simulated(mild_bias(), "mild", 10000, 12);
  VariantPair pair{biased, mild, std::nullopt, std::nullopt};
  auto report = build_report(pair, ReportConfig{});

  for (auto kind : {FairnessKind::RDP, FairnessKind::PR}) {
    const auto* rb = find_row(report.fairness, "biased", kind);
    const auto* rm = find_row(report.fairness, "mild", kind);
    REQUIRE(rb != nullptr);
    REQUIRE(rm != nullptr);
    REQUIRE(rb->scores.has_value());
    REQUIRE(rm->scores.has_value());
    CHECK(rb->scores->chi2_divergence > rm->scores->chi2_divergence);
    CHECK(rb->scores->chebyshev > rm->scores->chebyshev);
    REQUIRE(rb->uniformity.has_value());
    REQUIRE(rm->uniformity.has_value());
    CHECK(rb->uniformity->reject);
    CHECK(rm->uniformity->reject);
  }

  // 0-1 loss differs strongly between the two confusion diagonals
  REQUIRE(report.performance.size() == 1);
  CHECK(report.performance[0].metric == "0-1");
  CHECK_FALSE(report.performance[0].not_significant);
  REQUIRE(report.performance[0].difference.has_value());
  CHECK(report.performance[0].difference->reject);
}

TEST_CASE("report JSON round trips losslessly") {
  auto biased = simulated(heavy_bias(), "biased", 2000, 21);
  auto mild = simulated(mild_bias(), "mild", 2000, 22);
  DiversitySet dset;
  dset.partition = biased.partition;
  dset.conditions.push_back({"u1", {0, 0, 1, 2}});
  dset.conditions.push_back({"u2", {0, 1, 1, 2}});
  VariantPair pair{biased, mild, dset, dset};
  auto report = build_report(pair, ReportConfig{});
  REQUIRE_FALSE(report.diversity.empty());

  const auto text = to_json_string(report);
  auto back = report_from_json_string(text);
  CHECK(to_json_string(back) == text);
  CHECK(back.classes == report.classes);
  CHECK(back.alpha == report.alpha);
  CHECK(back.performance.size() == report.performance.size());
  CHECK(back.fairness.size() == report.fairness.size());
  CHECK(back.diversity.size() == report.diversity.size());
  CHECK(back.breakdown.size() == report.breakdown.size());

  CHECK_THROWS_AS(report_from_json_string("{not json"), MalformedManifest);
  CHECK_THROWS_AS(report_from_json_string("{\"classes\": []}"),
                  MalformedManifest);
}

TEST_CASE("csv block sizes follow the report shape") {
  TempDir dir;
  auto biased = simulated(heavy_bias(), "biased", 500, 31);
  auto mild = simulated(mild_bias(), "mild", 500, 32);
  for (auto* set : {&biased, &mild}) {
    for (auto& rec : set->records) rec.scalars["niqe"] = 3.0;
  }
  VariantPair pair{biased, mild, std::nullopt, std::nullopt};
  auto report = build_report(pair, ReportConfig{});
  const auto path = dir.file("r.csv");
  emit(report, ReportFormat::csv, path);

  std::istringstream in(testutil::read_file(path));
  std::string line;
  std::size_t perf = 0, total = 0;
  REQUIRE(std::getline(in, line));
  CHECK(line ==
        "block,metric,variant,class,value,statistic,p_value,reject,marker,"
        "note");
  while (std::getline(in, line)) {
    ++total;
    if (line.rfind("performance,", 0) == 0) ++perf;
  }
  // variants x metrics rows in the performance block
  CHECK(perf == 2 * report.performance.size());
  CHECK(total > perf);
}

TEST_CASE("markdown carries the bold and cross markers") {
  TempDir dir;
  auto set = simulated(heavy_bias(), "model", 1000, 41);
  VariantPair pair{set, set, std::nullopt, std::nullopt};
  auto report = build_report(pair, ReportConfig{});
  const auto path = dir.file("r.md");
  emit(report, ReportFormat::markdown, path);
  const auto text = testutil::read_file(path);
  CHECK(text.find("# Benchmark report") != std::string::npos);
  CHECK(text.find("## Performance") != std::string::npos);
  CHECK(text.find("## Fairness") != std::string::npos);
  CHECK(text.find("**") != std::string::npos);   // identical pair: bold
  CHECK(text.find("✗") != std::string::npos);    // biased marginal: cross
  CHECK(text.find("| model (a) |") != std::string::npos);
  CHECK(text.find("| model (b) |") != std::string::npos);
}

TEST_CASE("degenerate rdp is reported, not fatal") {
  auto set = simulated(ConfusionMatrix::identity(3), "perfect", 300, 51);
  VariantPair pair{set, set, std::nullopt, std::nullopt};
  auto report = build_report(pair, ReportConfig{});
  const auto* row =
      find_row(report.fairness, "perfect (a)", FairnessKind::RDP);
  REQUIRE(row != nullptr);
  CHECK_FALSE(row->scores.has_value());
  CHECK_FALSE(row->note.empty());
  CHECK_FALSE(row->uniformity.has_value());

  // the performance comparison also lacks contrast: flagged, not failed
  REQUIRE_FALSE(report.performance.empty());
  CHECK(report.performance[0].not_significant);
}

TEST_CASE("blur means are displayed negated") {
  auto a = simulated(mild_bias(), "a", 100, 61);
  auto b = simulated(mild_bias(), "b", 100, 62);
  for (auto* set : {&a, &b}) {
    for (std::size_t i = 0; i < set->records.size(); ++i) {
      (*set).records[i].scalars["blur"] = 100.0 + double(i % 7);
    }
  }
  VariantPair pair{a, b, std::nullopt, std::nullopt};
  auto report = build_report(pair, ReportConfig{});
  const PerformanceRow* blur = nullptr;
  for (const auto& row : report.performance) {
    if (row.metric == "blur") blur = &row;
  }
  REQUIRE(blur != nullptr);
  auto s = summarize_metric(a, "blur");
  CHECK(*blur->mean_a == doctest::Approx(-s.overall_mean).epsilon(1e-12));
}

TEST_CASE("rdp variant selection flows through the config") {
  auto a = simulated(mild_bias(), "a", 400, 71);
  auto b = simulated(mild_bias(), "b", 400, 72);
  VariantPair pair{a, b, std::nullopt, std::nullopt};
  ReportConfig config;
  config.rdp_variant = RdpVariant::correct;
  config.alpha = 0.01;
  auto report = build_report(pair, config);
  CHECK(report.rdp_variant == "correct");
  CHECK(report.alpha == 0.01);
  CHECK(find_row(report.fairness, "a", FairnessKind::RDP_correct) != nullptr);
  CHECK(find_row(report.fairness, "a", FairnessKind::RDP) == nullptr);
  for (const auto& row : report.fairness) {
    if (row.uniformity) CHECK(row.uniformity->alpha == 0.01);
  }
}

TEST_CASE("config files populate the run configuration") {
  TempDir dir;
  const auto path = dir.file("cfg.txt");
  testutil::write_file(path,
                       "# report knobs\n"
                       "alpha = 0.01\n"
                       "rdp_variant = correct\n"
                       "metrics = lpips, 0-1\n");
  ReportConfig config;
  apply_config_file(path, config);
  CHECK(config.alpha == 0.01);
  CHECK(config.rdp_variant == RdpVariant::correct);
  CHECK(config.metrics == std::vector<std::string>{"lpips", "0-1"});

  testutil::write_file(path, "zzz = 1\n");
  ReportConfig other;
  CHECK_THROWS_AS(apply_config_file(path, other), Error);
}

TEST_CASE("report construction guards") {
  auto a = simulated(mild_bias(), "a", 50, 81);
  auto b = a;
  b.partition = ClassPartition({"x", "y", "z"});
  VariantPair mismatched{a, b, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(build_report(mismatched, ReportConfig{}), WrongPartition);

  auto c = simulated(mild_bias(), "c", 50, 82);
  for (auto& rec : c.records) rec.sample_id = "other_" + rec.sample_id;
  VariantPair disjoint{a, c, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(build_report(disjoint, ReportConfig{}), NoPairedSamples);
}

TEST_CASE("diversity rows carry scores and uneven-replicate notes") {
  auto a = simulated(mild_bias(), "a", 200, 91);
  auto b = simulated(mild_bias(), "b", 200, 92);
  DiversitySet uneven;
  uneven.partition = a.partition;
  uneven.conditions.push_back({"u1", {0, 1, 2, 0, 1, 2}});
  uneven.conditions.push_back({"u2", {0, 1}});
  uneven.uneven_replicates = true;
  VariantPair pair{a, b, uneven, std::nullopt};
  auto report = build_report(pair, ReportConfig{});
  const auto* row = find_row(report.diversity, "a", FairnessKind::UCPR);
  REQUIRE(row != nullptr);
  REQUIRE(row->scores.has_value());
  CHECK(row->uniformity.has_value());
  CHECK_FALSE(row->note.empty());
  CHECK(find_row(report.diversity, "b", FairnessKind::UCPR) == nullptr);
}

TEST_CASE("breakdown rows align with the class axis") {
  auto a = simulated(heavy_bias(), "a", 300, 95);
  auto b = simulated(mild_bias(), "b", 300, 96);
  VariantPair pair{a, b, std::nullopt, std::nullopt};
  auto report = build_report(pair, ReportConfig{});
  bool found = false;
  for (const auto& row : report.breakdown) {
    REQUIRE(row.per_class.size() == report.classes.size());
    if (row.variant == "a" && row.metric == "0-1") {
      found = true;
      auto s = summarize_metric(a, "0-1");
      for (std::size_t j = 0; j < report.classes.size(); ++j) {
        CHECK(*row.per_class[j] ==
              doctest::Approx(*s.per_class_means[j]).epsilon(1e-12));
      }
    }
  }
  CHECK(found);
}
