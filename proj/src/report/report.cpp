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

#include "fairgen/report/report.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>

#include "fairgen/core/errors.hpp"
#include "fairgen/metrics/attribute.hpp"

namespace fairgen {
namespace {

// Preferred column order; extra scalar channels follow alphabetically.
const std::vector<std::string> kKnownMetrics = {"lpips", "dssim", "cos",
                                                "0-1",   "niqe",  "blur"};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool carried(const EvalSet& set, const std::string& metric) {
  for (const auto& v : metric_values(set, metric)) {
    if (v) return true;
  }
  return false;
}

std::vector<std::string> select_metrics(const VariantPair& pair,
                                        const ReportConfig& config) {
  if (!config.metrics.empty()) return config.metrics;
  std::vector<std::string> metrics;
  for (const auto& m : kKnownMetrics) {
    if (carried(pair.a, m) || carried(pair.b, m)) metrics.push_back(m);
  }
  std::set<std::string> extra;
  for (const EvalSet* set : {&pair.a, &pair.b}) {
    for (const auto& rec : set->records) {
      for (const auto& [name, value] : rec.scalars) extra.insert(name);
    }
  }
  extra.erase("cos_sim");  // byproduct of the cosine loss, not a metric
  for (const auto& m : kKnownMetrics) extra.erase(m);
  metrics.insert(metrics.end(), extra.begin(), extra.end());
  return metrics;
}

// Blur is displayed negated so that lower is better across all columns.
double display_mean(const std::string& metric, double mean) {
  return metric == "blur" ? -mean : mean;
}

void append_note(std::string& note, const std::string& text) {
  if (!note.empty()) note += "; ";
  note += text;
}

PerformanceRow performance_row(
    const VariantPair& pair, const std::string& metric,
    const std::vector<std::pair<std::size_t, std::size_t>>& shared,
    double alpha) {
  PerformanceRow row;
  row.metric = metric;
  bool in_a = false, in_b = false;
  try {
    row.mean_a = display_mean(metric, summarize_metric(pair.a, metric)
                                          .overall_mean);
    in_a = true;
  } catch (const UnknownMetric&) {
  }
  try {
    row.mean_b = display_mean(metric, summarize_metric(pair.b, metric)
                                          .overall_mean);
    in_b = true;
  } catch (const UnknownMetric&) {
  }
  if (!in_a && !in_b) {
    row.note = "no record carries this metric";
    return row;
  }
  if (!in_a || !in_b) {
    row.note = "only one variant carries this metric";
    return row;
  }

  const auto va = metric_values(pair.a, metric);
  const auto vb = metric_values(pair.b, metric);
  std::vector<double> da, db;
  for (const auto& [ia, ib] : shared) {
    if (va[ia] && vb[ib]) {
      da.push_back(*va[ia]);
      db.push_back(*vb[ib]);
    }
  }
  if (da.empty()) {
    row.note = "no paired samples carry this metric";
    return row;
  }

  if (metric == kMetric01) {
    std::vector<int> ba(da.size()), bb(db.size());
    for (std::size_t i = 0; i < da.size(); ++i) {
      ba[i] = int(da[i]);
      bb[i] = int(db[i]);
    }
    try {
      row.difference = chi2_binary_paired(ba, bb, alpha);
      row.not_significant = !row.difference->reject;
    } catch (const DegenerateMargin&) {
      row.note = "no outcome contrast between the variants";
      row.not_significant = true;
    }
    return row;
  }

  try {
    row.difference = wilcoxon_signed_rank(da, db, alpha);
    row.not_significant = !row.difference->reject;
  } catch (const AllZeroDifferences&) {
    row.note = "all paired differences are zero";
    row.not_significant = true;
  }
  std::vector<double> diffs(da.size());
  for (std::size_t i = 0; i < da.size(); ++i) diffs[i] = da[i] - db[i];
  try {
    row.normality = anderson_darling_normal(diffs, alpha);
  } catch (const Error&) {
    // diagnostic only; skipped for tiny or constant difference samples
  }
  return row;
}

DistributionRow rdp_row(const EvalSet& set, const std::string& name,
                        RdpVariant variant, double alpha) {
  DistributionRow row;
  row.variant = name;
  row.kind = kind_of(variant);
  try {
    row.scores = score(row.kind, set);
  } catch (const DegenerateAllCorrect&) {
    row.note = "all classes reconstructed perfectly; discrepancy 0 by "
               "convention";
  } catch (const DegenerateAllWrong&) {
    row.note = "no class ever reconstructed correctly; discrepancy 0 by "
               "convention";
  }
  const auto n = set.class_counts();
  const auto correct = set.correct_counts();
  std::vector<std::array<std::size_t, 2>> table(n.size());
  for (std::size_t j = 0; j < n.size(); ++j) {
    table[j] = {correct[j], n[j] - correct[j]};
  }
  try {
    row.uniformity = chi2_homogeneity(table, alpha);
  } catch (const DegenerateMargin&) {
    append_note(row.note, "uniformity test skipped: no correct/incorrect "
                          "contrast");
  }
  return row;
}

DistributionRow pr_row(const EvalSet& set, const std::string& name,
                       double alpha) {
  DistributionRow row;
  row.variant = name;
  row.kind = FairnessKind::PR;
  row.scores = score(FairnessKind::PR, set);
  row.uniformity = chi2_gof_uniform(set.recon_counts(), alpha);
  return row;
}

DistributionRow ucpr_row(const std::string& name, const DiversitySet& dset,
                         double alpha) {
  DistributionRow row;
  row.variant = name;
  row.kind = FairnessKind::UCPR;
  row.scores = score(dset);
  std::vector<std::size_t> pooled(dset.partition.size(), 0);
  for (std::size_t m = 0; m < dset.size(); ++m) {
    const auto counts = dset.counts_for(m);
    for (std::size_t j = 0; j < counts.size(); ++j) pooled[j] += counts[j];
  }
  row.uniformity = chi2_gof_uniform(pooled, alpha);
  if (dset.uneven_replicates) {
    row.note = "uneven replicate counts: the pooled uniformity test weights "
               "conditions by size";
  }
  return row;
}

void add_breakdowns(BenchmarkReport& report, const EvalSet& set,
                    const std::string& name) {
  for (const auto& row : report.performance) {
    ClassBreakdownRow b;
    b.variant = name;
    b.metric = row.metric;
    try {
      const auto summary = summarize_metric(set, row.metric);
      b.per_class.resize(summary.per_class_means.size());
      for (std::size_t j = 0; j < b.per_class.size(); ++j) {
        if (summary.per_class_means[j]) {
          b.per_class[j] = display_mean(row.metric,
                                        *summary.per_class_means[j]);
        }
      }
    } catch (const UnknownMetric&) {
      continue;
    }
    report.breakdown.push_back(std::move(b));
  }
  for (const auto& rows : {report.fairness, report.diversity}) {
    for (const auto& row : rows) {
      if (row.variant != name || !row.scores) continue;
      ClassBreakdownRow b;
      b.variant = name;
      b.metric = "P_" + to_string(row.kind);
      const auto& d = row.scores->distribution;
      b.per_class.resize(d.size());
      for (std::size_t j = 0; j < d.size(); ++j) b.per_class[j] = d[j];
      report.breakdown.push_back(std::move(b));
    }
  }
}

}  // namespace

void apply_config_file(const std::string& path, ReportConfig& config) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw MalformedManifest("expected 'key = value'", line_no);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "alpha") {
      try {
        config.alpha = std::stod(value);
      } catch (const std::exception&) {
        throw MalformedManifest("cannot parse alpha '" + value + "'",
                                line_no);
      }
      if (!(config.alpha > 0.0) || !(config.alpha < 1.0)) {
        throw MalformedManifest("alpha must lie in (0, 1)", line_no);
      }
    } else if (key == "rdp_variant") {
      config.rdp_variant = rdp_variant_from_string(value);
    } else if (key == "metrics") {
      config.metrics.clear();
      std::string cur;
      for (char ch : value + ",") {
        if (ch == ',') {
          const std::string m = trim(cur);
          if (!m.empty()) config.metrics.push_back(m);
          cur.clear();
        } else {
          cur.push_back(ch);
        }
      }
    } else {
      throw MalformedManifest("unknown config key '" + key + "'", line_no);
    }
  }
}

BenchmarkReport build_report(const VariantPair& pair,
                             const ReportConfig& config) {
  if (pair.a.partition != pair.b.partition) {
    throw WrongPartition("the two variants use different class partitions");
  }
  if (!(config.alpha > 0.0) || !(config.alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1)");
  }

  std::unordered_map<std::string, std::size_t> by_id_b;
  for (std::size_t i = 0; i < pair.b.records.size(); ++i) {
    by_id_b.emplace(pair.b.records[i].sample_id, i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> shared;
  for (std::size_t i = 0; i < pair.a.records.size(); ++i) {
    auto it = by_id_b.find(pair.a.records[i].sample_id);
    if (it != by_id_b.end()) shared.emplace_back(i, it->second);
  }
  if (shared.empty()) {
    throw NoPairedSamples("the variants share no sample ids");
  }

  std::string name_a = pair.a.name;
  std::string name_b = pair.b.name;
  if (name_a == name_b) {
    name_a += " (a)";
    name_b += " (b)";
  }

  BenchmarkReport report;
  report.classes = pair.a.partition.names();
  report.variants = {name_a, name_b};
  report.alpha = config.alpha;
  report.rdp_variant = to_string(config.rdp_variant);

  for (const auto& metric : select_metrics(pair, config)) {
    report.performance.push_back(
        performance_row(pair, metric, shared, config.alpha));
  }

  report.fairness.push_back(
      rdp_row(pair.a, name_a, config.rdp_variant, config.alpha));
  report.fairness.push_back(pr_row(pair.a, name_a, config.alpha));
  report.fairness.push_back(
      rdp_row(pair.b, name_b, config.rdp_variant, config.alpha));
  report.fairness.push_back(pr_row(pair.b, name_b, config.alpha));
  if (pair.div_a) {
    report.diversity.push_back(ucpr_row(name_a, *pair.div_a, config.alpha));
  }
  if (pair.div_b) {
    report.diversity.push_back(ucpr_row(name_b, *pair.div_b, config.alpha));
  }
  add_breakdowns(report, pair.a, name_a);
  add_breakdowns(report, pair.b, name_b);
  return report;
}

}  // namespace fairgen
