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

#include "fairgen/metrics/attribute.hpp"

#include <cmath>

#include "fairgen/core/errors.hpp"

namespace fairgen {

double loss_01(const EvalRecord& record) {
  return record.true_class == record.recon_class ? 0.0 : 1.0;
}

double cosine_similarity(const std::vector<double>& u,
                         const std::vector<double>& v) {
  if (u.size() != v.size() || u.empty()) {
    throw DimensionMismatch("vectors have dimensions " +
                            std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) {
    throw ZeroVector("cosine similarity of an all-zero vector");
  }
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

double cosine_loss(EvalRecord& record) {
  if (!record.true_embedding || !record.recon_embedding) {
    throw MissingEmbedding("record '" + record.sample_id +
                           "' has no embedding pair");
  }
  const double sim =
      cosine_similarity(*record.true_embedding, *record.recon_embedding);
  record.scalars["cos_sim"] = sim;
  return 1.0 - sim;
}

std::vector<std::optional<double>> metric_values(const EvalSet& set,
                                                 const std::string& metric) {
  std::vector<std::optional<double>> values(set.records.size());
  for (std::size_t i = 0; i < set.records.size(); ++i) {
    const EvalRecord& rec = set.records[i];
    if (metric == kMetric01) {
      values[i] = loss_01(rec);
    } else if (metric == kMetricCos) {
      if (rec.true_embedding && rec.recon_embedding) {
        values[i] = 1.0 - cosine_similarity(*rec.true_embedding,
                                            *rec.recon_embedding);
      }
    } else {
      auto it = rec.scalars.find(metric);
      if (it != rec.scalars.end()) values[i] = it->second;
    }
  }
  return values;
}

MetricSummary summarize_metric(const EvalSet& set, const std::string& metric) {
  const std::size_t k = set.partition.size();
  MetricSummary summary;
  summary.metric = metric;
  summary.per_class_means.assign(k, std::nullopt);
  summary.per_class_counts.assign(k, 0);

  std::vector<double> class_sums(k, 0.0);
  double total = 0.0;
  std::size_t carriers = 0;
  const auto values = metric_values(set, metric);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) continue;
    const std::size_t j = set.records[i].true_class;
    class_sums[j] += *values[i];
    ++summary.per_class_counts[j];
    total += *values[i];
    ++carriers;
  }
  if (carriers == 0) {
    throw UnknownMetric("no record carries metric '" + metric + "'");
  }
  summary.overall_mean = total / double(carriers);
  for (std::size_t j = 0; j < k; ++j) {
    if (summary.per_class_counts[j] > 0) {
      summary.per_class_means[j] =
          class_sums[j] / double(summary.per_class_counts[j]);
    }
  }
  return summary;
}

}  // namespace fairgen
