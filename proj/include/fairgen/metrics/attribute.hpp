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

#ifndef FAIRGEN_METRICS_ATTRIBUTE_HPP
#define FAIRGEN_METRICS_ATTRIBUTE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fairgen/core/types.hpp"

namespace fairgen {

// Built-in metric names understood by summarize_metric in addition to the
// scalar channels carried by the manifest.
inline constexpr const char* kMetric01 = "0-1";
inline constexpr const char* kMetricCos = "cos";

struct MetricSummary {
  std::string metric;
  double overall_mean = 0.0;
  // Absent mean for classes no carrier record belongs to.
  std::vector<std::optional<double>> per_class_means;
  std::vector<std::size_t> per_class_counts;
};

// 1 when the recognized class of the reconstruction differs from the class
// of the original, else 0.
double loss_01(const EvalRecord& record);

// <u,v> / (|u| |v|). Throws DimensionMismatch, ZeroVector.
double cosine_similarity(const std::vector<double>& u,
                         const std::vector<double>& v);

// 1 - cosine_similarity(embeddings), in [0, 2]; lower is better. The raw
// similarity is retained in the record's scalar map under "cos_sim".
// Throws MissingEmbedding when either embedding is absent.
double cosine_loss(EvalRecord& record);

// Overall and per-true-class means of a metric over the records that carry
// it. `metric` is "0-1", "cos", or a scalar channel name. Records without
// the metric (no embeddings for "cos", no scalar entry otherwise) are
// skipped; if nothing carries it, UnknownMetric is thrown.
MetricSummary summarize_metric(const EvalSet& set, const std::string& metric);

// The per-record values behind summarize_metric, in record order, absent
// where the record does not carry the metric.
std::vector<std::optional<double>> metric_values(const EvalSet& set,
                                                 const std::string& metric);

}  // namespace fairgen

#endif  // FAIRGEN_METRICS_ATTRIBUTE_HPP
