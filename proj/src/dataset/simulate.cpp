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

#include "fairgen/dataset/simulate.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include "fairgen/core/errors.hpp"
#include "fairgen/core/manifest.hpp"

namespace fairgen {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::size_t sample_from(const DiscreteDistribution& row, double u) {
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < row.size(); ++j) {
    acc += row[j];
    if (u < acc) return j;
  }
  return row.size() - 1;
}

}  // namespace

ConfusionMatrix ConfusionMatrix::identity(std::size_t k) {
  if (k < 2) throw InvalidK("need k >= 2, got " + std::to_string(k));
  ConfusionMatrix m;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> row(k, 0.0);
    row[i] = 1.0;
    m.rows.emplace_back(std::move(row));
  }
  return m;
}

std::pair<ClassPartition, ConfusionMatrix> load_confusion(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line)) {
    throw MalformedManifest("'" + path + "' is empty", 1);
  }
  auto header = split_fields(strip_cr(line));
  if (header.size() < 3 || header[0] != "class") {
    throw MalformedManifest(
        "expected header 'class,<label_1>,...,<label_k>'", 1);
  }
  ClassPartition partition(
      std::vector<std::string>(header.begin() + 1, header.end()));
  const std::size_t k = partition.size();

  ConfusionMatrix m;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != k + 1) {
      throw MalformedManifest("expected " + std::to_string(k + 1) +
                                  " fields, got " +
                                  std::to_string(fields.size()),
                              line_no);
    }
    if (m.rows.size() >= k) {
      throw MalformedManifest("more rows than classes", line_no);
    }
    if (fields[0] != partition.name(m.rows.size())) {
      throw MalformedManifest("row order must match the column order; "
                              "expected '" +
                                  partition.name(m.rows.size()) + "', got '" +
                                  fields[0] + "'",
                              line_no);
    }
    std::vector<double> row(k);
    for (std::size_t j = 0; j < k; ++j) {
      const std::string& cell = fields[j + 1];
      char* end = nullptr;
      row[j] = std::strtod(cell.c_str(), &end);
      if (end != cell.c_str() + cell.size() || cell.empty()) {
        throw MalformedManifest("cannot parse probability '" + cell + "'",
                                line_no);
      }
    }
    try {
      m.rows.emplace_back(std::move(row));
    } catch (const InvalidDistribution& e) {
      throw MalformedManifest(std::string("row is not a distribution: ") +
                                  e.what(),
                              line_no);
    }
  }
  if (m.rows.size() != k) {
    throw MalformedManifest("got " + std::to_string(m.rows.size()) +
                                " rows for " + std::to_string(k) +
                                " classes",
                            line_no);
  }
  return {std::move(partition), std::move(m)};
}

EvalSet simulate_eval_set(const ConfusionMatrix& confusion,
                          const ClassPartition& partition,
                          const std::vector<std::size_t>& per_class_counts,
                          std::uint64_t seed) {
  const std::size_t k = partition.size();
  if (confusion.size() != k || per_class_counts.size() != k) {
    throw DimensionMismatch("confusion is " + std::to_string(confusion.size()) +
                            " rows, counts " +
                            std::to_string(per_class_counts.size()) +
                            ", partition " + std::to_string(k));
  }
  EvalSet set;
  set.partition = partition;
  set.name = "simulated";
  std::mt19937_64 rng(seed);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < per_class_counts[j]; ++i) {
      const double u = std::ldexp(double(rng() >> 11), -53);
      EvalRecord rec;
      rec.sample_id = "s" + std::to_string(j) + "_" + std::to_string(i);
      rec.true_class = j;
      rec.recon_class = sample_from(confusion.rows[j], u);
      set.records.push_back(std::move(rec));
    }
  }
  return set;
}

DiscreteDistribution expected_rdp(const ConfusionMatrix& confusion) {
  const std::size_t k = confusion.size();
  std::vector<double> miss(k);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    miss[i] = 1.0 - confusion.rows[i][i];
    sum += miss[i];
  }
  if (sum == 0.0) {
    throw DegenerateAllCorrect("the confusion matrix is the identity; the "
                               "0-1 loss normalizer vanishes");
  }
  for (double& v : miss) v /= sum;
  return DiscreteDistribution(std::move(miss));
}

DiscreteDistribution expected_rdp_correct(const ConfusionMatrix& confusion) {
  const std::size_t k = confusion.size();
  std::vector<double> correct(k);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    correct[i] = confusion.rows[i][i];
    sum += correct[i];
  }
  if (sum == 0.0) {
    throw DegenerateAllWrong("the confusion diagonal is zero; the "
                             "correct-rate normalizer vanishes");
  }
  for (double& v : correct) v /= sum;
  return DiscreteDistribution(std::move(correct));
}

ExpectedDistributions expected_distributions(
    const ConfusionMatrix& confusion,
    const DiscreteDistribution& class_prior) {
  const std::size_t k = confusion.size();
  if (class_prior.size() != k) {
    throw DimensionMismatch("prior has " + std::to_string(class_prior.size()) +
                            " entries for " + std::to_string(k) + " classes");
  }
  std::vector<double> pr(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      pr[j] += class_prior[i] * confusion.rows[i][j];
    }
  }
  ExpectedDistributions out;
  out.pr = DiscreteDistribution(std::move(pr));
  try {
    out.rdp = expected_rdp(confusion);
  } catch (const DegenerateAllCorrect&) {
  }
  try {
    out.rdp_correct = expected_rdp_correct(confusion);
  } catch (const DegenerateAllWrong&) {
  }
  return out;
}

}  // namespace fairgen
