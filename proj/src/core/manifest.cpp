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

#include "fairgen/core/manifest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace fairgen {
namespace {

using nlohmann::json;

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

double parse_double(const std::string& field, std::size_t line_no,
                    const std::string& what) {
  double v = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw MalformedManifest("cannot parse " + what + " '" + field + "'",
                            line_no);
  }
  if (!std::isfinite(v)) {
    throw MalformedManifest(what + " '" + field + "' is not finite", line_no);
  }
  return v;
}

std::size_t parse_index(const std::string& field, std::size_t line_no,
                        const std::string& what) {
  std::size_t v = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw MalformedManifest("cannot parse " + what + " '" + field + "'",
                            line_no);
  }
  return v;
}

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void check_write(const std::ofstream& out, const std::string& path) {
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::size_t class_index(const ClassPartition& partition,
                        const std::string& label, std::size_t line_no) {
  if (!partition.contains(label)) {
    throw UnknownClass("line " + std::to_string(line_no) + ": '" + label +
                       "' is not in the class partition");
  }
  return partition.index_of(label);
}

// Header layout of an evaluation manifest: the three fixed columns plus the
// declared scalar metric names, in column order.
std::vector<std::string> eval_scalar_names(const std::string& header_line) {
  auto fields = split_fields(header_line);
  if (fields.size() < 3 || fields[0] != "sample_id" ||
      fields[1] != "true_class" || fields[2] != "recon_class") {
    throw MalformedManifest(
        "expected header 'sample_id,true_class,recon_class[,scalar:<name>...]'"
        ", got '" +
            header_line + "'",
        1);
  }
  std::vector<std::string> names;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 3; i < fields.size(); ++i) {
    const std::string& col = fields[i];
    if (col.rfind("scalar:", 0) != 0 || col.size() == 7) {
      throw MalformedManifest("column '" + col + "' is not 'scalar:<name>'",
                              1);
    }
    std::string name = col.substr(7);
    if (!seen.insert(name).second) {
      throw MalformedManifest("duplicate scalar column '" + name + "'", 1);
    }
    names.push_back(name);
  }
  return names;
}

std::vector<double> parse_embedding(const json& arr, const std::string& key,
                                    std::size_t line_no) {
  if (!arr.is_array()) {
    throw MalformedManifest("embeddings: '" + key + "' is not an array",
                            line_no);
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) {
      throw MalformedManifest("embeddings: '" + key + "' has a non-number",
                              line_no);
    }
    double d = v.get<double>();
    if (!std::isfinite(d)) {
      throw MalformedManifest("embeddings: '" + key + "' has a non-finite "
                              "entry",
                              line_no);
    }
    out.push_back(d);
  }
  return out;
}

void attach_embeddings(EvalSet& set, const std::string& path,
                       const std::unordered_set<std::string>& all_ids) {
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < set.records.size(); ++i) {
    by_id.emplace(set.records[i].sample_id, i);
  }
  std::unordered_set<std::string> seen;
  auto in = open_for_read(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw MalformedManifest(std::string("embeddings: ") + e.what(), line_no);
    }
    if (!obj.is_object() || !obj.contains("sample_id") ||
        !obj.contains("true") || !obj.contains("recon") ||
        !obj["sample_id"].is_string()) {
      throw MalformedManifest(
          "embeddings: expected {\"sample_id\", \"true\", \"recon\"}",
          line_no);
    }
    std::string id = obj["sample_id"].get<std::string>();
    if (!seen.insert(id).second) {
      throw DuplicateSample("embeddings line " + std::to_string(line_no) +
                            ": second entry for '" + id + "'");
    }
    if (all_ids.count(id) == 0) {
      throw MalformedManifest("embeddings: sample_id '" + id +
                                  "' is not in the manifest",
                              line_no);
    }
    auto rec_it = by_id.find(id);
    if (rec_it == by_id.end()) continue;  // filtered out upstream
    std::vector<double> t = parse_embedding(obj["true"], "true", line_no);
    std::vector<double> r = parse_embedding(obj["recon"], "recon", line_no);
    if (t.empty() || t.size() != r.size()) {
      throw DimensionMismatch("sample '" + id + "': true dim " +
                              std::to_string(t.size()) + " vs recon dim " +
                              std::to_string(r.size()));
    }
    set.records[rec_it->second].true_embedding = std::move(t);
    set.records[rec_it->second].recon_embedding = std::move(r);
  }
}

}  // namespace

DiscreteDistribution uniform_distribution(std::size_t k) {
  return DiscreteDistribution::uniform(k);
}

EvalSet load_eval_manifest(const std::string& path,
                           const ClassPartition& partition,
                           const EvalLoadOptions& opts) {
  auto in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw MalformedManifest("'" + path + "' is empty", 1);
  }
  auto scalar_names = eval_scalar_names(strip_cr(line));

  EvalSet set;
  set.partition = partition;
  set.name = opts.name ? *opts.name
                       : std::filesystem::path(path).stem().string();

  std::unordered_set<std::string> ids;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != scalar_names.size() + 3) {
      throw MalformedManifest("expected " +
                                  std::to_string(scalar_names.size() + 3) +
                                  " fields, got " +
                                  std::to_string(fields.size()),
                              line_no);
    }
    EvalRecord rec;
    rec.sample_id = fields[0];
    if (rec.sample_id.empty()) {
      throw MalformedManifest("empty sample_id", line_no);
    }
    if (!ids.insert(rec.sample_id).second) {
      throw DuplicateSample("line " + std::to_string(line_no) + ": '" +
                            rec.sample_id + "' appears twice");
    }
    rec.true_class = class_index(partition, fields[1], line_no);
    rec.recon_class = class_index(partition, fields[2], line_no);
    for (std::size_t i = 0; i < scalar_names.size(); ++i) {
      const std::string& cell = fields[3 + i];
      if (cell.empty()) continue;
      rec.scalars[scalar_names[i]] =
          parse_double(cell, line_no, "scalar '" + scalar_names[i] + "'");
    }
    set.records.push_back(std::move(rec));
  }

  if (opts.first_per_class > 0) {
    std::vector<std::size_t> taken(partition.size(), 0);
    std::vector<EvalRecord> kept;
    for (auto& rec : set.records) {
      if (taken[rec.true_class] < opts.first_per_class) {
        ++taken[rec.true_class];
        kept.push_back(std::move(rec));
      }
    }
    set.records = std::move(kept);
  }

  if (opts.embeddings_path) {
    attach_embeddings(set, *opts.embeddings_path, ids);
  }
  return set;
}

void save_eval_manifest(const EvalSet& set, const std::string& path,
                        const std::optional<std::string>& embeddings_path) {
  std::set<std::string> scalar_names;
  for (const auto& rec : set.records) {
    for (const auto& [name, value] : rec.scalars) scalar_names.insert(name);
  }

  auto out = open_for_write(path);
  out << "sample_id,true_class,recon_class";
  for (const auto& name : scalar_names) out << ",scalar:" << name;
  out << "\n";
  for (const auto& rec : set.records) {
    out << rec.sample_id << ',' << set.partition.name(rec.true_class) << ','
        << set.partition.name(rec.recon_class);
    for (const auto& name : scalar_names) {
      out << ',';
      auto it = rec.scalars.find(name);
      if (it != rec.scalars.end()) out << fmt_double(it->second);
    }
    out << "\n";
  }
  check_write(out, path);

  if (!embeddings_path) return;
  auto eout = open_for_write(*embeddings_path);
  for (const auto& rec : set.records) {
    if (!rec.true_embedding || !rec.recon_embedding) continue;
    json obj;
    obj["sample_id"] = rec.sample_id;
    obj["true"] = *rec.true_embedding;
    obj["recon"] = *rec.recon_embedding;
    eout << obj.dump() << "\n";
  }
  check_write(eout, *embeddings_path);
}

DiversitySet load_diversity_manifest(const std::string& path,
                                     const ClassPartition& partition) {
  auto in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw MalformedManifest("'" + path + "' is empty", 1);
  }
  if (strip_cr(line) != "condition_id,replicate,recon_class") {
    throw MalformedManifest(
        "expected header 'condition_id,replicate,recon_class'", 1);
  }

  DiversitySet dset;
  dset.partition = partition;
  std::unordered_map<std::string, std::size_t> by_id;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 3) {
      throw MalformedManifest("expected 3 fields, got " +
                                  std::to_string(fields.size()),
                              line_no);
    }
    if (fields[0].empty()) {
      throw MalformedManifest("empty condition_id", line_no);
    }
    parse_index(fields[1], line_no, "replicate");
    std::size_t cls = class_index(partition, fields[2], line_no);
    auto [it, inserted] = by_id.emplace(fields[0], dset.conditions.size());
    if (inserted) {
      dset.conditions.push_back({fields[0], {}});
    }
    dset.conditions[it->second].recon_classes.push_back(cls);
  }
  if (dset.conditions.empty()) {
    throw EmptyCondition("'" + path + "' declares no replicates");
  }
  std::size_t first = dset.conditions.front().recon_classes.size();
  for (const auto& c : dset.conditions) {
    if (c.recon_classes.size() != first) {
      dset.uneven_replicates = true;
      break;
    }
  }
  return dset;
}

void save_diversity_manifest(const DiversitySet& dset,
                             const std::string& path) {
  auto out = open_for_write(path);
  out << "condition_id,replicate,recon_class\n";
  for (const auto& cond : dset.conditions) {
    for (std::size_t i = 0; i < cond.recon_classes.size(); ++i) {
      out << cond.condition_id << ',' << i << ','
          << dset.partition.name(cond.recon_classes[i]) << "\n";
    }
  }
  check_write(out, path);
}

LabeledIndex load_labeled_index(const std::string& path,
                                const ClassPartition& partition) {
  auto in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw MalformedManifest("'" + path + "' is empty", 1);
  }
  if (strip_cr(line) != "sample_id,class") {
    throw MalformedManifest("expected header 'sample_id,class'", 1);
  }
  LabeledIndex index;
  index.partition = partition;
  std::unordered_set<std::string> ids;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw MalformedManifest("expected 2 fields, got " +
                                  std::to_string(fields.size()),
                              line_no);
    }
    if (fields[0].empty()) {
      throw MalformedManifest("empty sample_id", line_no);
    }
    if (!ids.insert(fields[0]).second) {
      throw DuplicateSample("line " + std::to_string(line_no) + ": '" +
                            fields[0] + "' appears twice");
    }
    index.sample_ids.push_back(fields[0]);
    index.classes.push_back(class_index(partition, fields[1], line_no));
  }
  return index;
}

DiscreteDistribution load_target_distribution(
    const std::string& path, const ClassPartition& partition) {
  auto in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw MalformedManifest("'" + path + "' is empty", 1);
  }
  if (strip_cr(line) != "class,probability") {
    throw MalformedManifest("expected header 'class,probability'", 1);
  }
  std::vector<double> probs(partition.size(), 0.0);
  std::vector<bool> seen(partition.size(), false);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw MalformedManifest("expected 2 fields, got " +
                                  std::to_string(fields.size()),
                              line_no);
    }
    std::size_t j = class_index(partition, fields[0], line_no);
    if (seen[j]) {
      throw MalformedManifest("class '" + fields[0] + "' listed twice",
                              line_no);
    }
    seen[j] = true;
    probs[j] = parse_double(fields[1], line_no, "probability");
  }
  return DiscreteDistribution(std::move(probs));
}

void save_subset(const std::vector<std::string>& ids,
                 const std::string& path) {
  auto out = open_for_write(path);
  for (const auto& id : ids) out << id << "\n";
  check_write(out, path);
}

std::vector<std::string> load_subset(const std::string& path) {
  auto in = open_for_read(path);
  std::vector<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (!line.empty()) ids.push_back(line);
  }
  return ids;
}

namespace {

ClassPartition partition_from_columns(const std::string& path,
                                      std::size_t header_cols,
                                      std::vector<std::size_t> label_cols) {
  auto in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw MalformedManifest("'" + path + "' is empty", 1);
  }
  std::vector<std::string> names;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() < header_cols) {
      throw MalformedManifest("expected at least " +
                                  std::to_string(header_cols) + " fields",
                              line_no);
    }
    for (std::size_t col : label_cols) {
      if (seen.insert(fields[col]).second) names.push_back(fields[col]);
    }
  }
  return ClassPartition(std::move(names));
}

}  // namespace

ClassPartition infer_eval_partition(const std::string& path) {
  return partition_from_columns(path, 3, {1, 2});
}

ClassPartition infer_diversity_partition(const std::string& path) {
  return partition_from_columns(path, 3, {2});
}

ClassPartition infer_index_partition(const std::string& path) {
  return partition_from_columns(path, 2, {1});
}

}  // namespace fairgen
