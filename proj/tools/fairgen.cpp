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

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "fairgen/core/errors.hpp"
#include "fairgen/core/manifest.hpp"
#include "fairgen/core/types.hpp"
#include "fairgen/dataset/conditions.hpp"
#include "fairgen/dataset/simulate.hpp"
#include "fairgen/dataset/subsample.hpp"
#include "fairgen/image/ops.hpp"
#include "fairgen/image/png_io.hpp"
#include "fairgen/metrics/attribute.hpp"
#include "fairgen/metrics/fairness.hpp"
#include "fairgen/report/report.hpp"
#include "fairgen/stats/tests.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using namespace fairgen;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string dist_str(const DiscreteDistribution& d) {
  std::string s = "(";
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j) s += ", ";
    s += fmt(d[j]);
  }
  return s + ")";
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    out.push_back(csv.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

ClassPartition partition_for_eval(const std::string& classes_csv,
                                  const std::string& manifest) {
  if (!classes_csv.empty()) return ClassPartition(split_list(classes_csv));
  return infer_eval_partition(manifest);
}

void print_test(const TestResult& t) {
  std::cout << "  " << t.name << ": statistic " << fmt(t.statistic) << ", p "
            << fmt(t.p_value) << " -> "
            << (t.reject ? "rejected" : "not rejected") << " at alpha "
            << fmt(t.alpha) << "\n";
}

void print_summary(const MetricSummary& s, const ClassPartition& partition) {
  std::size_t n = 0;
  for (auto c : s.per_class_counts) n += c;
  std::cout << "metric " << s.metric << ": mean " << fmt(s.overall_mean)
            << " over " << n << " records\n";
  for (std::size_t j = 0; j < partition.size(); ++j) {
    std::cout << "  " << partition.name(j) << "  ";
    if (s.per_class_means[j]) {
      std::cout << fmt(*s.per_class_means[j]);
    } else {
      std::cout << "-";
    }
    std::cout << "  (" << s.per_class_counts[j] << ")\n";
  }
}

// RDP uniformity runs on the (correct, incorrect) class table; both
// estimator variants share the null of equal rates.
std::optional<TestResult> rdp_uniformity(const EvalSet& set, double alpha,
                                         std::string& note) {
  const auto totals = set.class_counts();
  const auto correct = set.correct_counts();
  std::vector<std::array<std::size_t, 2>> table(totals.size());
  for (std::size_t j = 0; j < totals.size(); ++j) {
    table[j] = {correct[j], totals[j] - correct[j]};
  }
  try {
    return chi2_homogeneity(table, alpha);
  } catch (const DegenerateMargin&) {
    note = "uniformity test skipped: no correct/incorrect contrast";
    return std::nullopt;
  }
}

nlohmann::json scores_json(const std::optional<FairnessScores>& s,
                           const std::optional<TestResult>& t,
                           const std::string& note) {
  nlohmann::json j;
  if (s) {
    j["kind"] = to_string(s->kind);
    j["distribution"] = s->distribution.probs();
    j["chi2_divergence"] = s->chi2_divergence;
    j["chebyshev"] = s->chebyshev;
  } else {
    j["kind"] = nullptr;
  }
  if (t) {
    j["uniformity"] = {{"name", t->name},
                       {"statistic", t->statistic},
                       {"p_value", t->p_value},
                       {"reject", t->reject}};
  } else {
    j["uniformity"] = nullptr;
  }
  j["note"] = note;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

struct PerturbSpec {
  std::size_t count = 0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

PerturbSpec parse_perturb(const std::string& text) {
  auto parts = split_list(text);
  if (parts.size() != 3) {
    throw DomainError("--perturb expects count,sigma,seed");
  }
  PerturbSpec spec;
  try {
    spec.count = std::stoull(parts[0]);
    spec.sigma = std::stod(parts[1]);
    spec.seed = std::stoull(parts[2]);
  } catch (const std::exception&) {
    throw DomainError("--perturb expects count,sigma,seed");
  }
  return spec;
}

std::vector<std::size_t> parse_counts(const std::string& text) {
  std::vector<std::size_t> counts;
  for (const auto& part : split_list(text)) {
    try {
      counts.push_back(std::stoull(part));
    } catch (const std::exception&) {
      throw DomainError("--counts expects a comma-separated integer list");
    }
  }
  return counts;
}

int run(int argc, char** argv) {
  ReportConfig base;
  if (const char* env = std::getenv("FAIRGEN_CONFIG");
      env != nullptr && *env != '\0') {
    apply_config_file(env, base);
  }

  CLI::App app{
      "fairgen - fairness benchmarking for conditional generative models"};
  app.require_subcommand(1);

  double alpha = base.alpha;
  std::string rdp_variant = to_string(base.rdp_variant);
  std::vector<std::string> metrics = base.metrics;
  std::string classes_csv;
  std::string manifest, embeddings, out_path;
  std::uint64_t seed = 0;
  std::size_t first_per_class = 0;

  // validate ---------------------------------------------------------------
  auto* validate = app.add_subcommand(
      "validate", "Check a manifest; problems are reported with line numbers");
  bool v_diversity = false;
  validate->add_option("manifest", manifest, "Manifest CSV")->required();
  validate->add_option("--classes", classes_csv,
                       "Comma-separated class labels (default: infer)");
  validate->add_flag("--diversity", v_diversity,
                     "Treat the file as a diversity manifest");
  validate->add_option("--embeddings", embeddings, "JSONL embedding sidecar");
  validate->callback([&] {
    if (v_diversity) {
      auto partition = classes_csv.empty()
                           ? infer_diversity_partition(manifest)
                           : ClassPartition(split_list(classes_csv));
      auto dset = load_diversity_manifest(manifest, partition);
      std::cout << "OK: " << dset.size() << " conditions, "
                << dset.total_replicates() << " replicates, "
                << partition.size() << " classes\n";
      if (dset.uneven_replicates) {
        std::cout << "warning: replicate counts differ across conditions\n";
      }
      return;
    }
    auto partition = partition_for_eval(classes_csv, manifest);
    EvalLoadOptions opts;
    if (!embeddings.empty()) opts.embeddings_path = embeddings;
    auto set = load_eval_manifest(manifest, partition, opts);
    std::cout << "OK: " << set.size() << " records, " << partition.size()
              << " classes\n";
  });

  // metrics ----------------------------------------------------------------
  auto* cmd_metrics = app.add_subcommand(
      "metrics", "Per-class attribute and perceptual metric summaries");
  std::string true_dir, recon_dir, save_path, save_emb_path;
  cmd_metrics->add_option("--manifest", manifest, "Evaluation manifest")
      ->required();
  cmd_metrics->add_option("--classes", classes_csv,
                          "Comma-separated class labels (default: infer)");
  cmd_metrics->add_option("--embeddings", embeddings,
                          "JSONL embedding sidecar (enables the cos metric)");
  cmd_metrics->add_option("--first-per-class", first_per_class,
                          "Keep only the first N records per true class");
  cmd_metrics->add_option("--true-images", true_dir,
                          "Directory of original PNGs named <sample_id>.png");
  cmd_metrics->add_option(
      "--recon-images", recon_dir,
      "Directory of reconstruction PNGs (enables dssim/blur)");
  cmd_metrics->add_option("--metric", metrics,
                          "Metrics to summarize (default: all carried)");
  cmd_metrics->add_option("--save", save_path,
                          "Write the augmented manifest here");
  cmd_metrics->add_option("--save-embeddings", save_emb_path,
                          "Sidecar path when saving embeddings too");
  cmd_metrics->callback([&] {
    auto partition = partition_for_eval(classes_csv, manifest);
    EvalLoadOptions opts;
    if (!embeddings.empty()) opts.embeddings_path = embeddings;
    opts.first_per_class = first_per_class;
    auto set = load_eval_manifest(manifest, partition, opts);
    for (auto& record : set.records) {
      if (record.true_embedding && record.recon_embedding) {
        cosine_loss(record);
      }
      if (!recon_dir.empty()) {
        auto recon = load_png(
            (fs::path(recon_dir) / (record.sample_id + ".png")).string());
        record.scalars["blur"] = blur_index(recon);
        if (!true_dir.empty()) {
          auto truth = load_png(
              (fs::path(true_dir) / (record.sample_id + ".png")).string());
          record.scalars["dssim"] = dssim(truth, recon);
        }
      }
    }
    std::vector<std::string> selected = metrics;
    if (selected.empty()) {
      selected.push_back(kMetric01);
      bool any_cos = false;
      std::map<std::string, bool> scalar_names;
      for (const auto& record : set.records) {
        if (record.true_embedding && record.recon_embedding) any_cos = true;
        for (const auto& [name, value] : record.scalars) {
          scalar_names[name] = true;
        }
      }
      if (any_cos) selected.push_back(kMetricCos);
      scalar_names.erase("cos_sim");  // raw channel behind "cos"
      for (const auto& [name, unused] : scalar_names) selected.push_back(name);
    }
    for (const auto& metric : selected) {
      print_summary(summarize_metric(set, metric), partition);
    }
    if (!save_path.empty()) {
      save_eval_manifest(set, save_path,
                         save_emb_path.empty()
                             ? std::nullopt
                             : std::optional<std::string>(save_emb_path));
      std::cout << "wrote " << save_path << "\n";
    }
  });

  // fairness ---------------------------------------------------------------
  auto* cmd_fairness = app.add_subcommand(
      "fairness", "RDP/PR distributions, discrepancies and uniformity tests");
  cmd_fairness->add_option("--manifest", manifest, "Evaluation manifest")
      ->required();
  cmd_fairness->add_option("--classes", classes_csv,
                           "Comma-separated class labels (default: infer)");
  cmd_fairness->add_option("--alpha", alpha, "Significance level")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  cmd_fairness->add_option("--rdp-variant", rdp_variant,
                           "estimator (0-1 loss) or correct (correct rates)");
  cmd_fairness->add_option("--first-per-class", first_per_class,
                           "Keep only the first N records per true class");
  cmd_fairness->add_option("--out", out_path, "Write scores as JSON here");
  cmd_fairness->callback([&] {
    auto partition = partition_for_eval(classes_csv, manifest);
    EvalLoadOptions opts;
    opts.first_per_class = first_per_class;
    auto set = load_eval_manifest(manifest, partition, opts);
    const RdpVariant variant = rdp_variant_from_string(rdp_variant);
    const std::string rdp_name = to_string(kind_of(variant));

    std::optional<FairnessScores> rdp;
    std::string rdp_note;
    try {
      rdp = score(kind_of(variant), set);
    } catch (const DegenerateAllCorrect& e) {
      rdp_note = e.what();
    } catch (const DegenerateAllWrong& e) {
      rdp_note = e.what();
    }
    std::string uniformity_note;
    auto rdp_test = rdp_uniformity(set, alpha, uniformity_note);
    if (rdp) {
      std::cout << "P_" << rdp_name << " = " << dist_str(rdp->distribution)
                << "\n";
      std::cout << "Δ_" << rdp_name << "-χ² = " << fmt(rdp->chi2_divergence)
                << "\n";
      std::cout << "Δ_" << rdp_name << "-Cheb = " << fmt(rdp->chebyshev)
                << "\n";
    } else {
      std::cout << "P_" << rdp_name << " degenerate: " << rdp_note << "\n";
      std::cout << "Δ_" << rdp_name
                << " = 0 by convention (no loss contrast between classes)\n";
    }
    if (rdp_test) {
      print_test(*rdp_test);
    } else {
      std::cout << "  " << uniformity_note << "\n";
    }

    auto pr = score(FairnessKind::PR, set);
    auto pr_test = chi2_gof_uniform(set.recon_counts(), alpha);
    std::cout << "P_PR = " << dist_str(pr.distribution) << "\n";
    std::cout << "Δ_PR-χ² = " << fmt(pr.chi2_divergence) << "\n";
    std::cout << "Δ_PR-Cheb = " << fmt(pr.chebyshev) << "\n";
    print_test(pr_test);

    if (!out_path.empty()) {
      nlohmann::json j;
      j["alpha"] = alpha;
      j["rdp_variant"] = rdp_variant;
      j["classes"] = partition.names();
      j["rdp"] = scores_json(rdp, rdp_test,
                             rdp ? uniformity_note
                                 : rdp_note + "; discrepancy 0 by convention");
      j["pr"] = scores_json(pr, pr_test, "");
      write_text(out_path, j.dump(2) + "\n");
      std::cout << "wrote " << out_path << "\n";
    }
  });

  // diversity --------------------------------------------------------------
  auto* cmd_diversity = app.add_subcommand(
      "diversity", "UCPR distribution over uninformative conditions");
  cmd_diversity->add_option("--manifest", manifest, "Diversity manifest")
      ->required();
  cmd_diversity->add_option("--classes", classes_csv,
                            "Comma-separated class labels (default: infer)");
  cmd_diversity->add_option("--alpha", alpha, "Significance level")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  cmd_diversity->add_option("--out", out_path, "Write scores as JSON here");
  cmd_diversity->callback([&] {
    auto partition = classes_csv.empty()
                         ? infer_diversity_partition(manifest)
                         : ClassPartition(split_list(classes_csv));
    auto dset = load_diversity_manifest(manifest, partition);
    auto ucpr = score(dset);
    std::vector<std::size_t> pooled(partition.size(), 0);
    for (std::size_t m = 0; m < dset.size(); ++m) {
      auto counts = dset.counts_for(m);
      for (std::size_t j = 0; j < counts.size(); ++j) pooled[j] += counts[j];
    }
    auto test = chi2_gof_uniform(pooled, alpha);
    std::cout << dset.size() << " conditions, " << dset.total_replicates()
              << " replicates\n";
    std::cout << "P_UCPR = " << dist_str(ucpr.distribution) << "\n";
    std::cout << "Δ_UCPR-χ² = " << fmt(ucpr.chi2_divergence) << "\n";
    std::cout << "Δ_UCPR-Cheb = " << fmt(ucpr.chebyshev) << "\n";
    print_test(test);
    std::string note;
    if (dset.uneven_replicates) {
      note = "replicate counts differ; pooled counts drive the test";
      std::cout << "  note: " << note << "\n";
    }
    if (!out_path.empty()) {
      nlohmann::json j;
      j["alpha"] = alpha;
      j["classes"] = partition.names();
      j["ucpr"] = scores_json(ucpr, test, note);
      write_text(out_path, j.dump(2) + "\n");
      std::cout << "wrote " << out_path << "\n";
    }
  });

  // subsample --------------------------------------------------------------
  auto* cmd_subsample = app.add_subcommand(
      "subsample", "Maximal subset of a labeled pool matching a target "
                   "class distribution");
  std::string index_path, target_path;
  cmd_subsample->add_option("--index", index_path, "Pool CSV sample_id,class")
      ->required();
  cmd_subsample->add_option("--classes", classes_csv,
                            "Comma-separated class labels (default: infer)");
  cmd_subsample->add_option(
      "--target", target_path,
      "Target CSV class,probability (default: the built-in biased target "
      "over the 7 race labels)");
  cmd_subsample->add_option("--seed", seed, "Sampling seed");
  cmd_subsample->add_option("--out", out_path, "Subset id list")->required();
  cmd_subsample->callback([&] {
    auto partition = classes_csv.empty()
                         ? infer_index_partition(index_path)
                         : ClassPartition(split_list(classes_csv));
    auto index = load_labeled_index(index_path, partition);
    auto target = target_path.empty()
                      ? unfairface_target(partition)
                      : load_target_distribution(target_path, partition);
    auto ids = max_biased_subset(index, target, seed);
    std::unordered_map<std::string, std::size_t> class_of;
    for (std::size_t i = 0; i < index.size(); ++i) {
      class_of[index.sample_ids[i]] = index.classes[i];
    }
    std::vector<std::size_t> counts(partition.size(), 0);
    for (const auto& id : ids) ++counts[class_of.at(id)];
    std::cout << "n = " << ids.size() << "\n";
    for (std::size_t j = 0; j < partition.size(); ++j) {
      std::cout << "  " << partition.name(j) << "  " << counts[j] << "  "
                << fmt(ids.empty() ? 0.0
                                   : static_cast<double>(counts[j]) /
                                         static_cast<double>(ids.size()))
                << "\n";
    }
    save_subset(ids, out_path);
    std::cout << "wrote " << out_path << "\n";
  });

  // conditions -------------------------------------------------------------
  auto* cmd_conditions = app.add_subcommand(
      "conditions",
      "Build uninformative condition images from class-grouped PNGs");
  std::string images_dir, perturb_text;
  std::size_t out_size = 4;
  cmd_conditions
      ->add_option("--images", images_dir,
                   "Directory with one subdirectory of PNGs per class")
      ->required();
  cmd_conditions->add_option("--out", out_path, "Output directory")
      ->required();
  cmd_conditions->add_option("--size", out_size, "Condition edge length");
  cmd_conditions->add_option(
      "--perturb", perturb_text,
      "count,sigma,seed: also emit count noise-perturbed variants per class");
  cmd_conditions->callback([&] {
    std::vector<std::pair<std::string, std::vector<Image>>> groups;
    std::vector<fs::path> class_dirs;
    for (const auto& entry : fs::directory_iterator(images_dir)) {
      if (entry.is_directory()) class_dirs.push_back(entry.path());
    }
    std::sort(class_dirs.begin(), class_dirs.end());
    if (class_dirs.empty()) {
      throw EmptyGroup("no class subdirectories in '" + images_dir + "'");
    }
    for (const auto& dir : class_dirs) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".png") {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      std::vector<Image> images;
      for (const auto& file : files) images.push_back(load_png(file.string()));
      groups.emplace_back(dir.filename().string(), std::move(images));
    }
    auto conditions = build_uninformative_conditions(groups, out_size);
    fs::create_directories(out_path);
    std::size_t written = 0;
    std::optional<PerturbSpec> perturb;
    if (!perturb_text.empty()) perturb = parse_perturb(perturb_text);
    for (std::size_t c = 0; c < conditions.size(); ++c) {
      const auto& cond = conditions[c];
      save_png(cond.image,
               (fs::path(out_path) / (cond.class_name + ".png")).string());
      ++written;
      if (!perturb) continue;
      for (std::size_t i = 0; i < perturb->count; ++i) {
        auto noisy = perturb_gaussian(cond.image, perturb->sigma,
                                      perturb->seed + 1000003 * c + i);
        save_png(noisy, (fs::path(out_path) /
                         (cond.class_name + "_p" + std::to_string(i) + ".png"))
                            .string());
        ++written;
      }
    }
    std::cout << "wrote " << written << " files to " << out_path << "\n";
  });

  // simulate ---------------------------------------------------------------
  auto* cmd_simulate = app.add_subcommand(
      "simulate", "Draw a synthetic evaluation manifest from a confusion "
                  "matrix");
  std::string confusion_path, counts_text;
  std::size_t count = 0;
  cmd_simulate
      ->add_option("--confusion", confusion_path,
                   "Confusion CSV: header class,<labels>, one row per class")
      ->required();
  cmd_simulate->add_option("--count", count, "Records per class");
  cmd_simulate->add_option("--counts", counts_text,
                           "Comma-separated per-class record counts");
  cmd_simulate->add_option("--seed", seed, "Sampling seed");
  cmd_simulate->add_option("--out", out_path, "Output manifest")->required();
  cmd_simulate->callback([&] {
    auto [partition, confusion] = load_confusion(confusion_path);
    std::vector<std::size_t> counts;
    if (!counts_text.empty()) {
      counts = parse_counts(counts_text);
    } else if (count > 0) {
      counts.assign(partition.size(), count);
    } else {
      throw DomainError("one of --count or --counts is required");
    }
    auto set = simulate_eval_set(confusion, partition, counts, seed);
    save_eval_manifest(set, out_path);
    std::cout << "wrote " << set.size() << " records to " << out_path << "\n";
  });

  // report -----------------------------------------------------------------
  auto* cmd_report = app.add_subcommand(
      "report", "Two-variant benchmark report (performance, fairness, "
                "diversity tables)");
  std::string a_path, b_path, div_a_path, div_b_path, emb_a, emb_b;
  std::string format = "markdown";
  cmd_report->add_option("--a", a_path, "Variant A evaluation manifest")
      ->required();
  cmd_report->add_option("--b", b_path, "Variant B evaluation manifest")
      ->required();
  cmd_report->add_option("--emb-a", emb_a, "Variant A embedding sidecar");
  cmd_report->add_option("--emb-b", emb_b, "Variant B embedding sidecar");
  cmd_report->add_option("--div-a", div_a_path,
                         "Variant A diversity manifest");
  cmd_report->add_option("--div-b", div_b_path,
                         "Variant B diversity manifest");
  cmd_report->add_option("--classes", classes_csv,
                         "Comma-separated class labels (default: infer)");
  cmd_report->add_option("--alpha", alpha, "Significance level")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  cmd_report->add_option("--rdp-variant", rdp_variant,
                         "estimator (0-1 loss) or correct (correct rates)");
  cmd_report->add_option("--metric", metrics,
                         "Metrics to include (default: all carried)");
  cmd_report->add_option("--first-per-class", first_per_class,
                         "Keep only the first N records per true class");
  cmd_report->add_option("--format", format, "json, csv, markdown or all");
  cmd_report->add_option("--out", out_path, "Output path (base path for all)")
      ->required();
  cmd_report->callback([&] {
    ClassPartition partition = [&] {
      if (!classes_csv.empty()) return ClassPartition(split_list(classes_csv));
      auto names = infer_eval_partition(a_path).names();
      const auto extra = infer_eval_partition(b_path).names();
      for (const auto& name : extra) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
          names.push_back(name);
        }
      }
      return ClassPartition(names);
    }();
    EvalLoadOptions opts_a, opts_b;
    opts_a.first_per_class = opts_b.first_per_class = first_per_class;
    if (!emb_a.empty()) opts_a.embeddings_path = emb_a;
    if (!emb_b.empty()) opts_b.embeddings_path = emb_b;
    VariantPair pair;
    pair.a = load_eval_manifest(a_path, partition, opts_a);
    pair.b = load_eval_manifest(b_path, partition, opts_b);
    if (!div_a_path.empty()) {
      pair.div_a = load_diversity_manifest(div_a_path, partition);
    }
    if (!div_b_path.empty()) {
      pair.div_b = load_diversity_manifest(div_b_path, partition);
    }
    ReportConfig config;
    config.alpha = alpha;
    config.rdp_variant = rdp_variant_from_string(rdp_variant);
    config.metrics = metrics;
    auto report = build_report(pair, config);
    if (format == "all") {
      emit(report, ReportFormat::json, out_path + ".json");
      emit(report, ReportFormat::csv, out_path + ".csv");
      emit(report, ReportFormat::markdown, out_path + ".md");
      std::cout << "wrote " << out_path << ".{json,csv,md}\n";
    } else {
      emit(report, report_format_from_string(format), out_path);
      std::cout << "wrote " << out_path << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fairgen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case fairgen::ErrorKind::io:
        return 1;
      case fairgen::ErrorKind::validation:
        return 2;
      case fairgen::ErrorKind::degenerate:
        return 3;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
