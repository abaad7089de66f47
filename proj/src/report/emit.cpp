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
#include <charconv>
#include <cstdio>
#include <fstream>
#include <vector>

#include "fairgen/core/errors.hpp"
#include "fairgen/report/report.hpp"
#include "json.hpp"

namespace fairgen {
namespace {

using nlohmann::json;

std::string fmt_full(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

FairnessKind kind_from_string(const std::string& name) {
  if (name == "RDP") return FairnessKind::RDP;
  if (name == "RDP-correct") return FairnessKind::RDP_correct;
  if (name == "PR") return FairnessKind::PR;
  if (name == "UCPR") return FairnessKind::UCPR;
  throw MalformedManifest("unknown fairness kind '" + name + "'");
}

json test_to_json(const std::optional<TestResult>& t) {
  if (!t) return nullptr;
  return json{{"name", t->name},       {"statistic", t->statistic},
              {"dof", t->dof},         {"p_value", t->p_value},
              {"alpha", t->alpha},     {"reject", t->reject}};
}

std::optional<TestResult> test_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  TestResult t;
  t.name = j.at("name").get<std::string>();
  t.statistic = j.at("statistic").get<double>();
  t.dof = j.at("dof").get<std::size_t>();
  t.p_value = j.at("p_value").get<double>();
  t.alpha = j.at("alpha").get<double>();
  t.reject = j.at("reject").get<bool>();
  return t;
}

json scores_to_json(const std::optional<FairnessScores>& s) {
  if (!s) return nullptr;
  return json{{"kind", to_string(s->kind)},
              {"distribution", s->distribution.probs()},
              {"chi2_divergence", s->chi2_divergence},
              {"chebyshev", s->chebyshev}};
}

std::optional<FairnessScores> scores_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  FairnessScores s;
  s.kind = kind_from_string(j.at("kind").get<std::string>());
  s.distribution =
      DiscreteDistribution(j.at("distribution").get<std::vector<double>>());
  s.chi2_divergence = j.at("chi2_divergence").get<double>();
  s.chebyshev = j.at("chebyshev").get<double>();
  return s;
}

json optional_to_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

std::optional<double> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json distribution_rows_to_json(const std::vector<DistributionRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    arr.push_back(json{{"variant", row.variant},
                       {"kind", to_string(row.kind)},
                       {"scores", scores_to_json(row.scores)},
                       {"uniformity", test_to_json(row.uniformity)},
                       {"note", row.note}});
  }
  return arr;
}

std::vector<DistributionRow> distribution_rows_from_json(const json& arr) {
  std::vector<DistributionRow> rows;
  for (const auto& j : arr) {
    DistributionRow row;
    row.variant = j.at("variant").get<std::string>();
    row.kind = kind_from_string(j.at("kind").get<std::string>());
    row.scores = scores_from_json(j.at("scores"));
    row.uniformity = test_from_json(j.at("uniformity"));
    row.note = j.at("note").get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

json report_to_json(const BenchmarkReport& report) {
  json j;
  j["classes"] = report.classes;
  j["variants"] = report.variants;
  j["alpha"] = report.alpha;
  j["rdp_variant"] = report.rdp_variant;
  json perf = json::array();
  for (const auto& row : report.performance) {
    perf.push_back(json{{"metric", row.metric},
                        {"mean_a", optional_to_json(row.mean_a)},
                        {"mean_b", optional_to_json(row.mean_b)},
                        {"difference", test_to_json(row.difference)},
                        {"normality", test_to_json(row.normality)},
                        {"not_significant", row.not_significant},
                        {"note", row.note}});
  }
  j["performance"] = std::move(perf);
  j["fairness"] = distribution_rows_to_json(report.fairness);
  j["diversity"] = distribution_rows_to_json(report.diversity);
  json breakdown = json::array();
  for (const auto& row : report.breakdown) {
    json per_class = json::array();
    for (const auto& v : row.per_class) per_class.push_back(
        optional_to_json(v));
    breakdown.push_back(json{{"variant", row.variant},
                             {"metric", row.metric},
                             {"per_class", std::move(per_class)}});
  }
  j["breakdown"] = std::move(breakdown);
  return j;
}

BenchmarkReport report_from_json(const json& j) {
  BenchmarkReport report;
  report.classes = j.at("classes").get<std::vector<std::string>>();
  report.variants = j.at("variants").get<std::vector<std::string>>();
  report.alpha = j.at("alpha").get<double>();
  report.rdp_variant = j.at("rdp_variant").get<std::string>();
  for (const auto& row : j.at("performance")) {
    PerformanceRow r;
    r.metric = row.at("metric").get<std::string>();
    r.mean_a = optional_from_json(row.at("mean_a"));
    r.mean_b = optional_from_json(row.at("mean_b"));
    r.difference = test_from_json(row.at("difference"));
    r.normality = test_from_json(row.at("normality"));
    r.not_significant = row.at("not_significant").get<bool>();
    r.note = row.at("note").get<std::string>();
    report.performance.push_back(std::move(r));
  }
  report.fairness = distribution_rows_from_json(j.at("fairness"));
  report.diversity = distribution_rows_from_json(j.at("diversity"));
  for (const auto& row : j.at("breakdown")) {
    ClassBreakdownRow r;
    r.variant = row.at("variant").get<std::string>();
    r.metric = row.at("metric").get<std::string>();
    for (const auto& v : row.at("per_class")) {
      r.per_class.push_back(optional_from_json(v));
    }
    report.breakdown.push_back(std::move(r));
  }
  return report;
}

void emit_csv(const BenchmarkReport& report, std::ostream& out) {
  out << "block,metric,variant,class,value,statistic,p_value,reject,marker,"
         "note\n";
  auto cell = [](const std::optional<double>& v) {
    return v ? fmt_full(*v) : std::string();
  };
  auto test_cols = [&](const std::optional<TestResult>& t) {
    if (!t) return std::string(",,,");
    return "," + fmt_full(t->statistic) + "," + fmt_full(t->p_value) + "," +
           (t->reject ? "true" : "false");
  };
  for (const auto& row : report.performance) {
    for (std::size_t v = 0; v < 2; ++v) {
      out << "performance," << row.metric << ',' << report.variants[v]
          << ",," << cell(v == 0 ? row.mean_a : row.mean_b)
          << test_cols(row.difference) << ','
          << (row.not_significant ? "bold" : "") << ',' << row.note << "\n";
    }
  }
  auto distribution_block = [&](const char* block,
                                const std::vector<DistributionRow>& rows) {
    for (const auto& row : rows) {
      const std::string kind = to_string(row.kind);
      for (const char* div : {"chi2", "cheb"}) {
        std::optional<double> value;
        if (row.scores) {
          value = std::string(div) == "chi2" ? row.scores->chi2_divergence
                                             : row.scores->chebyshev;
        }
        out << block << ',' << kind << '-' << div << ',' << row.variant
            << ",," << cell(value) << test_cols(row.uniformity) << ','
            << (row.uniformity && row.uniformity->reject ? "x" : "") << ','
            << row.note << "\n";
      }
    }
  };
  distribution_block("fairness", report.fairness);
  distribution_block("diversity", report.diversity);
  for (const auto& row : report.breakdown) {
    for (std::size_t j = 0; j < row.per_class.size(); ++j) {
      out << "breakdown," << row.metric << ',' << row.variant << ','
          << report.classes[j] << ',' << cell(row.per_class[j])
          << ",,,,,\n";
    }
  }
}

constexpr const char* kAbsent = "—";  // table placeholder for no value

void emit_markdown(const BenchmarkReport& report, std::ostream& out) {
  out << "# Benchmark report\n\n";
  out << "Variants: " << report.variants[0] << " vs " << report.variants[1]
      << ". Significance level " << fmt_short(report.alpha)
      << ", RDP variant: " << report.rdp_variant << ".\n";

  out << "\n## Performance\n\n";
  out << "| Variant |";
  for (const auto& row : report.performance) {
    out << ' ' << row.metric << " | p |";
  }
  out << "\n| --- |";
  for (std::size_t i = 0; i < report.performance.size(); ++i) {
    out << " --- | --- |";
  }
  out << "\n";
  for (std::size_t v = 0; v < 2; ++v) {
    out << "| " << report.variants[v] << " |";
    for (const auto& row : report.performance) {
      const auto& mean = v == 0 ? row.mean_a : row.mean_b;
      out << ' ';
      if (!mean) {
        out << kAbsent;
      } else if (row.not_significant) {
        out << "**" << fmt_short(*mean) << "**";
      } else {
        out << fmt_short(*mean);
      }
      out << " | "
          << (row.difference ? fmt_short(row.difference->p_value) : kAbsent)
          << " |";
    }
    out << "\n";
  }
  out << "\nBold: the paired test keeps the null hypothesis that the two "
         "variants' losses coincide (not rejected at alpha = "
      << fmt_short(report.alpha) << ").\n";
  for (const auto& row : report.performance) {
    if (!row.note.empty()) {
      out << "- " << row.metric << ": " << row.note << "\n";
    }
  }

  auto distribution_table = [&](const std::vector<DistributionRow>& rows) {
    // column set = kinds in appearance order
    std::vector<FairnessKind> kinds;
    for (const auto& row : rows) {
      if (std::find(kinds.begin(), kinds.end(), row.kind) == kinds.end()) {
        kinds.push_back(row.kind);
      }
    }
    out << "| Variant |";
    for (const auto& kind : kinds) {
      out << " Δ_" << to_string(kind) << "-χ² | Δ_"
          << to_string(kind) << "-Cheb |";
    }
    out << "\n| --- |";
    for (std::size_t i = 0; i < kinds.size(); ++i) out << " --- | --- |";
    out << "\n";
    for (const auto& variant : report.variants) {
      out << "| " << variant << " |";
      for (const auto& kind : kinds) {
        const DistributionRow* found = nullptr;
        for (const auto& row : rows) {
          if (row.variant == variant && row.kind == kind) {
            found = &row;
            break;
          }
        }
        if (!found || !found->scores) {
          out << ' ' << kAbsent << " | " << kAbsent << " |";
          continue;
        }
        const bool cross = found->uniformity && found->uniformity->reject;
        out << ' ' << fmt_short(found->scores->chi2_divergence)
            << (cross ? " ✗" : "") << " | "
            << fmt_short(found->scores->chebyshev) << (cross ? " ✗" : "")
            << " |";
      }
      out << "\n";
    }
    out << "\n✗: the uniformity test rejects at alpha = "
        << fmt_short(report.alpha) << ".\n";
    for (const auto& row : rows) {
      if (!row.note.empty()) {
        out << "- " << row.variant << " (" << to_string(row.kind)
            << "): " << row.note << "\n";
      }
    }
  };

  out << "\n## Fairness\n\n";
  distribution_table(report.fairness);
  if (!report.diversity.empty()) {
    out << "\n## Diversity\n\n";
    distribution_table(report.diversity);
  }

  if (report.breakdown.empty()) return;
  out << "\n## Per-class breakdown\n";
  std::vector<std::string> metrics;
  for (const auto& row : report.breakdown) {
    if (std::find(metrics.begin(), metrics.end(), row.metric) ==
        metrics.end()) {
      metrics.push_back(row.metric);
    }
  }
  for (const auto& metric : metrics) {
    out << "\n### " << metric << "\n\n| Class |";
    std::vector<const ClassBreakdownRow*> cols;
    for (const auto& variant : report.variants) {
      for (const auto& row : report.breakdown) {
        if (row.metric == metric && row.variant == variant) {
          cols.push_back(&row);
          out << ' ' << variant << " |";
          break;
        }
      }
    }
    out << "\n| --- |";
    for (std::size_t i = 0; i < cols.size(); ++i) out << " --- |";
    out << "\n";
    for (std::size_t j = 0; j < report.classes.size(); ++j) {
      out << "| " << report.classes[j] << " |";
      for (const auto* row : cols) {
        const auto& v = row->per_class[j];
        out << ' ' << (v ? fmt_short(*v) : kAbsent) << " |";
      }
      out << "\n";
    }
  }
}

}  // namespace

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  throw DomainError("unknown report format '" + name + "'");
}

std::string to_json_string(const BenchmarkReport& report) {
  return report_to_json(report).dump(2);
}

BenchmarkReport report_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedManifest(std::string("report JSON: ") + e.what());
  }
  try {
    return report_from_json(j);
  } catch (const json::exception& e) {
    throw MalformedManifest(std::string("report JSON: ") + e.what());
  }
}

void emit(const BenchmarkReport& report, ReportFormat format,
          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  switch (format) {
    case ReportFormat::json:
      out << to_json_string(report) << "\n";
      break;
    case ReportFormat::csv:
      emit_csv(report, out);
      break;
    case ReportFormat::markdown:
      emit_markdown(report, out);
      break;
  }
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace fairgen
