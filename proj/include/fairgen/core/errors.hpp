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

#ifndef FAIRGEN_CORE_ERRORS_HPP
#define FAIRGEN_CORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairgen {

// Broad failure categories; the CLI maps them onto exit codes
// (io -> 1, validation -> 2, degenerate -> 3).
enum class ErrorKind { io, validation, degenerate };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define FAIRGEN_DEFINE_ERROR(NAME, KIND)                 \
  struct NAME : Error {                                  \
    explicit NAME(const std::string& msg)                \
        : Error(ErrorKind::KIND, #NAME ": " + msg) {}    \
  }

// I/O
FAIRGEN_DEFINE_ERROR(IoError, io);

// Manifest and data-model validation
FAIRGEN_DEFINE_ERROR(InvalidDistribution, validation);
FAIRGEN_DEFINE_ERROR(UnknownClass, validation);
FAIRGEN_DEFINE_ERROR(DuplicateSample, validation);
FAIRGEN_DEFINE_ERROR(DimensionMismatch, validation);
FAIRGEN_DEFINE_ERROR(EmptyCondition, validation);
FAIRGEN_DEFINE_ERROR(InvalidK, validation);
FAIRGEN_DEFINE_ERROR(EmptySet, validation);
FAIRGEN_DEFINE_ERROR(WrongPartition, validation);

// Image operations
FAIRGEN_DEFINE_ERROR(ShapeMismatch, validation);
FAIRGEN_DEFINE_ERROR(ImageTooSmall, validation);
FAIRGEN_DEFINE_ERROR(Upscale, validation);
FAIRGEN_DEFINE_ERROR(EmptyList, validation);
FAIRGEN_DEFINE_ERROR(EmptyGroup, validation);

// Metric computation
FAIRGEN_DEFINE_ERROR(UnknownMetric, validation);
FAIRGEN_DEFINE_ERROR(ZeroVector, validation);
FAIRGEN_DEFINE_ERROR(MissingEmbedding, validation);

// Statistics
FAIRGEN_DEFINE_ERROR(DomainError, validation);
FAIRGEN_DEFINE_ERROR(EmptyCounts, validation);
FAIRGEN_DEFINE_ERROR(TooFewSamples, validation);
FAIRGEN_DEFINE_ERROR(DegenerateMargin, degenerate);
FAIRGEN_DEFINE_ERROR(AllZeroDifferences, degenerate);
FAIRGEN_DEFINE_ERROR(ZeroVariance, degenerate);
FAIRGEN_DEFINE_ERROR(NoPairedSamples, degenerate);

// Fairness distributions
FAIRGEN_DEFINE_ERROR(EmptyClass, degenerate);
FAIRGEN_DEFINE_ERROR(DegenerateAllCorrect, degenerate);
FAIRGEN_DEFINE_ERROR(DegenerateAllWrong, degenerate);
FAIRGEN_DEFINE_ERROR(EmptyDiversitySet, validation);

// Dataset tooling
FAIRGEN_DEFINE_ERROR(InfeasibleTarget, degenerate);

#undef FAIRGEN_DEFINE_ERROR

// Parse failures carry the 1-based line number of the offending row
// (0 when no line applies).
struct MalformedManifest : Error {
  explicit MalformedManifest(const std::string& msg, std::size_t line_no = 0)
      : Error(ErrorKind::validation,
              line_no == 0
                  ? "MalformedManifest: " + msg
                  : "MalformedManifest: line " + std::to_string(line_no) +
                        ": " + msg),
        line(line_no) {}
  std::size_t line;
};

}  // namespace fairgen

#endif  // FAIRGEN_CORE_ERRORS_HPP
