// Copyright 2026 The DAOC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace daoc {

using NodeId = std::uint32_t;
using Label = std::uint64_t;

inline constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);

/// Relative tolerance for comparing optimization gains. Two gains are
/// considered equal iff |a - b| <= tol * max(|a|, |b|); mutual maxima require
/// equality, and exact float comparison breaks under benign reassociation of
/// the weight sums. The comparison is purely relative: gains scale with the
/// inverse network weight, and any absolute floor makes unrelated neighbors
/// of a large network compare equal, which percolates merges across the
/// whole graph.
inline constexpr double kGainTolerance = 1e-9;

inline bool nearly_equal(double a, double b, double tol = kGainTolerance) noexcept {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

/// Strictly greater, i.e. greater and not equal under the gain tolerance.
inline bool definitely_greater(double a, double b, double tol = kGainTolerance) noexcept {
  return a > b && !nearly_equal(a, b, tol);
}

/// Malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Requested operation is outside the supported envelope (e.g. exhaustive
/// search beyond the size cap, modularity of an overlapping clustering).
class Unsupported : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A constrained stochastic operation could not reach its target (e.g. link
/// removal blocked by the minimum-degree constraint).
class Infeasible : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace daoc
