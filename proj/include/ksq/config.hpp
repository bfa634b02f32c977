// Copyright 2026 The ksq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KSQ_CONFIG_HPP
#define KSQ_CONFIG_HPP

#include <stdexcept>
#include <string>

namespace ksq {

/// Raised when a caller violates a documented precondition (bad dimension,
/// out-of-range parameter, non-Hermitian input, malformed descriptor).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an iterative numeric routine fails to converge.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Single source of numeric tolerances. Every classifier takes its thresholds
/// from one of these records so that reported verdicts can be traced back to
/// a single configuration.
struct Tolerances {
  /// max |a_ij - conj(a_ji)| accepted as Hermitian.
  double hermiticity = 1e-10;
  /// Smallest eigenvalue accepted as "positive semidefinite".
  double positivity = 1e-9;
  /// Equality tolerance for the λ3 = ±1/2 faces of the diagonal tensor family.
  double boundary = 1e-12;
  /// Slack used when evaluating closed-form inequalities.
  double inequality = 1e-12;
  /// Oracle violation threshold.
  double oracle = 1e-8;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances kDefaults{};
  return kDefaults;
}

}  // namespace ksq

#endif  // KSQ_CONFIG_HPP
