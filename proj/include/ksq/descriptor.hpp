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

#ifndef KSQ_DESCRIPTOR_HPP
#define KSQ_DESCRIPTOR_HPP

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ksq/channels.hpp"

namespace ksq {

/// One parsed family descriptor: `phi:`, `tdiag:`, `tlm:` or `tmat:`.
using FamilyDescriptor =
    std::variant<DiagonalParams, DiagonalTensorParams, ScalarPairParams, TensorMap>;

/// %.17g, enough digits for an exact round trip of any double.
inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline double parse_real(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
      !std::isfinite(v)) {
    throw UsageError("descriptor: cannot parse number '" + std::string(token) + "'");
  }
  return v;
}

inline std::vector<double> parse_list(std::string_view body, std::size_t expected,
                                      std::string_view family) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    values.push_back(parse_real(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != expected) {
    throw UsageError("descriptor: '" + std::string(family) + "' expects " +
                     std::to_string(expected) + " values, got " + std::to_string(values.size()));
  }
  return values;
}

inline std::string join(const double* v, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ',';
    s += format_real(v[i]);
  }
  return s;
}

}  // namespace detail

inline FamilyDescriptor parse_descriptor(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("descriptor: expected '<family>:<values>', got '" + std::string(text) + "'");
  }
  const std::string_view family = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  if (family == "phi") {
    const auto v = detail::parse_list(body, 3, family);
    return DiagonalParams(v[0], v[1], v[2]);
  }
  if (family == "tdiag") {
    const auto v = detail::parse_list(body, 3, family);
    return DiagonalTensorParams(v[0], v[1], v[2]);
  }
  if (family == "tlm") {
    const auto v = detail::parse_list(body, 2, family);
    return ScalarPairParams{v[0], v[1]};
  }
  if (family == "tmat") {
    const auto v = detail::parse_list(body, 18, family);
    TensorMap m;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        m.a[i][j] = v[3 * i + j];
        m.c[i][j] = v[9 + 3 * i + j];
      }
    }
    return m;
  }
  throw UsageError("descriptor: unknown family '" + std::string(family) + "'");
}

inline std::string format_descriptor(const FamilyDescriptor& d) {
  struct Visitor {
    std::string operator()(const DiagonalParams& p) const {
      return "phi:" + detail::join(p.lambda.data(), 3);
    }
    std::string operator()(const DiagonalTensorParams& p) const {
      return "tdiag:" + detail::join(p.lambda.data(), 3);
    }
    std::string operator()(const ScalarPairParams& p) const {
      const double v[2] = {p.lambda, p.mu};
      return "tlm:" + detail::join(v, 2);
    }
    std::string operator()(const TensorMap& m) const {
      double v[18];
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          v[3 * i + j] = m.a[i][j];
          v[9 + 3 * i + j] = m.c[i][j];
        }
      }
      return "tmat:" + detail::join(v, 18);
    }
  };
  return std::visit(Visitor{}, d);
}

/// The evaluable map described by a descriptor.
inline EvaluableMap descriptor_map(const FamilyDescriptor& d) {
  struct Visitor {
    EvaluableMap operator()(const DiagonalParams& p) const { return as_map(p.channel()); }
    EvaluableMap operator()(const DiagonalTensorParams& p) const { return as_map(p.tensor_map()); }
    EvaluableMap operator()(const ScalarPairParams& p) const { return as_map(p.tensor_map()); }
    EvaluableMap operator()(const TensorMap& m) const { return as_map(m); }
  };
  return std::visit(Visitor{}, d);
}

}  // namespace ksq

#endif  // KSQ_DESCRIPTOR_HPP
