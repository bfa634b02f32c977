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

#ifndef KSQ_SCAN_HPP
#define KSQ_SCAN_HPP

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ksq/channels.hpp"
#include "ksq/classify.hpp"
#include "ksq/descriptor.hpp"
#include "ksq/parallel.hpp"

namespace ksq {

enum class Figure { Fig1, Fig2 };

inline Figure parse_figure(std::string_view name) {
  if (name == "fig1") return Figure::Fig1;
  if (name == "fig2") return Figure::Fig2;
  throw UsageError("scan: unknown figure '" + std::string(name) + "' (expected fig1 or fig2)");
}

struct ScanAxis {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;

  /// Cell center i.
  [[nodiscard]] double at(std::size_t i) const {
    return lo + (static_cast<double>(i) + 0.5) * (hi - lo) / static_cast<double>(n);
  }
};

struct ScanRow {
  double x = 0.0;
  double y = 0.0;
  unsigned mask = 0;
};

struct ScanData {
  Figure figure = Figure::Fig1;
  ScanAxis x_axis;
  ScanAxis y_axis;
  std::vector<std::string> columns;
  /// y-major: row index j * x_axis.n + i.
  std::vector<ScanRow> rows;

  [[nodiscard]] bool flag(std::size_t row, std::size_t column) const {
    return (rows[row].mask >> column) & 1u;
  }
};

/// fig1 over (a,b): T_(a,a,b) and Φ_(2a,2a,2b) complete positivity.
inline unsigned fig1_flags(double a, double b) {
  const bool t_cp = std::abs(b) < 0.5 && a * a <= (1 + 2 * b) / 8;
  const bool phi_cp = a * a <= (1 + 2 * b) * (1 + 2 * b) / 16;
  return (t_cp ? 1u : 0u) | (phi_cp ? 2u : 0u);
}

/// fig2 over (λ,µ): CP, sufficient KS and componentwise KS of T_{λ,µ}.
inline unsigned fig2_flags(double lambda, double mu) {
  const ScalarPairParams p{lambda, mu};
  const bool cp = cp_tlm_exact(p).holds();
  const bool ks = ks_tlm_sufficient(p).holds();
  const bool comp = ks_phi_scalar_interval(lambda).holds() && ks_phi_scalar_interval(mu).holds();
  return (cp ? 1u : 0u) | (ks ? 2u : 0u) | (comp ? 4u : 0u);
}

inline ScanData scan_figure(Figure figure, std::size_t grid, unsigned threads = 1) {
  if (grid < 2) throw UsageError("scan: grid must be at least 2");
  ScanData d;
  d.figure = figure;
  if (figure == Figure::Fig1) {
    d.x_axis = d.y_axis = {-0.5, 0.5, grid};
    d.columns = {"t_cp", "phi_cp"};
  } else {
    d.x_axis = d.y_axis = {-1.0, 1.0, grid};
    d.columns = {"cp", "ks_sufficient", "ks_scalar_components"};
  }
  d.rows.resize(grid * grid);
  parallel_for(grid, threads, [&](std::size_t j) {
    const double y = d.y_axis.at(j);
    for (std::size_t i = 0; i < grid; ++i) {
      const double x = d.x_axis.at(i);
      const unsigned mask = figure == Figure::Fig1 ? fig1_flags(x, y) : fig2_flags(x, y);
      d.rows[j * grid + i] = {x, y, mask};
    }
  });
  return d;
}

inline void write_csv(const ScanData& d, std::ostream& out) {
  out << "x,y";
  for (const auto& c : d.columns) out << ',' << c;
  out << '\n';
  for (const ScanRow& r : d.rows) {
    out << format_real(r.x) << ',' << format_real(r.y);
    for (std::size_t c = 0; c < d.columns.size(); ++c) out << ',' << ((r.mask >> c) & 1u);
    out << '\n';
  }
}

/// Gray level per unit of flag bitmask: floor(255 / (2^k − 1)).
inline unsigned pgm_scale(std::size_t flags) { return 255u / ((1u << flags) - 1u); }

/// Binary P5 raster, one pixel per scan cell, first row = smallest y.
inline void write_pgm(const ScanData& d, std::ostream& out) {
  const unsigned unit = pgm_scale(d.columns.size());
  out << "P5\n# pixel = bitmask * " << unit << ";";
  for (std::size_t c = 0; c < d.columns.size(); ++c) out << " bit" << c << '=' << d.columns[c];
  out << "; rows run from y = " << format_real(d.y_axis.lo) << " downward\n";
  out << d.x_axis.n << ' ' << d.y_axis.n << "\n255\n";
  std::string pixels(d.rows.size(), '\0');
  for (std::size_t k = 0; k < d.rows.size(); ++k) pixels[k] = static_cast<char>(d.rows[k].mask * unit);
  out.write(pixels.data(), static_cast<std::streamsize>(pixels.size()));
}

struct ChoiCheck {
  std::size_t checked = 0;
  std::vector<std::string> disagreements;
};

/// Re-derives the CP columns of K random scan cells from Choi spectra.
inline ChoiCheck verify_choi(const ScanData& d, std::size_t k, std::uint64_t seed) {
  ChoiCheck result;
  if (d.rows.empty()) return result;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, d.rows.size() - 1);
  for (std::size_t n = 0; n < k; ++n) {
    const std::size_t idx = pick(rng);
    const ScanRow& r = d.rows[idx];
    auto expect = [&](std::size_t column, const ComplexMatrix& choi) {
      const bool numeric = cp_choi_numeric(choi).holds();
      if (numeric != d.flag(idx, column)) {
        result.disagreements.push_back(d.columns[column] + " at (" + format_real(r.x) + ", " +
                                       format_real(r.y) + ")");
      }
    };
    if (d.figure == Figure::Fig1) {
      expect(0, choi_matrix_tensor(DiagonalTensorParams(r.x, r.x, r.y).tensor_map()));
      expect(1, choi_matrix_qubit(DiagonalParams(2 * r.x, 2 * r.x, 2 * r.y).channel()));
    } else {
      expect(0, choi_matrix_tensor(ScalarPairParams{r.x, r.y}.tensor_map()));
    }
    ++result.checked;
  }
  return result;
}

}  // namespace ksq

#endif  // KSQ_SCAN_HPP
