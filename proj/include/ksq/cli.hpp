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

#ifndef KSQ_CLI_HPP
#define KSQ_CLI_HPP

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ksq/classify.hpp"
#include "ksq/descriptor.hpp"
#include "ksq/harness.hpp"
#include "ksq/oracle.hpp"
#include "ksq/parallel.hpp"
#include "ksq/scan.hpp"

namespace ksq {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kWitness = 1;
inline constexpr int kParse = 2;
inline constexpr int kIo = 3;
inline constexpr int kVerification = 4;
}  // namespace exit_code

namespace detail {

/// w0 and w1..w3 as eight comma-separated reals: re, im pairs.
inline std::string format_element(const PauliElement& x) {
  std::string s = format_real(x.w0.real()) + ',' + format_real(x.w0.imag());
  for (const Complex& c : x.w) s += ',' + format_real(c.real()) + ',' + format_real(c.imag());
  return s;
}

inline nlohmann::json tri_state_json(const TriState& t) {
  nlohmann::json j;
  j["status"] = to_string(t.status);
  j["note"] = t.note;
  if (!t.violated.empty()) j["violated"] = t.violated;
  if (t.value) j["value"] = *t.value;
  if (t.witness) {
    std::vector<double> w{t.witness->w0.real(), t.witness->w0.imag()};
    for (const Complex& c : t.witness->w) {
      w.push_back(c.real());
      w.push_back(c.imag());
    }
    j["witness"] = w;
  }
  return j;
}

inline void print_tri_state(std::ostream& out, const char* level, const TriState& t) {
  out << "  " << level;
  for (std::size_t pad = std::char_traits<char>::length(level); pad < 10; ++pad) out << ' ';
  out << to_string(t.status);
  for (std::size_t pad = std::char_traits<char>::length(to_string(t.status)); pad < 17; ++pad) out << ' ';
  out << t.note;
  if (!t.violated.empty()) out << " [" << t.violated << ']';
  if (t.value) out << " value=" << format_real(*t.value);
  out << '\n';
  if (t.witness) out << "            witness " << format_element(*t.witness) << '\n';
}

inline std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("KSQ_SEED: expected an unsigned integer, got '" + text + "'");
  }
  return v;
}

inline std::uint64_t env_seed() {
  const char* env = std::getenv("KSQ_SEED");
  return env ? parse_seed(env) : 0;
}

}  // namespace detail

/// Entry point for the `ksq` tool. Arguments exclude the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ksq: positivity, Kadison-Schwarz and complete positivity of qubit maps", "ksq"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_flag;
  const unsigned default_threads = default_thread_count();

  // classify
  auto* classify = app.add_subcommand("classify", "Classify one or more parameter points");
  std::vector<std::string> classify_descriptors;
  std::string format = "text";
  std::size_t classify_samples = 10000;
  classify->add_option("descriptor", classify_descriptors, "phi:l1,l2,l3 | tdiag:l1,l2,l3 | tlm:l,m | tmat:<18 reals>")
      ->required();
  classify->add_option("--format", format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));
  classify->add_option("--samples", classify_samples, "Oracle samples for unresolved levels")
      ->check(CLI::PositiveNumber);
  classify->add_option("--seed", seed_flag, "Random seed (default: $KSQ_SEED or 0)");

  // scan
  auto* scan = app.add_subcommand("scan", "Write a region scan as CSV and optionally PGM");
  std::string figure;
  std::size_t grid = 401;
  std::string csv_path;
  std::string pgm_path;
  std::size_t verify_k = 0;
  unsigned scan_threads = default_threads;
  scan->add_option("--figure", figure, "fig1 or fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
  scan->add_option("--grid", grid, "Cells per axis")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  scan->add_option("--out", csv_path, "CSV output path")->required();
  scan->add_option("--pgm", pgm_path, "Optional P5 raster output path");
  scan->add_option("--verify-choi", verify_k, "Re-check K random cells against Choi spectra");
  scan->add_option("--threads", scan_threads, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--seed", seed_flag, "Random seed for --verify-choi");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Search for a Kadison-Schwarz defect witness");
  std::string oracle_descriptor;
  SampleConfig oracle_cfg;
  oracle->add_option("descriptor", oracle_descriptor, "Map descriptor")->required();
  oracle->add_option("--samples", oracle_cfg.n_samples, "Random samples")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", seed_flag, "Random seed (default: $KSQ_SEED or 0)");
  oracle->add_option("--tol", oracle_cfg.tol, "Violation threshold")->check(CLI::PositiveNumber);
  oracle->add_option("--threads", oracle_cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

  // harness
  auto* harness = app.add_subcommand("harness", "Cross-check closed forms against the oracles");
  std::string family;
  std::size_t harness_grid = 11;
  SampleConfig harness_cfg;
  harness_cfg.n_samples = 1000;
  harness_cfg.threads = default_threads;
  harness->add_option("--family", family, "phi, tdiag or tlm")->required();
  harness->add_option("--grid", harness_grid, "Points per axis, endpoints included")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  harness->add_option("--samples", harness_cfg.n_samples, "Oracle samples per point")
      ->check(CLI::PositiveNumber);
  harness->add_option("--seed", seed_flag, "Random seed (default: $KSQ_SEED or 0)");
  harness->add_option("--threads", harness_cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "ksq: " << e.what() << '\n';
    return exit_code::kParse;
  }

  try {
    const std::uint64_t seed = seed_flag ? *seed_flag : detail::env_seed();

    if (*classify) {
      ClassifyOptions opt;
      opt.samples = classify_samples;
      opt.seed = seed;
      std::vector<FamilyDescriptor> parsed;
      for (const auto& text : classify_descriptors) parsed.push_back(parse_descriptor(text));
      for (const auto& d : parsed) {
        const Verdict v = classify_full(d, opt);
        if (format == "json-lines") {
          nlohmann::json j;
          j["descriptor"] = format_descriptor(d);
          j["positive"] = detail::tri_state_json(v.positive);
          j["kadison_schwarz"] = detail::tri_state_json(v.kadison_schwarz);
          j["completely_positive"] = detail::tri_state_json(v.completely_positive);
          out << j.dump() << '\n';
        } else {
          out << format_descriptor(d) << '\n';
          detail::print_tri_state(out, "positive", v.positive);
          detail::print_tri_state(out, "ks", v.kadison_schwarz);
          detail::print_tri_state(out, "cp", v.completely_positive);
        }
      }
      return exit_code::kOk;
    }

    if (*scan) {
      const ScanData data = scan_figure(parse_figure(figure), grid, scan_threads);
      {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) {
          err << "ksq: cannot open '" << csv_path << "' for writing\n";
          return exit_code::kIo;
        }
        write_csv(data, csv);
        csv.flush();
        if (!csv) {
          err << "ksq: write to '" << csv_path << "' failed\n";
          return exit_code::kIo;
        }
      }
      if (!pgm_path.empty()) {
        std::ofstream pgm(pgm_path, std::ios::binary);
        if (!pgm) {
          err << "ksq: cannot open '" << pgm_path << "' for writing\n";
          return exit_code::kIo;
        }
        write_pgm(data, pgm);
        pgm.flush();
        if (!pgm) {
          err << "ksq: write to '" << pgm_path << "' failed\n";
          return exit_code::kIo;
        }
      }
      out << "wrote " << data.rows.size() << " rows to " << csv_path << '\n';
      if (verify_k > 0) {
        const ChoiCheck check = verify_choi(data, verify_k, seed);
        out << "verify-choi: " << check.checked << " cells checked, " << check.disagreements.size()
            << " disagreements\n";
        for (const auto& d : check.disagreements) out << "  " << d << '\n';
        if (!check.disagreements.empty()) return exit_code::kVerification;
      }
      return exit_code::kOk;
    }

    if (*oracle) {
      oracle_cfg.seed = seed;
      const FamilyDescriptor d = parse_descriptor(oracle_descriptor);
      const auto w = ks_violation_search(descriptor_map(d), oracle_cfg);
      if (!w) {
        out << "no violation found in " << oracle_cfg.n_samples << " samples\n";
        return exit_code::kOk;
      }
      out << "witness " << detail::format_element(w->x) << '\n';
      out << "violation " << format_real(w->violation) << '\n';
      return exit_code::kWitness;
    }

    if (*harness) {
      harness_cfg.seed = seed;
      const HarnessFamily fam = parse_harness_family(family);
      const HarnessReport r = agreement_harness(fam, harness_grid, harness_cfg);
      out << "family " << family << ", " << r.points << " points, " << harness_cfg.n_samples
          << " samples per oracle call\n";
      auto line = [&out](const char* level, const LevelCounts& c) {
        out << "  " << level << ": agree " << c.agree << ", resolved by oracle "
            << c.resolved_by_oracle << ", discrepancies " << c.discrepancy << '\n';
      };
      line("positive", r.positive);
      line("ks      ", r.kadison_schwarz);
      line("cp      ", r.completely_positive);
      if (fam == HarnessFamily::ScalarPair) {
        out << "  T oracle-clean with a non-KS split component: " << r.split_separations << '\n';
      }
      const std::size_t shown = std::min<std::size_t>(r.discrepancies.size(), 20);
      for (std::size_t i = 0; i < shown; ++i) {
        const auto& d = r.discrepancies[i];
        out << "  discrepancy " << d.level << ' ' << d.descriptor << ": " << d.detail << '\n';
      }
      if (r.discrepancies.size() > shown) {
        out << "  ... " << r.discrepancies.size() - shown << " more\n";
      }
      return r.total_discrepancies() == 0 ? exit_code::kOk : exit_code::kVerification;
    }
  } catch (const UsageError& e) {
    err << "ksq: " << e.what() << '\n';
    return exit_code::kParse;
  } catch (const NumericError& e) {
    err << "ksq: numerical failure: " << e.what() << '\n';
    return exit_code::kVerification;
  }
  return exit_code::kParse;
}

}  // namespace ksq

#endif  // KSQ_CLI_HPP
