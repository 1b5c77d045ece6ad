#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fitems/algorithms.hpp"
#include "fitems/measures.hpp"
#include "fitems/rational.hpp"

namespace fitems {

enum class Measure { competitive, interval, worst_order };
enum class SweepMode { exact, family };
enum class OutputFormat { csv, json };

std::optional<Measure> parse_measure(std::string_view text);
std::string_view to_string(Measure measure);
std::optional<SweepMode> parse_mode(std::string_view text);

// One line of a sweep report. `measure` names the bound the row carries:
// competitive, interval_min, interval_max, worst_order_sup, worst_order_inf.
struct ReportRow {
  std::string measure;
  AlgorithmId alg_a;
  AlgorithmId alg_b;
  std::size_t n;
  Rational value;
  std::string witness;     // canonical ids, space separated
  std::string provenance;  // enumerated | analytic | family:<id>[+heuristic]
  std::string normalized;  // value scaled by the growth of the asymptotic claim
  std::string target;      // asymptotic value of the normalized column, if known
};

inline constexpr const char* kCsvHeader =
    "measure,alg_a,alg_b,n,value_exact,value_decimal,witness,provenance,normalized,asymptotic_target";

// Rows for every n in [n_lo, n_hi], ascending. Competitive rows compare
// opt (alg_b) with alg_a; `b` is required for the other measures.
std::vector<ReportRow> sweep(Measure measure, AlgorithmId a, std::optional<AlgorithmId> b,
                             std::size_t n_lo, std::size_t n_hi, SweepMode mode,
                             const SweepOptions& options = {});

std::string to_csv(const std::vector<ReportRow>& rows);
std::string to_json(const std::vector<ReportRow>& rows);

}  // namespace fitems
