#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hulthen/model.hpp"

namespace hulthen {

/// One (state, delta) entry of a comparison table.  e_closed is absent for
/// past-threshold rows, which are flagged instead.  reference carries the
/// published comparison value (as a signed energy) with its source tag.
struct SpectrumRow {
  std::string label;  // "1s".."5s", "2p", "3d"
  QuantumState state;
  double delta;
  std::optional<double> e_closed;
  std::optional<double> e_oracle;
  std::optional<double> reference;
  std::string source;  // "Ref3" | "Ref30" | "Ref11" | "Ref33" | ""
  std::optional<double> abs_diff;
  bool past_threshold = false;
  double delta_c = 0.0;
};

struct CurveSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// S-state table: nbar in 1..5, delta in {0.002, 0.01, 0.05, 0.2}.
std::vector<SpectrumRow> table1();

/// 2p and 3d table; with_oracle adds the shooting-solver column for the
/// original potential with the true centrifugal barrier.
std::vector<SpectrumRow> table2(bool with_oracle);

/// Curve data behind the four published figures (1-based index).
std::vector<CurveSeries> figure_data(int which);

/// Cross-check report for one state; exit code 0 (pass), 2 (unbound) or
/// 3 (numerical failure) is written to *exit_code.
std::string verify_report(int n, int l, double delta, double Z, int* exit_code);

/// Fixed-decimal formatting used for table emission (ties resolved on the
/// binary value, i.e. half-even at representable midpoints).
std::string format_fixed(double v, int decimals);

void write_rows_csv(std::ostream& os, const std::vector<SpectrumRow>& rows,
                    char sep = ',', int decimals = 7);
void write_series_csv(std::ostream& os, const std::vector<CurveSeries>& series,
                      char sep = ',');

/// CLI entry point; returns the process exit code
/// (0 ok, 1 usage, 2 unbound, 3 numerical failure).
int run(const std::vector<std::string>& args);

}  // namespace hulthen
