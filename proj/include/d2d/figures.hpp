#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "d2d/analytic.hpp"
#include "d2d/run_record.hpp"

namespace d2d {

enum class Figure { Fig2, Fig3, Fig4a, Fig4b };

Figure figure_from_string(const std::string& name);
std::string to_string(Figure figure);

struct FigureOptions {
  bool include_mc = false;  ///< add Monte Carlo rows next to the analytic ones
  uint64_t trials = 20000;
  uint64_t seed = 1;
  int threads = 0;
  SimOptions sim;
  StpVariant stp_variant = StpVariant::Composed;
  /// Density grid override (tests); empty = the default sweep grid.
  std::vector<double> zeta_grid;
};

/// The dataset behind one published-figure reproduction:
///   fig2 / fig3: protocol coverage (PTP / STP) against source density,
///     across a (alpha, l_a, m) grid;
///   fig4a / fig4b: all four protocols against source density at
///     interference ratio 0.2 / 0.8.
std::vector<RunRecord> figure_dataset(Figure figure, const SystemParams& base,
                                      const FigureOptions& options);

/// Figure CSV: zeta_a,protocol,method,variant,coverage,std_err, plus the
/// grid columns alpha,l_a,m for fig2/fig3 rows.
void write_figure_csv(std::ostream& out, const std::vector<RunRecord>& records,
                      bool grid_columns);

/// One analytic record per protocol, sharing a single evaluation.
std::vector<RunRecord> analytic_records(const SystemParams& p,
                                        const std::vector<Protocol>& protocols,
                                        StpVariant variant, int threads);

}  // namespace d2d
