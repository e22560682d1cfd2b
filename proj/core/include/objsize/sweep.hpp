#pragma once

// Grid evaluation of the sizing pipeline: object-size tables over
// (load, N, mss, model), the users-vs-N figure, and the TDM/H2 size-ratio
// figure. Rows are always produced by a fresh sizing evaluation, never
// cached or hand-entered.

#include <cstdint>
#include <string>
#include <vector>

#include "objsize/sizing.hpp"

namespace objsize::sweep {

struct SweepSpec {
  std::vector<double> loads;
  int n_min = 2;
  int n_max = 9;
  std::vector<std::int64_t> mss_list;
  std::vector<sizing::DelayModel> models;

  // The grid behind the reference tables: loads {0.01, 0.05, 0.1},
  // N in [2, 9], mss {1460, 536}, both models.
  static SweepSpec paper();
};

// Throws std::invalid_argument when a list is empty or a point violates
// the sizing preconditions.
void validate(const SweepSpec& spec);

// One grid point. An infeasible packet equation leaves `feasible` false;
// the user-count fields are still populated (they do not depend on the
// model) and n / theta_raw / theta must not be read.
struct TableRow {
  double load;
  int embedded_count;
  std::int64_t mss;
  sizing::DelayModel model;
  double m_raw;
  std::int64_t m;
  bool feasible;
  double n;
  double theta_raw;
  std::int64_t theta;
};

// Arithmetic mean of the rounded theta over the feasible N of one
// (load, mss, model) column, rounded half-up again.
struct MeanRow {
  double load;
  std::int64_t mss;
  sizing::DelayModel model;
  bool feasible;          // false when every N was infeasible
  double theta_mean_raw;  // unrounded mean of the rounded entries
  std::int64_t theta_mean;
  int infeasible_count;   // N values excluded from the mean
};

struct ObjectSizeTable {
  std::vector<TableRow> rows;    // (load, N, mss, model) in grid order
  std::vector<MeanRow> means;    // one per (load, mss, model)
};

ObjectSizeTable object_size_table(const SweepSpec& spec);

// Generic figure sample: one point of one named series.
struct SeriesPoint {
  double x;
  std::string series;
  double y;
};

// Raw (unceiled) users solving the delay equality, one series per load;
// x = N. Series are labeled "rho=<load>".
std::vector<SeriesPoint> users_figure(const std::vector<double>& loads,
                                      int n_min, int n_max);

// Size ratio aggregated over N for one load and mss. The ratio of the
// unrounded sizes is mss-invariant; both aggregations are reported because
// they differ slightly (mean of per-N ratios vs ratio of the per-model
// means).
struct RatioPoint {
  double load;
  std::int64_t mss;
  double mean_of_ratios;
  double ratio_of_means;
  int infeasible_count;  // N values excluded from both aggregates
};

std::vector<RatioPoint> ratio_figure(const std::vector<double>& loads,
                                     int n_min, int n_max,
                                     const std::vector<std::int64_t>& mss_list);

// Ratio points flattened to plottable series
// ("mean_of_ratios_mss<mss>", "ratio_of_means_mss<mss>"); x = load.
std::vector<SeriesPoint> ratio_series(const std::vector<RatioPoint>& points);

}  // namespace objsize::sweep
