#include "objsize/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "objsize/format.hpp"

namespace objsize::sweep {

namespace {

TableRow evaluate_point(double load, int embedded_count, std::int64_t mss,
                        sizing::DelayModel model) {
  TableRow row{};
  row.load = load;
  row.embedded_count = embedded_count;
  row.mss = mss;
  row.model = model;
  try {
    const sizing::SizingResult sized =
        sizing::object_size({load, embedded_count, mss}, model);
    row.m_raw = sized.m_raw;
    row.m = sized.m;
    row.feasible = true;
    row.n = sized.n;
    row.theta_raw = sized.theta_raw;
    row.theta = sized.theta;
  } catch (const sizing::infeasible_error&) {
    row.m_raw = sizing::solve_users_raw(load, embedded_count);
    row.m = sizing::integerize_users(row.m_raw);
    row.feasible = false;
    row.n = row.theta_raw = 0.0;
    row.theta = 0;
  }
  return row;
}

}  // namespace

SweepSpec SweepSpec::paper() {
  SweepSpec spec;
  spec.loads = {0.01, 0.05, 0.1};
  spec.n_min = 2;
  spec.n_max = 9;
  spec.mss_list = {1460, 536};
  spec.models = {sizing::DelayModel::TdmVacation, sizing::DelayModel::H2};
  return spec;
}

void validate(const SweepSpec& spec) {
  if (spec.loads.empty() || spec.mss_list.empty() || spec.models.empty())
    throw std::invalid_argument("sweep lists must be non-empty");
  if (spec.n_min > spec.n_max)
    throw std::invalid_argument("empty N range");
  for (const double load : spec.loads)
    if (!(load > 0.0) || !(load < 1.0))
      throw std::invalid_argument("sweep load must lie in (0, 1)");
  if (spec.n_min < 2)
    throw std::invalid_argument("embedded object count must be >= 2");
  for (const std::int64_t mss : spec.mss_list)
    if (mss < 1) throw std::invalid_argument("mss must be >= 1 byte");
}

ObjectSizeTable object_size_table(const SweepSpec& spec) {
  validate(spec);
  ObjectSizeTable table;
  for (const double load : spec.loads) {
    const std::size_t first_row = table.rows.size();
    for (int n = spec.n_min; n <= spec.n_max; ++n)
      for (const std::int64_t mss : spec.mss_list)
        for (const sizing::DelayModel model : spec.models)
          table.rows.push_back(evaluate_point(load, n, mss, model));

    for (const std::int64_t mss : spec.mss_list) {
      for (const sizing::DelayModel model : spec.models) {
        MeanRow mean_row{};
        mean_row.load = load;
        mean_row.mss = mss;
        mean_row.model = model;
        std::int64_t theta_sum = 0;
        int feasible_count = 0;
        for (std::size_t i = first_row; i < table.rows.size(); ++i) {
          const TableRow& row = table.rows[i];
          if (row.mss != mss || row.model != model) continue;
          if (row.feasible) {
            theta_sum += row.theta;
            ++feasible_count;
          } else {
            ++mean_row.infeasible_count;
          }
        }
        mean_row.feasible = feasible_count > 0;
        if (mean_row.feasible) {
          mean_row.theta_mean_raw = static_cast<double>(theta_sum) /
                                    static_cast<double>(feasible_count);
          mean_row.theta_mean = sizing::round_half_up(mean_row.theta_mean_raw);
        }
        table.means.push_back(mean_row);
      }
    }
  }
  return table;
}

std::vector<SeriesPoint> users_figure(const std::vector<double>& loads,
                                      int n_min, int n_max) {
  if (loads.empty() || n_min > n_max)
    throw std::invalid_argument("empty figure grid");
  std::vector<SeriesPoint> points;
  points.reserve(loads.size() *
                 static_cast<std::size_t>(n_max - n_min + 1));
  for (const double load : loads) {
    const std::string series = "rho=" + format_real(load);
    for (int n = n_min; n <= n_max; ++n)
      points.push_back({static_cast<double>(n), series,
                        sizing::solve_users_raw(load, n)});
  }
  return points;
}

std::vector<RatioPoint> ratio_figure(const std::vector<double>& loads,
                                     int n_min, int n_max,
                                     const std::vector<std::int64_t>& mss_list) {
  if (loads.empty() || mss_list.empty() || n_min > n_max)
    throw std::invalid_argument("empty figure grid");
  std::vector<RatioPoint> points;
  for (const double load : loads) {
    for (const std::int64_t mss : mss_list) {
      RatioPoint point{};
      point.load = load;
      point.mss = mss;
      double ratio_sum = 0.0;
      double tdm_sum = 0.0;
      double h2_sum = 0.0;
      int feasible_count = 0;
      for (int n = n_min; n <= n_max; ++n) {
        try {
          const sizing::WorkloadParams params(load, n, mss);
          const double tdm_raw =
              sizing::object_size(params, sizing::DelayModel::TdmVacation)
                  .theta_raw;
          const double h2_raw =
              sizing::object_size(params, sizing::DelayModel::H2).theta_raw;
          ratio_sum += sizing::size_ratio(params);
          tdm_sum += tdm_raw;
          h2_sum += h2_raw;
          ++feasible_count;
        } catch (const sizing::infeasible_error&) {
          ++point.infeasible_count;
        }
      }
      if (feasible_count == 0)
        throw sizing::infeasible_error(
            "size ratio undefined: every N in [" + std::to_string(n_min) +
                ", " + std::to_string(n_max) + "] is infeasible at load " +
                format_real(load),
            0, 0.0);
      point.mean_of_ratios = ratio_sum / static_cast<double>(feasible_count);
      point.ratio_of_means = tdm_sum / h2_sum;
      points.push_back(point);
    }
  }
  return points;
}

std::vector<SeriesPoint> ratio_series(const std::vector<RatioPoint>& points) {
  std::vector<SeriesPoint> series;
  series.reserve(points.size() * 2);
  for (const RatioPoint& point : points) {
    const std::string suffix = "_mss" + format_int(point.mss);
    series.push_back({point.load, "mean_of_ratios" + suffix,
                      point.mean_of_ratios});
    series.push_back({point.load, "ratio_of_means" + suffix,
                      point.ratio_of_means});
  }
  return series;
}

}  // namespace objsize::sweep
