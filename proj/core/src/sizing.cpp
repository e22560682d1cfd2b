#include "objsize/sizing.hpp"

#include <cmath>

namespace objsize::sizing {

namespace {

void check_load(double load) {
  if (!(load > 0.0) || !(load < 1.0) || !std::isfinite(load))
    throw std::domain_error("load must lie in (0, 1), got " +
                            std::to_string(load));
}

void check_embedded(int embedded_count) {
  if (embedded_count < 2)
    throw std::domain_error("embedded object count must be >= 2, got " +
                            std::to_string(embedded_count));
}

}  // namespace

std::string_view to_string(DelayModel model) {
  switch (model) {
    case DelayModel::TdmVacation: return "tdm";
    case DelayModel::H2: return "h2";
  }
  throw std::invalid_argument("unknown delay model tag");
}

DelayModel delay_model_from_string(std::string_view tag) {
  if (tag == "tdm") return DelayModel::TdmVacation;
  if (tag == "h2") return DelayModel::H2;
  throw std::invalid_argument("unknown delay model '" + std::string(tag) +
                              "' (expected 'tdm' or 'h2')");
}

WorkloadParams::WorkloadParams(double load, int embedded_count,
                               std::int64_t mss)
    : load(load), embedded_count(embedded_count), mss(mss) {
  if (!(load > 0.0) || !(load < 1.0) || !std::isfinite(load))
    throw std::invalid_argument("load must lie in (0, 1)");
  if (embedded_count < 2)
    throw std::invalid_argument("embedded object count must be >= 2");
  if (mss < 1) throw std::invalid_argument("mss must be >= 1 byte");
}

infeasible_error::infeasible_error(std::string what, std::int64_t users,
                                   double min_users)
    : std::domain_error(std::move(what)), users_(users), min_users_(min_users) {}

double solve_users_raw(double load, int embedded_count) {
  check_load(load);
  check_embedded(embedded_count);
  const double n = embedded_count;
  return 2.0 * (1.0 - load) * (n + 1.0) / (load * (n - 1.0) * n);
}

std::int64_t integerize_users(double users_raw) {
  if (!(users_raw > 0.0) || !std::isfinite(users_raw))
    throw std::domain_error("user count must be > 0");
  return static_cast<std::int64_t>(std::ceil(users_raw));
}

std::int64_t packets_for_size(double theta, std::int64_t mss) {
  if (!(theta >= 0.0)) throw std::domain_error("object size must be >= 0");
  if (mss < 1) throw std::domain_error("mss must be >= 1 byte");
  return static_cast<std::int64_t>(
      std::ceil(theta / static_cast<double>(mss)));
}

double rr_wait(std::int64_t users, double packets, double slot) {
  if (users < 1) throw std::domain_error("user count must be >= 1");
  if (!(packets > 0.0)) throw std::domain_error("packet count must be > 0");
  if (!(slot > 0.0)) throw std::domain_error("slot length must be > 0");
  return (users - 1.0) * (2.0 * packets - 1.0) * slot / 2.0;
}

double n_for_tdm(std::int64_t users, double load) {
  check_load(load);
  if (users < 2)
    throw infeasible_error(
        "tdm packet count infeasible: users " + std::to_string(users) +
            " below the feasibility bound 2 (a lone user never waits)",
        users, 2.0);
  const double m = static_cast<double>(users);
  return ((1.0 - load) * (m - 1.0) + m) / (2.0 * (1.0 - load) * (m - 1.0));
}

double n_for_h2(std::int64_t users, int embedded_count) {
  check_embedded(embedded_count);
  const double n = embedded_count;
  const double m = static_cast<double>(users);
  const double denominator =
      2.0 * (m - 1.0) * (n - 1.0) * n - (n + 1.0) * (n + 1.0);
  if (denominator <= 0.0) {
    const double bound = 1.0 + (n + 1.0) * (n + 1.0) / (2.0 * n * (n - 1.0));
    throw infeasible_error(
        "h2 packet count infeasible: users " + std::to_string(users) +
            " at or below the feasibility bound 1 + (N+1)^2/(2N(N-1)) = " +
            std::to_string(bound) + " (denominator " +
            std::to_string(denominator) + " <= 0)",
        users, bound);
  }
  return (m - 1.0) * (n - 1.0) * n / denominator;
}

SizingResult object_size(const WorkloadParams& params, DelayModel model) {
  SizingResult result;
  result.m_raw = solve_users_raw(params.load, params.embedded_count);
  result.m = integerize_users(result.m_raw);
  result.n = model == DelayModel::TdmVacation
                 ? n_for_tdm(result.m, params.load)
                 : n_for_h2(result.m, params.embedded_count);
  result.theta_raw = result.n * static_cast<double>(params.mss);
  result.theta = round_half_up(result.theta_raw);
  return result;
}

double size_ratio(const WorkloadParams& params) {
  // theta_raw(tdm) / theta_raw(h2) with the common mss factor cancelled
  // before dividing, so the ratio is mss-invariant to the last bit.
  const std::int64_t users =
      integerize_users(solve_users_raw(params.load, params.embedded_count));
  return n_for_tdm(users, params.load) / n_for_h2(users, params.embedded_count);
}

std::int64_t round_half_up(double value) {
  return static_cast<std::int64_t>(std::floor(value + 0.5));
}

}  // namespace objsize::sizing
