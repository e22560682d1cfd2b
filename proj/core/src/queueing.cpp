#include "objsize/queueing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace objsize::queueing {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite(double v) { return std::isfinite(v); }

// Stability gate shared by the M/G/1-style formulas.
double utilization_or_throw(double arrival_rate, double service_mean) {
  if (arrival_rate < 0 || !finite(arrival_rate))
    throw std::domain_error("arrival rate must be nonnegative and finite");
  const double rho = arrival_rate * service_mean;
  if (rho >= 1.0)
    throw std::domain_error("unstable queue: utilization " +
                            std::to_string(rho) + " >= 1");
  return rho;
}

void check_load(double load) {
  if (!(load > 0.0) || !(load < 1.0) || !finite(load))
    throw std::domain_error("load must lie in (0, 1), got " +
                            std::to_string(load));
}

}  // namespace

namespace {

// Dispersion bound E(X^2) >= E(X)^2 with one-ulp-scale slack so that
// deterministic moments (exact equality) survive rounding of mean^2.
bool dispersion_ok(double mean, double second_moment) {
  return second_moment >= mean * mean * (1.0 - 1e-12);
}

}  // namespace

ServiceMoments::ServiceMoments(double mean, double second_moment)
    : mean(mean), second_moment(second_moment) {
  require(finite(mean) && mean > 0.0, "service mean must be > 0");
  require(finite(second_moment) && second_moment > 0.0,
          "service second moment must be > 0");
  require(dispersion_ok(mean, second_moment),
          "service second moment must be >= mean^2");
}

VacationSpec::VacationSpec(double mean, double second_moment)
    : mean(mean), second_moment(second_moment) {
  require(finite(mean) && mean > 0.0, "vacation mean must be > 0");
  require(finite(second_moment) && dispersion_ok(mean, second_moment),
          "vacation second moment must be >= mean^2");
}

HyperExp2::HyperExp2(double p1, double rate1, double p2, double rate2)
    : p1(p1), rate1(rate1), p2(p2), rate2(rate2) {
  require(p1 >= 0.0 && p1 <= 1.0 && p2 >= 0.0 && p2 <= 1.0,
          "branch probabilities must lie in [0, 1]");
  require(std::abs(p1 + p2 - 1.0) <= 1e-12,
          "branch probabilities must sum to 1");
  require(finite(rate1) && rate1 > 0.0 && finite(rate2) && rate2 > 0.0,
          "branch rates must be > 0");
}

PageProfile::PageProfile(double request_rate, int embedded_count)
    : request_rate(request_rate), embedded_count(embedded_count) {
  require(finite(request_rate) && request_rate > 0.0,
          "request rate must be > 0");
  require(embedded_count >= 2, "embedded object count must be >= 2");
}

double pk_wait(double arrival_rate, const ServiceMoments& s) {
  const double rho = utilization_or_throw(arrival_rate, s.mean);
  return arrival_rate * s.second_moment / (2.0 * (1.0 - rho));
}

double md1_wait(double arrival_rate, double service_rate) {
  if (!(service_rate > 0.0))
    throw std::domain_error("service rate must be > 0");
  // Deterministic service: E(S) = 1/mu, E(S^2) = E(S)^2.
  const double mean = 1.0 / service_rate;
  return pk_wait(arrival_rate, ServiceMoments(mean, mean * mean));
}

double vacation_residual(double arrival_rate, const ServiceMoments& s,
                         const VacationSpec& v) {
  const double rho = utilization_or_throw(arrival_rate, s.mean);
  return arrival_rate * s.second_moment / 2.0 +
         (1.0 - rho) * v.second_moment / (2.0 * v.mean);
}

double mg1_vacation_wait(double arrival_rate, const ServiceMoments& s,
                         const VacationSpec& v) {
  return pk_wait(arrival_rate, s) + v.second_moment / (2.0 * v.mean);
}

double fdm_wait(double total_rate, double streams) {
  check_load(total_rate);
  if (!(streams >= 1.0))
    throw std::domain_error("stream count must be >= 1");
  return total_rate * streams / (2.0 * (1.0 - total_rate));
}

double tdm_wait(double total_rate, double streams) {
  // Built as the FDM delay plus the half-frame synchronization delay so
  // that the m/2 gap between the two is exact.
  return fdm_wait(total_rate, streams) + streams / 2.0;
}

HyperExp2 h2_branches(double request_rate, int embedded_count) {
  require(finite(request_rate) && request_rate > 0.0,
          "request rate must be > 0");
  require(embedded_count >= 1, "embedded object count must be >= 1");
  const double n = embedded_count;
  return HyperExp2(1.0 / (n + 1.0), request_rate, n / (n + 1.0),
                   n * request_rate);
}

HyperExp2 h2_from_page(const PageProfile& page) {
  return h2_branches(page.request_rate, page.embedded_count);
}

ServiceMoments h2_moments(const HyperExp2& h) {
  const double mean = h.p1 / h.rate1 + h.p2 / h.rate2;
  const double second =
      2.0 * (h.p1 / (h.rate1 * h.rate1) + h.p2 / (h.rate2 * h.rate2));
  return ServiceMoments(mean, second);
}

double h2_wait(const PageProfile& page) {
  const double n = page.embedded_count;
  const double lambda = page.request_rate;
  return (n + 1.0) / (lambda * (n - 1.0) * n);
}

}  // namespace objsize::queueing
