#pragma once

// Closed-form mean queueing delays for M/G/1-type systems, TDM/FDM
// multiplexing, and the two-branch hyper-exponential service model.
//
// Conventions:
//  - All waits are measured arrival -> start of service (the customer's own
//    service time is excluded).
//  - Generic formulas are unit-agnostic; the TDM/FDM formulas are in slot
//    units with the slot length fixed to 1.
//  - Every function is a pure function of its arguments and therefore safe
//    to call concurrently.
//
// Invalid type parameters throw std::invalid_argument; operation
// preconditions (e.g. utilization >= 1) throw std::domain_error.

namespace objsize::queueing {

// First and second raw moments of a nonnegative random variable.
// Requires mean > 0, second_moment > 0 and second_moment >= mean^2.
struct ServiceMoments {
  ServiceMoments(double mean, double second_moment);

  double mean;
  double second_moment;
};

// First and second raw moments of the server vacation time.
struct VacationSpec {
  VacationSpec(double mean, double second_moment);

  double mean;
  double second_moment;
};

// Two-branch hyper-exponential law: branch i is selected with probability
// p_i, then the value is drawn from Exponential(rate_i). Requires
// p1 + p2 = 1 (within 1e-12), p1, p2 in [0, 1] and both rates > 0; a branch
// with probability 0 is permitted and simply never selected.
struct HyperExp2 {
  HyperExp2(double p1, double rate1, double p2, double rate2);

  double p1;
  double rate1;
  double p2;
  double rate2;
};

// A web page workload: Poisson request rate of the static page plus the
// number of embedded objects fetched after it. embedded_count >= 2 keeps
// the M/H2/1 delay finite (it diverges at a single embedded object).
struct PageProfile {
  PageProfile(double request_rate, int embedded_count);

  double request_rate;
  int embedded_count;
};

// Pollaczek-Khinchin mean queueing delay of M/G/1:
//   W = lambda E(S^2) / (2 (1 - rho)),  rho = lambda E(S).
double pk_wait(double arrival_rate, const ServiceMoments& s);

// M/D/1 special case, deterministic service at rate mu:
//   W = rho / (2 mu (1 - rho)).
double md1_wait(double arrival_rate, double service_rate);

// Mean residual time seen by an arrival in M/G/1 with server vacations:
//   R = lambda E(S^2)/2 + (1 - rho) E(V^2) / (2 E(V)).
double vacation_residual(double arrival_rate, const ServiceMoments& s,
                         const VacationSpec& v);

// Mean queueing delay of M/G/1 with (multiple) server vacations:
//   W = lambda E(S^2) / (2 (1 - rho)) + E(V^2) / (2 E(V)).
double mg1_vacation_wait(double arrival_rate, const ServiceMoments& s,
                         const VacationSpec& v);

// Mean per-packet delay when `streams` traffic streams of total load
// `total_rate` are frequency-division multiplexed, in slot units:
//   W_FDM = load * streams / (2 (1 - load)).
// `streams` may be fractional (it is the unknown when sizing a system).
double fdm_wait(double total_rate, double streams);

// Time-division multiplexing adds the half-frame synchronization delay:
//   W_TDM = W_FDM + streams / 2 = streams / (2 (1 - load)).
double tdm_wait(double total_rate, double streams);

// Branch parameters of the service law for a page with embedded_count >= 1:
// the static object is served at the base rate, the embedded ones at
// embedded_count times it, weighted 1 : embedded_count.
HyperExp2 h2_branches(double request_rate, int embedded_count);

// Same, from a validated PageProfile.
HyperExp2 h2_from_page(const PageProfile& page);

// Raw moments of a two-branch hyper-exponential:
//   E(S) = sum p_i / rate_i,  E(S^2) = 2 sum p_i / rate_i^2.
ServiceMoments h2_moments(const HyperExp2& h);

// Mean queueing delay of the M/H2/1 model for a page profile:
//   W_H = (N + 1) / (lambda (N - 1) N),  N = embedded_count.
// Equals pk_wait over h2_moments(h2_from_page(page)).
double h2_wait(const PageProfile& page);

}  // namespace objsize::queueing
