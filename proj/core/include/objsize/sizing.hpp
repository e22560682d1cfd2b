#pragma once

// Solvers for the multiple-access sizing chain: number of simultaneous
// users, per-object packet counts under a round-robin schedule, and the
// web object size theta that makes the round-robin mean waiting time equal
// a target queueing delay (TDM-with-vacations or M/H2/1).
//
// All functions are pure and thread-safe.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace objsize::sizing {

// Which target delay the object size must meet.
enum class DelayModel {
  TdmVacation,  // round-robin wait == TDM (M/D/1 with vacations) delay
  H2,           // round-robin wait == M/H2/1 delay
};

// Canonical short tags used by the CLI and in CSV output.
std::string_view to_string(DelayModel model);
DelayModel delay_model_from_string(std::string_view tag);

// Sizing inputs: dimensionless link load (the multiplexed total rate),
// embedded object count N >= 2, and the transport segment size in bytes.
struct WorkloadParams {
  WorkloadParams(double load, int embedded_count, std::int64_t mss);

  double load;
  int embedded_count;
  std::int64_t mss;
};

// Full output of the sizing pipeline.
struct SizingResult {
  double m_raw;       // users solving W_TDM == W_H, before integerization
  std::int64_t m;     // ceil(m_raw)
  double n;           // packets per object (kept continuous)
  double theta_raw;   // n * mss, bytes
  std::int64_t theta; // theta_raw rounded half-up to whole bytes
};

// Raised when a packet-count equation has no positive solution for the
// given integer user count; carries the violated constraint.
class infeasible_error : public std::domain_error {
 public:
  infeasible_error(std::string what, std::int64_t users, double min_users);

  std::int64_t users() const { return users_; }
  // Strict lower bound on the user count for feasibility.
  double min_users() const { return min_users_; }

 private:
  std::int64_t users_;
  double min_users_;
};

// Users m making the TDM delay equal the M/H2/1 delay:
//   m = 2 (1 - load) (N + 1) / (load (N - 1) N).
double solve_users_raw(double load, int embedded_count);

// Integer user count used downstream; the ceiling reproduces the
// reference sizing tables.
std::int64_t integerize_users(double users_raw);

// Packets needed for an object of theta bytes: ceil(theta / mss).
std::int64_t packets_for_size(double theta, std::int64_t mss);

// Mean round-robin waiting time for `users` streams of `packets` packets
// served one packet per slot of length `slot`:
//   W_R = (users - 1) (2 packets - 1) slot / 2.
// `packets` may be fractional (it is the unknown when sizing).
double rr_wait(std::int64_t users, double packets, double slot);

// Packets per object making the round-robin wait (slot = 1) equal the TDM
// delay. Infeasible for users < 2.
double n_for_tdm(std::int64_t users, double load);

// Packets per object making the round-robin wait equal the M/H2/1 delay,
// with the slot tied to the service time (slot = E(S) / n). Infeasible
// when users <= 1 + (N+1)^2 / (2 N (N-1)).
double n_for_h2(std::int64_t users, int embedded_count);

// End-to-end sizing: solve users, integerize, pick the packet equation for
// `model`, and scale by mss. Propagates infeasible_error.
SizingResult object_size(const WorkloadParams& params, DelayModel model);

// theta_raw(TdmVacation) / theta_raw(H2) from the unrounded pipeline; the
// segment size cancels exactly.
double size_ratio(const WorkloadParams& params);

// Nearest integer with halves rounded up (the byte-rounding rule).
std::int64_t round_half_up(double value);

}  // namespace objsize::sizing
