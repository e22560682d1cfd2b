#pragma once

// Discrete-event simulation of a single-server FCFS queue with Poisson
// arrivals, an arbitrary service law, and an optional multiple-vacations
// policy: whenever the system empties the server leaves on a vacation and,
// if it returns to an empty system, immediately takes another.
//
// The simulator estimates the mean waiting time (arrival -> start of
// service) with a fixed departure-count stopping rule, a warm-up fraction
// discarded up front, and a batch-means standard error. A result is a
// deterministic function of its SimConfig: the same seed replays the same
// trace bit for bit.

#include <cstdint>
#include <optional>

#include "objsize/distribution.hpp"
#include "objsize/queueing.hpp"

namespace objsize::sim {

struct SimConfig {
  double arrival_rate = 0.0;
  Distribution service = Deterministic{1.0};
  std::optional<Distribution> vacation;  // absent = plain M/G/1

  std::int64_t target_departures = 1'000'000;
  double warmup_fraction = 0.1;  // in [0, 1)
  int batch_count = 30;          // >= 10
  std::uint64_t seed = 0;
};

struct SimResult {
  double mean_wait;
  double std_error;                // batch-means standard error
  std::int64_t departures_used;    // post-warmup observations in the estimate
  int batch_count;
  std::uint64_t seed;
};

// Throws std::domain_error when the config is unstable
// (arrival_rate * mean(service) >= 1) or its parameters are out of range.
void validate(const SimConfig& config);

SimResult simulate_queue(const SimConfig& config);

// M/H2/1 oracle: service law derived from the page profile, no vacations.
SimResult simulate_h2_queue(const queueing::PageProfile& page,
                            std::int64_t target_departures,
                            std::uint64_t seed);

}  // namespace objsize::sim
