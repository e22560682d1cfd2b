#pragma once

// Service/vacation time laws available to the simulator, with analytic
// moments and seeded sampling. Every variant's sample path is a pure
// function of the stream state, so the same seed always replays the same
// trace.

#include <variant>

#include "objsize/queueing.hpp"
#include "objsize/rng.hpp"

namespace objsize::sim {

struct Deterministic {
  double value;  // > 0
};

struct Exponential {
  double rate;  // > 0
};

struct Hyper2 {
  queueing::HyperExp2 law;
};

using Distribution = std::variant<Deterministic, Exponential, Hyper2>;

// Throws std::invalid_argument when the variant parameters are invalid
// (HyperExp2 validates itself at construction).
void validate(const Distribution& dist);

// Analytic first/second moments of the law.
queueing::ServiceMoments moments(const Distribution& dist);

double mean(const Distribution& dist);

// One draw, consuming randomness from `stream` (branch pick and value for
// a Hyper2 come from the same stream).
double sample(const Distribution& dist, RngStream& stream);

// One draw with the Hyper2 branch pick taken from a dedicated stream, so
// the value stream advances exactly once per draw regardless of branch.
double sample(const Distribution& dist, RngStream& value_stream,
              RngStream& branch_stream);

}  // namespace objsize::sim
