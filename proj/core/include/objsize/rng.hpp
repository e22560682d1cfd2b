#pragma once

// Reproducible random streams for the simulator.
//
// A RngStream is an std::mt19937_64 (fully specified by ISO C++, so output
// is identical on every conforming platform) whose seed is derived from a
// master seed and a stream id via splitmix64. Independent substreams let
// the simulator draw arrivals, service times, vacations and branch picks
// from separate sequences, so adding or removing draws in one stream never
// perturbs the others.

#include <cmath>
#include <cstdint>
#include <random>

namespace objsize::sim {

// Named substreams used by the simulator.
enum class StreamId : std::uint64_t {
  Arrivals = 0,
  Service = 1,
  Vacations = 2,
  Branch = 3,
  Generic = 4,
};

class RngStream {
 public:
  // Seeds the engine with the (stream+1)-th splitmix64 output of `seed`.
  RngStream(std::uint64_t seed, StreamId stream);
  explicit RngStream(std::uint64_t seed) : RngStream(seed, StreamId::Generic) {}

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

  // Inverse-CDF exponential: -ln(U)/rate with U = 1 - uniform01() in (0, 1].
  double exponential(double rate) {
    const double u = 1.0 - uniform01();
    return -std::log(u) / rate;
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace objsize::sim
