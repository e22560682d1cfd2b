#include "objsize/rng.hpp"

namespace objsize::sim {

namespace {

// splitmix64 step (Steele, Lea, Flood 2014); the standard seed expander.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i <= stream; ++i) out = splitmix64(state);
  return out;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, StreamId stream)
    : engine_(substream_seed(seed, static_cast<std::uint64_t>(stream))) {}

}  // namespace objsize::sim
