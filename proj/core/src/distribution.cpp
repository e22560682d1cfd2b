#include "objsize/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace objsize::sim {

namespace {

struct Validate {
  void operator()(const Deterministic& d) const {
    if (!(d.value > 0.0) || !std::isfinite(d.value))
      throw std::invalid_argument("deterministic value must be > 0");
  }
  void operator()(const Exponential& e) const {
    if (!(e.rate > 0.0) || !std::isfinite(e.rate))
      throw std::invalid_argument("exponential rate must be > 0");
  }
  void operator()(const Hyper2&) const {}  // HyperExp2 ctor already checked
};

double hyper2_draw(const queueing::HyperExp2& law, RngStream& value_stream,
                   RngStream& branch_stream) {
  const double rate =
      branch_stream.uniform01() < law.p1 ? law.rate1 : law.rate2;
  return value_stream.exponential(rate);
}

}  // namespace

void validate(const Distribution& dist) { std::visit(Validate{}, dist); }

queueing::ServiceMoments moments(const Distribution& dist) {
  return std::visit(
      [](const auto& d) -> queueing::ServiceMoments {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Deterministic>) {
          return {d.value, d.value * d.value};
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return {1.0 / d.rate, 2.0 / (d.rate * d.rate)};
        } else {
          return queueing::h2_moments(d.law);
        }
      },
      dist);
}

double mean(const Distribution& dist) { return moments(dist).mean; }

double sample(const Distribution& dist, RngStream& stream) {
  return sample(dist, stream, stream);
}

double sample(const Distribution& dist, RngStream& value_stream,
              RngStream& branch_stream) {
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Deterministic>) {
          return d.value;
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return value_stream.exponential(d.rate);
        } else {
          return hyper2_draw(d.law, value_stream, branch_stream);
        }
      },
      dist);
}

}  // namespace objsize::sim
