#include "objsize/simulate.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace objsize::sim {

namespace {

// Single-run state machine. The server is always in exactly one of three
// states; ties between simultaneous events are broken in the order
// vacation-end, departure, arrival so traces are deterministic.
class Simulator {
 public:
  explicit Simulator(const SimConfig& config)
      : config_(config),
        arrivals_(config.seed, StreamId::Arrivals),
        service_(config.seed, StreamId::Service),
        vacations_(config.seed, StreamId::Vacations),
        branch_(config.seed, StreamId::Branch) {}

  SimResult run() {
    waits_.reserve(static_cast<std::size_t>(config_.target_departures));
    next_arrival_ = arrivals_.exponential(config_.arrival_rate);
    if (config_.vacation.has_value())
      begin_vacation();
    else
      state_ = State::Idle;

    while (static_cast<std::int64_t>(waits_.size()) <
           config_.target_departures)
      step();

    return summarize();
  }

 private:
  enum class State { Idle, Serving, OnVacation };

  void step() {
    const bool server_event_pending = state_ != State::Idle;
    // Vacation ends and departures win ties against arrivals.
    if (server_event_pending && server_event_time_ <= next_arrival_) {
      clock_ = server_event_time_;
      if (state_ == State::Serving)
        complete_service();
      else
        complete_vacation();
    } else {
      clock_ = next_arrival_;
      queue_.push_back(clock_);
      next_arrival_ = clock_ + arrivals_.exponential(config_.arrival_rate);
      if (state_ == State::Idle) start_service();
    }
  }

  void complete_service() {
    if (!queue_.empty()) {
      start_service();
    } else if (config_.vacation.has_value()) {
      begin_vacation();
    } else {
      state_ = State::Idle;
    }
  }

  void complete_vacation() {
    if (!queue_.empty())
      start_service();
    else
      begin_vacation();  // multiple vacations: leave again immediately
  }

  void start_service() {
    const double arrived_at = queue_.front();
    queue_.pop_front();
    waits_.push_back(clock_ - arrived_at);
    state_ = State::Serving;
    server_event_time_ = clock_ + sample(config_.service, service_, branch_);
  }

  void begin_vacation() {
    state_ = State::OnVacation;
    server_event_time_ = clock_ + sample(*config_.vacation, vacations_, branch_);
  }

  SimResult summarize() const {
    const std::int64_t total = static_cast<std::int64_t>(waits_.size());
    const std::int64_t warmup = static_cast<std::int64_t>(
        std::floor(config_.warmup_fraction * static_cast<double>(total)));
    const std::int64_t retained = total - warmup;
    const std::int64_t batch_size = retained / config_.batch_count;
    if (batch_size <= 0)
      throw std::runtime_error(
          "zero-departure batch: only " + std::to_string(retained) +
          " post-warmup departures for " + std::to_string(config_.batch_count) +
          " batches");
    const std::int64_t used = batch_size * config_.batch_count;

    std::vector<double> batch_means(
        static_cast<std::size_t>(config_.batch_count), 0.0);
    double total_wait = 0.0;
    for (std::int64_t b = 0; b < config_.batch_count; ++b) {
      double batch_sum = 0.0;
      const std::int64_t begin = warmup + b * batch_size;
      for (std::int64_t i = begin; i < begin + batch_size; ++i)
        batch_sum += waits_[static_cast<std::size_t>(i)];
      batch_means[static_cast<std::size_t>(b)] =
          batch_sum / static_cast<double>(batch_size);
      total_wait += batch_sum;
    }

    const double mean = total_wait / static_cast<double>(used);
    double variance = 0.0;
    for (const double bm : batch_means) variance += (bm - mean) * (bm - mean);
    variance /= static_cast<double>(config_.batch_count - 1);
    const double std_error =
        std::sqrt(variance / static_cast<double>(config_.batch_count));

    return SimResult{mean, std_error, used, config_.batch_count, config_.seed};
  }

  const SimConfig& config_;
  RngStream arrivals_;
  RngStream service_;
  RngStream vacations_;
  RngStream branch_;

  State state_ = State::Idle;
  double clock_ = 0.0;
  double next_arrival_ = 0.0;
  double server_event_time_ = 0.0;
  std::deque<double> queue_;   // arrival times, FCFS
  std::vector<double> waits_;  // one entry per started service
};

}  // namespace

void validate(const SimConfig& config) {
  if (!(config.arrival_rate > 0.0) || !std::isfinite(config.arrival_rate))
    throw std::domain_error("arrival rate must be > 0");
  validate(config.service);
  if (config.vacation.has_value()) validate(*config.vacation);
  const double rho = config.arrival_rate * mean(config.service);
  if (rho >= 1.0)
    throw std::domain_error("unstable queue: utilization " +
                            std::to_string(rho) + " >= 1");
  if (!(config.warmup_fraction >= 0.0) || !(config.warmup_fraction < 1.0))
    throw std::domain_error("warmup fraction must lie in [0, 1)");
  if (config.batch_count < 10)
    throw std::domain_error("batch count must be >= 10");
  if (config.target_departures <
      static_cast<std::int64_t>(config.batch_count) * 100)
    throw std::domain_error(
        "target departures must be >= 100 * batch count");
}

SimResult simulate_queue(const SimConfig& config) {
  validate(config);
  Simulator simulator(config);
  return simulator.run();
}

SimResult simulate_h2_queue(const queueing::PageProfile& page,
                            std::int64_t target_departures,
                            std::uint64_t seed) {
  SimConfig config;
  config.arrival_rate = page.request_rate;
  config.service = Hyper2{queueing::h2_from_page(page)};
  config.target_departures = target_departures;
  config.seed = seed;
  return simulate_queue(config);
}

}  // namespace objsize::sim
