#include "objsize/schedule.hpp"

#include <numeric>
#include <stdexcept>

namespace objsize::sim {

double RoundRobinSchedule::mean_waiting() const {
  if (waiting.empty()) return 0.0;
  const double total =
      std::accumulate(waiting.begin(), waiting.end(), 0.0);
  return total / static_cast<double>(waiting.size());
}

RoundRobinSchedule rr_schedule(std::int64_t users, std::int64_t packets,
                               double slot) {
  if (users < 1) throw std::domain_error("user count must be >= 1");
  if (packets < 1) throw std::domain_error("packet count must be >= 1");
  if (!(slot > 0.0)) throw std::domain_error("slot length must be > 0");

  RoundRobinSchedule schedule;
  schedule.completion.assign(static_cast<std::size_t>(users), 0.0);
  schedule.waiting.assign(static_cast<std::size_t>(users), 0.0);

  std::vector<std::int64_t> remaining(static_cast<std::size_t>(users),
                                      packets);
  double clock = 0.0;
  std::int64_t unfinished = users;
  while (unfinished > 0) {
    for (std::int64_t u = 0; u < users; ++u) {
      auto& left = remaining[static_cast<std::size_t>(u)];
      if (left == 0) continue;
      clock += slot;
      if (--left == 0) {
        schedule.completion[static_cast<std::size_t>(u)] = clock;
        --unfinished;
      }
    }
  }

  // Waiting excludes the stream's own aggregate service time.
  const double service = static_cast<double>(packets) * slot;
  for (std::int64_t u = 0; u < users; ++u)
    schedule.waiting[static_cast<std::size_t>(u)] =
        schedule.completion[static_cast<std::size_t>(u)] - service;
  return schedule;
}

}  // namespace objsize::sim
