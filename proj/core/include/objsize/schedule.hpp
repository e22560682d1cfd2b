#pragma once

// Brute-force construction of the slotted round-robin schedule: `users`
// streams each need `packets` packets, the server cycles over the streams
// serving one packet per slot. Serves as the independent oracle for the
// closed-form round-robin waiting time.

#include <cstdint>
#include <vector>

namespace objsize::sim {

struct RoundRobinSchedule {
  // Index u holds stream u+1 (streams are served in 1..users order).
  std::vector<double> completion;  // time the stream's last packet finishes
  std::vector<double> waiting;     // completion - packets * slot

  double mean_waiting() const;
};

// Walks every slot of the schedule; O(users * packets).
RoundRobinSchedule rr_schedule(std::int64_t users, std::int64_t packets,
                               double slot);

}  // namespace objsize::sim
