#include "doctest.h"
#include "objsize/schedule.hpp"
#include "objsize/sizing.hpp"
#include "support/test_util.hpp"

using namespace objsize::sim;
using testutil::rel_err;

TEST_CASE("rr_schedule: hand-enumerated schedules") {
  const RoundRobinSchedule lone = rr_schedule(1, 5, 1.0);
  CHECK(lone.completion == std::vector<double>{5.0});
  CHECK(lone.waiting == std::vector<double>{0.0});

  const RoundRobinSchedule three = rr_schedule(3, 2, 1.0);
  CHECK(three.completion == std::vector<double>{4.0, 5.0, 6.0});
  CHECK(three.waiting == std::vector<double>{2.0, 3.0, 4.0});
  CHECK(three.mean_waiting() == 3.0);

  const RoundRobinSchedule half = rr_schedule(2, 1, 0.5);
  CHECK(half.waiting == std::vector<double>{0.0, 0.5});
  CHECK(half.mean_waiting() == 0.25);
  CHECK(half.mean_waiting() == objsize::sizing::rr_wait(2, 1.0, 0.5));
}

TEST_CASE("rr_schedule rejects degenerate inputs") {
  CHECK_THROWS_AS(rr_schedule(0, 1, 1.0), std::domain_error);
  CHECK_THROWS_AS(rr_schedule(1, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rr_schedule(1, 1, 0.0), std::domain_error);
}

TEST_CASE("rr_schedule agrees with the closed form on the full grid") {
  for (std::int64_t users = 1; users <= 50; ++users) {
    for (std::int64_t packets = 1; packets <= 50; ++packets) {
      for (const double slot : {0.5, 1.0, 2.0}) {
        const double oracle = rr_schedule(users, packets, slot).mean_waiting();
        const double closed = objsize::sizing::rr_wait(
            users, static_cast<double>(packets), slot);
        if (closed == 0.0)
          CHECK(oracle == 0.0);
        else
          CHECK(rel_err(oracle, closed) <= 1e-12);
      }
    }
  }
}

TEST_CASE("per-user completion follows the cyclic pattern") {
  // Stream i of m finishes its last packet at ((n-1)m + i) * slot.
  const std::int64_t users = 7, packets = 4;
  const double slot = 2.0;
  const RoundRobinSchedule schedule = rr_schedule(users, packets, slot);
  for (std::int64_t i = 1; i <= users; ++i) {
    const double expected =
        ((packets - 1.0) * static_cast<double>(users) + i) * slot;
    CHECK(schedule.completion[static_cast<std::size_t>(i - 1)] == expected);
  }
}
