#include <stdexcept>

#include "doctest.h"
#include "objsize/queueing.hpp"
#include "objsize/sizing.hpp"
#include "support/test_util.hpp"

using namespace objsize::sizing;
namespace queueing = objsize::queueing;
using testutil::rel_err;

TEST_CASE("solve_users_raw: spot values and the delay-equality it encodes") {
  CHECK(rel_err(solve_users_raw(0.01, 2), 297.0) <= 1e-12);
  CHECK(rel_err(solve_users_raw(0.1, 2), 27.0) <= 1e-12);
  CHECK(rel_err(solve_users_raw(0.05, 9), 19.0 / 3.6) <= 1e-12);
  CHECK_THROWS_AS(solve_users_raw(0.0, 2), std::domain_error);
  CHECK_THROWS_AS(solve_users_raw(1.0, 2), std::domain_error);
  CHECK_THROWS_AS(solve_users_raw(0.1, 1), std::domain_error);

  // tdm_wait at the solved user count equals the M/H2/1 delay.
  for (const double load : {0.01, 0.05, 0.1}) {
    for (int n = 2; n <= 9; ++n) {
      const double users = solve_users_raw(load, n);
      CHECK(rel_err(queueing::tdm_wait(load, users),
                    queueing::h2_wait(queueing::PageProfile(load, n))) <=
            1e-12);
    }
  }
}

TEST_CASE("integerize_users: ceiling") {
  CHECK(integerize_users(297.0) == 297);
  CHECK(integerize_users(5.2778) == 6);
  CHECK(integerize_users(2.5) == 3);
  CHECK(integerize_users(0.1) == 1);
  CHECK_THROWS_AS(integerize_users(0.0), std::domain_error);
  CHECK_THROWS_AS(integerize_users(-3.0), std::domain_error);
}

TEST_CASE("packets_for_size: ceiling on segment boundaries") {
  CHECK(packets_for_size(0.0, 1460) == 0);
  CHECK(packets_for_size(1460.0, 1460) == 1);
  CHECK(packets_for_size(1470.0, 1460) == 2);
  CHECK(packets_for_size(100.0, 536) == 1);
  CHECK_THROWS_AS(packets_for_size(-1.0, 1460), std::domain_error);
  CHECK_THROWS_AS(packets_for_size(10.0, 0), std::domain_error);
}

TEST_CASE("rr_wait: closed form against hand-enumerated schedules") {
  CHECK(rr_wait(1, 7.0, 2.0) == 0.0);  // a lone user never waits
  // m=2, n=1, slot=1: completions 1,2; service 1; waits 0,1; mean 0.5.
  CHECK(rr_wait(2, 1.0, 1.0) == 0.5);
  // m=3, n=2, slot=1: completions 4,5,6; service 2; waits 2,3,4; mean 3.
  CHECK(rr_wait(3, 2.0, 1.0) == 3.0);
  CHECK_THROWS_AS(rr_wait(0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rr_wait(2, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rr_wait(2, 1.0, 0.0), std::domain_error);
}

TEST_CASE("n_for_tdm: spot values and the round-trip it must satisfy") {
  CHECK(rel_err(n_for_tdm(27, 0.1), 50.4 / 46.8) <= 1e-12);
  CHECK(rel_err(n_for_tdm(2, 1e-9), 1.5) <= 1e-6);  // limit (1+2)/2
  CHECK_THROWS_AS(n_for_tdm(1, 0.1), infeasible_error);
  CHECK_THROWS_AS(n_for_tdm(2, 1.0), std::domain_error);

  for (const double load : {0.01, 0.05, 0.1, 0.3, 0.5}) {
    for (const std::int64_t users : {2, 3, 6, 27, 297, 500}) {
      const double packets = n_for_tdm(users, load);
      CHECK(rel_err(rr_wait(users, packets, 1.0),
                    queueing::tdm_wait(load, static_cast<double>(users))) <=
            1e-12);
    }
  }
}

TEST_CASE("n_for_h2: spot values, feasibility bound, round-trip") {
  CHECK(rel_err(n_for_h2(297, 2), 592.0 / 1175.0) <= 1e-12);
  CHECK(rel_err(n_for_h2(3, 8), 112.0 / 143.0) <= 1e-12);
  CHECK_THROWS_AS(n_for_h2(3, 1), std::domain_error);

  // users = 2 at N = 2 sits below the bound 1 + (N+1)^2/(2N(N-1)) = 3.25.
  try {
    n_for_h2(2, 2);
    FAIL("expected infeasible_error");
  } catch (const infeasible_error& e) {
    CHECK(e.users() == 2);
    CHECK(e.min_users() == doctest::Approx(3.25));
  }

  // Round trip with the service-time slot tau = 2 / (n (N+1) lambda).
  for (const double load : {0.01, 0.1, 0.5}) {
    for (int n = 2; n <= 9; ++n) {
      for (const std::int64_t users : {3, 4, 10, 100, 500}) {
        const double bound = 1.0 + (n + 1.0) * (n + 1.0) / (2.0 * n * (n - 1.0));
        if (static_cast<double>(users) <= bound) continue;
        const double packets = n_for_h2(users, n);
        const double slot = 2.0 / (packets * (n + 1.0) * load);
        CHECK(rel_err(rr_wait(users, packets, slot),
                      queueing::h2_wait(queueing::PageProfile(load, n))) <=
              1e-12);
      }
    }
  }
}

TEST_CASE("object_size: reference table spot checks") {
  // (rho, N, mss, model) -> theta, straight from the reference tables.
  CHECK(object_size({0.01, 2, 1460}, DelayModel::TdmVacation).theta == 1470);
  CHECK(object_size({0.05, 9, 1460}, DelayModel::H2).theta == 848);
  CHECK(object_size({0.1, 8, 536}, DelayModel::H2).theta == 420);

  const SizingResult full = object_size({0.05, 9, 1460}, DelayModel::H2);
  CHECK(rel_err(full.m_raw, 19.0 / 3.6) <= 1e-12);
  CHECK(full.m == 6);
  CHECK(rel_err(full.n, 360.0 / 620.0) <= 1e-12);
  CHECK(full.theta_raw == full.n * 1460.0);
  CHECK(full.theta == 848);

  CHECK_THROWS_AS(object_size({0.6, 2, 1460}, DelayModel::H2),
                  infeasible_error);
}

TEST_CASE("object_size: theta_raw scales linearly in mss") {
  for (const double load : {0.01, 0.1}) {
    for (int n = 2; n <= 9; ++n) {
      for (const DelayModel model :
           {DelayModel::TdmVacation, DelayModel::H2}) {
        const double small = object_size({load, n, 536}, model).theta_raw;
        const double large = object_size({load, n, 1460}, model).theta_raw;
        CHECK(rel_err(large / small, 1460.0 / 536.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("object_size: theta grows with the load on the reference grid") {
  for (int n = 2; n <= 9; ++n) {
    for (const std::int64_t mss : {std::int64_t{1460}, std::int64_t{536}}) {
      for (const DelayModel model :
           {DelayModel::TdmVacation, DelayModel::H2}) {
        const std::int64_t low = object_size({0.01, n, mss}, model).theta;
        const std::int64_t mid = object_size({0.05, n, mss}, model).theta;
        const std::int64_t high = object_size({0.1, n, mss}, model).theta;
        CHECK(low <= mid);
        CHECK(mid <= high);
      }
    }
  }
}

TEST_CASE("size_ratio: mss-invariant by construction, near 2 at light load") {
  const double r1460 = size_ratio({0.01, 2, 1460});
  const double r536 = size_ratio({0.01, 2, 536});
  CHECK(r1460 == r536);
  CHECK(rel_err(r1460, 1.998) <= 1e-3);

  // Matches the quotient of the unrounded object sizes.
  const WorkloadParams params{0.1, 5, 1460};
  const double via_theta =
      object_size(params, DelayModel::TdmVacation).theta_raw /
      object_size(params, DelayModel::H2).theta_raw;
  CHECK(rel_err(size_ratio(params), via_theta) <= 1e-12);

  CHECK_THROWS_AS(size_ratio({0.6, 2, 1460}), infeasible_error);
}

TEST_CASE("round_half_up: byte rounding rule") {
  CHECK(round_half_up(1469.86) == 1470);
  CHECK(round_half_up(1749.5) == 1750);
  CHECK(round_half_up(941.875) == 942);
  CHECK(round_half_up(2.0) == 2);
  CHECK(round_half_up(0.4999) == 0);
}

TEST_CASE("workload params validate their ranges") {
  CHECK_THROWS_AS(WorkloadParams(0.0, 2, 1460), std::invalid_argument);
  CHECK_THROWS_AS(WorkloadParams(1.0, 2, 1460), std::invalid_argument);
  CHECK_THROWS_AS(WorkloadParams(0.1, 1, 1460), std::invalid_argument);
  CHECK_THROWS_AS(WorkloadParams(0.1, 2, 0), std::invalid_argument);
  CHECK_NOTHROW(WorkloadParams(0.1, 2, 1));
}

TEST_CASE("delay model tags round-trip") {
  CHECK(to_string(DelayModel::TdmVacation) == "tdm");
  CHECK(to_string(DelayModel::H2) == "h2");
  CHECK(delay_model_from_string("tdm") == DelayModel::TdmVacation);
  CHECK(delay_model_from_string("h2") == DelayModel::H2);
  CHECK_THROWS_AS(delay_model_from_string("fdm"), std::invalid_argument);
}
