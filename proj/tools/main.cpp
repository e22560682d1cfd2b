// objsize CLI: closed-form waits, user/object sizing, table and figure
// sweeps, the discrete-event simulator, and the simulation-vs-formula
// validation suite.
//
// Exit codes: 0 success, 2 usage error, 3 domain or infeasibility error,
// 4 I/O error, 5 validation tolerance failure.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "objsize/emit.hpp"
#include "objsize/format.hpp"
#include "objsize/queueing.hpp"
#include "objsize/schedule.hpp"
#include "objsize/simulate.hpp"
#include "objsize/sizing.hpp"
#include "objsize/sweep.hpp"

namespace {

namespace queueing = objsize::queueing;
namespace sizing = objsize::sizing;
namespace sim = objsize::sim;
namespace sweep = objsize::sweep;
using objsize::format_real;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;
constexpr int kExitValidation = 5;

// --rho and --lambda are exact synonyms (the load and the arrival rate are
// identified throughout the model); passing both with different values is
// a usage error.
class LoadOption {
 public:
  void attach(CLI::App& cmd, const std::string& doc) {
    rho_ = cmd.add_option("--rho", rho_value_, doc);
    lambda_ =
        cmd.add_option("--lambda", lambda_value_, doc + " (synonym of --rho)");
  }

  double value() const {
    const bool have_rho = rho_->count() > 0;
    const bool have_lambda = lambda_->count() > 0;
    if (!have_rho && !have_lambda)
      throw CLI::ValidationError("load", "--rho (or --lambda) is required");
    if (have_rho && have_lambda && rho_value_ != lambda_value_)
      throw CLI::ValidationError(
          "load", "--rho and --lambda are synonyms but got different values");
    return have_rho ? rho_value_ : lambda_value_;
  }

 private:
  CLI::Option* rho_ = nullptr;
  CLI::Option* lambda_ = nullptr;
  double rho_value_ = 0.0;
  double lambda_value_ = 0.0;
};

class LoadListOption {
 public:
  void attach(CLI::App& cmd, const std::string& doc) {
    rho_ = cmd.add_option("--rho", rho_values_, doc);
    lambda_ =
        cmd.add_option("--lambda", lambda_values_, doc + " (synonym of --rho)");
  }

  std::vector<double> values(std::vector<double> fallback) const {
    const bool have_rho = rho_->count() > 0;
    const bool have_lambda = lambda_->count() > 0;
    if (have_rho && have_lambda && rho_values_ != lambda_values_)
      throw CLI::ValidationError(
          "load", "--rho and --lambda are synonyms but got different values");
    if (have_rho) return rho_values_;
    if (have_lambda) return lambda_values_;
    return fallback;
  }

  CLI::Option* rho_option() const { return rho_; }
  CLI::Option* lambda_option() const { return lambda_; }

 private:
  CLI::Option* rho_ = nullptr;
  CLI::Option* lambda_ = nullptr;
  std::vector<double> rho_values_;
  std::vector<double> lambda_values_;
};

// Distribution spec strings: det:VALUE, exp:RATE, h2:LAMBDA,N (page form)
// or h2:P1,RATE1,P2,RATE2 (explicit branches).
sim::Distribution parse_distribution(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("distribution",
                               "expected TYPE:PARAMS, got '" + spec + "'");
  const std::string type = spec.substr(0, colon);
  std::vector<double> params;
  std::stringstream stream(spec.substr(colon + 1));
  std::string field;
  while (std::getline(stream, field, ',')) {
    try {
      std::size_t used = 0;
      params.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw CLI::ValidationError(
          "distribution", "bad numeric field '" + field + "' in '" + spec + "'");
    }
  }

  if (type == "det" && params.size() == 1) return sim::Deterministic{params[0]};
  if (type == "exp" && params.size() == 1) return sim::Exponential{params[0]};
  if (type == "h2" && params.size() == 2) {
    const int count = static_cast<int>(params[1]);
    if (count != params[1])
      throw CLI::ValidationError("distribution",
                                 "embedded count must be an integer");
    return sim::Hyper2{queueing::h2_branches(params[0], count)};
  }
  if (type == "h2" && params.size() == 4)
    return sim::Hyper2{
        queueing::HyperExp2(params[0], params[1], params[2], params[3])};
  throw CLI::ValidationError(
      "distribution",
      "expected det:VALUE, exp:RATE, h2:LAMBDA,N or h2:P1,R1,P2,R2, got '" +
          spec + "'");
}

struct ValidationCase {
  std::string label;
  sim::SimConfig config;
  double formula;
};

// The oracle-agreement grid: every service law crossed with every vacation
// law at four loads, plus the TDM construction and two page profiles.
std::vector<ValidationCase> oracle_agreement_grid(std::int64_t departures,
                                                  std::uint64_t seed) {
  const std::vector<std::pair<std::string, sim::Distribution>> services = {
      {"det", sim::Deterministic{1.0}},
      {"exp", sim::Exponential{1.0}},
      {"h2", sim::Hyper2{queueing::h2_branches(2.0 / 3.0, 2)}},  // unit mean
  };
  const std::vector<std::pair<std::string, std::optional<sim::Distribution>>>
      vacations = {
          {"none", std::nullopt},
          {"det", sim::Deterministic{0.5}},
          {"exp", sim::Exponential{2.0}},
      };

  std::vector<ValidationCase> cases;
  std::uint64_t index = 0;
  for (const double lambda : {0.1, 0.3, 0.5, 0.7}) {
    for (const auto& [service_name, service] : services) {
      for (const auto& [vacation_name, vacation] : vacations) {
        ValidationCase one;
        one.label = "lambda=" + format_real(lambda) +
                    " service=" + service_name + " vacation=" + vacation_name;
        one.config.arrival_rate = lambda;
        one.config.service = service;
        one.config.vacation = vacation;
        one.config.target_departures = departures;
        one.config.seed = seed + index++;
        const queueing::ServiceMoments s = sim::moments(service);
        if (vacation.has_value()) {
          const queueing::ServiceMoments v = sim::moments(*vacation);
          one.formula = queueing::mg1_vacation_wait(
              lambda, s, queueing::VacationSpec(v.mean, v.second_moment));
        } else {
          one.formula = queueing::pk_wait(lambda, s);
        }
        cases.push_back(std::move(one));
      }
    }
  }

  // TDM construction: arrivals lambda/m, deterministic service and vacation
  // of one m-slot frame; target is the TDM closed form.
  for (const double lambda : {0.3, 0.5}) {
    for (const double m : {2.0, 4.0}) {
      ValidationCase one;
      one.label =
          "tdm lambda=" + format_real(lambda) + " streams=" + format_real(m);
      one.config.arrival_rate = lambda / m;
      one.config.service = sim::Deterministic{m};
      one.config.vacation = sim::Deterministic{m};
      one.config.target_departures = departures;
      one.config.seed = seed + index++;
      one.formula = queueing::tdm_wait(lambda, m);
      cases.push_back(std::move(one));
    }
  }

  // M/H2/1 page profiles against the hyper-exponential closed form.
  for (const int n : {2, 9}) {
    const queueing::PageProfile page(0.1, n);
    ValidationCase one;
    one.label = "h2page lambda=0.1 n=" + std::to_string(n);
    one.config.arrival_rate = page.request_rate;
    one.config.service = sim::Hyper2{queueing::h2_from_page(page)};
    one.config.target_departures = departures;
    one.config.seed = seed + index++;
    one.formula = queueing::h2_wait(page);
    cases.push_back(std::move(one));
  }
  return cases;
}

int run_validate(std::int64_t departures, double tolerance,
                 std::uint64_t seed) {
  int failures = 0;

  // Schedule oracle: brute-force round-robin vs the closed form.
  {
    double worst = 0.0;
    for (std::int64_t m = 1; m <= 50; ++m) {
      for (std::int64_t n = 1; n <= 50; ++n) {
        for (const double slot : {0.5, 1.0, 2.0}) {
          const double oracle = sim::rr_schedule(m, n, slot).mean_waiting();
          const double closed = sizing::rr_wait(m, n, slot);
          const double scale = std::max(std::abs(closed), 1.0);
          worst = std::max(worst, std::abs(oracle - closed) / scale);
        }
      }
    }
    const bool ok = worst <= 1e-12;
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]")
              << " schedule-oracle m,n in [1,50]^2 tau in {0.5,1,2}"
                 " max_rel_err="
              << format_real(worst) << '\n';
  }

  for (const ValidationCase& one : oracle_agreement_grid(departures, seed)) {
    const sim::SimResult result = sim::simulate_queue(one.config);
    const double rel_err =
        std::abs(result.mean_wait - one.formula) / one.formula;
    const bool ok = rel_err <= tolerance;
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << ' ' << one.label
              << " sim=" << format_real(result.mean_wait)
              << " formula=" << format_real(one.formula)
              << " rel_err=" << format_real(rel_err) << '\n';
  }

  if (failures > 0) {
    std::cout << failures << " validation case(s) out of tolerance\n";
    return kExitValidation;
  }
  std::cout << "all validation cases within tolerance "
            << format_real(tolerance) << '\n';
  return kExitOk;
}

void print_sim_result(const sim::SimResult& result) {
  std::cout << "mean_wait = " << format_real(result.mean_wait) << '\n'
            << "std_error = " << format_real(result.std_error) << '\n'
            << "departures_used = " << result.departures_used << '\n'
            << "batch_count = " << result.batch_count << '\n'
            << "seed = " << result.seed << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Queueing-analysis toolkit: web object sizing under round-robin "
      "multiple access, with closed forms, sweeps and a simulation oracle"};
  app.require_subcommand(1);
  int exit_status = kExitOk;

  // ---- wait ---------------------------------------------------------------
  CLI::App* wait =
      app.add_subcommand("wait", "Mean queueing delay closed forms");
  wait->require_subcommand(1);

  LoadOption pk_lambda;
  double pk_mean = 0.0, pk_m2 = 0.0;
  {
    CLI::App* cmd = wait->add_subcommand("pk", "M/G/1 (Pollaczek-Khinchin)");
    pk_lambda.attach(*cmd, "arrival rate");
    cmd->add_option("--mean", pk_mean, "service mean E(S)")->required();
    cmd->add_option("--m2", pk_m2, "service second moment E(S^2)")->required();
    cmd->callback([&] {
      std::cout << format_real(queueing::pk_wait(pk_lambda.value(),
                                                 {pk_mean, pk_m2}))
                << '\n';
    });
  }

  LoadOption md1_lambda;
  double md1_mu = 0.0;
  {
    CLI::App* cmd = wait->add_subcommand("md1", "M/D/1 (deterministic service)");
    md1_lambda.attach(*cmd, "arrival rate");
    cmd->add_option("--mu", md1_mu, "service rate")->required();
    cmd->callback([&] {
      std::cout << format_real(queueing::md1_wait(md1_lambda.value(), md1_mu))
                << '\n';
    });
  }

  LoadOption mg1v_lambda;
  double mg1v_mean = 0.0, mg1v_m2 = 0.0, mg1v_vmean = 0.0, mg1v_vm2 = 0.0;
  {
    CLI::App* cmd =
        wait->add_subcommand("mg1v", "M/G/1 with multiple server vacations");
    mg1v_lambda.attach(*cmd, "arrival rate");
    cmd->add_option("--mean", mg1v_mean, "service mean E(S)")->required();
    cmd->add_option("--m2", mg1v_m2, "service second moment E(S^2)")->required();
    cmd->add_option("--vac-mean", mg1v_vmean, "vacation mean E(V)")->required();
    cmd->add_option("--vac-m2", mg1v_vm2, "vacation second moment E(V^2)")
        ->required();
    cmd->callback([&] {
      std::cout << format_real(queueing::mg1_vacation_wait(
                       mg1v_lambda.value(), {mg1v_mean, mg1v_m2},
                       {mg1v_vmean, mg1v_vm2}))
                << '\n';
    });
  }

  LoadOption fdm_load;
  double fdm_streams = 0.0;
  {
    CLI::App* cmd = wait->add_subcommand("fdm", "FDM per-packet delay (slots)");
    fdm_load.attach(*cmd, "total load in (0,1)");
    cmd->add_option("--m", fdm_streams, "number of multiplexed streams")
        ->required();
    cmd->callback([&] {
      std::cout << format_real(queueing::fdm_wait(fdm_load.value(),
                                                  fdm_streams))
                << '\n';
    });
  }

  LoadOption tdm_load;
  double tdm_streams = 0.0;
  {
    CLI::App* cmd = wait->add_subcommand("tdm", "TDM per-packet delay (slots)");
    tdm_load.attach(*cmd, "total load in (0,1)");
    cmd->add_option("--m", tdm_streams, "number of multiplexed streams")
        ->required();
    cmd->callback([&] {
      std::cout << format_real(queueing::tdm_wait(tdm_load.value(),
                                                  tdm_streams))
                << '\n';
    });
  }

  LoadOption h2_load;
  int h2_count = 0;
  {
    CLI::App* cmd = wait->add_subcommand("h2", "M/H2/1 delay for a page profile");
    h2_load.attach(*cmd, "page request rate");
    cmd->add_option("--n", h2_count, "embedded object count (>= 2)")
        ->required();
    cmd->callback([&] {
      std::cout << format_real(queueing::h2_wait(
                       queueing::PageProfile(h2_load.value(), h2_count)))
                << '\n';
    });
  }

  // ---- users ----------------------------------------------------------------
  LoadOption users_load;
  int users_count = 0;
  {
    CLI::App* cmd = app.add_subcommand(
        "users", "Simultaneous users making the TDM delay equal the M/H2/1 delay");
    users_load.attach(*cmd, "load in (0,1)");
    cmd->add_option("--n", users_count, "embedded object count (>= 2)")
        ->required();
    cmd->callback([&] {
      const double m_raw =
          sizing::solve_users_raw(users_load.value(), users_count);
      std::cout << "m_raw = " << format_real(m_raw)
                << ", m = " << sizing::integerize_users(m_raw) << '\n';
    });
  }

  // ---- size -----------------------------------------------------------------
  LoadOption size_load;
  int size_count = 0;
  std::int64_t size_mss = 1460;
  std::string size_model = "tdm";
  {
    CLI::App* cmd = app.add_subcommand(
        "size", "Web object size meeting the delay constraint");
    size_load.attach(*cmd, "load in (0,1)");
    cmd->add_option("--n", size_count, "embedded object count (>= 2)")
        ->required();
    cmd->add_option("--mss", size_mss, "segment size, bytes (default 1460)");
    cmd->add_option("--model", size_model, "delay model: tdm or h2")
        ->check(CLI::IsMember({"tdm", "h2"}));
    cmd->callback([&] {
      const sizing::SizingResult result = sizing::object_size(
          {size_load.value(), size_count, size_mss},
          sizing::delay_model_from_string(size_model));
      std::cout << "m_raw = " << format_real(result.m_raw) << '\n'
                << "m = " << result.m << '\n'
                << "n = " << format_real(result.n) << '\n'
                << "theta_raw = " << format_real(result.theta_raw) << '\n'
                << "theta = " << result.theta << '\n';
    });
  }

  // ---- sweep ----------------------------------------------------------------
  LoadListOption sweep_loads;
  int sweep_n_min = 2, sweep_n_max = 9;
  std::vector<std::int64_t> sweep_mss;
  std::vector<std::string> sweep_models;
  std::string sweep_preset, sweep_format = "csv", sweep_out;
  {
    CLI::App* cmd = app.add_subcommand(
        "sweep", "Object-size table over a (load, N, mss, model) grid");
    sweep_loads.attach(*cmd, "loads (default 0.01 0.05 0.1)");
    CLI::Option* n_min_opt =
        cmd->add_option("--n-min", sweep_n_min, "smallest N (default 2)");
    CLI::Option* n_max_opt =
        cmd->add_option("--n-max", sweep_n_max, "largest N (default 9)");
    CLI::Option* mss_opt = cmd->add_option(
        "--mss", sweep_mss, "segment sizes, bytes (default 1460 536)");
    CLI::Option* model_opt =
        cmd->add_option("--model", sweep_models, "models (default tdm h2)")
            ->check(CLI::IsMember({"tdm", "h2"}));
    CLI::Option* preset_opt =
        cmd->add_option("--preset", sweep_preset,
                        "named grid; 'paper' = the reference-table grid")
            ->check(CLI::IsMember({"paper"}));
    preset_opt->excludes(sweep_loads.rho_option(), sweep_loads.lambda_option(),
                         n_min_opt, n_max_opt, mss_opt, model_opt);
    cmd->add_option("--format", sweep_format, "csv or md (default csv)")
        ->check(CLI::IsMember({"csv", "md"}));
    cmd->add_option("--out", sweep_out, "output path (default stdout)");
    cmd->callback([&] {
      sweep::SweepSpec spec = sweep::SweepSpec::paper();
      if (sweep_preset.empty()) {
        spec.loads = sweep_loads.values(spec.loads);
        spec.n_min = sweep_n_min;
        spec.n_max = sweep_n_max;
        if (!sweep_mss.empty()) spec.mss_list = sweep_mss;
        if (!sweep_models.empty()) {
          spec.models.clear();
          for (const std::string& tag : sweep_models)
            spec.models.push_back(sizing::delay_model_from_string(tag));
        }
      }
      sweep::emit_table(sweep::object_size_table(spec),
                        sweep::format_from_string(sweep_format), sweep_out);
    });
  }

  // ---- figure ---------------------------------------------------------------
  CLI::App* figure =
      app.add_subcommand("figure", "Figure data (CSV) or a minimal SVG chart");
  figure->require_subcommand(1);

  LoadListOption fig_users_loads;
  int fig_users_n_min = 2, fig_users_n_max = 9;
  std::string fig_users_format = "csv", fig_users_out;
  {
    CLI::App* cmd = figure->add_subcommand(
        "users", "Raw users solving the delay equality, per load, over N");
    fig_users_loads.attach(*cmd, "loads (default 0.01 0.05 0.1)");
    cmd->add_option("--n-min", fig_users_n_min, "smallest N (default 2)");
    cmd->add_option("--n-max", fig_users_n_max, "largest N (default 9)");
    cmd->add_option("--format", fig_users_format, "csv or svg (default csv)")
        ->check(CLI::IsMember({"csv", "svg"}));
    cmd->add_option("--out", fig_users_out, "output path (default stdout)");
    cmd->callback([&] {
      const auto points = sweep::users_figure(
          fig_users_loads.values({0.01, 0.05, 0.1}), fig_users_n_min,
          fig_users_n_max);
      sweep::emit_figure(points, sweep::format_from_string(fig_users_format),
                         fig_users_out, "Users solving W_TDM = W_H2", "N",
                         "users (raw)");
    });
  }

  LoadListOption fig_ratio_loads;
  int fig_ratio_n_min = 2, fig_ratio_n_max = 9;
  std::vector<std::int64_t> fig_ratio_mss;
  std::string fig_ratio_format = "csv", fig_ratio_out;
  {
    CLI::App* cmd = figure->add_subcommand(
        "ratio", "TDM/H2 object-size ratio aggregated over N, per load");
    fig_ratio_loads.attach(*cmd, "loads (default 0.01 0.05 0.1)");
    cmd->add_option("--n-min", fig_ratio_n_min, "smallest N (default 2)");
    cmd->add_option("--n-max", fig_ratio_n_max, "largest N (default 9)");
    cmd->add_option("--mss", fig_ratio_mss,
                    "segment sizes, bytes (default 1460 536)");
    cmd->add_option("--format", fig_ratio_format, "csv or svg (default csv)")
        ->check(CLI::IsMember({"csv", "svg"}));
    cmd->add_option("--out", fig_ratio_out, "output path (default stdout)");
    cmd->callback([&] {
      const std::vector<std::int64_t> mss_list =
          fig_ratio_mss.empty() ? std::vector<std::int64_t>{1460, 536}
                                : fig_ratio_mss;
      const auto points =
          sweep::ratio_figure(fig_ratio_loads.values({0.01, 0.05, 0.1}),
                              fig_ratio_n_min, fig_ratio_n_max, mss_list);
      for (const sweep::RatioPoint& point : points)
        if (point.infeasible_count > 0)
          std::cerr << "warning: load=" << format_real(point.load)
                    << " mss=" << point.mss << ": " << point.infeasible_count
                    << " infeasible N value(s) excluded from the mean\n";
      sweep::emit_figure(sweep::ratio_series(points),
                         sweep::format_from_string(fig_ratio_format),
                         fig_ratio_out, "Object size ratio tdm/h2", "rho",
                         "ratio");
    });
  }

  // ---- simulate ---------------------------------------------------------------
  LoadOption sim_lambda;
  std::string sim_service, sim_vacation;
  std::int64_t sim_departures = 1'000'000;
  double sim_warmup = 0.1;
  int sim_batches = 30;
  std::uint64_t sim_seed = 0;
  {
    CLI::App* cmd = app.add_subcommand(
        "simulate", "Discrete-event M/G/1(+vacations) waiting-time estimate");
    sim_lambda.attach(*cmd, "arrival rate");
    cmd->add_option("--service", sim_service,
                    "service law: det:V | exp:R | h2:LAMBDA,N | h2:P1,R1,P2,R2")
        ->required();
    cmd->add_option("--vacation", sim_vacation,
                    "vacation law (same forms; absent = no vacations)");
    cmd->add_option("--departures", sim_departures,
                    "departures to collect (default 1000000)");
    cmd->add_option("--warmup", sim_warmup,
                    "warm-up fraction discarded (default 0.1)");
    cmd->add_option("--batches", sim_batches,
                    "batch count for the std error (default 30)");
    cmd->add_option("--seed", sim_seed, "RNG seed (default 0)");
    cmd->callback([&] {
      sim::SimConfig config;
      config.arrival_rate = sim_lambda.value();
      config.service = parse_distribution(sim_service);
      if (!sim_vacation.empty())
        config.vacation = parse_distribution(sim_vacation);
      config.target_departures = sim_departures;
      config.warmup_fraction = sim_warmup;
      config.batch_count = sim_batches;
      config.seed = sim_seed;
      print_sim_result(sim::simulate_queue(config));
    });
  }

  // ---- validate -----------------------------------------------------------------
  std::int64_t val_departures = 1'000'000;
  double val_tol = 0.02;
  std::uint64_t val_seed = 0;
  {
    CLI::App* cmd = app.add_subcommand(
        "validate",
        "Run the oracle-agreement suite (simulation vs closed forms)");
    cmd->add_option("--departures", val_departures,
                    "departures per case (default 1000000)");
    cmd->add_option("--tol", val_tol,
                    "relative tolerance per case (default 0.02)");
    cmd->add_option("--seed", val_seed, "base RNG seed (default 0)");
    cmd->callback(
        [&] { exit_status = run_validate(val_departures, val_tol, val_seed); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const sweep::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  return exit_status;
}
