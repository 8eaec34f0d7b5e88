#include "magclock/cli.hpp"

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "magclock/errors.hpp"
#include "magclock/landau.hpp"
#include "magclock/oracle.hpp"
#include "magclock/rate.hpp"
#include "magclock/units.hpp"
#include "output.hpp"

namespace magclock::cli {

namespace {

/// Flag combination that parses but makes no sense.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  DecayChannel channel;
  std::string format = "csv";
  double rel_tol = 1e-9;
  std::size_t max_subdivisions = 2000;
  unsigned threads = 0;

  QuadratureConfig quadrature() const {
    QuadratureConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.max_subdivisions = max_subdivisions;
    return cfg;
  }
  unsigned worker_count() const {
    return threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  }
  Format output_format() const { return format == "json" ? Format::kJson : Format::kCsv; }
};

const std::vector<std::string> kRateColumns = {
    "p_perp2_MeV2", "m",        "eB_MeV2",           "omega_MeV",   "lorentz_gamma",
    "n_max",        "Gamma_MeV", "ratio",            "quad_error",  "radius_m",
    "acceleration_m_s2", "lambda_dB_m", "B_gauss"};

std::vector<Cell> rate_record(const GlobalOptions& g, double p_perp, unsigned m, double eB) {
  const MagnetizedState state{eB, m, 0.0};
  const auto result = decay_rate(g.channel, state, g.quadrature(), g.worker_count());
  const double w = parent_energy(g.channel, state);
  const auto obs = orbit_observables(p_perp, m, w, eB);
  return {p_perp * p_perp,
          static_cast<std::int64_t>(m),
          eB,
          w,
          result.lorentz_gamma,
          static_cast<std::int64_t>(result.n_max_used),
          result.gamma_total,
          result.ratio,
          result.error_total,
          obs.radius_m,
          obs.acceleration_m_s2,
          obs.de_broglie_m,
          obs.field_gauss};
}

std::vector<Cell> rate_record_for_p_perp2(const GlobalOptions& g, double p_perp2, unsigned m) {
  return rate_record(g, std::sqrt(p_perp2), m, eB_for_p_perp(p_perp2, m));
}

void require_range(unsigned lo, unsigned hi) {
  if (lo > hi) throw UsageError("--m-min must not exceed --m-max");
}

Table cmd_rate(const GlobalOptions& g, double p_perp2, unsigned m) {
  Table t{kRateColumns, {}};
  t.add_row(rate_record_for_p_perp2(g, p_perp2, m));
  return t;
}

Table cmd_scan_m(const GlobalOptions& g, const std::vector<double>& p_perp2, unsigned m_min,
                 unsigned m_max) {
  require_range(m_min, m_max);
  Table t{kRateColumns, {}};
  for (double p2 : p_perp2) {
    for (unsigned m = m_min; m <= m_max; ++m) t.add_row(rate_record_for_p_perp2(g, p2, m));
  }
  return t;
}

Table cmd_scan_field(const GlobalOptions& g, double radius, unsigned m_min, unsigned m_max) {
  require_range(m_min, m_max);
  if (!(radius > 0.0)) throw UsageError("--radius must be positive");
  Table t;
  t.columns = {"R_MeV_inv"};
  t.columns.insert(t.columns.end(), kRateColumns.begin(), kRateColumns.end());
  for (unsigned m = m_min; m <= m_max; ++m) {
    auto row = rate_record(g, p_perp_for_radius(radius, m), m, eB_for_radius(radius, m));
    row.insert(row.begin(), radius);
    t.add_row(std::move(row));
  }
  return t;
}

Table cmd_scan_lll(const GlobalOptions& g, double eB_min, double eB_max, unsigned points) {
  const double M2 = g.channel.parent_mass * g.channel.parent_mass;
  if (!(eB_min > 0.5 * M2)) {
    throw UsageError(fmt::format("--eB-min must exceed M^2/2 = {:.17g} MeV^2", 0.5 * M2));
  }
  if (!(eB_max > eB_min)) throw UsageError("--eB-max must exceed --eB-min");
  if (points < 2) throw UsageError("--points must be at least 2");

  Table t{{"eB_MeV2", "p_perp_MeV", "ratio_exact", "ratio_paper_formula", "ratio_general",
           "B_gauss"},
          {}};
  const auto cfg = g.quadrature();
  const double lo = std::log(eB_min);
  const double hi = std::log(eB_max);
  for (unsigned i = 0; i < points; ++i) {
    const double eB = i + 1 == points ? eB_max : std::exp(lo + (hi - lo) * i / (points - 1));
    const auto general = decay_rate(g.channel, MagnetizedState{eB, 0, 0.0}, cfg, g.worker_count());
    t.add_row({eB, std::sqrt(eB), lll_rate_exact(g.channel, eB, cfg),
               lll_rate_paper(g.channel, eB, cfg), general.ratio, eB_to_gauss(eB)});
  }
  return t;
}

struct TablePoint {
  double p_perp2;
  unsigned m;
};

// The four representative points of the published table.
constexpr TablePoint kTablePoints[] = {{3e4, 65}, {1e4, 30}, {5e3, 20}, {1e3, 5}};

Table cmd_table(const GlobalOptions& g) {
  Table t{kRateColumns, {}};
  for (const auto& p : kTablePoints) t.add_row(rate_record_for_p_perp2(g, p.p_perp2, p.m));
  return t;
}

struct VerifyOutcome {
  Table table;
  bool passed;
};

VerifyOutcome cmd_verify(const GlobalOptions& g, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw UsageError("--trials must be positive");
  VerifyOutcome v{{{"check", "case", "measured", "tolerance", "pass"}, {}}, true};
  auto record = [&](const std::string& check, const std::string& what, double measured,
                    double tol) {
    const bool ok = measured < tol;
    v.passed = v.passed && ok;
    v.table.add_row({check, what, measured, tol, ok});
  };

  const auto report = verify_closed_form(trials, seed);
  record("closed_form_overlap", fmt::format("trials={} seed={}", trials, seed),
         report.max_rel_error, report.tolerance);
  for (const auto& f : report.failures) {
    record("closed_form_failure",
           fmt::format("trial={} n={} m={} k_x={:.17g} delta_k_y={:.17g} eB={:.17g}", f.index,
                       f.params.n, f.params.m, f.params.k_x_neutral, f.params.delta_k_y,
                       f.params.eB),
           f.rel_error, report.tolerance);
  }

  if (g.channel.charged_mass == 0.0) {
    const auto cfg = g.quadrature();
    const double M2 = g.channel.parent_mass * g.channel.parent_mass;
    for (double factor : {0.6, 1.0, 10.0, 100.0}) {
      const double eB = factor * M2;
      const double exact = lll_rate_exact(g.channel, eB, cfg);
      const double general = decay_rate(g.channel, MagnetizedState{eB, 0, 0.0}, cfg).ratio;
      record("lll_equivalence", fmt::format("eB={}*M^2", factor),
             std::abs(general - exact) / exact, 1e-7);
    }
  }

  for (unsigned m : {0u, 5u, 20u, 50u}) {
    for (double x : {0.1, 1.0, 10.0, 100.0}) {
      const auto s = completeness_sum(m, x);
      record("completeness", fmt::format("m={} x={}", m, x), std::abs(s.sum - 1.0), 1e-10);
    }
  }
  return v;
}

void add_channel_options(CLI::App& app, GlobalOptions& g) {
  app.add_option("--M-mu", g.channel.parent_mass, "Parent mass [MeV]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--M-e", g.channel.charged_mass, "Charged daughter mass [MeV]")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--M-nu", g.channel.neutral_mass,
                 "Neutral daughter mass [MeV]; only 0 is supported by the rate engine")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--G", g.channel.coupling, "Coupling constant [MeV]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", g.rel_tol, "Relative quadrature tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--max-subdivisions", g.max_subdivisions, "Quadrature subdivision cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads per rate (0 = hardware concurrency)")
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decay rate of a charged scalar in a Landau level, relative to time dilation",
               "magclock"};
  app.set_config("--config", "", "Read 'key = value' defaults from a file; flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  add_channel_options(app, g);

  double p_perp2 = 1e4;
  unsigned m_level = 0;
  auto* rate = app.add_subcommand("rate", "Rate for one (p_perp^2, m) point");
  rate->add_option("--p-perp2", p_perp2, "Transverse momentum squared [MeV^2]")
      ->required()
      ->check(CLI::PositiveNumber);
  rate->add_option("--m", m_level, "Parent Landau level")->required();

  std::vector<double> scan_p_perp2;
  unsigned m_min = 0;
  unsigned m_max = 50;
  auto* scan_m = app.add_subcommand("scan-m", "Rate vs parent level at fixed p_perp^2");
  scan_m->add_option("--p-perp2", scan_p_perp2, "Transverse momentum squared; repeat for curves")
      ->required()
      ->check(CLI::PositiveNumber);
  scan_m->add_option("--m-min", m_min)->capture_default_str();
  scan_m->add_option("--m-max", m_max)->capture_default_str();

  double radius = 0.1;
  auto* scan_field = app.add_subcommand("scan-field", "Rate vs field at fixed orbit radius");
  scan_field->add_option("--radius", radius, "Orbit radius [1/MeV]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  scan_field->add_option("--m-min", m_min)->capture_default_str();
  scan_field->add_option("--m-max", m_max)->capture_default_str();

  double eB_min = 1e4;
  double eB_max = 1e8;
  unsigned points = 41;
  auto* scan_lll = app.add_subcommand("scan-lll", "Lowest-Landau-level rate vs field (m = 0)");
  scan_lll->add_option("--eB-min", eB_min, "[MeV^2]")->capture_default_str();
  scan_lll->add_option("--eB-max", eB_max, "[MeV^2]")->capture_default_str();
  scan_lll->add_option("--points", points, "Log-spaced grid size")->capture_default_str();

  auto* table = app.add_subcommand("table", "The four representative points");

  std::size_t trials = 100;
  std::uint64_t seed = 20161016;
  auto* verify = app.add_subcommand("verify", "Run the closed-form and completeness checks");
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    Table result;
    bool ok = true;
    if (*rate) {
      result = cmd_rate(g, p_perp2, m_level);
    } else if (*scan_m) {
      result = cmd_scan_m(g, scan_p_perp2, m_min, m_max);
    } else if (*scan_field) {
      result = cmd_scan_field(g, radius, m_min, m_max);
    } else if (*scan_lll) {
      result = cmd_scan_lll(g, eB_min, eB_max, points);
    } else if (*table) {
      result = cmd_table(g);
    } else if (*verify) {
      auto v = cmd_verify(g, trials, seed);
      result = std::move(v.table);
      ok = v.passed;
    }
    write_table(out, result, g.output_format());
    if (!ok) {
      err << "magclock: verification failed\n";
      return kFailure;
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "magclock: " << e.what() << '\n';
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "magclock: " << e.what() << " (partial result " << fmt::format("{:.17g}", e.partial_result())
        << ", error estimate " << fmt::format("{:.17g}", e.error_estimate()) << ")\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "magclock: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace magclock::cli
