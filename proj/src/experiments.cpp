#include "symshift/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "symshift/blocks.hpp"
#include "symshift/noise.hpp"
#include "symshift/rng.hpp"

namespace symshift {

const char* estimator_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::stein: return "stein";
    case EstimatorKind::oracle_filter: return "oracle-filter";
    case EstimatorKind::pinsker_filter: return "pinsker-filter";
    case EstimatorKind::preliminary_only: return "preliminary-only";
  }
  throw std::logic_error("estimator_name: unknown kind");
}

EstimatorKind estimator_from_name(const std::string& name) {
  if (name == "stein") return EstimatorKind::stein;
  if (name == "oracle-filter") return EstimatorKind::oracle_filter;
  if (name == "pinsker-filter") return EstimatorKind::pinsker_filter;
  if (name == "preliminary-only") return EstimatorKind::preliminary_only;
  throw std::invalid_argument("unknown estimator: " + name);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.replications < 1)
    throw std::invalid_argument("config: replications must be >= 1");
  if (cfg.eps_list.empty())
    throw std::invalid_argument("config: eps_list must be nonempty");
  for (double e : cfg.eps_list)
    if (!(e > 0.0) || !(e < 1.0))
      throw std::invalid_argument("config: every eps must lie in (0,1)");
  if (cfg.estimators.empty())
    throw std::invalid_argument("config: estimators must be nonempty");
  if (!(cfg.beta_star > 1.0))
    throw std::invalid_argument("config: beta_star must exceed 1");
  if (cfg.workers < 1)
    throw std::invalid_argument("config: workers must be >= 1");
  if (!(cfg.signal.deriv_norm_sq() > 0.0))
    throw std::invalid_argument("config: signal must have nonzero derivative norm");
  const bool wants_pinsker =
      std::find(cfg.estimators.begin(), cfg.estimators.end(),
                EstimatorKind::pinsker_filter) != cfg.estimators.end();
  if (wants_pinsker) {
    if (!cfg.pinsker)
      throw std::invalid_argument("config: pinsker parameters required for pinsker-filter");
    if (!(cfg.pinsker->beta > 1.0))
      throw std::invalid_argument("config: pinsker beta must exceed 1");
    if (!(cfg.pinsker->L > 0.0))
      throw std::invalid_argument("config: pinsker L must be positive");
  }
}

double pairwise_sum(const std::vector<double>& values) {
  // recursive halving keeps the evaluation tree independent of worker count
  struct Rec {
    static double sum(const double* v, std::size_t n) {
      if (n <= 16) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
      }
      const std::size_t half = n / 2;
      return sum(v, half) + sum(v + half, n - half);
    }
  };
  return values.empty() ? 0.0 : Rec::sum(values.data(), values.size());
}

namespace {

struct RepOutcome {
  double sq_err = 0.0;
  bool failed = false;
};

double squared(double v) { return v * v; }

}  // namespace

RiskReport run_monte_carlo(const ExperimentConfig& cfg) {
  validate(cfg);
  const FourierSignal& f = cfg.signal;
  const double fprime2 = f.deriv_norm_sq();
  const std::size_t R = cfg.replications;

  RiskReport report;
  report.signal_name = cfg.signal_name;
  report.signal_coeffs = f.coeffs();
  report.theta = cfg.theta;
  report.beta_star = cfg.beta_star;
  report.seed = cfg.seed;
  report.replications = R;
  report.noiseless = cfg.noiseless;
  report.deriv_norm_sq = fprime2;

  for (std::size_t e = 0; e < cfg.eps_list.size(); ++e) {
    const double eps = cfg.eps_list[e];
    const BlockScheme scheme = build_scheme(eps, cfg.beta_star);
    const std::size_t Ksim = std::max(scheme.N, f.size());
    const Filter oracle = oracle_blockwise(f, scheme, eps);
    const Filter monotone = monotone_oracle(f, eps, scheme.N);
    const double oracle_risk = risk(f, oracle, eps);
    const double monotone_risk = risk(f, monotone, eps);
    const double gamma = scheme_gamma(scheme);
    std::optional<Filter> pinsker;
    for (EstimatorKind kind : cfg.estimators)
      if (kind == EstimatorKind::pinsker_filter)
        pinsker = pinsker_filter(cfg.pinsker->beta, cfg.pinsker->L, eps, scheme.N, true);

    const std::uint64_t eps_seed = split_seed(cfg.seed, e);
    std::vector<std::vector<RepOutcome>> outcomes(
        cfg.estimators.size(), std::vector<RepOutcome>(R));

    const auto run_range = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t r = lo; r < hi; ++r) {
        GaussianStream rng = GaussianStream::substream(eps_seed, r);
        const Observation obs = cfg.noiseless
                                    ? drift_sequence(f, cfg.theta, eps, Ksim)
                                    : simulate_sequence(f, cfg.theta, eps, Ksim, rng);
        for (std::size_t i = 0; i < cfg.estimators.size(); ++i) {
          RepOutcome& out = outcomes[i][r];
          switch (cfg.estimators[i]) {
            case EstimatorKind::preliminary_only:
              out.sq_err = squared(preliminary(obs) - cfg.theta);
              break;
            case EstimatorKind::stein: {
              const EstimateReport rep = estimate_with_filter(obs, stein_filter(obs, scheme));
              out.sq_err = squared(rep.theta_hat - cfg.theta);
              out.failed = !rep.converged;
              break;
            }
            case EstimatorKind::oracle_filter: {
              const EstimateReport rep = estimate_with_filter(obs, oracle);
              out.sq_err = squared(rep.theta_hat - cfg.theta);
              out.failed = !rep.converged;
              break;
            }
            case EstimatorKind::pinsker_filter: {
              const EstimateReport rep = estimate_with_filter(obs, *pinsker);
              out.sq_err = squared(rep.theta_hat - cfg.theta);
              out.failed = !rep.converged;
              break;
            }
          }
        }
      }
    };

    const std::size_t workers = std::min<std::size_t>(cfg.workers, R);
    if (workers <= 1) {
      run_range(0, R);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (R + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(R, lo + chunk);
        if (lo < hi) pool.emplace_back(run_range, lo, hi);
      }
      for (std::thread& t : pool) t.join();
    }

    for (std::size_t i = 0; i < cfg.estimators.size(); ++i) {
      // aggregation in replication order, independent of the worker split
      std::vector<double> errs;
      errs.reserve(R);
      std::size_t failures = 0;
      for (std::size_t r = 0; r < R; ++r) {
        if (outcomes[i][r].failed)
          ++failures;
        else
          errs.push_back(outcomes[i][r].sq_err);
      }
      RiskRow row;
      row.eps = eps;
      row.estimator = cfg.estimators[i];
      row.replications = R;
      row.n_failures = failures;
      const std::size_t n = errs.size();
      row.mse = n > 0 ? pairwise_sum(errs) / static_cast<double>(n) : 0.0;
      const double scale = fprime2 / (eps * eps);
      row.normalized_risk = scale * row.mse;
      if (n > 1) {
        std::vector<double> sq_dev(n);
        for (std::size_t r = 0; r < n; ++r) sq_dev[r] = squared(errs[r] - row.mse);
        const double var = pairwise_sum(sq_dev) / static_cast<double>(n - 1);
        row.std_error = scale * std::sqrt(var / static_cast<double>(n));
      }
      row.oracle_bound = 1.0 + oracle_risk / fprime2;
      row.monotone_bound = 1.0 + gamma * monotone_risk / fprime2;
      row.second_order_excess = row.normalized_risk - 1.0;
      report.rows.push_back(row);
    }

    EpsDiagnostics diag;
    diag.eps = eps;
    diag.N = scheme.N;
    diag.gamma = gamma;
    diag.oracle_second_order = oracle_risk / fprime2;
    diag.eps0_ok = eps0_condition(f, eps, cfg.beta_star);
    report.diagnostics.push_back(diag);
  }
  return report;
}

std::vector<PinskerCheckRow> pinsker_check(double beta, double L,
                                           const std::vector<double>& eps_list) {
  if (!(beta > 1.0)) throw std::invalid_argument("pinsker_check: beta must exceed 1");
  std::vector<PinskerCheckRow> rows;
  for (double eps : eps_list) {
    PinskerCheckRow row;
    row.eps = eps;
    row.cutoff = pinsker_cutoff(beta, L, eps);
    // the tail filter vanishes for k >= W, so truncating at floor(W) is exact
    const std::size_t N = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(row.cutoff)));
    const Filter filt = pinsker_filter(beta, L, eps, N, false);
    row.worst_case = worst_case_sobolev_risk(filt, beta, L, eps);
    row.target = pinsker_constant(beta, L) *
                 std::pow(eps, (4.0 * beta - 4.0) / (2.0 * beta + 1.0));
    row.ratio = row.worst_case / row.target;
    rows.push_back(row);
  }
  return rows;
}

std::vector<Prop4Row> proposition4_check(const FourierSignal& f,
                                         const std::vector<double>& eps_grid,
                                         double beta_star) {
  std::vector<Prop4Row> rows;
  for (double eps : eps_grid) {
    const BlockScheme scheme = build_scheme(eps, beta_star);
    Prop4Row row;
    row.eps = eps;
    row.beta_star = beta_star;
    row.lhs = risk(f, oracle_blockwise(f, scheme, eps), eps);
    row.gamma = scheme_gamma(scheme);
    row.monotone_min = risk(f, monotone_oracle(f, eps, scheme.N), eps);
    row.rhs = row.gamma * row.monotone_min + eps * eps * scheme.sigma_sq[0];
    row.pass = row.lhs <= row.rhs + 1e-10;
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string report_csv(const RiskReport& report) {
  std::ostringstream out;
  out << "eps,estimator,replications,n_failures,mse,normalized_risk,std_error,"
         "oracle_bound,monotone_bound,second_order_excess\n";
  for (const RiskRow& r : report.rows) {
    out << fmt(r.eps) << ',' << estimator_name(r.estimator) << ',' << r.replications
        << ',' << r.n_failures << ',' << fmt(r.mse) << ',' << fmt(r.normalized_risk)
        << ',' << fmt(r.std_error) << ',' << fmt(r.oracle_bound) << ','
        << fmt(r.monotone_bound) << ',' << fmt(r.second_order_excess) << '\n';
  }
  return out.str();
}

std::string pinsker_check_csv(const std::vector<PinskerCheckRow>& rows) {
  std::ostringstream out;
  out << "eps,cutoff,worst_case,target,ratio\n";
  for (const PinskerCheckRow& r : rows)
    out << fmt(r.eps) << ',' << fmt(r.cutoff) << ',' << fmt(r.worst_case) << ','
        << fmt(r.target) << ',' << fmt(r.ratio) << '\n';
  return out.str();
}

std::string prop4_csv(const std::vector<Prop4Row>& rows) {
  std::ostringstream out;
  out << "eps,beta_star,lhs,gamma,monotone_min,rhs,status\n";
  for (const Prop4Row& r : rows)
    out << fmt(r.eps) << ',' << fmt(r.beta_star) << ',' << fmt(r.lhs) << ','
        << fmt(r.gamma) << ',' << fmt(r.monotone_min) << ',' << fmt(r.rhs) << ','
        << (r.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace symshift
