#ifndef SYMSHIFT_EXPERIMENTS_HPP
#define SYMSHIFT_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symshift/estimator.hpp"
#include "symshift/filters.hpp"
#include "symshift/signal.hpp"

namespace symshift {

enum class EstimatorKind { stein, oracle_filter, pinsker_filter, preliminary_only };

const char* estimator_name(EstimatorKind kind);
EstimatorKind estimator_from_name(const std::string& name);

struct PinskerParams {
  double beta = 2.0;
  double L = 1.0;
};

struct ExperimentConfig {
  FourierSignal signal{std::vector<double>{1.0}};
  std::string signal_name = "single";
  double theta = 0.0;
  std::vector<double> eps_list;
  std::size_t replications = 1;
  std::uint64_t seed = 0;
  double beta_star = 2.0;
  std::vector<EstimatorKind> estimators;
  std::optional<PinskerParams> pinsker;
  std::string output;         // base path for CSV/JSON files; empty = stdout only
  std::size_t workers = 1;    // execution detail, not part of the report
  bool noiseless = false;     // test hook: zero noise, nominal eps recorded
};

// Throws std::invalid_argument naming the violated invariant.
void validate(const ExperimentConfig& cfg);

struct RiskRow {
  double eps = 0.0;
  EstimatorKind estimator = EstimatorKind::stein;
  std::size_t replications = 0;
  std::size_t n_failures = 0;
  double mse = 0.0;
  double normalized_risk = 0.0;       // eps^-2 ||f'||^2 * mse
  double std_error = 0.0;
  double oracle_bound = 0.0;          // 1 + R[f,h*] / ||f'||^2
  double monotone_bound = 0.0;        // 1 + gamma * min_mon R / ||f'||^2
  double second_order_excess = 0.0;   // normalized_risk - 1
};

struct EpsDiagnostics {
  double eps = 0.0;
  std::size_t N = 0;
  double gamma = 0.0;
  double oracle_second_order = 0.0;   // R[f,h*] / ||f'||^2
  bool eps0_ok = false;
};

struct RiskReport {
  std::string signal_name;
  std::vector<double> signal_coeffs;
  double theta = 0.0;
  double beta_star = 0.0;
  std::uint64_t seed = 0;
  std::size_t replications = 0;
  bool noiseless = false;
  double deriv_norm_sq = 0.0;
  std::vector<RiskRow> rows;
  std::vector<EpsDiagnostics> diagnostics;
};

// Monte Carlo risk evaluation. Deterministic for a fixed (config, seed):
// replication r of the eps with index e always uses the Gaussian substream
// split_seed(split_seed(seed, e), r), so the report does not depend on the
// worker count. Non-converged replications are counted, excluded from the
// mean, and never silently dropped.
RiskReport run_monte_carlo(const ExperimentConfig& cfg);

struct PinskerCheckRow {
  double eps = 0.0;
  double cutoff = 0.0;       // W_eps
  double worst_case = 0.0;   // sup of R^eps over the Sobolev ball, tail filter
  double target = 0.0;       // C(beta,L) eps^((4 beta-4)/(2 beta+1))
  double ratio = 0.0;
};

// Worst-case risk of the tail Pinsker filter against the sharp constant.
std::vector<PinskerCheckRow> pinsker_check(double beta, double L,
                                           const std::vector<double>& eps_list);

struct Prop4Row {
  double eps = 0.0;
  double beta_star = 0.0;
  double lhs = 0.0;           // R[f, h*]
  double gamma = 0.0;
  double monotone_min = 0.0;  // min over nonincreasing filters
  double rhs = 0.0;           // gamma * monotone_min + eps^2 sigma_1^2
  bool pass = false;          // lhs <= rhs + 1e-10
};

// Deterministic check of the blockwise-vs-monotone oracle inequality.
std::vector<Prop4Row> proposition4_check(const FourierSignal& f,
                                         const std::vector<double>& eps_grid,
                                         double beta_star);

// order-independent pairwise summation (used for all risk aggregation)
double pairwise_sum(const std::vector<double>& values);

std::string report_csv(const RiskReport& report);
std::string pinsker_check_csv(const std::vector<PinskerCheckRow>& rows);
std::string prop4_csv(const std::vector<Prop4Row>& rows);

}  // namespace symshift

#endif  // SYMSHIFT_EXPERIMENTS_HPP
