#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symshift/blocks.hpp"
#include "symshift/estimator.hpp"
#include "symshift/experiments.hpp"
#include "symshift/filters.hpp"
#include "symshift/io.hpp"
#include "symshift/noise.hpp"
#include "symshift/rng.hpp"
#include "symshift/signal.hpp"

namespace {

using namespace symshift;

int cmd_simulate(const std::string& signal, double theta, double eps, std::size_t coeffs,
                 double beta_star, std::uint64_t seed, const std::string& output,
                 const std::string& csv) {
  const FourierSignal f = load_signal(signal);
  std::size_t K = coeffs;
  if (K == 0) K = std::max(n_eps(eps, beta_star), f.size());
  GaussianStream rng(seed);
  const Observation obs = simulate_sequence(f, theta, eps, K, rng);
  const std::string text = observation_json(obs);
  if (output.empty())
    std::cout << text << '\n';
  else
    write_file(output, text + "\n");
  if (!csv.empty()) write_file(csv, observation_csv(obs));
  return 0;
}

int cmd_blocks(double eps, double beta_star) {
  const BlockScheme s = build_scheme(eps, beta_star);
  std::cout << "j,kappa,T,sigma_sq,phi\n";
  for (std::size_t j = 0; j < s.block_count(); ++j)
    std::cout << (j + 1) << ',' << s.kappas[j] << ',' << s.lengths[j] << ','
              << format_double(s.sigma_sq[j]) << ',' << format_double(s.penalties[j])
              << '\n';
  return 0;
}

Filter make_filter(const std::string& kind, const FourierSignal& f, double eps,
                   const BlockScheme& scheme, const std::string& obs_path,
                   double pinsker_beta, double pinsker_L) {
  if (kind == "oracle") return oracle_blockwise(f, scheme, eps);
  if (kind == "monotone") return monotone_oracle(f, eps, scheme.N);
  if (kind == "pinsker") return pinsker_filter(pinsker_beta, pinsker_L, eps, scheme.N, true);
  if (kind == "stein") {
    if (obs_path.empty())
      throw std::invalid_argument("--obs is required for the stein filter");
    return stein_filter(observation_from_json(read_file(obs_path)), scheme);
  }
  throw std::invalid_argument("unknown filter kind: " + kind);
}

int cmd_risk(const std::string& signal, double eps, double beta_star,
             const std::string& filter_kind, const std::string& obs_path,
             double pinsker_beta, double pinsker_L) {
  const FourierSignal f = load_signal(signal);
  const BlockScheme scheme = build_scheme(eps, beta_star);
  const Filter h = make_filter(filter_kind, f, eps, scheme, obs_path, pinsker_beta, pinsker_L);

  std::cout << "block,kappa_lo,kappa_hi,contribution\n";
  double blocks_total = 0.0;
  for (std::size_t j = 0; j < scheme.block_count(); ++j) {
    double contrib = 0.0;
    for (std::size_t k = scheme.kappas[j]; k < scheme.kappas[j + 1]; ++k) {
      const double w = 2.0 * 3.14159265358979323846 * static_cast<double>(k);
      const double hk = h.at(k);
      const double fk = f.coeff(k);
      contrib += w * w * ((1.0 - hk) * (1.0 - hk) * fk * fk + eps * eps * hk * hk);
    }
    blocks_total += contrib;
    std::cout << (j + 1) << ',' << scheme.kappas[j] << ',' << (scheme.kappas[j + 1] - 1)
              << ',' << format_double(contrib) << '\n';
  }
  const double total = risk(f, h, eps);
  std::cout << "tail,,," << format_double(total - blocks_total) << '\n';
  std::cout << "total,,," << format_double(total) << '\n';
  return 0;
}

int cmd_estimate(const std::string& input, double beta_star, double clamp,
                 bool do_clamp, const std::string& trace) {
  const Observation obs = observation_from_json(read_file(input));
  EstimateReport rep = estimate(obs, beta_star);
  if (do_clamp) {
    if (rep.theta_hat > clamp) rep.theta_hat = clamp;
    if (rep.theta_hat < -clamp) rep.theta_hat = -clamp;
  }
  if (!trace.empty()) {
    std::ostringstream out;
    out << "tau,phi,dphi,d2phi\n";
    const double lo = rep.theta_prelim - rep.delta_effective;
    const double hi = rep.theta_prelim + rep.delta_effective;
    const std::size_t points = 257;
    for (std::size_t i = 0; i < points; ++i) {
      const double tau = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
      const ProfileDerivs d = profile_derivatives(obs, rep.filter, tau);
      out << format_double(tau) << ',' << format_double(profile_likelihood(obs, rep.filter, tau))
          << ',' << format_double(d.first) << ',' << format_double(d.second) << '\n';
    }
    write_file(trace, out.str());
  }
  std::cout << estimate_report_json(rep) << '\n';
  return 0;
}

int cmd_mc(const std::string& config_path, std::uint64_t seed, bool seed_set,
           std::size_t workers, bool workers_set, const std::string& output,
           bool output_set) {
  ExperimentConfig cfg = config_from_json(read_file(config_path));
  if (seed_set) cfg.seed = seed;
  if (workers_set) cfg.workers = workers;
  if (output_set) cfg.output = output;
  const RiskReport report = run_monte_carlo(cfg);
  const std::string csv = report_csv(report);
  std::cout << csv;
  if (!cfg.output.empty()) {
    write_file(cfg.output + ".csv", csv);
    write_file(cfg.output + ".json", report_json(report) + "\n");
  }
  return 0;
}

int cmd_pinsker_check(double beta, double L, const std::vector<double>& eps_list) {
  std::cout << pinsker_check_csv(pinsker_check(beta, L, eps_list));
  return 0;
}

int cmd_prop4_check(const std::string& signal, double beta_star,
                    const std::vector<double>& eps_list) {
  const FourierSignal f = load_signal(signal);
  const auto rows = proposition4_check(f, eps_list, beta_star);
  std::cout << prop4_csv(rows);
  for (const Prop4Row& r : rows)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shift estimation for symmetric periodic signals in white noise"};
  app.require_subcommand(1);

  // simulate
  std::string sim_signal = "fixture", sim_output, sim_csv;
  double sim_theta = 0.0, sim_eps = 0.01, sim_beta = 2.0;
  std::size_t sim_coeffs = 0;
  std::uint64_t sim_seed = 0;
  auto* sim = app.add_subcommand("simulate", "Draw an observation in the sequence model");
  sim->add_option("--signal", sim_signal, "preset name or signal JSON path");
  sim->add_option("--theta", sim_theta, "true shift");
  sim->add_option("--eps", sim_eps, "noise level")->required();
  sim->add_option("--coeffs", sim_coeffs, "number of coefficient pairs (0 = auto)");
  sim->add_option("--beta-star", sim_beta, "smoothness parameter for auto sizing");
  sim->add_option("--seed", sim_seed, "RNG seed");
  sim->add_option("--output", sim_output, "write observation JSON here");
  sim->add_option("--csv", sim_csv, "also write (k, x_k, x_k*) CSV here");

  // blocks
  double blk_eps = 0.01, blk_beta = 2.0;
  auto* blk = app.add_subcommand("blocks", "Print the block scheme as CSV");
  blk->add_option("--eps", blk_eps, "noise level")->required();
  blk->add_option("--beta-star", blk_beta, "smoothness parameter")->required();

  // risk
  std::string rsk_signal = "fixture", rsk_filter = "oracle", rsk_obs;
  double rsk_eps = 0.01, rsk_beta = 2.0, rsk_pbeta = 2.0, rsk_pL = 1.0;
  auto* rsk = app.add_subcommand("risk", "Risk of a filter with per-block contributions");
  rsk->add_option("--signal", rsk_signal, "preset name or signal JSON path");
  rsk->add_option("--eps", rsk_eps, "noise level")->required();
  rsk->add_option("--beta-star", rsk_beta, "smoothness parameter");
  rsk->add_option("--filter", rsk_filter, "oracle | stein | pinsker | monotone");
  rsk->add_option("--obs", rsk_obs, "observation JSON (stein filter)");
  rsk->add_option("--pinsker-beta", rsk_pbeta, "Pinsker smoothness");
  rsk->add_option("--pinsker-L", rsk_pL, "Pinsker radius");

  // estimate
  std::string est_input, est_trace;
  double est_beta = 2.0, est_clamp = 0.25;
  auto* est = app.add_subcommand("estimate", "Run the shift estimator on an observation");
  est->add_option("--input", est_input, "observation JSON path")->required();
  est->add_option("--beta-star", est_beta, "smoothness parameter");
  auto* clamp_opt = est->add_option("--clamp", est_clamp, "clamp |theta_hat| to this bound");
  est->add_option("--trace", est_trace, "dump (tau, Phi, Phi', Phi'') CSV here");

  // mc
  std::string mc_config, mc_output;
  std::uint64_t mc_seed = 0;
  std::size_t mc_workers = 1;
  auto* mc = app.add_subcommand("mc", "Monte Carlo risk evaluation");
  mc->add_option("--config", mc_config, "experiment config JSON")->required();
  auto* mc_seed_opt = mc->add_option("--seed", mc_seed, "override config seed");
  auto* mc_workers_opt = mc->add_option("--workers", mc_workers, "override worker count");
  auto* mc_output_opt = mc->add_option("--output", mc_output, "override output base path");

  // pinsker-check
  double pc_beta = 2.0, pc_L = 1.0;
  std::vector<double> pc_eps;
  auto* pc = app.add_subcommand("pinsker-check", "Worst-case risk vs the sharp constant");
  pc->add_option("--beta", pc_beta, "smoothness")->required();
  pc->add_option("--L", pc_L, "radius")->required();
  pc->add_option("--eps", pc_eps, "noise levels")->required()->expected(-1);

  // prop4-check
  std::string p4_signal = "fixture";
  double p4_beta = 2.0;
  std::vector<double> p4_eps;
  auto* p4 = app.add_subcommand("prop4-check", "Blockwise vs monotone oracle inequality");
  p4->add_option("--signal", p4_signal, "preset name or signal JSON path");
  p4->add_option("--beta-star", p4_beta, "smoothness parameter");
  p4->add_option("--eps", p4_eps, "noise levels")->required()->expected(-1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed())
      return cmd_simulate(sim_signal, sim_theta, sim_eps, sim_coeffs, sim_beta, sim_seed,
                          sim_output, sim_csv);
    if (blk->parsed()) return cmd_blocks(blk_eps, blk_beta);
    if (rsk->parsed())
      return cmd_risk(rsk_signal, rsk_eps, rsk_beta, rsk_filter, rsk_obs, rsk_pbeta, rsk_pL);
    if (est->parsed())
      return cmd_estimate(est_input, est_beta, est_clamp, clamp_opt->count() > 0, est_trace);
    if (mc->parsed())
      return cmd_mc(mc_config, mc_seed, mc_seed_opt->count() > 0, mc_workers,
                    mc_workers_opt->count() > 0, mc_output, mc_output_opt->count() > 0);
    if (pc->parsed()) return cmd_pinsker_check(pc_beta, pc_L, pc_eps);
    if (p4->parsed()) return cmd_prop4_check(p4_signal, p4_beta, p4_eps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
