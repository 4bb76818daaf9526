#include "symshift/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace symshift {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string signal_json(const FourierSignal& f) {
  json j;
  j["coeffs"] = f.coeffs();
  return j.dump();
}

FourierSignal signal_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.contains("coeffs")) throw std::invalid_argument("signal json: missing \"coeffs\"");
  return FourierSignal(j.at("coeffs").get<std::vector<double>>());
}

FourierSignal load_signal(const std::string& name_or_path) {
  for (const std::string& name : FourierSignal::preset_names())
    if (name == name_or_path) return FourierSignal::preset(name);
  return signal_from_json(read_file(name_or_path));
}

std::string observation_json(const Observation& obs) {
  json j;
  j["eps"] = obs.eps();
  j["x"] = obs.x();
  j["xs"] = obs.xs();
  return j.dump();
}

Observation observation_from_json(const std::string& text) {
  const json j = json::parse(text);
  return Observation(j.at("eps").get<double>(), j.at("x").get<std::vector<double>>(),
                     j.at("xs").get<std::vector<double>>());
}

std::string observation_csv(const Observation& obs) {
  std::ostringstream out;
  out << "k,x,xs\n";
  for (std::size_t k = 1; k <= obs.size(); ++k)
    out << k << ',' << format_double(obs.x()[k - 1]) << ','
        << format_double(obs.xs()[k - 1]) << '\n';
  return out.str();
}

ExperimentConfig config_from_json(const std::string& text) {
  const json j = json::parse(text);
  ExperimentConfig cfg;
  if (!j.contains("signal")) throw std::invalid_argument("config: missing \"signal\"");
  if (j.at("signal").is_string()) {
    cfg.signal_name = j.at("signal").get<std::string>();
    cfg.signal = FourierSignal::preset(cfg.signal_name);
  } else {
    cfg.signal = FourierSignal(j.at("signal").at("coeffs").get<std::vector<double>>());
    cfg.signal_name = "custom";
  }
  cfg.theta = j.value("theta", 0.0);
  if (!j.contains("eps_list")) throw std::invalid_argument("config: missing \"eps_list\"");
  cfg.eps_list = j.at("eps_list").get<std::vector<double>>();
  cfg.replications = j.value("replications", std::size_t{1});
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.beta_star = j.value("beta_star", 2.0);
  if (!j.contains("estimators")) throw std::invalid_argument("config: missing \"estimators\"");
  for (const auto& name : j.at("estimators"))
    cfg.estimators.push_back(estimator_from_name(name.get<std::string>()));
  if (j.contains("pinsker")) {
    PinskerParams p;
    p.beta = j.at("pinsker").at("beta").get<double>();
    p.L = j.at("pinsker").at("L").get<double>();
    cfg.pinsker = p;
  }
  cfg.output = j.value("output", std::string{});
  cfg.workers = j.value("workers", std::size_t{1});
  cfg.noiseless = j.value("noiseless", false);
  return cfg;
}

std::string report_json(const RiskReport& report) {
  json j;
  j["signal"] = report.signal_name;
  j["signal_coeffs"] = report.signal_coeffs;
  j["theta"] = report.theta;
  j["beta_star"] = report.beta_star;
  j["seed"] = report.seed;
  j["replications"] = report.replications;
  j["noiseless"] = report.noiseless;
  j["deriv_norm_sq"] = report.deriv_norm_sq;
  j["signal_tail"] = "finite-support-exact";
  j["rows"] = json::array();
  for (const RiskRow& r : report.rows) {
    json row;
    row["eps"] = r.eps;
    row["estimator"] = estimator_name(r.estimator);
    row["replications"] = r.replications;
    row["n_failures"] = r.n_failures;
    row["mse"] = r.mse;
    row["normalized_risk"] = r.normalized_risk;
    row["std_error"] = r.std_error;
    row["oracle_bound"] = r.oracle_bound;
    row["monotone_bound"] = r.monotone_bound;
    row["second_order_excess"] = r.second_order_excess;
    j["rows"].push_back(row);
  }
  j["diagnostics"] = json::array();
  for (const EpsDiagnostics& d : report.diagnostics) {
    json row;
    row["eps"] = d.eps;
    row["N"] = d.N;
    row["gamma"] = d.gamma;
    row["oracle_second_order"] = d.oracle_second_order;
    row["eps0_ok"] = d.eps0_ok;
    j["diagnostics"].push_back(row);
  }
  return j.dump(2);
}

std::string estimate_report_json(const EstimateReport& report) {
  json j;
  j["theta_prelim"] = report.theta_prelim;
  j["theta_hat"] = report.theta_hat;
  j["delta"] = report.delta;
  j["delta_effective"] = report.delta_effective;
  j["curvature_at_opt"] = report.curvature_at_opt;
  j["converged"] = report.converged;
  j["iterations"] = report.iterations;
  j["filter"] = report.filter.h;
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << contents;
}

}  // namespace symshift
