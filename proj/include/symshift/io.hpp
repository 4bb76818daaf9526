#ifndef SYMSHIFT_IO_HPP
#define SYMSHIFT_IO_HPP

#include <string>

#include "symshift/estimator.hpp"
#include "symshift/experiments.hpp"
#include "symshift/noise.hpp"
#include "symshift/signal.hpp"

namespace symshift {

// round-trip double formatting shared by all CSV/JSON writers
std::string format_double(double v);

std::string signal_json(const FourierSignal& f);
FourierSignal signal_from_json(const std::string& text);

// Accepts a preset name or a path to {"coeffs": [...]}.
FourierSignal load_signal(const std::string& name_or_path);

std::string observation_json(const Observation& obs);
Observation observation_from_json(const std::string& text);
std::string observation_csv(const Observation& obs);

ExperimentConfig config_from_json(const std::string& text);
std::string report_json(const RiskReport& report);

std::string estimate_report_json(const EstimateReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace symshift

#endif  // SYMSHIFT_IO_HPP
