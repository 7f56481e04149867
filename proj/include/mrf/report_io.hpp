#pragma once

#include "mrf/energy.hpp"
#include "mrf/trace.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mrf {

/// Shortest decimal form that parses back to the same value.
template <typename Scalar>
std::string format_real(Scalar value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, end);
}

/// CSV with header `sweep,energy` and one row per sample in sweep order.
template <typename Scalar>
std::string write_trace_csv(const EnergyTrace<Scalar>& trace) {
  std::string out = "sweep,energy\n";
  for (const auto& s : trace) {
    out += std::to_string(s.sweep);
    out += ',';
    out += format_real(s.energy);
    out += '\n';
  }
  return out;
}

/// Inverse of write_trace_csv; throws std::runtime_error with a line number.
EnergyTrace<double> parse_trace_csv(std::string_view csv);

/// Per-run record written as summary JSON.
struct RunSummary {
  std::string method;
  EnergyParams<double> params;
  std::int64_t k_max = 0;
  std::optional<std::uint64_t> seed;
  double final_energy = 0;
  double best_energy = 0;
  std::optional<double> agreement_vs_original_percent;
  double agreement_vs_noisy_percent = 0;
  std::int64_t flips_accepted = 0;
  std::int64_t sweeps_run = 0;
  std::vector<double> trace;
};

/// Field names: method, params{h,beta,eta}, k_max, seed, final_energy,
/// best_energy, agreement_vs_original_percent, agreement_vs_noisy_percent,
/// flips_accepted, sweeps_run, trace. Absent optionals are JSON null.
nlohmann::ordered_json to_json(const RunSummary& summary);

/// Throws nlohmann::json::exception when a field is missing or mistyped.
RunSummary run_summary_from_json(const nlohmann::ordered_json& j);

}  // namespace mrf
