#include "mrf/report_io.hpp"

namespace mrf {

namespace {

template <typename T>
T parse_number(std::string_view field, std::size_t line) {
  T value{};
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw std::runtime_error("trace CSV line " + std::to_string(line) + ": bad number '" +
                             std::string(field) + "'");
  }
  return value;
}

}  // namespace

EnergyTrace<double> parse_trace_csv(std::string_view csv) {
  EnergyTrace<double> trace;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    std::string_view line = csv.substr(0, nl);
    csv = nl == std::string_view::npos ? std::string_view{} : csv.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line_no == 1) {
      if (line != "sweep,energy") throw std::runtime_error("trace CSV: missing header");
      continue;
    }
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw std::runtime_error("trace CSV line " + std::to_string(line_no) + ": expected 2 fields");
    }
    trace.push(parse_number<std::int64_t>(line.substr(0, comma), line_no),
               parse_number<double>(line.substr(comma + 1), line_no));
  }
  if (line_no == 0) throw std::runtime_error("trace CSV: empty input");
  return trace;
}

nlohmann::ordered_json to_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["method"] = s.method;
  j["params"] = {{"h", s.params.h}, {"beta", s.params.beta}, {"eta", s.params.eta}};
  j["k_max"] = s.k_max;
  j["seed"] = s.seed ? nlohmann::ordered_json(*s.seed) : nlohmann::ordered_json(nullptr);
  j["final_energy"] = s.final_energy;
  j["best_energy"] = s.best_energy;
  j["agreement_vs_original_percent"] =
      s.agreement_vs_original_percent ? nlohmann::ordered_json(*s.agreement_vs_original_percent)
                                      : nlohmann::ordered_json(nullptr);
  j["agreement_vs_noisy_percent"] = s.agreement_vs_noisy_percent;
  j["flips_accepted"] = s.flips_accepted;
  j["sweeps_run"] = s.sweeps_run;
  j["trace"] = s.trace;
  return j;
}

RunSummary run_summary_from_json(const nlohmann::ordered_json& j) {
  RunSummary s;
  s.method = j.at("method").get<std::string>();
  const auto& p = j.at("params");
  s.params = {p.at("h").get<double>(), p.at("beta").get<double>(), p.at("eta").get<double>()};
  s.k_max = j.at("k_max").get<std::int64_t>();
  if (!j.at("seed").is_null()) s.seed = j.at("seed").get<std::uint64_t>();
  s.final_energy = j.at("final_energy").get<double>();
  s.best_energy = j.at("best_energy").get<double>();
  if (!j.at("agreement_vs_original_percent").is_null()) {
    s.agreement_vs_original_percent = j.at("agreement_vs_original_percent").get<double>();
  }
  s.agreement_vs_noisy_percent = j.at("agreement_vs_noisy_percent").get<double>();
  s.flips_accepted = j.at("flips_accepted").get<std::int64_t>();
  s.sweeps_run = j.at("sweeps_run").get<std::int64_t>();
  s.trace = j.at("trace").get<std::vector<double>>();
  return s;
}

}  // namespace mrf
