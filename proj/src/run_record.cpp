#include "d2d/run_record.hpp"

#include <cstdio>

#include "json_io.hpp"

namespace d2d {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string();
}

}  // namespace

std::string run_record_csv_header() {
  return "protocol,method,stp_variant,stp_shared_fading,zeta_a,xi,alpha,l_a,l_b,m,"
         "mu,d,coverage,std_err,frac_backscatter,frac_htt,frac_energy_outage,"
         "mean_conditional_snr,n_trials,seed,wall_time_ms";
}

std::string run_record_csv_row(const RunRecord& r) {
  std::string row;
  row += to_string(r.protocol);
  row += ',';
  row += r.method;
  row += ',';
  row += r.protocol == Protocol::Stp ? to_string(r.stp_variant) : std::string();
  row += ',';
  row += r.stp_shared_fading ? "1" : "0";
  row += ',';
  row += fmt(r.params.zeta_a) + ',' + fmt(r.params.xi) + ',' + fmt(r.params.alpha) +
         ',' + fmt(r.params.l_a) + ',' + fmt(r.params.l_b) + ',' + fmt(r.params.m) +
         ',' + fmt(r.params.mu) + ',' + fmt(r.params.d) + ',';
  row += fmt(r.coverage) + ',' + fmt_opt(r.std_err) + ',';
  if (r.mode_fractions) {
    row += fmt(r.mode_fractions->backscatter) + ',' + fmt(r.mode_fractions->htt) +
           ',' + fmt(r.mode_fractions->energy_outage);
  } else {
    row += ",,";
  }
  row += ',' + fmt_opt(r.mean_conditional_snr);
  row += ',' + std::to_string(r.n_trials) + ',' + std::to_string(r.seed) + ',' +
         fmt(r.wall_time_ms);
  return row;
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << run_record_csv_header() << '\n';
  for (const auto& r : records) out << run_record_csv_row(r) << '\n';
}

std::string records_to_json_text(const std::vector<RunRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{
        {"params", detail::params_to_json(r.params)},
        {"protocol", to_string(r.protocol)},
        {"method", r.method},
        {"stp_variant", to_string(r.stp_variant)},
        {"stp_shared_fading", r.stp_shared_fading},
        {"coverage", r.coverage},
        {"n_trials", r.n_trials},
        {"seed", r.seed},
        {"wall_time_ms", r.wall_time_ms},
    };
    j["std_err"] = r.std_err ? nlohmann::json(*r.std_err) : nlohmann::json();
    if (r.mode_fractions) {
      j["mode_fractions"] = {{"backscatter", r.mode_fractions->backscatter},
                             {"htt", r.mode_fractions->htt},
                             {"energy_outage", r.mode_fractions->energy_outage}};
    } else {
      j["mode_fractions"] = nullptr;
    }
    j["mean_conditional_snr"] =
        r.mean_conditional_snr ? nlohmann::json(*r.mean_conditional_snr) : nlohmann::json();
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"records", std::move(arr)}}.dump(2) + "\n";
}

std::vector<RunRecord> records_from_json_text(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("records parse error: ") + e.what());
  }
  std::vector<RunRecord> out;
  for (const auto& j : root.at("records")) {
    RunRecord r;
    r.params = detail::params_from_json(j.at("params"));
    r.protocol = protocol_from_string(j.at("protocol").get<std::string>());
    r.method = j.at("method").get<std::string>();
    r.stp_variant = stp_variant_from_string(j.at("stp_variant").get<std::string>());
    r.stp_shared_fading = j.at("stp_shared_fading").get<bool>();
    r.coverage = j.at("coverage").get<double>();
    if (!j.at("std_err").is_null()) r.std_err = j.at("std_err").get<double>();
    if (!j.at("mode_fractions").is_null()) {
      const auto& mf = j.at("mode_fractions");
      r.mode_fractions = ModeFractions{mf.at("backscatter").get<double>(),
                                       mf.at("htt").get<double>(),
                                       mf.at("energy_outage").get<double>()};
    }
    if (!j.at("mean_conditional_snr").is_null()) {
      r.mean_conditional_snr = j.at("mean_conditional_snr").get<double>();
    }
    r.n_trials = j.at("n_trials").get<uint64_t>();
    r.seed = j.at("seed").get<uint64_t>();
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace d2d
