#include "noonsim/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "noonsim/errors.hpp"

namespace noonsim {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::string& block, const std::set<std::string>& allowed) {
  if (!j.is_object()) {
    throw config_error("config block '" + block + "' must be an object");
  }
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw config_error("unknown key '" + item.key() + "' in config block '" + block + "'");
    }
  }
}

double get_number(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw config_error("config key '" + key + "' must be a number");
  return j.at(key).get<double>();
}

int get_int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) {
    throw config_error("config key '" + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

std::string get_string(const json& j, const std::string& key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) throw config_error("config key '" + key + "' must be a string");
  return j.at(key).get<std::string>();
}

}  // namespace

SpaceConfig RunConfigFile::space_for(const ProtocolSpec& spec) const {
  if (space_override) {
    SpaceConfig cfg = *space_override;
    cfg.require_protocol_fit(spec.n_target, spec.m_target);
    return cfg;
  }
  return SpaceConfig::for_protocol(spec.n_target, spec.m_target);
}

void RunConfigFile::validate() const {
  protocol.validate();
  device.validate();
  run.validate();
  if (space_override) space_override->validate();
  if (!sweep.delta_over_g.empty() && !sweep.protocol.empty()) {
    throw config_error("sweep block may list either delta_over_g values or protocol pairs, not both");
  }
  for (double d : sweep.delta_over_g) {
    if (!(d > 0.0)) throw config_error("sweep delta_over_g values must be positive");
  }
  for (const auto& [n, m] : sweep.protocol) {
    ProtocolSpec{n, m}.validate();
  }
  if (output.directory.empty()) throw config_error("output directory must not be empty");
}

RunConfigFile parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  require_keys(j, "<top level>", {"protocol", "device", "run", "space", "output", "sweep"});

  RunConfigFile cfg;

  if (j.contains("protocol")) {
    const json& p = j.at("protocol");
    require_keys(p, "protocol", {"N", "M"});
    cfg.protocol.n_target = get_int(p, "N", cfg.protocol.n_target);
    cfg.protocol.m_target = get_int(p, "M", cfg.protocol.m_target);
  }

  if (j.contains("device")) {
    const json& d = j.at("device");
    require_keys(d, "device",
                 {"f_ge_hz", "f_ea_hz", "f_r1_hz", "f_r2_hz", "g1_ge_hz", "g1_ea_hz", "g2_ge_hz",
                  "g2_ea_hz", "drive_ge_hz", "drive_ea_hz"});
    const auto ang = [&](const char* key, double current) {
      return d.contains(key) ? DeviceParams::hz_to_angular(get_number(d, key, 0.0)) : current;
    };
    cfg.device.omega_ge = ang("f_ge_hz", cfg.device.omega_ge);
    cfg.device.omega_ea = ang("f_ea_hz", cfg.device.omega_ea);
    cfg.device.omega_r1 = ang("f_r1_hz", cfg.device.omega_r1);
    cfg.device.omega_r2 = ang("f_r2_hz", cfg.device.omega_r2);
    cfg.device.g1_ge = ang("g1_ge_hz", cfg.device.g1_ge);
    cfg.device.g1_ea = ang("g1_ea_hz", cfg.device.g1_ea);
    cfg.device.g2_ge = ang("g2_ge_hz", cfg.device.g2_ge);
    cfg.device.g2_ea = ang("g2_ea_hz", cfg.device.g2_ea);
    cfg.device.omega_drive_ge = ang("drive_ge_hz", cfg.device.omega_drive_ge);
    cfg.device.omega_drive_ea = ang("drive_ea_hz", cfg.device.omega_drive_ea);
  }

  if (j.contains("run")) {
    const json& r = j.at("run");
    require_keys(r, "run", {"mode", "delta_over_g", "samples_per_segment", "norm_tolerance"});
    cfg.run.mode = mode_from_name(get_string(r, "mode", mode_name(cfg.run.mode)));
    cfg.run.delta_over_g = get_number(r, "delta_over_g", cfg.run.delta_over_g);
    cfg.run.samples_per_segment = get_int(r, "samples_per_segment", cfg.run.samples_per_segment);
    cfg.run.norm_tolerance = get_number(r, "norm_tolerance", cfg.run.norm_tolerance);
  }

  if (j.contains("space")) {
    const json& s = j.at("space");
    require_keys(s, "space", {"d1", "d2"});
    SpaceConfig sc;
    sc.d1 = get_int(s, "d1", 0);
    sc.d2 = get_int(s, "d2", 0);
    cfg.space_override = sc;
  }

  if (j.contains("output")) {
    const json& o = j.at("output");
    require_keys(o, "output", {"directory", "trajectory_format"});
    cfg.output.directory = get_string(o, "directory", cfg.output.directory);
    const std::string fmt = get_string(o, "trajectory_format", "populations");
    if (fmt == "populations") {
      cfg.output.trajectory_format = TrajectoryFormat::populations;
    } else if (fmt == "amplitudes") {
      cfg.output.trajectory_format = TrajectoryFormat::amplitudes;
    } else {
      throw config_error("trajectory_format must be 'populations' or 'amplitudes'");
    }
  }

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    require_keys(s, "sweep", {"delta_over_g", "protocol"});
    if (s.contains("delta_over_g")) {
      if (!s.at("delta_over_g").is_array()) {
        throw config_error("sweep.delta_over_g must be an array of numbers");
      }
      for (const auto& v : s.at("delta_over_g")) {
        if (!v.is_number()) throw config_error("sweep.delta_over_g entries must be numbers");
        cfg.sweep.delta_over_g.push_back(v.get<double>());
      }
    }
    if (s.contains("protocol")) {
      if (!s.at("protocol").is_array()) {
        throw config_error("sweep.protocol must be an array of [N, M] pairs");
      }
      for (const auto& v : s.at("protocol")) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
            !v[1].is_number_integer()) {
          throw config_error("sweep.protocol entries must be [N, M] integer pairs");
        }
        cfg.sweep.protocol.emplace_back(v[0].get<int>(), v[1].get<int>());
      }
    }
  }

  cfg.validate();
  return cfg;
}

RunConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error("cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void apply_overrides(RunConfigFile& cfg, const CliOverrides& ov) {
  if (ov.n_target) cfg.protocol.n_target = *ov.n_target;
  if (ov.m_target) cfg.protocol.m_target = *ov.m_target;
  if (ov.mode) cfg.run.mode = mode_from_name(*ov.mode);
  if (ov.delta_over_g) cfg.run.delta_over_g = *ov.delta_over_g;
  if (ov.output_directory) cfg.output.directory = *ov.output_directory;
  cfg.validate();
}

}  // namespace noonsim
