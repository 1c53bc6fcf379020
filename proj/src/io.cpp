#include "fdwpcn/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace fdwpcn {

namespace {

void only_keys(const Json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw ParseError(std::string("unknown field '") + key + "' in " + what);
}

double number(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

double required_number(const Json& j, const char* key, const char* what) {
  if (!j.contains(key))
    throw ParseError(std::string("missing field '") + key + "' in " + what);
  return number(j, key, 0.0);
}

}  // namespace

Json to_json(const SystemParams& p) {
  return Json{{"p_h", p.p_h},
              {"p_max", p.p_max},
              {"bandwidth", p.bandwidth},
              {"noise_density", p.noise_density},
              {"self_interference", p.self_interference},
              {"eh_saturation", p.eh_saturation},
              {"eh_slope", p.eh_slope},
              {"eh_threshold", p.eh_threshold}};
}

Json to_json(const UserProfile& u) {
  Json j{{"uplink_gain", u.uplink_gain},
         {"downlink_gain", u.downlink_gain},
         {"initial_energy", u.initial_energy},
         {"demand_bits", u.demand_bits}};
  if (u.eh_slope) j["eh_slope"] = *u.eh_slope;
  if (u.eh_threshold) j["eh_threshold"] = *u.eh_threshold;
  return j;
}

Json to_json(const NetworkInstance& instance) {
  Json users = Json::array();
  for (const auto& u : instance.users) users.push_back(to_json(u));
  return Json{{"params", to_json(instance.params)}, {"users", users}};
}

Json to_json(const GenConfig& c) {
  Json j{{"n_users", c.n_users},
         {"radius", c.radius},
         {"ref_distance", c.ref_distance},
         {"ref_loss_db", c.ref_loss_db},
         {"path_loss_exp", c.path_loss_exp},
         {"shadow_sigma_db", c.shadow_sigma_db},
         {"demand_bits", c.demand_bits},
         {"initial_energy_max", c.initial_energy_max},
         {"fading", c.fading}};
  if (c.fixed_distance) j["fixed_distance"] = *c.fixed_distance;
  j["system"] = to_json(c.system);
  j["seed"] = c.seed;
  return j;
}

Json to_json(const Schedule& s) {
  Json slots = Json::array();
  for (const auto& slot : s.slots)
    slots.push_back(Json{{"user", slot.user + 1}, {"start", slot.start}, {"duration", slot.duration}});
  return Json{{"tau0", s.tau0}, {"slots", slots}};
}

Json to_json(const FeasibilityReport& r) {
  Json energy = Json::array();
  Json traffic = Json::array();
  for (bool b : r.energy_ok) energy.push_back(b);
  for (bool b : r.traffic_ok) traffic.push_back(b);
  return Json{{"feasible", r.all_ok()},
              {"energy_ok", energy},
              {"traffic_ok", traffic},
              {"length", r.length},
              {"throughput", r.throughput},
              {"note", "energy causality checked at each slot completion"}};
}

SystemParams system_params_from_json(const Json& j) {
  only_keys(j,
            {"p_h", "p_max", "bandwidth", "noise_density", "self_interference", "eh_saturation",
             "eh_slope", "eh_threshold"},
            "params");
  SystemParams p;
  p.p_h = number(j, "p_h", p.p_h);
  p.p_max = number(j, "p_max", p.p_max);
  p.bandwidth = number(j, "bandwidth", p.bandwidth);
  p.noise_density = number(j, "noise_density", p.noise_density);
  p.self_interference = number(j, "self_interference", p.self_interference);
  p.eh_saturation = number(j, "eh_saturation", p.eh_saturation);
  p.eh_slope = number(j, "eh_slope", p.eh_slope);
  p.eh_threshold = number(j, "eh_threshold", p.eh_threshold);
  return p;
}

UserProfile user_from_json(const Json& j) {
  only_keys(j,
            {"uplink_gain", "downlink_gain", "initial_energy", "demand_bits", "eh_slope",
             "eh_threshold"},
            "user");
  UserProfile u;
  u.uplink_gain = required_number(j, "uplink_gain", "user");
  u.downlink_gain = required_number(j, "downlink_gain", "user");
  u.initial_energy = number(j, "initial_energy", 0.0);
  u.demand_bits = required_number(j, "demand_bits", "user");
  if (j.contains("eh_slope")) u.eh_slope = number(j, "eh_slope", 0.0);
  if (j.contains("eh_threshold")) u.eh_threshold = number(j, "eh_threshold", 0.0);
  return u;
}

NetworkInstance instance_from_json(const Json& j) {
  only_keys(j, {"params", "users", "provenance"}, "instance");
  NetworkInstance instance;
  if (j.contains("params")) instance.params = system_params_from_json(j.at("params"));
  if (!j.contains("users") || !j.at("users").is_array())
    throw ParseError("instance needs a 'users' array");
  for (const auto& u : j.at("users")) instance.users.push_back(user_from_json(u));
  try {
    instance.check();
  } catch (const InvalidParamsError& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
  return instance;
}

GenConfig gen_config_from_json(const Json& j) {
  only_keys(j,
            {"n_users", "radius", "ref_distance", "ref_loss_db", "path_loss_exp",
             "shadow_sigma_db", "demand_bits", "initial_energy_max", "fading", "fixed_distance",
             "system", "seed"},
            "gen config");
  GenConfig c;
  if (j.contains("n_users")) {
    if (!j.at("n_users").is_number_unsigned()) throw ParseError("n_users must be a positive integer");
    c.n_users = j.at("n_users").get<std::size_t>();
  }
  c.radius = number(j, "radius", c.radius);
  c.ref_distance = number(j, "ref_distance", c.ref_distance);
  c.ref_loss_db = number(j, "ref_loss_db", c.ref_loss_db);
  c.path_loss_exp = number(j, "path_loss_exp", c.path_loss_exp);
  c.shadow_sigma_db = number(j, "shadow_sigma_db", c.shadow_sigma_db);
  c.demand_bits = number(j, "demand_bits", c.demand_bits);
  c.initial_energy_max = number(j, "initial_energy_max", c.initial_energy_max);
  if (j.contains("fading")) {
    if (!j.at("fading").is_boolean()) throw ParseError("fading must be a boolean");
    c.fading = j.at("fading").get<bool>();
  }
  if (j.contains("fixed_distance") && !j.at("fixed_distance").is_null())
    c.fixed_distance = number(j, "fixed_distance", 0.0);
  if (j.contains("system")) c.system = system_params_from_json(j.at("system"));
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ParseError("seed must be a nonnegative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  return c;
}

Json instance_document(const NetworkInstance& instance, const GenConfig& config) {
  Json j = to_json(instance);
  j["provenance"] = Json{{"rng", kRngName}, {"seed", config.seed}, {"config", to_json(config)}};
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace fdwpcn
