#include "qtam/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qtam/errors.hpp"

namespace qtam {

namespace {

using nlohmann::json;

TemperatureSchedule schedule(double t_max, double rate, double scale) {
  TemperatureSchedule s;
  s.t_max = t_max;
  s.rate = rate;
  s.scale = scale;
  return s;
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  cfg.annealer.iterations = 1000;
  cfg.annealer.seed = 1;
  cfg.annealer.archive_capacity = 16;
  cfg.annealer.qaoa_depth = 1;
  cfg.annealer.t_objective = schedule(5.0, 1.0, 250.0);
  cfg.annealer.t_constraint = schedule(5.0, 1.0, 250.0);
  cfg.annealer.t_closeness = schedule(5.0, 1.0, 250.0);
  return cfg;
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  RunConfig cfg = default_config();
  auto& an = cfg.annealer;
  an.iterations = j.value("iterations", an.iterations);
  if (an.iterations < 0) throw ConfigError("iterations must be >= 0");
  an.seed = j.value("seed", an.seed);
  an.archive_capacity = j.value("archive_size", an.archive_capacity);
  if (an.archive_capacity < 1) throw ConfigError("archive_size must be >= 1");

  if (j.contains("temperatures")) {
    const auto& tj = j.at("temperatures");
    const double rate = tj.value("rate", 1.0);
    const double scale = tj.value("scale", 250.0);
    if (scale <= 0.0) throw ConfigError("temperature scale must be > 0");
    an.t_objective = schedule(tj.value("t_f_max", 5.0), rate, scale);
    an.t_constraint = schedule(tj.value("t_g_max", 5.0), rate, scale);
    an.t_closeness = schedule(tj.value("t_c_max", 5.0), rate, scale);
  }

  if (j.contains("move_weights")) {
    const auto w = j.at("move_weights").get<std::vector<double>>();
    if (w.size() != 6)
      throw ConfigError("move_weights needs exactly 6 entries");
    double total = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      if (w[i] < 0.0) throw ConfigError("move weights must be >= 0");
      an.move_weights[i] = w[i];
      total += w[i];
    }
    if (total <= 0.0) throw ConfigError("move weights must not all be zero");
  }
  an.angle_sigma = j.value("angle_sigma", an.angle_sigma);
  if (an.angle_sigma <= 0.0) throw ConfigError("angle_sigma must be > 0");
  an.move_retry_limit = j.value("move_retry_limit", an.move_retry_limit);
  if (an.move_retry_limit < 1)
    throw ConfigError("move_retry_limit must be >= 1");

  cfg.chains = j.value("chains", 1);
  if (cfg.chains < 1) throw ConfigError("chains must be >= 1");
  if (j.contains("seeds")) {
    cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (cfg.seeds.empty()) throw ConfigError("seeds must not be empty");
    cfg.chains = static_cast<int>(cfg.seeds.size());
  }

  auto& ev = cfg.evaluation;
  if (j.contains("alpha")) {
    const auto a = j.at("alpha").get<std::vector<double>>();
    if (a.size() != 5) throw ConfigError("alpha needs exactly 5 entries");
    for (std::size_t i = 0; i < 5; ++i) ev.alpha[i] = a[i];
  }
  for (const auto& sj : j.value("secondary", json::array())) {
    if (!sj.contains("name"))
      throw ConfigError("secondary objective entries need a name");
    ev.secondary.emplace_back(sj.at("name").get<std::string>(),
                              sj.value("weight", 1.0));
  }
  ev.closeness_epsilon = j.value("closeness_epsilon", ev.closeness_epsilon);
  if (ev.closeness_epsilon < 0.0)
    throw ConfigError("closeness_epsilon must be >= 0");

  if (j.contains("router"))
    ev.via_cost = j.at("router").value("via_cost", ev.via_cost);
  if (ev.via_cost < 0.0) throw ConfigError("via_cost must be >= 0");

  if (j.contains("device")) {
    const auto& dj = j.at("device");
    ev.device.j_max = dj.value("j_max", ev.device.j_max);
    ev.device.h_nom = dj.value("h_nom", ev.device.h_nom);
    ev.device.r_0 = dj.value("r_0", ev.device.r_0);
    ev.device.chi = dj.value("chi", ev.device.chi);
    ev.device.delta_0 = dj.value("delta_0", ev.device.delta_0);
    if (ev.device.j_max <= 0.0 || ev.device.h_nom <= 0.0 ||
        ev.device.r_0 <= 0.0 || ev.device.chi <= 0.0 ||
        ev.device.delta_0 < 0.0)
      throw ConfigError("device constants must be positive");
  }

  if (j.contains("qaoa")) {
    const auto& qj = j.at("qaoa");
    cfg.qaoa.depth = qj.value("depth", cfg.qaoa.depth);
    if (cfg.qaoa.depth < 1) throw ConfigError("qaoa depth must be >= 1");
    cfg.qaoa.budget = qj.value("budget", cfg.qaoa.budget);
    if (cfg.qaoa.budget < 1) throw ConfigError("qaoa budget must be >= 1");
    if (qj.contains("memory_budget_mib")) {
      const auto mib = qj.at("memory_budget_mib").get<std::size_t>();
      if (mib < 1) throw ConfigError("memory_budget_mib must be >= 1");
      cfg.qaoa.memory_budget = mib << 20;
    }
  }
  an.qaoa_depth = cfg.qaoa.depth;
  ev.memory_budget = cfg.qaoa.memory_budget;

  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading config file: " + path);
  return parse_config(buf.str());
}

std::string config_hash(const RunConfig& cfg) {
  // Canonical serialization of every result-affecting field, FNV-1a hashed.
  std::ostringstream s;
  char buf[64];
  const auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g;", v);
    s << buf;
  };
  s << cfg.annealer.iterations << ';' << cfg.annealer.seed << ';'
    << cfg.annealer.archive_capacity << ';' << cfg.annealer.qaoa_depth << ';';
  for (const auto& ts : {cfg.annealer.t_objective, cfg.annealer.t_constraint,
                         cfg.annealer.t_closeness}) {
    num(ts.t_max);
    num(ts.rate);
    num(ts.scale);
  }
  for (double w : cfg.annealer.move_weights) num(w);
  num(cfg.annealer.angle_sigma);
  s << cfg.annealer.move_retry_limit << ';' << cfg.chains << ';';
  for (auto seed : cfg.seeds) s << seed << ',';
  s << ';';
  for (double a : cfg.evaluation.alpha) num(a);
  for (const auto& [name, w] : cfg.evaluation.secondary) {
    s << name << '=';
    num(w);
  }
  num(cfg.evaluation.closeness_epsilon);
  num(cfg.evaluation.via_cost);
  num(cfg.evaluation.device.j_max);
  num(cfg.evaluation.device.h_nom);
  num(cfg.evaluation.device.r_0);
  num(cfg.evaluation.device.chi);
  num(cfg.evaluation.device.delta_0);
  s << cfg.qaoa.depth << ';' << cfg.qaoa.budget << ';'
    << cfg.qaoa.memory_budget;

  const std::string text = s.str();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qtam
