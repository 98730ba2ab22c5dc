#include "cli/config.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

#include "fovir/sweep.hpp"

namespace fovir::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) {
    throw std::invalid_argument("config: '" + where + "' must be an object");
  }
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) {
      throw std::invalid_argument("config: unknown key '" + key + "' in " + where);
    }
  }
}

double number(const json& j, const std::string& key) {
  if (!j.is_number()) {
    throw std::invalid_argument("config: '" + key + "' must be a number");
  }
  return j.get<double>();
}

ProliferationKind kind_from(const json& j) {
  const auto k = j.is_string() ? parse_kind(j.get<std::string>()) : std::nullopt;
  if (!k) {
    throw std::invalid_argument("config: kinds must be among f1, f2, f3, f4");
  }
  return *k;
}

}  // namespace

void RunConfig::validate() const {
  params.validate();
  if (kinds.empty()) throw std::invalid_argument("config: at least one kind is required");
  if (alphas.empty()) throw std::invalid_argument("config: at least one alpha is required");
  for (double a : alphas) {
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("config: alpha must lie in (0, 1]");
  }
  for (double v : initial.to_vec()) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("config: initial state must be non-negative and finite");
    }
  }
  SolverConfig probe = solver;
  probe.alpha = alphas.front();
  probe.validate();
  for (const auto& a : axes) {
    Axis::parse(a);
  }
}

RunConfig default_config() { return RunConfig{}; }

RunConfig config_from_json(const json& j) {
  RunConfig cfg = default_config();
  reject_unknown(j, {"params", "kinds", "alphas", "initial_state", "solver", "output", "sweep"},
                 "config");

  if (j.contains("params")) {
    const json& p = j.at("params");
    if (!p.is_object()) throw std::invalid_argument("config: 'params' must be an object");
    for (const auto& [key, value] : p.items()) {
      const auto id = parse_param(key);
      if (!id || *id == Param::Alpha) {
        throw std::invalid_argument("config: unknown parameter '" + key + "'");
      }
      set_param(cfg.params, *id, number(value, key));
    }
  }
  if (j.contains("kinds")) {
    const json& k = j.at("kinds");
    cfg.kinds.clear();
    if (k.is_array()) {
      for (const auto& e : k) cfg.kinds.push_back(kind_from(e));
    } else {
      cfg.kinds.push_back(kind_from(k));
    }
  }
  if (j.contains("alphas")) {
    const json& a = j.at("alphas");
    cfg.alphas.clear();
    if (a.is_array()) {
      for (const auto& e : a) cfg.alphas.push_back(number(e, "alphas"));
    } else {
      cfg.alphas.push_back(number(a, "alphas"));
    }
  }
  if (j.contains("initial_state")) {
    const json& s = j.at("initial_state");
    reject_unknown(s, {"T", "I", "V", "C"}, "initial_state");
    if (s.contains("T")) cfg.initial.T = number(s.at("T"), "T");
    if (s.contains("I")) cfg.initial.I = number(s.at("I"), "I");
    if (s.contains("V")) cfg.initial.V = number(s.at("V"), "V");
    if (s.contains("C")) cfg.initial.C = number(s.at("C"), "C");
  }
  if (j.contains("solver")) {
    const json& s = j.at("solver");
    reject_unknown(s, {"h", "t_end", "corrector_iterations", "positivity_tolerance"}, "solver");
    if (s.contains("h")) cfg.solver.step_size = number(s.at("h"), "h");
    if (s.contains("t_end")) cfg.solver.t_end = number(s.at("t_end"), "t_end");
    if (s.contains("corrector_iterations")) {
      if (!s.at("corrector_iterations").is_number_integer()) {
        throw std::invalid_argument("config: 'corrector_iterations' must be an integer");
      }
      cfg.solver.corrector_iterations = s.at("corrector_iterations").get<int>();
    }
    if (s.contains("positivity_tolerance")) {
      // null disables the check (JSON has no infinity)
      const json& tol = s.at("positivity_tolerance");
      cfg.solver.positivity_tolerance = tol.is_null() ? std::numeric_limits<double>::infinity()
                                                      : number(tol, "positivity_tolerance");
    }
  }
  if (j.contains("output")) {
    const json& o = j.at("output");
    reject_unknown(o, {"dir", "svg"}, "output");
    if (o.contains("dir")) cfg.output.dir = o.at("dir").get<std::string>();
    if (o.contains("svg")) cfg.output.svg = o.at("svg").get<bool>();
  }
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    reject_unknown(s, {"axes"}, "sweep");
    if (s.contains("axes")) cfg.axes = s.at("axes").get<std::vector<std::string>>();
  }
  cfg.validate();
  return cfg;
}

json config_to_json(const RunConfig& cfg) {
  json params = json::object();
  for (Param p : all_params()) {
    if (p == Param::Alpha) continue;
    params[std::string(param_name(p))] = get_param(cfg.params, p);
  }
  json kinds = json::array();
  for (auto k : cfg.kinds) kinds.push_back(std::string(kind_name(k)));
  return json{
      {"params", params},
      {"kinds", kinds},
      {"alphas", cfg.alphas},
      {"initial_state",
       {{"T", cfg.initial.T}, {"I", cfg.initial.I}, {"V", cfg.initial.V}, {"C", cfg.initial.C}}},
      {"solver",
       {{"h", cfg.solver.step_size},
        {"t_end", cfg.solver.t_end},
        {"corrector_iterations", cfg.solver.corrector_iterations},
        {"positivity_tolerance", std::isinf(cfg.solver.positivity_tolerance)
                                     ? json(nullptr)
                                     : json(cfg.solver.positivity_tolerance)}}},
      {"output", {{"dir", cfg.output.dir.string()}, {"svg", cfg.output.svg}}},
      {"sweep", {{"axes", cfg.axes}}},
  };
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open '" + path.string() + "'");
  }
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace fovir::cli
