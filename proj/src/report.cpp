#include "k3walls/report.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "k3walls/emit.hpp"

namespace k3walls {

using nlohmann::json;

Command command_from_string(const std::string& s) {
  static const std::map<std::string, Command> table = {
      {"walls", Command::Walls},
      {"path", Command::Path},
      {"gieseker-bound", Command::GiesekerBound},
      {"nef-divisor", Command::NefDivisor},
      {"hilb-nef", Command::HilbNef},
      {"lagrangian", Command::Lagrangian},
      {"is-geometric", Command::IsGeometric},
      {"spherical-solve", Command::SphericalSolve},
      {"classify", Command::Classify},
  };
  auto it = table.find(s);
  if (it == table.end()) throw ConfigError("unknown command '" + s + "'");
  return it->second;
}

std::string command_to_string(Command c) {
  switch (c) {
    case Command::Walls: return "walls";
    case Command::Path: return "path";
    case Command::GiesekerBound: return "gieseker-bound";
    case Command::NefDivisor: return "nef-divisor";
    case Command::HilbNef: return "hilb-nef";
    case Command::Lagrangian: return "lagrangian";
    case Command::IsGeometric: return "is-geometric";
    case Command::SphericalSolve: return "spherical-solve";
    case Command::Classify: return "classify";
  }
  return "?";
}

namespace {

Rat require_rat(const std::string& value, const std::string& key) {
  auto q = parse_rat(value);
  if (!q) throw ConfigError("key '" + key + "': malformed rational '" + value +
                            "' (use p/q or integer, never floats)");
  return *q;
}

long require_long(const std::string& value, const std::string& key) {
  auto q = parse_rat(value);
  if (!q || !is_integer(*q))
    throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
  return q->get_num().get_si();
}

MukaiClass parse_class(const std::string& value, const std::string& key) {
  std::vector<Rat> parts;
  std::string tok;
  std::istringstream in(value);
  while (std::getline(in, tok, ',')) parts.push_back(require_rat(tok, key));
  if (parts.size() != 3)
    throw ConfigError("key '" + key + "': expected r,c,s with three components");
  return {parts[0], parts[1], parts[2]};
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream in(value);
  while (std::getline(in, tok, ',')) out.push_back(tok);
  return out;
}

} // namespace

void apply_config_line(AnalysisConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "command") cfg.command = command_from_string(value);
  else if (key == "d") cfg.d = require_long(value, key);
  else if (key == "vector") cfg.vector = parse_class(value, key);
  else if (key == "b") cfg.b = require_rat(value, key);
  else if (key == "T") cfg.T = require_rat(value, key);
  else if (key == "b_min") cfg.b_min = require_rat(value, key);
  else if (key == "b_max") cfg.b_max = require_rat(value, key);
  else if (key == "T_min") cfg.T_min = require_rat(value, key);
  else if (key == "T_max") cfg.T_max = require_rat(value, key);
  else if (key == "n") cfg.n = require_long(value, key);
  else if (key == "rank_bound") cfg.rank_bound = require_long(value, key);
  else if (key == "dest") cfg.dest = parse_class(value, key);
  else if (key == "mukai_filter") cfg.mukai_filter = (value == "true" || value == "1");
  else if (key == "format") cfg.formats = split_list(value);
  else if (key == "out") cfg.out_path = value;
  else if (key == "constraint") {
    // "r,c,s : a"
    auto colon = value.find(':');
    if (colon == std::string::npos)
      throw ConfigError("constraint must be 'r,c,s : a', got '" + value + "'");
    auto strip = [](std::string s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
      return s;
    };
    MukaiClass u = parse_class(strip(value.substr(0, colon)), key);
    Rat a = require_rat(strip(value.substr(colon + 1)), key);
    cfg.constraints.emplace_back(u, a);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

AnalysisConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  AnalysisConfig cfg;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto strip = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    };
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    apply_config_line(cfg, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
  }
  return cfg;
}

namespace {

const MukaiClass& require_vector(const AnalysisConfig& cfg) {
  if (!cfg.vector) throw ConfigError("this command requires 'vector'");
  return *cfg.vector;
}

Rat require_field(const std::optional<Rat>& f, const char* name) {
  if (!f) throw ConfigError(std::string("this command requires '") + name + "'");
  return *f;
}

long require_n(const AnalysisConfig& cfg) {
  if (!cfg.n) throw ConfigError("this command requires 'n'");
  if (*cfg.n < 2) throw ConfigError("n must be >= 2");
  return *cfg.n;
}

long resolve_rank_bound(const AnalysisConfig& cfg, const MukaiClass& v) {
  if (cfg.rank_bound) {
    if (*cfg.rank_bound < 1) throw ConfigError("rank_bound must be >= 1");
    return *cfg.rank_bound;
  }
  if (const char* env = std::getenv("K3WALLS_RANK_BOUND")) {
    auto q = parse_rat(env);
    if (!q || !is_integer(*q) || *q < 1)
      throw ConfigError("K3WALLS_RANK_BOUND must be a positive integer");
    return q->get_num().get_si();
  }
  return default_rank_bound(v);
}

json flags_to_json(const WallFlags& f) {
  return json{{"has_spherical_destabilizer", f.has_spherical_destabilizer},
              {"has_isotropic_destabilizer", f.has_isotropic_destabilizer},
              {"pairing_one_with_spherical", f.pairing_one_with_spherical},
              {"pairing_at_least_two", f.pairing_at_least_two},
              {"hilbert_chow", f.hilbert_chow},
              {"totally_semistable_hint", f.totally_semistable_hint}};
}

json orth_to_json(const OrthogonalClass& w) { return class_to_json(w.w); }

// Boundary-type note: in Picard rank one 2dc^2 = -2 has no solution, so no
// (-2)-curves exist and only the (A+-) boundary cases can occur.
constexpr const char* kBoundaryNote =
    "Picard rank one: no (-2)-curves, only spherical-bundle boundary types (A+/A-) occur; "
    "flags are annotations, not theorem-level classification";

} // namespace

AnalysisReport run(const AnalysisConfig& cfg) {
  SurfaceData X(cfg.d);
  AnalysisReport rep;
  rep.config = cfg;
  json& res = rep.result;

  switch (cfg.command) {
    case Command::Walls: {
      const MukaiClass& v = require_vector(cfg);
      Region region{require_field(cfg.b_min, "b_min"), require_field(cfg.b_max, "b_max"),
                    require_field(cfg.T_min, "T_min"), require_field(cfg.T_max, "T_max")};
      rep.rank_bound_used = resolve_rank_bound(cfg, v);
      auto walls = potential_destabilizers(v, region, rep.rank_bound_used, X,
                                           ExecMode::Parallel, cfg.mukai_filter);
      res["walls"] = json::array();
      for (const auto& w : walls) {
        json jw = wall_to_json(w);
        jw["flags"] = flags_to_json(classify_wall(v, w, X, cfg.n));
        res["walls"].push_back(jw);
      }
      break;
    }
    case Command::Path: {
      const MukaiClass& v = require_vector(cfg);
      Rat b = require_field(cfg.b, "b");
      Rat T_lo = cfg.T_min ? *cfg.T_min : Rat(0);
      Rat T_hi = require_field(cfg.T_max, "T_max");
      rep.rank_bound_used = resolve_rank_bound(cfg, v);
      auto crossings = walls_on_vertical_path(v, b, T_lo, T_hi, rep.rank_bound_used, X);
      res["crossings"] = json::array();
      for (const auto& c : crossings) {
        json jc;
        jc["T"] = rat_pq(c.T);
        jc["wall"] = wall_to_json(c.wall);
        jc["flags"] = flags_to_json(classify_wall(v, c.wall, X, cfg.n));
        res["crossings"].push_back(jc);
      }
      break;
    }
    case Command::GiesekerBound: {
      const MukaiClass& v = require_vector(cfg);
      Rat b = require_field(cfg.b, "b");
      auto gb = gieseker_bound(v, b, X);
      auto sd = slope_and_discrepancy(v, b, X);
      res["Dv"] = json::array();
      for (const auto& w : gb.Dv) res["Dv"].push_back(class_to_json(w));
      res["mu_max_hat"] = rat_pq(gb.mu_max_hat);
      res["T_bound"] = rat_pq(gb.T_bound);
      res["mu_hat"] = rat_pq(sd.mu_hat);
      res["delta"] = rat_pq(sd.delta);
      break;
    }
    case Command::NefDivisor: {
      const MukaiClass& v = require_vector(cfg);
      StabilityPoint p{require_field(cfg.b, "b"), require_field(cfg.T, "T")};
      auto w = w_sigma(v, p, X);
      res["w_sigma"] = orth_to_json(w);
      res["pairing_with_v"] = rat_pq(mukai_pairing(w.w, v, X));
      res["w_limit_zero"] = orth_to_json(w_limit_zero(v, p.b, X));
      res["w_limit_infinity"] = orth_to_json(w_limit_infinity(v, X));
      // Hilbert-scheme coordinates when v = (1, 0, 1-n).
      if (v.r == 1 && v.c == 0 && is_integer(v.s) && v.s <= -1) {
        long n = 1 - v.s.get_num().get_si();
        HilbDivisor D = theta_hilb(w, n);
        res["theta"] = divisor_string(D);
        res["theta_bb_square"] = rat_pq(bb_square(D, X));
      }
      break;
    }
    case Command::HilbNef: {
      long n = require_n(cfg);
      auto cone = hilb_nef_cone(cfg.d, n);
      res["generators"] = json::array({divisor_string(cone.gen_a), divisor_string(cone.gen_b)});
      res["extremal_curve"] = json{{"p", rat_pq(cone.extremal.p)}, {"q", rat_pq(cone.extremal.q)}};
      res["curve_self_pairing"] = rat_pq(cone.curve_self_pairing);
      res["curve_pairing_with_second_generator"] =
          rat_pq(curve_divisor_pairing(cone.extremal, cone.gen_b, cfg.d));
      break;
    }
    case Command::Lagrangian: {
      long n = require_n(cfg);
      auto lr = lagrangian_check(cfg.d, n);
      if (!lr) {
        res["exists"] = false;
      } else {
        res["exists"] = true;
        res["k"] = lr->k;
        res["h"] = lr->h;
        res["square_zero_ray"] = divisor_string(lr->square_zero_ray);
        switch (lr->cone) {
          case LagrangianCone::Nef:
            res["cone"] = "nef";
            res["nef_generators"] = json::array(
                {divisor_string(lr->generators->first), divisor_string(lr->generators->second)});
            break;
          case LagrangianCone::Movable:
            res["cone"] = "movable";
            res["movable_generators"] = json::array(
                {divisor_string(lr->generators->first), divisor_string(lr->generators->second)});
            break;
          case LagrangianCone::None:
            res["cone"] = "none";
            break;
        }
      }
      break;
    }
    case Command::IsGeometric: {
      StabilityPoint p{require_field(cfg.b, "b"), require_field(cfg.T, "T")};
      auto g = is_geometric(p, X);
      res["geometric"] = g.geometric;
      if (g.witness) {
        res["witness"] = class_to_json(*g.witness);
        Int q = p.b.get_den();
        res["threshold_T"] = rat_pq(Rat(1) / (Rat(X.d) * Rat(q) * Rat(q)));
      }
      break;
    }
    case Command::SphericalSolve: {
      if (cfg.constraints.empty())
        throw ConfigError("spherical-solve requires at least two 'constraint' entries");
      auto sols = spherical_solver(cfg.constraints, X);
      res["solutions"] = json::array();
      for (const auto& s : sols) res["solutions"].push_back(class_to_json(s));
      break;
    }
    case Command::Classify: {
      const MukaiClass& v = require_vector(cfg);
      if (!cfg.dest) throw ConfigError("classify requires 'dest'");
      auto geo = wall_of_pair(v, *cfg.dest, X);
      if (!geo) throw ConfigError("the given pair has no wall in the slice");
      Wall wall;
      wall.geometry = *geo;
      MukaiClass w = *cfg.dest;
      MukaiClass comp = v - w;
      std::vector<MukaiClass> reps = {w};
      if (!(comp == w)) reps.push_back(comp);
      std::sort(reps.begin(), reps.end());
      for (const auto& r : reps)
        wall.destabilizers.push_back({r, v - r, mukai_pairing(r, v - r, X)});
      res["wall"] = wall_to_json(wall);
      res["flags"] = flags_to_json(classify_wall(v, wall, X, cfg.n));
      res["note"] = kBoundaryNote;
      break;
    }
  }
  return rep;
}

} // namespace k3walls
