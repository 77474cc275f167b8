#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "k3walls/emit.hpp"
#include "k3walls/report.hpp"

using namespace k3walls;

namespace {

struct FlagValues {
  std::string config_path, vector_s, b, T, b_min, b_max, T_min, T_max, dest, format, out;
  long d = -1, n = -1, rank_bound = -1;
  bool mukai_filter = false;
  std::vector<std::string> constraints;
};

void add_common_flags(CLI::App* cmd, FlagValues& fv) {
  cmd->add_option("--config", fv.config_path, "key=value config file");
  cmd->add_option("--d", fv.d, "surface degree: H^2 = 2d");
  cmd->add_option("--vector", fv.vector_s, "Mukai class r,c,s (exact rationals)");
  cmd->add_option("--b", fv.b, "slice parameter b (p/q)");
  cmd->add_option("--T", fv.T, "slice parameter T = t^2 (p/q)");
  cmd->add_option("--b-min", fv.b_min, "region lower b");
  cmd->add_option("--b-max", fv.b_max, "region upper b");
  cmd->add_option("--T-min", fv.T_min, "region lower T (0 means open at 0)");
  cmd->add_option("--T-max", fv.T_max, "region upper T");
  cmd->add_option("--n", fv.n, "number of points on Hilb^n");
  cmd->add_option("--rank-bound", fv.rank_bound,
                  "destabilizer rank bound (default 2|r(v)|+4; env K3WALLS_RANK_BOUND)");
  cmd->add_option("--dest", fv.dest, "destabilizer class r,c,s (classify)");
  cmd->add_option("--constraint", fv.constraints, "spherical-solve constraint 'r,c,s : a'")
      ->take_all();
  cmd->add_flag("--mukai-filter", fv.mukai_filter,
                "also require w^2 + (v-w)^2 <= v^2 - 2 (strictness filter)");
  cmd->add_option("--format", fv.format, "comma list of text,json,svg");
  cmd->add_option("--out", fv.out, "output path (format suffix appended for multiple formats)");
}

AnalysisConfig build_config(Command command, const FlagValues& fv) {
  AnalysisConfig cfg;
  if (!fv.config_path.empty()) cfg = parse_config_file(fv.config_path);
  cfg.command = command; // the subcommand wins over any config entry
  auto set = [&](const char* key, const std::string& val) {
    if (!val.empty()) apply_config_line(cfg, key, val);
  };
  if (fv.d >= 0) cfg.d = fv.d;
  set("vector", fv.vector_s);
  set("b", fv.b);
  set("T", fv.T);
  set("b_min", fv.b_min);
  set("b_max", fv.b_max);
  set("T_min", fv.T_min);
  set("T_max", fv.T_max);
  if (fv.n >= 0) cfg.n = fv.n;
  if (fv.rank_bound >= 0) cfg.rank_bound = fv.rank_bound;
  set("dest", fv.dest);
  for (const auto& c : fv.constraints) apply_config_line(cfg, "constraint", c);
  if (fv.mukai_filter) cfg.mukai_filter = true;
  set("format", fv.format);
  if (!fv.out.empty()) cfg.out_path = fv.out;
  return cfg;
}

int run_and_emit(const AnalysisConfig& cfg) {
  AnalysisReport rep = run(cfg);
  for (const auto& fmt : cfg.formats) {
    std::string payload = emit(rep, fmt);
    if (cfg.out_path.empty()) {
      std::cout << payload;
    } else {
      std::string path = cfg.out_path;
      if (cfg.formats.size() > 1) path += "." + fmt;
      std::ofstream out(path, std::ios::binary);
      if (!out) throw ConfigError("cannot write output file '" + path + "'");
      out << payload;
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact wall-and-chamber calculator for Bridgeland stability on K3 surfaces "
               "with Pic = Z*H (slice omega = tH, beta = bH, T = t^2)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {
      {"walls", "potential destabilizer walls meeting a (b,T) region", Command::Walls},
      {"path", "wall crossings along a vertical line b = const", Command::Path},
      {"gieseker-bound", "D_v, mu_max and the Gieseker-chamber T bound", Command::GiesekerBound},
      {"nef-divisor", "nef class w_sigma at a point, with its t->0 and t->inf limits",
       Command::NefDivisor},
      {"hilb-nef", "nef cone of Hilb^n and its extremal curve", Command::HilbNef},
      {"lagrangian", "square-zero ray and nef/movable cone for Hilb^n", Command::Lagrangian},
      {"is-geometric", "does sigma_{b,T} exist (spherical-hole test)", Command::IsGeometric},
      {"spherical-solve", "integral spherical classes meeting pairing constraints",
       Command::SphericalSolve},
      {"classify", "wall geometry and annotation flags for a destabilizer", Command::Classify},
  };

  std::vector<std::pair<Command, FlagValues>> pending;
  pending.reserve(std::size(subs));
  for (const auto& s : subs) {
    pending.emplace_back(s.command, FlagValues{});
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    add_common_flags(cmd, pending.back().second);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (size_t i = 0; i < std::size(subs); ++i)
      if (app.get_subcommands().size() == 1 &&
          app.get_subcommands()[0]->get_name() == subs[i].name)
        return run_and_emit(build_config(pending[i].first, pending[i].second));
    throw ConfigError("no command given");
  } catch (const ConfigError& e) {
    std::cerr << "k3walls: " << e.what() << "\n";
    return 2;
  } catch (const CoreError& e) {
    std::cerr << "k3walls: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "k3walls: error: " << e.what() << "\n";
    return 3;
  }
}
