#include "k3walls/emit.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace k3walls {

using nlohmann::json;

json class_to_json(const MukaiClass& v) {
  return json::array({rat_pq(v.r), rat_pq(v.c), rat_pq(v.s)});
}

namespace {

MukaiClass class_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("class must be a 3-array");
  auto get = [&](size_t i) {
    auto q = parse_rat(j[i].get<std::string>());
    if (!q) throw ConfigError("malformed rational in class");
    return *q;
  };
  return {get(0), get(1), get(2)};
}

json geometry_to_json(const WallGeometry& g) {
  if (g.type == WallGeometry::Type::Semicircle)
    return json{{"type", "semicircle"}, {"center_b", rat_pq(g.center_b)},
                {"radius_sq", rat_pq(g.radius_sq)}};
  return json{{"type", "vertical"}, {"b", rat_pq(g.center_b)}};
}

std::string fmt_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 4);
  (void)ec;
  return std::string(buf, ptr);
}

} // namespace

json wall_to_json(const Wall& w) {
  json j;
  j["geometry"] = geometry_to_json(w.geometry);
  j["destabilizers"] = json::array();
  for (const auto& d : w.destabilizers)
    j["destabilizers"].push_back(json{{"class", class_to_json(d.w)},
                                      {"complement", class_to_json(d.complement)},
                                      {"pairing", rat_pq(d.pairing)}});
  return j;
}

std::string divisor_string(const HilbDivisor& D) {
  std::string out = rat_pq(D.x) + " H~ ";
  if (D.y >= 0)
    out += "+ " + rat_pq(D.y) + " B";
  else
    out += "- " + rat_pq(Rat(-D.y)) + " B";
  return out;
}

json config_to_json(const AnalysisConfig& cfg) {
  json j;
  j["command"] = command_to_string(cfg.command);
  j["d"] = cfg.d;
  j["formats"] = cfg.formats;
  j["mukai_filter"] = cfg.mukai_filter;
  j["out"] = cfg.out_path;
  if (cfg.vector) j["vector"] = class_to_json(*cfg.vector);
  if (cfg.b) j["b"] = rat_pq(*cfg.b);
  if (cfg.T) j["T"] = rat_pq(*cfg.T);
  if (cfg.b_min) j["b_min"] = rat_pq(*cfg.b_min);
  if (cfg.b_max) j["b_max"] = rat_pq(*cfg.b_max);
  if (cfg.T_min) j["T_min"] = rat_pq(*cfg.T_min);
  if (cfg.T_max) j["T_max"] = rat_pq(*cfg.T_max);
  if (cfg.n) j["n"] = *cfg.n;
  if (cfg.rank_bound) j["rank_bound"] = *cfg.rank_bound;
  if (cfg.dest) j["dest"] = class_to_json(*cfg.dest);
  if (!cfg.constraints.empty()) {
    j["constraints"] = json::array();
    for (const auto& [u, a] : cfg.constraints)
      j["constraints"].push_back(json{{"functional", class_to_json(u)}, {"target", rat_pq(a)}});
  }
  return j;
}

AnalysisConfig config_from_json(const json& j) {
  AnalysisConfig cfg;
  cfg.command = command_from_string(j.at("command").get<std::string>());
  cfg.d = j.at("d").get<long>();
  cfg.formats = j.at("formats").get<std::vector<std::string>>();
  cfg.mukai_filter = j.at("mukai_filter").get<bool>();
  cfg.out_path = j.at("out").get<std::string>();
  auto opt_rat = [&](const char* key) -> std::optional<Rat> {
    if (!j.contains(key)) return std::nullopt;
    auto q = parse_rat(j.at(key).get<std::string>());
    if (!q) throw ConfigError(std::string("malformed rational for ") + key);
    return q;
  };
  if (j.contains("vector")) cfg.vector = class_from_json(j.at("vector"));
  cfg.b = opt_rat("b");
  cfg.T = opt_rat("T");
  cfg.b_min = opt_rat("b_min");
  cfg.b_max = opt_rat("b_max");
  cfg.T_min = opt_rat("T_min");
  cfg.T_max = opt_rat("T_max");
  if (j.contains("n")) cfg.n = j.at("n").get<long>();
  if (j.contains("rank_bound")) cfg.rank_bound = j.at("rank_bound").get<long>();
  if (j.contains("dest")) cfg.dest = class_from_json(j.at("dest"));
  if (j.contains("constraints"))
    for (const auto& c : j.at("constraints")) {
      auto q = parse_rat(c.at("target").get<std::string>());
      if (!q) throw ConfigError("malformed constraint target");
      cfg.constraints.emplace_back(class_from_json(c.at("functional")), *q);
    }
  return cfg;
}

namespace {

std::string emit_json(const AnalysisReport& rep) {
  json j;
  j["config"] = config_to_json(rep.config);
  j["rank_bound"] = rep.rank_bound_used;
  j["result"] = rep.result;
  j["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
  return j.dump(2) + "\n";
}

// ---- text -----------------------------------------------------------------

std::string human_rat(const std::string& pq) {
  auto q = parse_rat(pq);
  return q ? rat_str(*q) : pq;
}

std::string human_divisor(const std::string& pq_form) {
  // "p/q H~ +- p/q B" -> drop unit coefficients and zero terms.
  std::istringstream in(pq_form);
  std::string xs, htok, sign, ys, btok;
  in >> xs >> htok >> sign >> ys >> btok;
  Rat x = *parse_rat(xs), y = *parse_rat(ys);
  if (sign == "-") y = -y;
  std::string out;
  if (x == 1) out = "H~";
  else if (x == -1) out = "-H~";
  else if (x != 0) out = rat_str(x) + " H~";
  if (y != 0) {
    std::string ystr = (abs(y) == 1) ? "B" : rat_str(Rat(abs(y))) + " B";
    if (out.empty()) out = (y < 0 ? "-" : "") + ystr;
    else out += (y < 0 ? " - " : " + ") + ystr;
  }
  if (out.empty()) out = "0";
  return out;
}

std::string class_str_from_json(const json& arr) {
  std::string out = "(";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ",";
    out += human_rat(arr[i].get<std::string>());
  }
  return out + ")";
}

std::string geometry_str(const json& g) {
  if (g.at("type") == "semicircle")
    return "semicircle  center " + human_rat(g.at("center_b")) + "  radius^2 " +
           human_rat(g.at("radius_sq"));
  return "vertical line  b = " + human_rat(g.at("b"));
}

void text_wall(std::ostream& os, const json& w, const std::string& indent) {
  os << indent << geometry_str(w.at("geometry")) << "\n";
  for (const auto& d : w.at("destabilizers"))
    os << indent << "  w = " << class_str_from_json(d.at("class"))
       << "   v-w = " << class_str_from_json(d.at("complement"))
       << "   (w,v-w) = " << human_rat(d.at("pairing")) << "\n";
  if (w.contains("flags")) {
    std::string active;
    for (auto& [k, val] : w.at("flags").items())
      if (val.get<bool>()) active += (active.empty() ? "" : ", ") + k;
    if (!active.empty()) os << indent << "  flags: " << active << "\n";
  }
}

std::string emit_text(const AnalysisReport& rep) {
  std::ostringstream os;
  const json& r = rep.result;
  os << kToolName << " " << kToolVersion << "  command=" << command_to_string(rep.config.command)
     << "  d=" << rep.config.d;
  if (rep.config.vector)
    os << "  v=" << rep.config.vector->str();
  if (rep.config.n) os << "  n=" << *rep.config.n;
  os << "\n";
  if (rep.rank_bound_used > 0) os << "rank bound: " << rep.rank_bound_used << "\n";

  switch (rep.config.command) {
    case Command::Walls: {
      os << "walls: " << r.at("walls").size() << "\n";
      for (const auto& w : r.at("walls")) text_wall(os, w, "  ");
      break;
    }
    case Command::Path: {
      os << "crossings: " << r.at("crossings").size() << "\n";
      for (const auto& c : r.at("crossings")) {
        os << "  T = " << human_rat(c.at("T")) << "\n";
        text_wall(os, c.at("wall"), "    ");
      }
      break;
    }
    case Command::GiesekerBound: {
      os << "mu_hat(v) = " << human_rat(r.at("mu_hat"))
         << "   delta(v) = " << human_rat(r.at("delta")) << "\n";
      os << "D_v (" << r.at("Dv").size() << " classes):";
      for (const auto& w : r.at("Dv")) os << " " << class_str_from_json(w);
      os << "\n";
      os << "mu_max_hat = " << human_rat(r.at("mu_max_hat"))
         << "   T_bound = " << human_rat(r.at("T_bound")) << "\n";
      break;
    }
    case Command::NefDivisor: {
      os << "w_sigma = " << class_str_from_json(r.at("w_sigma"))
         << "   (w_sigma, v) = " << human_rat(r.at("pairing_with_v")) << "\n";
      os << "w(t->0) = " << class_str_from_json(r.at("w_limit_zero"))
         << "   w(t->inf) = " << class_str_from_json(r.at("w_limit_infinity")) << "\n";
      if (r.contains("theta"))
        os << "theta = " << human_divisor(r.at("theta"))
           << "   q(theta) = " << human_rat(r.at("theta_bb_square")) << "\n";
      break;
    }
    case Command::HilbNef: {
      os << "nef cone generators:\n";
      for (const auto& g : r.at("generators"))
        os << "  " << human_divisor(g.get<std::string>()) << "\n";
      os << "extremal curve R = h + " << human_rat(r.at("extremal_curve").at("q")) << " b"
         << "   (R,R) = " << human_rat(r.at("curve_self_pairing"))
         << "   R.gen2 = " << human_rat(r.at("curve_pairing_with_second_generator")) << "\n";
      break;
    }
    case Command::Lagrangian: {
      if (!r.at("exists").get<bool>()) {
        os << "no square-zero divisor ray: d/(n-1) is not the square of a rational\n";
        break;
      }
      os << "k = " << r.at("k").get<long>() << "  h = " << r.at("h").get<long>()
         << "  square-zero ray: " << human_divisor(r.at("square_zero_ray")) << "\n";
      if (r.at("cone") == "nef") {
        os << "nef cone generators:\n";
        for (const auto& g : r.at("nef_generators"))
          os << "  " << human_divisor(g.get<std::string>()) << "\n";
      } else if (r.at("cone") == "movable") {
        os << "movable cone generators:\n";
        for (const auto& g : r.at("movable_generators"))
          os << "  " << human_divisor(g.get<std::string>()) << "\n";
      } else {
        os << "no cone statement for this (k,h)\n";
      }
      break;
    }
    case Command::IsGeometric: {
      bool geo = r.at("geometric").get<bool>();
      os << "geometric: " << (geo ? "yes" : "no") << "\n";
      if (!geo)
        os << "witness spherical class " << class_str_from_json(r.at("witness"))
           << "  (hole up to T = " << human_rat(r.at("threshold_T")) << ")\n";
      break;
    }
    case Command::SphericalSolve: {
      os << "solutions: " << r.at("solutions").size() << "\n";
      for (const auto& s : r.at("solutions")) os << "  " << class_str_from_json(s) << "\n";
      break;
    }
    case Command::Classify: {
      text_wall(os, r.at("wall"), "  ");
      std::string active;
      for (auto& [k, val] : r.at("flags").items())
        if (val.get<bool>()) active += (active.empty() ? "" : ", ") + k;
      os << "  flags: " << (active.empty() ? "(none)" : active) << "\n";
      os << "  note: " << r.at("note").get<std::string>() << "\n";
      break;
    }
  }
  return os.str();
}

// ---- svg ------------------------------------------------------------------

struct SvgFrame {
  double b_lo, b_hi, t_max;
  double width = 800, height = 0, margin = 50;
  double sx(double b) const { return margin + (b - b_lo) / (b_hi - b_lo) * (width - 2 * margin); }
  double sy(double t) const { return height - margin - t / t_max * (height - 2 * margin); }
};

void svg_hole_spikes(std::ostringstream& os, const SvgFrame& fr, long d, const Rat& rb_lo,
                     const Rat& rb_hi) {
  // Spherical holes b = p/q with q | d p^2 + 1, drawn as dashed spikes of
  // height t = 1/(q sqrt(d)); stop once the spike drops below 2% of the
  // frame.
  for (long q = 1; q <= 64; ++q) {
    double spike_t = 1.0 / (q * std::sqrt(double(d)));
    if (spike_t < 0.02 * fr.t_max) break;
    Int p_from = rceil(rb_lo * q);
    Int p_to = rfloor(rb_hi * q);
    for (Int p = p_from; p <= p_to; ++p) {
      Int g = gcd(Int(q), p);
      if (g != 1) continue;
      Int num = Int(d) * p * p + 1;
      if (num % q != 0) continue;
      Rat hb(p, q);
      hb.canonicalize();
      double x = fr.sx(to_double(hb));
      double top = std::min(spike_t, fr.t_max);
      os << "  <line x1=\"" << fmt_double(x) << "\" y1=\"" << fmt_double(fr.sy(0))
         << "\" x2=\"" << fmt_double(x) << "\" y2=\"" << fmt_double(fr.sy(top))
         << "\" stroke=\"#b40\" stroke-dasharray=\"4,3\" data-hole-b=\"" << rat_pq(hb)
         << "\" data-hole-T-max=\"" << rat_pq(Rat(1, q * q) / d) << "\"/>\n"
         << "  <circle cx=\"" << fmt_double(x) << "\" cy=\"" << fmt_double(fr.sy(0))
         << "\" r=\"2.5\" fill=\"#b40\"/>\n";
    }
  }
}

void svg_wall(std::ostringstream& os, const SvgFrame& fr, const json& wall) {
  const json& g = wall.at("geometry");
  std::string label;
  if (!wall.at("destabilizers").empty())
    label = class_str_from_json(wall.at("destabilizers")[0].at("class"));
  if (g.at("type") == "semicircle") {
    Rat center = *parse_rat(g.at("center_b").get<std::string>());
    Rat rsq = *parse_rat(g.at("radius_sq").get<std::string>());
    double c = to_double(center);
    double r = std::sqrt(to_double(rsq));
    // Exact geometry rides along in metadata; the polyline is rendering only.
    os << "  <polyline fill=\"none\" stroke=\"#247\" stroke-width=\"1.2\" data-center-b=\""
       << rat_pq(center) << "\" data-radius-sq=\"" << rat_pq(rsq) << "\" points=\"";
    const int segments = 64;
    bool first = true;
    for (int i = 0; i <= segments; ++i) {
      double ang = M_PI * i / segments;
      double b = c - r * std::cos(ang);
      double t = r * std::sin(ang);
      if (b < fr.b_lo || b > fr.b_hi || t > fr.t_max) continue; // clip to region
      if (!first) os << " ";
      os << fmt_double(fr.sx(b)) << "," << fmt_double(fr.sy(t));
      first = false;
    }
    os << "\"/>\n";
    double label_t = std::min(r, fr.t_max * 0.95);
    if (c >= fr.b_lo && c <= fr.b_hi && !label.empty())
      os << "  <text x=\"" << fmt_double(fr.sx(c)) << "\" y=\""
         << fmt_double(fr.sy(label_t) - 4)
         << "\" font-size=\"10\" text-anchor=\"middle\">" << label << "</text>\n";
  } else {
    Rat bq = *parse_rat(g.at("b").get<std::string>());
    double x = fr.sx(to_double(bq));
    os << "  <line x1=\"" << fmt_double(x) << "\" y1=\"" << fmt_double(fr.sy(0)) << "\" x2=\""
       << fmt_double(x) << "\" y2=\"" << fmt_double(fr.sy(fr.t_max))
       << "\" stroke=\"#247\" stroke-width=\"1.2\" data-b=\"" << rat_pq(bq) << "\"/>\n";
    if (!label.empty())
      os << "  <text x=\"" << fmt_double(x + 3) << "\" y=\"" << fmt_double(fr.sy(fr.t_max) + 12)
         << "\" font-size=\"10\">" << label << "</text>\n";
  }
}

std::string emit_svg(const AnalysisReport& rep) {
  const AnalysisConfig& cfg = rep.config;
  Rat rb_lo(0), rb_hi(0), rT_hi(1);
  if (cfg.command == Command::Walls && cfg.b_min && cfg.b_max && cfg.T_max) {
    rb_lo = *cfg.b_min;
    rb_hi = *cfg.b_max;
    rT_hi = *cfg.T_max;
  } else if (cfg.command == Command::Path && cfg.b && cfg.T_max) {
    rb_lo = *cfg.b - 1;
    rb_hi = *cfg.b + 1;
    rT_hi = *cfg.T_max;
  } else if (cfg.command == Command::IsGeometric && cfg.b && cfg.T) {
    rb_lo = *cfg.b - 1;
    rb_hi = *cfg.b + 1;
    rT_hi = std::max(Rat(*cfg.T * 2), Rat(1));
  } else {
    throw ConfigError("svg output is only supported for walls, path and is-geometric");
  }

  SvgFrame fr{to_double(rb_lo), to_double(rb_hi), std::sqrt(to_double(rT_hi))};
  fr.height = 420;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_double(fr.width)
     << "\" height=\"" << fmt_double(fr.height) << "\" data-tool=\"" << kToolName << " "
     << kToolVersion << "\" data-d=\"" << cfg.d << "\"";
  if (cfg.vector) {
    os << " data-vector=\"" << cfg.vector->str() << "\"";
  }
  os << " data-b-range=\"[" << rat_pq(rb_lo) << "," << rat_pq(rb_hi) << "]\" data-T-max=\""
     << rat_pq(rT_hi) << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes: t vertical, b horizontal
  os << "  <line x1=\"" << fmt_double(fr.sx(fr.b_lo)) << "\" y1=\"" << fmt_double(fr.sy(0))
     << "\" x2=\"" << fmt_double(fr.sx(fr.b_hi)) << "\" y2=\"" << fmt_double(fr.sy(0))
     << "\" stroke=\"black\"/>\n";
  for (Int ib = rceil(rb_lo); ib <= rfloor(rb_hi); ++ib) {
    double x = fr.sx(ib.get_d());
    os << "  <line x1=\"" << fmt_double(x) << "\" y1=\"" << fmt_double(fr.sy(0) - 3)
       << "\" x2=\"" << fmt_double(x) << "\" y2=\"" << fmt_double(fr.sy(0) + 3)
       << "\" stroke=\"black\"/>\n"
       << "  <text x=\"" << fmt_double(x) << "\" y=\"" << fmt_double(fr.sy(0) + 16)
       << "\" font-size=\"10\" text-anchor=\"middle\">b=" << ib.get_str() << "</text>\n";
  }

  svg_hole_spikes(os, fr, cfg.d, rb_lo, rb_hi);

  if (cfg.command == Command::Walls) {
    for (const auto& w : rep.result.at("walls")) svg_wall(os, fr, w);
  } else if (cfg.command == Command::Path) {
    double x = fr.sx(to_double(*cfg.b));
    os << "  <line x1=\"" << fmt_double(x) << "\" y1=\"" << fmt_double(fr.sy(0)) << "\" x2=\""
       << fmt_double(x) << "\" y2=\"" << fmt_double(fr.sy(fr.t_max))
       << "\" stroke=\"#484\" stroke-dasharray=\"6,4\"/>\n";
    for (const auto& c : rep.result.at("crossings")) {
      svg_wall(os, fr, c.at("wall"));
      Rat T = *parse_rat(c.at("T").get<std::string>());
      os << "  <circle cx=\"" << fmt_double(x) << "\" cy=\""
         << fmt_double(fr.sy(std::sqrt(to_double(T)))) << "\" r=\"3\" fill=\"#484\" data-T=\""
         << rat_pq(T) << "\"/>\n";
    }
  } else { // IsGeometric
    double x = fr.sx(to_double(*cfg.b));
    double y = fr.sy(std::sqrt(to_double(*cfg.T)));
    bool geo = rep.result.at("geometric").get<bool>();
    os << "  <circle cx=\"" << fmt_double(x) << "\" cy=\"" << fmt_double(y)
       << "\" r=\"4\" fill=\"" << (geo ? "#161" : "#b11") << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace

std::string emit(const AnalysisReport& report, const std::string& format) {
  if (format == "json") return emit_json(report);
  if (format == "text") return emit_text(report);
  if (format == "svg") return emit_svg(report);
  throw ConfigError("unsupported format '" + format + "' (use text, json or svg)");
}

AnalysisReport parse_report(const std::string& json_bytes) {
  json j = json::parse(json_bytes);
  AnalysisReport rep;
  rep.config = config_from_json(j.at("config"));
  rep.rank_bound_used = j.at("rank_bound").get<long>();
  rep.result = j.at("result");
  return rep;
}

} // namespace k3walls
