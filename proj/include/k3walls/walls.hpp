#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k3walls/charge.hpp"
#include "k3walls/mukai.hpp"

namespace k3walls {

// Locus in the (b, t) upper half-plane where two central charges align in
// phase: a semicircle (b - center)^2 + T = radius_sq, or a vertical line.
struct WallGeometry {
  enum class Type { Semicircle, VerticalLine };
  Type type;
  Rat center_b;  // circle center, or the line's b
  Rat radius_sq; // 0 for vertical lines

  static WallGeometry semicircle(Rat center, Rat rsq) {
    return {Type::Semicircle, std::move(center), std::move(rsq)};
  }
  static WallGeometry vertical(Rat b) { return {Type::VerticalLine, std::move(b), Rat(0)}; }

  bool operator==(const WallGeometry& o) const {
    return type == o.type && center_b == o.center_b && radius_sq == o.radius_sq;
  }
  // Canonical order: by b-position, semicircles before a vertical at the
  // same position, then by radius.
  bool operator<(const WallGeometry& o) const {
    if (center_b != o.center_b) return center_b < o.center_b;
    if (type != o.type) return type == Type::Semicircle;
    return radius_sq < o.radius_sq;
  }
};

struct Destabilizer {
  MukaiClass w;
  MukaiClass complement; // v - w
  Rat pairing;           // (w, v - w)
};

struct Wall {
  WallGeometry geometry;
  std::vector<Destabilizer> destabilizers; // sorted lexicographically by w
};

// b in [b_lo, b_hi], T in [T_lo, T_hi] intersected with T > 0 (so T_lo = 0
// encodes the half-open range (0, T_hi]).
struct Region {
  Rat b_lo, b_hi, T_lo, T_hi;
};

struct GiesekerBoundReport {
  std::vector<MukaiClass> Dv;
  Rat mu_max_hat;
  Rat T_bound;
};

struct WallFlags {
  bool has_spherical_destabilizer = false;
  bool has_isotropic_destabilizer = false;
  bool pairing_one_with_spherical = false;
  bool pairing_at_least_two = false;
  bool hilbert_chow = false;
  bool totally_semistable_hint = false;
};

enum class ExecMode { Serial, Parallel };

// Default enumeration rank bound, reported in output so runs can be
// repeated with larger bounds.
long default_rank_bound(const MukaiClass& v);

// Geometry of the phase-alignment locus of v and w. With
// Delta = c(v) r(w) - r(v) c(w):
//   Delta != 0: semicircle with center -(r(v)s(w) - r(w)s(v)) / (2d Delta)
//               and radius_sq = center^2 - (c(w)s(v) - c(v)s(w)) / (d Delta),
//               returned only when radius_sq > 0;
//   Delta == 0: vertical line at b = (c(v)s(w) - c(w)s(v)) / (r(v)s(w) - r(w)s(v))
//               when the denominator is nonzero; otherwise nullopt.
// Raises ProportionalClasses when v, w are proportional vectors.
std::optional<WallGeometry> wall_of_pair(const MukaiClass& v, const MukaiClass& w,
                                         const SurfaceData& X);

// All integral w with |r(w)| <= rank_bound, w^2 >= -2, (v-w)^2 >= -2 whose
// wall meets the region at a point where 0 <= im(w) <= im(v) (which also
// sandwiches im(v-w)). Walls with identical geometry are merged; output is
// canonically sorted, so serial and parallel runs agree bit for bit.
// The optional Mukai filter additionally requires
// w^2 + (v-w)^2 <= v^2 - 2; it presumes distinct stable factors, so it is
// off by default to never drop a relevant wall.
std::vector<Wall> potential_destabilizers(const MukaiClass& v, const Region& region,
                                          long rank_bound, const SurfaceData& X,
                                          ExecMode mode = ExecMode::Parallel,
                                          bool mukai_filter = false);

struct PathCrossing {
  Rat T;
  Wall wall;
};

// Wall crossings along the line {b} x T_range, in decreasing T. Each T is
// the exact rational solution of the wall equation on the line. Requires
// c(v) - r(v) b != 0.
std::vector<PathCrossing> walls_on_vertical_path(const MukaiClass& v, const Rat& b,
                                                 const Rat& T_lo, const Rat& T_hi,
                                                 long rank_bound, const SurfaceData& X,
                                                 ExecMode mode = ExecMode::Parallel);

// D_v = {w : 0 < r(w) <= r(v), w^2 >= -2, 0 < mu(w) < mu(v), delta(w) < delta(v)},
// enumerated exactly; mu_max_hat = max(mu over D_v, r/(r+1) mu(v));
// 2dT > 2dT_bound reproduces the Gieseker-chamber bound
// omega^2 > 2 + 2 mu_max/(mu - mu_max) delta.
GiesekerBoundReport gieseker_bound(const MukaiClass& v, const Rat& b, const SurfaceData& X);

// Annotation flags from the pairing data of each stored decomposition.
// These are heuristic report flags, never theorem-level classification. In
// Picard rank one no (-2)-curves exist, so only boundary types (A+-) can
// occur; no (C_k) flag is ever emitted.
WallFlags classify_wall(const MukaiClass& v, const Wall& wall, const SurfaceData& X,
                        std::optional<long> hilb_n = std::nullopt);

// All integral xi with (u_i, xi) = a_i for every constraint and xi^2 = -2.
// Exact affine parametrization + rational quadratic + integrality filter;
// an empty list certifies non-existence. Requires the constraint
// functionals to span a subspace of dimension >= 2.
std::vector<MukaiClass> spherical_solver(
    const std::vector<std::pair<MukaiClass, Rat>>& constraints, const SurfaceData& X);

} // namespace k3walls
