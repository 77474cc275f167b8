#pragma once

#include <optional>
#include <utility>

#include "k3walls/charge.hpp"
#include "k3walls/mukai.hpp"

namespace k3walls {

// A class w with (w, host) = 0; theta_host(w) is a divisor class on the
// moduli space of objects of class host.
struct OrthogonalClass {
  MukaiClass w;
  MukaiClass host;
};

// x*H~ + y*B on Hilb^n, in the basis H~ (subschemes meeting a curve in |H|)
// and B (half the non-reduced locus).
struct HilbDivisor {
  Rat x, y;
  long n;

  bool operator==(const HilbDivisor& o) const { return x == o.x && y == o.y && n == o.n; }
};

// p*h + q*b in the dual curve basis: h.H~ = 2d, b.B = 1, h.B = b.H~ = 0.
struct CurveClass {
  Rat p, q;
};

// Raw nef vector y*eRe - x*eIm' with (x, y) = (re, im_over_t) of Z(v) and
// eRe = (1, b, d(b^2-T)), eIm' = (0, 1, 2db). Satisfies (w_raw, v) = 0 and
// (w_raw, w_raw) = 2d(x^2 + T y^2) > 0. The input v is the positive moduli
// vector and is used as given; no half-plane flip is applied (the flip
// would reverse orientation and produce anti-nef classes, e.g. -H~ on the
// Hilbert-Chow line).
MukaiClass w_sigma_raw(const MukaiClass& v, const StabilityPoint& p, const SurfaceData& X);

// Primitive integral representative on the positive ray of w_sigma_raw.
OrthogonalClass w_sigma(const MukaiClass& v, const StabilityPoint& p, const SurfaceData& X);

// t -> 0 limit (up to rescaling): (2d(c-rb), 2d(c-rb)b + s - 2dbc + rdb^2,
// 2dbs - 2d^2 c b^2), primitivized.
OrthogonalClass w_limit_zero(const MukaiClass& v, const Rat& b, const SurfaceData& X);

// t -> infinity limit: (0, -rd, -2d^2 c), primitivized.
OrthogonalClass w_limit_infinity(const MukaiClass& v, const SurfaceData& X);

// Unscaled limit vectors, for the exact identity
// w_sigma_raw(v, (b,T)) = w_limit_zero_raw + T * w_limit_infinity_raw.
MukaiClass w_limit_zero_raw(const MukaiClass& v, const Rat& b, const SurfaceData& X);
MukaiClass w_limit_infinity_raw(const MukaiClass& v, const SurfaceData& X);

// Mukai homomorphism on Hilb^n: host must be (1, 0, 1-n); sends
// (0,-1,0) -> H~ and (1,0,n-1) -> -B, i.e. w -> (-c(w)) H~ + (-r(w)) B.
HilbDivisor theta_hilb(const OrthogonalClass& w, long n);

// Beauville-Bogomolov square 2d x^2 - (2n-2) y^2.
Rat bb_square(const HilbDivisor& D, const SurfaceData& X);

// (p h + q b) . (x H~ + y B) = 2d p x + q y.
Rat curve_divisor_pairing(const CurveClass& R, const HilbDivisor& D, long d);

struct HilbNefCone {
  HilbDivisor gen_a;       // H~
  HilbDivisor gen_b;       // H~ - (2d/(d+n)) B
  CurveClass extremal;     // R = h + (d+n) b
  Rat curve_self_pairing;  // 2d - (d+n)^2/(2n-2)
};

// Nef cone of Hilb^n for Pic = Z*H, H^2 = 2d; requires the Brill-Noether
// hypothesis n >= (d+3)/2 (HypothesisFailed otherwise).
HilbNefCone hilb_nef_cone(long d, long n);

enum class LagrangianCone { None, Nef, Movable };

struct LagrangianResult {
  long k = 0, h = 0;          // coprime solution of d h^2 = k^2 (n-1)
  HilbDivisor square_zero_ray; // h H~ - k B, bb_square = 0
  LagrangianCone cone = LagrangianCone::None;
  std::optional<std::pair<HilbDivisor, HilbDivisor>> generators;
};

// Looks for a square-zero divisor ray on Hilb^n: exists iff d/(n-1) is the
// square of a rational k/h. For h = 1, k >= 2 the nef cone is
// {H~, H~ - kB}; for h = 2 (k odd) the movable cone is {H~, 2H~ - kB},
// certified instance-by-instance through the spherical obstruction system.
std::optional<LagrangianResult> lagrangian_check(long d, long n);

} // namespace k3walls
