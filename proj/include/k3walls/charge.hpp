#pragma once

#include <optional>

#include "k3walls/mukai.hpp"

namespace k3walls {

// Point (b, T) of the slice omega = tH, beta = bH with T = t^2. Keeping T
// instead of t makes every quantity in scope a rational, so all stability
// decisions are exact sign computations.
struct StabilityPoint {
  Rat b, T;

  StabilityPoint(Rat b_, Rat T_) : b(std::move(b_)), T(std::move(T_)) {
    if (T <= 0) throw ConfigError("stability point requires T = t^2 > 0");
  }
};

// Z(v) = re + i * t * im_over_t. The factor t is never materialized; only
// im_over_t (an exact rational) is stored.
struct ChargeValue {
  Rat re, im_over_t;

  bool is_zero() const { return re == 0 && im_over_t == 0; }
  ChargeValue operator-() const { return {-re, -im_over_t}; }
  ChargeValue operator+(const ChargeValue& o) const {
    return {re + o.re, im_over_t + o.im_over_t};
  }
};

enum class Ordering { Less, Equal, Greater };

// re = 2dbc - s - rd(b^2 - T); im_over_t = 2d(c - rb).
ChargeValue central_charge(const MukaiClass& v, const StabilityPoint& p, const SurfaceData& X);

// Flips z to -z when z lies in the lower half-plane or on the positive real
// axis, so the result is in Hbar = {im>0} u {im=0, re<0} (or zero).
// Returns the normalized charge and whether it was flipped.
std::pair<ChargeValue, bool> normalize_half_plane(const ChargeValue& z);

// Compares phases in (0,1] of the half-plane-normalized charges of v and w:
// Less means phi(v) < phi(w). Decided by the exact sign of
// im(v) re(w) - re(v) im(w); im = 0 points have phase 1. A single zero
// charge compares Equal to anything (the sign expression vanishes); two
// zero charges raise ZeroCharge.
Ordering phase_compare(const MukaiClass& v, const MukaiClass& w, const StabilityPoint& p,
                       const SurfaceData& X);

struct SlopeDiscrepancy {
  Rat mu_hat; // mu_{omega,beta}/t = 2d(c - rb)/r
  Rat delta;  // independent of T
};

// Requires r(v) > 0. delta = -(s - 2dbc + rdb^2)/r + 1 + d(c - rb)^2/r^2.
SlopeDiscrepancy slope_and_discrepancy(const MukaiClass& v, const Rat& b, const SurfaceData& X);

struct GeometricResult {
  bool geometric;
  std::optional<MukaiClass> witness; // spherical class with Z in R_{<=0}
};

// Existence test for sigma_{omega,beta}: with b = p/q in lowest terms, the
// point fails iff q | d p^2 + 1 and T <= 1/(d q^2); the witness is then the
// spherical class (q, p, (d p^2 + 1)/q). The divisibility form follows from
// Im Z(xi) = 0 and xi^2 = -2 forcing xi = +-(q, p, (d p^2+1)/q); it is
// re-verified against a brute-force spherical search in the test suite.
GeometricResult is_geometric(const StabilityPoint& p, const SurfaceData& X);

} // namespace k3walls
