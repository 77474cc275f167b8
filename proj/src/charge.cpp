#include "k3walls/charge.hpp"

namespace k3walls {

ChargeValue central_charge(const MukaiClass& v, const StabilityPoint& p, const SurfaceData& X) {
  Rat d(X.d);
  Rat re = 2 * d * p.b * v.c - v.s - v.r * d * (p.b * p.b - p.T);
  Rat im = 2 * d * (v.c - v.r * p.b);
  return {re, im};
}

std::pair<ChargeValue, bool> normalize_half_plane(const ChargeValue& z) {
  if (z.im_over_t < 0 || (z.im_over_t == 0 && z.re > 0)) return {-z, true};
  return {z, false};
}

Ordering phase_compare(const MukaiClass& v, const MukaiClass& w, const StabilityPoint& p,
                       const SurfaceData& X) {
  auto [zv, fv] = normalize_half_plane(central_charge(v, p, X));
  auto [zw, fw] = normalize_half_plane(central_charge(w, p, X));
  if (zv.is_zero() && zw.is_zero())
    fail(Err::ZeroCharge, "both central charges vanish at this point");
  if (zv.im_over_t == 0 && zv.re > 0)
    fail(Err::OutsideHalfPlane, "normalized charge of v outside Hbar");
  if (zw.im_over_t == 0 && zw.re > 0)
    fail(Err::OutsideHalfPlane, "normalized charge of w outside Hbar");
  Rat cross = zv.im_over_t * zw.re - zv.re * zw.im_over_t;
  if (cross < 0) return Ordering::Less;
  if (cross > 0) return Ordering::Greater;
  return Ordering::Equal;
}

SlopeDiscrepancy slope_and_discrepancy(const MukaiClass& v, const Rat& b, const SurfaceData& X) {
  if (v.r <= 0)
    fail(Err::NonPositiveRank, "slope/discrepancy require r > 0, got " + v.str());
  Rat d(X.d);
  Rat cb = v.c - v.r * b;                       // c_beta coefficient of e^{-bH} v
  Rat sb = v.s - 2 * d * b * v.c + v.r * d * b * b; // s_beta
  Rat mu_hat = 2 * d * cb / v.r;
  Rat delta = -sb / v.r + 1 + d * cb * cb / (v.r * v.r);
  return {mu_hat, delta};
}

GeometricResult is_geometric(const StabilityPoint& p, const SurfaceData& X) {
  // b = p/q in lowest terms (q > 0 by canonicalization).
  Int pp = p.b.get_num();
  Int qq = p.b.get_den();
  Int dp2_1 = Int(X.d) * pp * pp + 1;
  if (dp2_1 % qq == 0) {
    Rat threshold = Rat(1, 1) / (Rat(X.d) * Rat(qq) * Rat(qq));
    if (p.T <= threshold) {
      MukaiClass xi{Rat(qq), Rat(pp), Rat(dp2_1 / qq)};
      return {false, xi};
    }
  }
  return {true, std::nullopt};
}

} // namespace k3walls
