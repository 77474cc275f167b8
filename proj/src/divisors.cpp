#include "k3walls/divisors.hpp"

#include "k3walls/walls.hpp"

namespace k3walls {

MukaiClass w_sigma_raw(const MukaiClass& v, const StabilityPoint& p, const SurfaceData& X) {
  ChargeValue z = central_charge(v, p, X);
  if (z.is_zero())
    fail(Err::ZeroCharge, "Z(v) = 0 at (b,T) = (" + rat_str(p.b) + "," + rat_str(p.T) + ")");
  Rat d(X.d);
  MukaiClass e_re{Rat(1), p.b, d * (p.b * p.b - p.T)};
  MukaiClass e_im{Rat(0), Rat(1), 2 * d * p.b};
  return e_re * z.im_over_t - e_im * z.re;
}

OrthogonalClass w_sigma(const MukaiClass& v, const StabilityPoint& p, const SurfaceData& X) {
  return {primitivize(w_sigma_raw(v, p, X)), v};
}

MukaiClass w_limit_zero_raw(const MukaiClass& v, const Rat& b, const SurfaceData& X) {
  Rat d(X.d);
  Rat cb = v.c - v.r * b;
  return {2 * d * cb, 2 * d * cb * b + v.s - 2 * d * b * v.c + v.r * d * b * b,
          2 * d * b * v.s - 2 * d * d * v.c * b * b};
}

MukaiClass w_limit_infinity_raw(const MukaiClass& v, const SurfaceData& X) {
  Rat d(X.d);
  return {Rat(0), -v.r * d, -2 * d * d * v.c};
}

OrthogonalClass w_limit_zero(const MukaiClass& v, const Rat& b, const SurfaceData& X) {
  MukaiClass raw = w_limit_zero_raw(v, b, X);
  if (raw.is_zero()) fail(Err::ZeroVector, "t->0 limit vector vanishes");
  return {primitivize(raw), v};
}

OrthogonalClass w_limit_infinity(const MukaiClass& v, const SurfaceData& X) {
  MukaiClass raw = w_limit_infinity_raw(v, X);
  if (raw.is_zero()) fail(Err::ZeroVector, "t->infinity limit vector vanishes");
  return {primitivize(raw), v};
}

HilbDivisor theta_hilb(const OrthogonalClass& w, long n) {
  MukaiClass v{Rat(1), Rat(0), Rat(1 - n)};
  if (!(w.host == v))
    fail(Err::NotOrthogonal, "theta requires host class (1,0," + rat_str(Rat(1 - n)) + ")");
  if (w.w.s != w.w.r * Rat(n - 1))
    fail(Err::NotOrthogonal, w.w.str() + " is not orthogonal to " + v.str());
  return {-w.w.c, -w.w.r, n};
}

Rat bb_square(const HilbDivisor& D, const SurfaceData& X) {
  return Rat(2 * X.d) * D.x * D.x - Rat(2 * D.n - 2) * D.y * D.y;
}

Rat curve_divisor_pairing(const CurveClass& R, const HilbDivisor& D, long d) {
  return Rat(2 * d) * R.p * D.x + R.q * D.y;
}

HilbNefCone hilb_nef_cone(long d, long n) {
  if (2 * n < d + 3)
    fail(Err::HypothesisFailed,
         "Brill-Noether hypothesis fails: a g^1_n on every smooth curve in |H| exists "
         "if and only if n >= (d+3)/2");
  HilbNefCone cone;
  cone.gen_a = {Rat(1), Rat(0), n};
  cone.gen_b = {Rat(1), Rat(-2 * d) / Rat(d + n), n};
  cone.extremal = {Rat(1), Rat(d + n)};
  cone.curve_self_pairing = Rat(2 * d) - Rat(d + n) * Rat(d + n) / Rat(2 * n - 2);
  return cone;
}

namespace {

std::optional<LagrangianResult> square_zero_solution(long d, long n) {
  // d h^2 = k^2 (n-1) with k, h coprime: reduce d/(n-1) and test both parts
  // for being perfect squares.
  Rat ratio = Rat(d) / Rat(n - 1);
  Int num = ratio.get_num(), den = ratio.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  Int k, h;
  mpz_sqrt(k.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(h.get_mpz_t(), den.get_mpz_t());
  LagrangianResult res;
  res.k = k.get_si();
  res.h = h.get_si();
  res.square_zero_ray = {Rat(res.h), Rat(-res.k), n};
  return res;
}

} // namespace

std::optional<LagrangianResult> lagrangian_check(long d, long n) {
  if (d < 1 || n < 2) throw ConfigError("lagrangian check needs d >= 1, n >= 2");
  auto res = square_zero_solution(d, n);
  if (!res) return std::nullopt;
  HilbDivisor htilde{Rat(1), Rat(0), n};
  if (res->h == 1 && res->k >= 2) {
    res->cone = LagrangianCone::Nef;
    res->generators = {htilde, HilbDivisor{Rat(1), Rat(-res->k), n}};
  } else if (res->h == 2) {
    // k odd by coprimality. Certify this instance: no spherical class may
    // solve (u, xi) = (n-1)/2, (v, xi) = -1 for u = (0, H/k, 1-n),
    // v = (1, 0, 1-n).
    SurfaceData X(d);
    MukaiClass u{Rat(0), rat(1, res->k), Rat(1 - n)};
    MukaiClass v{Rat(1), Rat(0), Rat(1 - n)};
    auto obstructions = spherical_solver({{u, rat(n - 1, 2)}, {v, Rat(-1)}}, X);
    if (obstructions.empty()) {
      res->cone = LagrangianCone::Movable;
      res->generators = {htilde, HilbDivisor{Rat(2), Rat(-res->k), n}};
    }
  }
  return res;
}

} // namespace k3walls
