#include "k3walls/mukai.hpp"

namespace k3walls {

Rat mukai_pairing(const MukaiClass& v, const MukaiClass& w, const SurfaceData& X) {
  return Rat(2 * X.d) * v.c * w.c - v.r * w.s - w.r * v.s;
}

bool is_primitive(const MukaiClass& v) {
  if (!v.is_integral() || v.is_zero()) return false;
  Int g = gcd(gcd(v.r.get_num(), v.c.get_num()), v.s.get_num());
  return g == 1;
}

MukaiClass primitivize(const MukaiClass& v) {
  if (v.is_zero()) fail(Err::ZeroVector, "cannot primitivize the zero class");
  Int l = lcm(lcm(v.r.get_den(), v.c.get_den()), v.s.get_den());
  Int a = v.r.get_num() * (l / v.r.get_den());
  Int b = v.c.get_num() * (l / v.c.get_den());
  Int c = v.s.get_num() * (l / v.s.get_den());
  Int g = gcd(gcd(a, b), c);
  return {Rat(a / g), Rat(b / g), Rat(c / g)};
}

ClassInfo classify(const MukaiClass& v, const SurfaceData& X) {
  if (v.is_zero()) fail(Err::ZeroClass, "classify requires v != 0");
  Rat sq = mukai_square(v, X);
  ClassKind kind;
  if (sq == -2)
    kind = ClassKind::Spherical;
  else if (sq == 0)
    kind = ClassKind::Isotropic;
  else if (sq > 0)
    kind = ClassKind::PositiveSquare;
  else
    kind = ClassKind::NegativeSquareOther;

  // Yoshioka positivity, specialized to Pic = Z*H where "c effective" for
  // rank zero reads c > 0.
  bool pos = false;
  if (is_primitive(v) && sq >= -2) {
    if (v.r > 0)
      pos = true;
    else if (v.r == 0 && v.c > 0 && v.s != 0)
      pos = true;
    else if (v.r == 0 && v.c == 0 && v.s > 0)
      pos = true;
  }
  return {kind, pos};
}

MukaiClass tensor_line_bundle(const MukaiClass& v, long m, const SurfaceData& X) {
  Rat mm(m);
  Rat d(X.d);
  return {v.r, v.c + v.r * mm, v.s + 2 * d * mm * v.c + v.r * d * mm * mm};
}

MukaiClass spherical_reflect(const MukaiClass& xi, const MukaiClass& x, const SurfaceData& X) {
  if (mukai_square(xi, X) != -2)
    fail(Err::NotSpherical, "spherical_reflect requires xi^2 = -2, got " + xi.str());
  Rat p = mukai_pairing(x, xi, X);
  return x + xi * p;
}

} // namespace k3walls
