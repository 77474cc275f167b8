#pragma once

#include <string>

#include "k3walls/errors.hpp"
#include "k3walls/rational.hpp"

namespace k3walls {

// A K3 surface with Pic = Z*H and H^2 = 2d. The lattice arithmetic below
// only ever sees d.
struct SurfaceData {
  long d = 1;
  std::string label;

  explicit SurfaceData(long d_, std::string label_ = "") : d(d_), label(std::move(label_)) {
    if (d < 1) throw ConfigError("surface degree d must be >= 1");
  }
};

// Class (r, c, s) in the rank-one algebraic Mukai lattice; c is the
// coefficient of H. Components are rational so that functionals like
// (0, H/k, 1-n) can be represented; is_integral() distinguishes genuine
// Mukai vectors.
struct MukaiClass {
  Rat r, c, s;

  MukaiClass() = default;
  MukaiClass(Rat r_, Rat c_, Rat s_) : r(std::move(r_)), c(std::move(c_)), s(std::move(s_)) {}

  bool is_zero() const { return r == 0 && c == 0 && s == 0; }
  bool is_integral() const { return is_integer(r) && is_integer(c) && is_integer(s); }

  MukaiClass operator+(const MukaiClass& o) const { return {r + o.r, c + o.c, s + o.s}; }
  MukaiClass operator-(const MukaiClass& o) const { return {r - o.r, c - o.c, s - o.s}; }
  MukaiClass operator-() const { return {-r, -c, -s}; }
  MukaiClass operator*(const Rat& t) const { return {r * t, c * t, s * t}; }
  bool operator==(const MukaiClass& o) const { return r == o.r && c == o.c && s == o.s; }

  // Lexicographic by (r, c, s); the canonical order used in wall output.
  bool operator<(const MukaiClass& o) const {
    if (r != o.r) return r < o.r;
    if (c != o.c) return c < o.c;
    return s < o.s;
  }

  std::string str() const {
    return "(" + rat_str(r) + "," + rat_str(c) + "," + rat_str(s) + ")";
  }
};

enum class ClassKind { Spherical, Isotropic, PositiveSquare, NegativeSquareOther };

struct ClassInfo {
  ClassKind kind;
  bool positive_vector; // Yoshioka positivity of the (primitive integral) class
};

// ((r,c,s),(r',c',s')) = 2d c c' - r s' - r' s.
Rat mukai_pairing(const MukaiClass& v, const MukaiClass& w, const SurfaceData& X);

inline Rat mukai_square(const MukaiClass& v, const SurfaceData& X) {
  return mukai_pairing(v, v, X);
}

// True for integral classes whose components have gcd 1.
bool is_primitive(const MukaiClass& v);

// Clears denominators and divides by the gcd; keeps the ray (never flips
// sign). Precondition: v != 0.
MukaiClass primitivize(const MukaiClass& v);

ClassInfo classify(const MukaiClass& v, const SurfaceData& X);

// v * exp(mH): (r, c + rm, s + 2dmc + r d m^2). An isometry of the pairing.
MukaiClass tensor_line_bundle(const MukaiClass& v, long m, const SurfaceData& X);

// K-theoretic spherical twist action x |-> x + (x, xi) xi; requires
// xi^2 = -2. An involution and isometry.
MukaiClass spherical_reflect(const MukaiClass& xi, const MukaiClass& x, const SurfaceData& X);

} // namespace k3walls
