#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace k3walls {

// Exact rational scalar. All lattice and slice arithmetic in this project is
// done in Rat; doubles appear only in SVG rendering and test oracles.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long den) {
  Rat q(n, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Largest integer <= q.
Int rfloor(const Rat& q);
// Smallest integer >= q.
Int rceil(const Rat& q);

int sign(const Rat& q);

// Parses "p/q" or an integer string; no floats, no whitespace inside the
// token. Returns nullopt on malformed input or zero denominator.
std::optional<Rat> parse_rat(const std::string& s);

// Canonical "p/q" form with q > 0, always including the denominator
// ("3/1", "-17/16"). Used for JSON payloads and SVG metadata.
std::string rat_pq(const Rat& q);

// Human form: integers without denominator ("3", "-17/16").
std::string rat_str(const Rat& q);

double to_double(const Rat& q);

} // namespace k3walls
