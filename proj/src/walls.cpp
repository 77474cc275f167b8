#include "k3walls/walls.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3walls {

long default_rank_bound(const MukaiClass& v) {
  Int r = abs(rfloor(v.r));
  return 2 * r.get_si() + 4;
}

std::optional<WallGeometry> wall_of_pair(const MukaiClass& v, const MukaiClass& w,
                                         const SurfaceData& X) {
  // The wall is Im(conj(Z(v)) Z(w)) = 0; expanded in (b, T) it reads
  //   -d*Delta*(b^2 + T) + (r_w s_v - r_v s_w) b + (c_v s_w - c_w s_v) = 0.
  Rat delta = v.c * w.r - v.r * w.c;
  Rat m_rs = v.r * w.s - w.r * v.s;
  Rat m_cs = v.c * w.s - w.c * v.s;
  if (delta == 0 && m_rs == 0 && m_cs == 0)
    fail(Err::ProportionalClasses, "wall undefined for proportional classes " + v.str() +
                                       ", " + w.str());
  Rat d(X.d);
  if (delta != 0) {
    Rat center = -m_rs / (2 * d * delta);
    Rat radius_sq = center * center + m_cs / (d * delta);
    if (radius_sq <= 0) return std::nullopt; // empty locus in the slice
    return WallGeometry::semicircle(center, radius_sq);
  }
  if (m_rs != 0) return WallGeometry::vertical(m_cs / m_rs);
  return std::nullopt; // phase difference is a nonzero constant
}

namespace {

struct RatInterval {
  Rat lo, hi;
  bool empty() const { return lo > hi; }
};

// Restrict [iv] by the half-plane a*b <= k.
void clip_halfplane(RatInterval& iv, const Rat& a, const Rat& k) {
  if (a > 0) {
    Rat bound = k / a;
    if (bound < iv.hi) iv.hi = bound;
  } else if (a < 0) {
    Rat bound = k / a;
    if (bound > iv.lo) iv.lo = bound;
  } else if (k < 0) {
    iv = {Rat(1), Rat(0)};
  }
}

struct HostPath {
  MukaiClass v;  // host class, flipped so im_over_t >= 0 on the range
  bool flipped = false;
};

// Validates the b-range against Im Z(v) = 0 and orients v. The degenerate
// b (where c - rb = 0) may only be an isolated endpoint of the range.
HostPath normalize_host(const MukaiClass& v_in, const Rat& b_lo, const Rat& b_hi) {
  MukaiClass v = v_in;
  bool flipped = false;
  auto ell = [&](const Rat& b) { return Rat(v.c - v.r * b); };
  if (v.r != 0) {
    Rat bstar = v.c / v.r;
    if (b_lo < bstar && bstar < b_hi)
      fail(Err::DegeneratePath, "Im Z(v) vanishes at b = " + rat_str(bstar) +
                                    " inside the b-range");
    Rat probe = (bstar == b_lo) ? b_hi : b_lo;
    if (probe == bstar)
      fail(Err::DegeneratePath, "Im Z(v) vanishes on the whole b-range");
    if (ell(probe) < 0) {
      v = -v;
      flipped = true;
    }
  } else {
    if (v.c == 0)
      fail(Err::DegeneratePath, "Im Z(v) vanishes identically for " + v.str());
    if (v.c < 0) {
      v = -v;
      flipped = true;
    }
  }
  return {v, flipped};
}

struct RawHit {
  WallGeometry geo;
  MukaiClass w;
};

// Square condition w^2 >= -2 restricted to the s-interval, as
// r2 * s2 <= d*c2^2 + 1 (and the mirrored version for the complement).
void clip_square_bound(const Rat& rank, const Rat& rhs, const Rat& base, bool complement_side,
                       Rat& s_min, Rat& s_max) {
  // complement side encodes (r-r2)(s-s2) <= rhs as a bound on s2 via base = s(v).
  if (rank > 0) {
    Rat bound = rhs / rank;
    if (!complement_side) {
      if (bound < s_max) s_max = bound;
    } else {
      Rat lo = base - bound;
      if (lo > s_min) s_min = lo;
    }
  } else if (rank < 0) {
    Rat bound = rhs / rank;
    if (!complement_side) {
      if (bound > s_min) s_min = bound;
    } else {
      Rat hi = base - bound;
      if (hi < s_max) s_max = hi;
    }
  }
}

// Exact test: does the semicircle meet {b in I, T in [T_lo, T_hi], T > 0}?
// The restriction of T(b) = radius_sq - (b - C)^2 to I attains exactly
// [Tmin, Tmax], so interval overlap decides.
bool semicircle_hits_box(const WallGeometry& g, const RatInterval& I, const Rat& T_lo,
                         const Rat& T_hi) {
  Rat dist_lo = abs(I.lo - g.center_b);
  Rat dist_hi = abs(I.hi - g.center_b);
  Rat dist_near = (g.center_b >= I.lo && g.center_b <= I.hi)
                      ? Rat(0)
                      : std::min(dist_lo, dist_hi);
  Rat dist_far = std::max(dist_lo, dist_hi);
  Rat Tmax = g.radius_sq - dist_near * dist_near;
  Rat Tmin = g.radius_sq - dist_far * dist_far;
  Rat upper = std::min(Tmax, T_hi);
  Rat lower = std::max(Tmin, T_lo);
  return upper >= lower && upper > 0;
}

// Builds the Wall records against the caller's host class: a decomposition
// -v = w + c found for a flipped host corresponds to v = (-w) + (-c).
std::vector<Wall> group_hits(std::vector<RawHit> hits, const MukaiClass& v_orig, bool flipped,
                             const SurfaceData& X) {
  std::map<WallGeometry, std::vector<MukaiClass>> by_geo;
  for (auto& h : hits) by_geo[h.geo].push_back(flipped ? -h.w : h.w);
  std::vector<Wall> out;
  out.reserve(by_geo.size());
  for (auto& [geo, ws] : by_geo) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    Wall wall;
    wall.geometry = geo;
    for (auto& w : ws) {
      MukaiClass comp = v_orig - w;
      wall.destabilizers.push_back({w, comp, mukai_pairing(w, comp, X)});
    }
    out.push_back(std::move(wall));
  }
  return out;
}

} // namespace

std::vector<Wall> potential_destabilizers(const MukaiClass& v_in, const Region& region,
                                          long rank_bound, const SurfaceData& X, ExecMode mode,
                                          bool mukai_filter) {
  if (region.b_lo > region.b_hi || region.T_hi <= 0 || region.T_hi < region.T_lo ||
      region.T_lo < 0)
    fail(Err::EmptyRegion, "region must satisfy b_lo <= b_hi and 0 <= T_lo <= T_hi, T_hi > 0");
  if (v_in.is_zero()) fail(Err::ZeroClass, "no walls for the zero class");
  // Point-like classes (r = c = 0) have Im Z = 0 everywhere: nothing can
  // sit strictly between 0 and im(v), so there are no walls to report.
  if (v_in.r == 0 && v_in.c == 0) return {};

  auto host = normalize_host(v_in, region.b_lo, region.b_hi);
  const MukaiClass v = host.v;
  const Rat d(X.d);
  const Rat T_lo = region.T_lo;
  const Rat T_hi = region.T_hi;
  const Rat sq_v = mukai_square(v, X);

  // Candidate (rank, c) cells; the s-range per cell is finite, bounded by
  // the two square conditions together with the wall-through-region
  // constraint s2 = N(b,T)/D(b).
  std::vector<std::pair<long, long>> cells;
  for (long r2 = -rank_bound; r2 <= rank_bound; ++r2) {
    Rat rb_lo = Rat(r2) * region.b_lo;
    Rat rb_hi = Rat(r2) * region.b_hi;
    Rat c_from = std::min(rb_lo, rb_hi);
    Rat e_lo = v.c + (Rat(r2) - v.r) * region.b_lo;
    Rat e_hi = v.c + (Rat(r2) - v.r) * region.b_hi;
    Rat c_to = std::max(e_lo, e_hi);
    Int lo = rceil(c_from);
    Int hi = rfloor(c_to);
    for (Int c2 = lo; c2 <= hi; ++c2) cells.emplace_back(r2, c2.get_si());
  }

  auto process_cell = [&](long r2l, long c2l, std::vector<RawHit>& sink) {
    Rat r2(r2l), c2(c2l);
    Rat delta = v.c * r2 - v.r * c2;
    if (delta == 0) return; // vertical wall on the degenerate line only
    // Im-sandwich 0 <= c2 - r2 b <= c - r b as a b-interval.
    RatInterval I{region.b_lo, region.b_hi};
    clip_halfplane(I, r2, c2);                  // r2 b <= c2
    clip_halfplane(I, v.r - r2, v.c - c2);      // (r - r2) b <= c - c2
    if (I.empty()) return;
    Rat D_at_lo = v.c - v.r * I.lo;
    Rat D_at_hi = v.c - v.r * I.hi;
    Rat D_lo = std::min(D_at_lo, D_at_hi);
    Rat D_hi = std::max(D_at_lo, D_at_hi);
    if (D_lo <= 0) return; // only possible on the degenerate endpoint

    // N(b,T) = d*delta*(b^2+T) - r2 s b + c2 s over the box.
    Rat sq_at_lo = I.lo * I.lo;
    Rat sq_at_hi = I.hi * I.hi;
    Rat bsq_lo = (I.lo <= 0 && I.hi >= 0) ? Rat(0) : std::min(sq_at_lo, sq_at_hi);
    Rat bsq_hi = std::max(sq_at_lo, sq_at_hi);
    Rat q_lo = bsq_lo + T_lo;
    Rat q_hi = bsq_hi + T_hi;
    Rat K = d * delta;
    Rat N_lo = (K >= 0) ? K * q_lo : K * q_hi;
    Rat N_hi = (K >= 0) ? K * q_hi : K * q_lo;
    Rat M = -r2 * v.s;
    N_lo += (M >= 0) ? M * I.lo : M * I.hi;
    N_hi += (M >= 0) ? M * I.hi : M * I.lo;
    N_lo += c2 * v.s;
    N_hi += c2 * v.s;
    Rat s_min = (N_lo >= 0) ? N_lo / D_hi : N_lo / D_lo;
    Rat s_max = (N_hi >= 0) ? N_hi / D_lo : N_hi / D_hi;

    clip_square_bound(r2, d * c2 * c2 + 1, v.s, false, s_min, s_max);
    Rat rho = v.r - r2;
    Rat cc = v.c - c2;
    clip_square_bound(rho, d * cc * cc + 1, v.s, true, s_min, s_max);

    for (Int s2i = rceil(s_min); s2i <= rfloor(s_max); ++s2i) {
      MukaiClass w{r2, c2, Rat(s2i)};
      if (mukai_square(w, X) < -2) continue;
      MukaiClass comp = v - w;
      if (mukai_square(comp, X) < -2) continue;
      if (mukai_filter && mukai_square(w, X) + mukai_square(comp, X) > sq_v - 2) continue;
      Rat center = -(v.r * w.s - w.r * v.s) / (2 * d * delta);
      Rat radius_sq = center * center + (v.c * w.s - w.c * v.s) / (d * delta);
      if (radius_sq <= 0) continue;
      WallGeometry geo = WallGeometry::semicircle(center, radius_sq);
      if (semicircle_hits_box(geo, I, T_lo, T_hi)) sink.push_back({geo, w});
    }
  };

  std::vector<std::vector<RawHit>> buckets(cells.size());
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < cells.size(); ++i)
      process_cell(cells[i].first, cells[i].second, buckets[i]);
  } else
#endif
  {
    (void)mode;
    for (size_t i = 0; i < cells.size(); ++i)
      process_cell(cells[i].first, cells[i].second, buckets[i]);
  }

  std::vector<RawHit> hits;
  for (auto& b : buckets)
    for (auto& h : b) hits.push_back(std::move(h));
  return group_hits(std::move(hits), v_in, host.flipped, X);
}

std::vector<PathCrossing> walls_on_vertical_path(const MukaiClass& v_in, const Rat& b,
                                                 const Rat& T_lo, const Rat& T_hi,
                                                 long rank_bound, const SurfaceData& X,
                                                 ExecMode mode) {
  if (T_hi <= 0 || T_hi < T_lo || T_lo < 0)
    fail(Err::EmptyRegion, "T-range must satisfy 0 <= T_lo <= T_hi, T_hi > 0");
  if (v_in.is_zero()) fail(Err::ZeroClass, "no walls for the zero class");
  if (v_in.r == 0 && v_in.c == 0) return {};
  if (v_in.c - v_in.r * b == 0)
    fail(Err::DegeneratePath, "Im Z(v) vanishes on the line b = " + rat_str(b));
  MukaiClass v = v_in;
  bool flipped = false;
  if (v.c - v.r * b < 0) {
    v = -v;
    flipped = true;
  }

  const Rat d(X.d);
  const Rat D = v.c - v.r * b; // > 0

  std::vector<std::pair<long, long>> cells;
  for (long r2 = -rank_bound; r2 <= rank_bound; ++r2) {
    Rat rb = Rat(r2) * b;
    Int lo = rceil(rb);
    Int hi = rfloor(rb + D);
    for (Int c2 = lo; c2 <= hi; ++c2) cells.emplace_back(r2, c2.get_si());
  }

  struct RawCrossing {
    Rat T;
    WallGeometry geo;
    MukaiClass w;
  };

  auto process_cell = [&](long r2l, long c2l, std::vector<RawCrossing>& sink) {
    Rat r2(r2l), c2(c2l);
    Rat delta = v.c * r2 - v.r * c2;
    if (delta == 0) return; // vertical walls never cross a non-degenerate line
    Rat K = d * delta;
    // On the line, s2 and T determine each other:
    //   s2 * D = K*(b^2+T) - r2 s b + c2 s.
    Rat base = -r2 * v.s * b + c2 * v.s;
    Rat s_at_lo = (K * (b * b + T_lo) + base) / D;
    Rat s_at_hi = (K * (b * b + T_hi) + base) / D;
    Rat s_min = std::min(s_at_lo, s_at_hi);
    Rat s_max = std::max(s_at_lo, s_at_hi);
    clip_square_bound(r2, d * c2 * c2 + 1, v.s, false, s_min, s_max);
    Rat rho = v.r - r2;
    Rat cc = v.c - c2;
    clip_square_bound(rho, d * cc * cc + 1, v.s, true, s_min, s_max);
    for (Int s2i = rceil(s_min); s2i <= rfloor(s_max); ++s2i) {
      MukaiClass w{r2, c2, Rat(s2i)};
      if (mukai_square(w, X) < -2) continue;
      if (mukai_square(v - w, X) < -2) continue;
      Rat T = (Rat(s2i) * D - base) / K - b * b;
      if (T <= 0 || T < T_lo || T > T_hi) continue;
      Rat center = -(v.r * w.s - w.r * v.s) / (2 * d * delta);
      Rat radius_sq = center * center + (v.c * w.s - w.c * v.s) / (d * delta);
      sink.push_back({T, WallGeometry::semicircle(center, radius_sq), flipped ? -w : w});
    }
  };

  std::vector<std::vector<RawCrossing>> buckets(cells.size());
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < cells.size(); ++i)
      process_cell(cells[i].first, cells[i].second, buckets[i]);
  } else
#endif
  {
    (void)mode;
    for (size_t i = 0; i < cells.size(); ++i)
      process_cell(cells[i].first, cells[i].second, buckets[i]);
  }

  // Canonical order: decreasing T, then geometry, then destabilizer.
  std::vector<RawCrossing> all;
  for (auto& bucket : buckets)
    for (auto& rc : bucket) all.push_back(std::move(rc));
  std::sort(all.begin(), all.end(), [](const RawCrossing& a, const RawCrossing& b2) {
    if (a.T != b2.T) return a.T > b2.T;
    if (!(a.geo == b2.geo)) return a.geo < b2.geo;
    return a.w < b2.w;
  });

  std::vector<PathCrossing> out;
  for (auto& rc : all) {
    if (out.empty() || out.back().T != rc.T || !(out.back().wall.geometry == rc.geo)) {
      out.push_back({rc.T, Wall{rc.geo, {}}});
    } else if (!out.back().wall.destabilizers.empty() &&
               out.back().wall.destabilizers.back().w == rc.w) {
      continue;
    }
    MukaiClass comp = v_in - rc.w;
    out.back().wall.destabilizers.push_back({rc.w, comp, mukai_pairing(rc.w, comp, X)});
  }
  return out;
}

GiesekerBoundReport gieseker_bound(const MukaiClass& v, const Rat& b, const SurfaceData& X) {
  if (v.r <= 0) fail(Err::NonPositiveRank, "Gieseker bound requires r(v) > 0");
  auto sd_v = slope_and_discrepancy(v, b, X);
  if (sd_v.mu_hat <= 0)
    fail(Err::NonPositiveSlope, "Gieseker bound requires mu(v) > 0 at b = " + rat_str(b));
  const Rat d(X.d);

  GiesekerBoundReport rep;
  long r_max = rfloor(v.r).get_si();
  for (long r2l = 1; r2l <= r_max; ++r2l) {
    Rat r2(r2l);
    // 0 < mu(w) < mu(v) pins c2 - r2 b to (0, r2 mu(v) / 2d).
    Rat cb_hi = r2 * sd_v.mu_hat / (2 * d);
    Int c_lo = rfloor(r2 * b) + 1;
    Int c_hi = rceil(r2 * b + cb_hi) - 1;
    for (Int c2i = c_lo; c2i <= c_hi; ++c2i) {
      Rat c2(c2i);
      Rat cb2 = c2 - r2 * b;
      if (cb2 <= 0 || cb2 >= cb_hi) continue;
      // delta(w) < delta(v) gives a strict lower bound for s2,
      // w^2 >= -2 the upper bound.
      Rat s_lo_excl = r2 + d * cb2 * cb2 / r2 - r2 * sd_v.delta + 2 * d * b * c2 - r2 * d * b * b;
      Int s_lo = rfloor(s_lo_excl) + 1;
      Int s_hi = rfloor((d * c2 * c2 + 1) / r2);
      for (Int s2i = s_lo; s2i <= s_hi; ++s2i)
        rep.Dv.push_back({r2, c2, Rat(s2i)});
    }
  }
  std::sort(rep.Dv.begin(), rep.Dv.end());

  Rat r = v.r;
  rep.mu_max_hat = r / (r + 1) * sd_v.mu_hat;
  for (auto& w : rep.Dv) {
    Rat mu_w = 2 * d * (w.c - w.r * b) / w.r;
    if (mu_w > rep.mu_max_hat) rep.mu_max_hat = mu_w;
  }
  Rat ratio = rep.mu_max_hat / (sd_v.mu_hat - rep.mu_max_hat);
  rep.T_bound = (2 + 2 * ratio * sd_v.delta) / (2 * d);
  return rep;
}

WallFlags classify_wall(const MukaiClass& v, const Wall& wall, const SurfaceData& X,
                        std::optional<long> hilb_n) {
  WallFlags flags;
  for (const auto& dst : wall.destabilizers) {
    if (!(dst.complement == v - dst.w))
      fail(Err::ForeignWall, "stored complement does not match host class");
    auto geo = wall_of_pair(v, dst.w, X);
    if (!geo || !(*geo == wall.geometry))
      fail(Err::ForeignWall, "destabilizer " + dst.w.str() + " does not lie on this wall");
    Rat sq_w = mukai_square(dst.w, X);
    Rat sq_c = mukai_square(dst.complement, X);
    bool spherical = (sq_w == -2) || (sq_c == -2);
    if (spherical) flags.has_spherical_destabilizer = true;
    if (sq_w == 0 || sq_c == 0) flags.has_isotropic_destabilizer = true;
    if (dst.pairing == 1 && spherical) flags.pairing_one_with_spherical = true;
    if (dst.pairing >= 2) flags.pairing_at_least_two = true;
  }

  bool hilb_vector = v.r == 1 && v.c == 0 && is_integer(v.s) && v.s <= -1;
  if (hilb_vector && wall.geometry.type == WallGeometry::Type::VerticalLine &&
      wall.geometry.center_b == 0)
    flags.hilbert_chow = true;

  if (hilb_n) {
    long n = *hilb_n;
    MukaiClass o_minus_h{Rat(1), Rat(-1), Rat(X.d + 1)};
    bool on_first_wall = false;
    for (const auto& dst : wall.destabilizers)
      if (dst.w == o_minus_h || dst.complement == o_minus_h) on_first_wall = true;
    if (hilb_vector && v.s == Rat(1 - n) && on_first_wall && n <= X.d + 1)
      flags.totally_semistable_hint = true;
  }
  return flags;
}

namespace {

// Exact square root of a nonnegative rational, if it is one.
std::optional<Rat> rat_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  Int num = x.get_num(), den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  Int sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rat(sn, sd);
}

MukaiClass from_coords(const std::array<Rat, 3>& x) { return {x[0], x[1], x[2]}; }

} // namespace

std::vector<MukaiClass> spherical_solver(
    const std::vector<std::pair<MukaiClass, Rat>>& constraints, const SurfaceData& X) {
  // Row ((u,xi) = a) in coordinates xi = (x0,x1,x2):
  //   -u.s * x0 + 2d u.c * x1 - u.r * x2 = a.
  const Rat d(X.d);
  std::vector<std::array<Rat, 4>> rows;
  for (const auto& [u, a] : constraints)
    rows.push_back({-u.s, 2 * d * u.c, -u.r, a});

  // Gauss-Jordan over Q.
  int rank = 0;
  std::array<int, 3> pivot_of_col{-1, -1, -1};
  for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (int j = 0; j < 4; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  if (rank <= 1)
    fail(Err::UnderdeterminedSystem,
         "constraint functionals span dimension " + std::to_string(rank) + " < 2");
  for (int i = rank; i < static_cast<int>(rows.size()); ++i)
    if (rows[i][3] != 0) return {}; // inconsistent: no solutions at all

  auto solve_with_free = [&](int free_col, const Rat& free_val, bool homogeneous) {
    std::array<Rat, 3> x{Rat(0), Rat(0), Rat(0)};
    if (free_col >= 0) x[free_col] = free_val;
    for (int col = 0; col < 3; ++col) {
      int pr = pivot_of_col[col];
      if (pr < 0) continue;
      Rat acc = homogeneous ? Rat(0) : rows[pr][3];
      for (int j = 0; j < 3; ++j)
        if (j != col) acc -= rows[pr][j] * x[j];
      x[col] = acc / rows[pr][col];
    }
    return x;
  };

  std::vector<MukaiClass> candidates;
  if (rank == 3) {
    candidates.push_back(from_coords(solve_with_free(-1, Rat(0), false)));
  } else {
    int free_col = -1;
    for (int col = 0; col < 3; ++col)
      if (pivot_of_col[col] < 0) free_col = col;
    MukaiClass xi0 = from_coords(solve_with_free(free_col, Rat(0), false));
    MukaiClass dir = from_coords(solve_with_free(free_col, Rat(1), true));
    dir = primitivize(dir);
    // (xi0 + a*dir)^2 = -2 as a quadratic in a.
    Rat A = mukai_square(dir, X);
    Rat B = 2 * mukai_pairing(xi0, dir, X);
    Rat C = mukai_square(xi0, X) + 2;
    if (A != 0) {
      Rat disc = B * B - 4 * A * C;
      auto sq = rat_sqrt(disc);
      if (sq) {
        candidates.push_back(xi0 + dir * ((-B + *sq) / (2 * A)));
        if (*sq != 0) candidates.push_back(xi0 + dir * ((-B - *sq) / (2 * A)));
      }
    } else if (B != 0) {
      candidates.push_back(xi0 + dir * (-C / B));
    } else if (C == 0) {
      fail(Err::UnderdeterminedSystem,
           "affine solution line lies entirely on the spherical quadric");
    }
  }

  std::vector<MukaiClass> out;
  for (auto& xi : candidates)
    if (xi.is_integral() && mukai_square(xi, X) == -2) out.push_back(xi);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace k3walls
