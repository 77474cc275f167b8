#include <doctest.h>

#include <algorithm>
#include <set>

#include "k3walls/walls.hpp"
#include "oracles.hpp"

using namespace k3walls;

namespace {

MukaiClass hilb_vector(long n) { return {Rat(1), Rat(0), Rat(1 - n)}; }

std::set<std::pair<Rat, Rat>> geometry_set(const std::vector<Wall>& walls) {
  std::set<std::pair<Rat, Rat>> out;
  for (const auto& w : walls) out.insert({w.geometry.center_b, w.geometry.radius_sq});
  return out;
}

bool wall_lists_class(const Wall& w, const MukaiClass& cls) {
  for (const auto& d : w.destabilizers)
    if (d.w == cls || d.complement == cls) return true;
  return false;
}

// Independent hit detector used by the brute-force enumeration oracle:
// the T-values of the wall parabola over a closed b-interval form
// [rsq - far^2, rsq - near^2], both exact rationals.
bool oracle_hits(const WallGeometry& g, const Rat& u, const Rat& v, const Rat& T1,
                 const Rat& T2) {
  if (g.type == WallGeometry::Type::VerticalLine)
    return g.center_b >= u && g.center_b <= v;
  Rat du = abs(u - g.center_b), dv = abs(v - g.center_b);
  Rat near = (g.center_b >= u && g.center_b <= v) ? Rat(0) : std::min(du, dv);
  Rat far = std::max(du, dv);
  Rat tmax = g.radius_sq - near * near;
  Rat tmin = g.radius_sq - far * far;
  Rat hi = std::min(tmax, T2), lo = std::max(tmin, T1);
  return hi >= lo && hi > 0;
}

} // namespace

TEST_CASE("wall_of_pair pinned examples") {
  SurfaceData d2(2);
  auto g = wall_of_pair(hilb_vector(5), {Rat(1), Rat(-1), Rat(3)}, d2);
  REQUIRE(g.has_value());
  CHECK(g->type == WallGeometry::Type::Semicircle);
  CHECK(g->center_b == rat(-7, 4));
  CHECK(g->radius_sq == rat(17, 16));

  for (long n = 2; n <= 8; ++n)
    for (long d = 1; d <= 4; ++d) {
      auto hc = wall_of_pair(hilb_vector(n), {Rat(0), Rat(0), Rat(1)}, SurfaceData(d));
      REQUIRE(hc.has_value());
      CHECK(hc->type == WallGeometry::Type::VerticalLine);
      CHECK(hc->center_b == 0);
    }

  MukaiClass v{Rat(2), Rat(1), Rat(-3)};
  CHECK_THROWS_AS(wall_of_pair(v, v * Rat(3), d2), CoreError);
  CHECK_THROWS_AS(wall_of_pair(v, {Rat(0), Rat(0), Rat(0)}, d2), CoreError);
}

TEST_CASE("points of wall_of_pair have phase-aligned charges (float oracle)") {
  oracle::RatGen gen(43);
  int verified = 0;
  for (int i = 0; i < 500 && verified < 100; ++i) {
    SurfaceData X(gen.int_in(1, 8));
    MukaiClass v = gen.mukai(5), w = gen.mukai(5);
    std::optional<WallGeometry> geo;
    try {
      geo = wall_of_pair(v, w, X);
    } catch (const CoreError&) {
      continue;
    }
    if (!geo) continue;
    // sample a point of the locus
    Rat b, T;
    if (geo->type == WallGeometry::Type::Semicircle) {
      Rat u = rat(gen.int_in(-2, 2), 5);
      b = geo->center_b + u;
      T = geo->radius_sq - u * u;
    } else {
      b = geo->center_b;
      T = gen.rat_in(1, 3);
    }
    if (T <= 0) continue;
    double t = std::sqrt(to_double(T));
    auto zv = oracle::charge_fp(v, to_double(b), t, X.d);
    auto zw = oracle::charge_fp(w, to_double(b), t, X.d);
    double cross = std::imag(std::conj(zv) * zw);
    double scale = std::abs(zv) * std::abs(zw);
    if (scale < 1e-12) continue;
    ++verified;
    CHECK(std::abs(cross) <= 1e-9 * scale);
  }
  CHECK(verified >= 80);
}

TEST_CASE("wall geometry is invariant under complement and positive rescaling") {
  oracle::RatGen gen(47);
  int done = 0;
  for (int i = 0; i < 500 && done < 120; ++i) {
    SurfaceData X(gen.int_in(1, 6));
    MukaiClass v = gen.mukai(5), w = gen.mukai(5);
    std::optional<WallGeometry> g1, g2, g3;
    try {
      g1 = wall_of_pair(v, w, X);
      g2 = wall_of_pair(v, v - w, X);
      Rat lam = gen.rat_in(1, 5, 3);
      if (lam <= 0) lam = rat(1, 2);
      g3 = wall_of_pair(v, w * lam, X);
    } catch (const CoreError&) {
      continue; // w or v - w proportional to v
    }
    if (!g1) continue;
    ++done;
    REQUIRE(g2.has_value());
    REQUIRE(g3.has_value());
    CHECK(*g1 == *g2);
    CHECK(*g1 == *g3);
  }
  CHECK(done >= 80);
}

TEST_CASE("potential_destabilizers: first-wall fixture of Hilb^5 at d=2") {
  SurfaceData X(2);
  MukaiClass v = hilb_vector(5);
  Region region{rat(-3, 2), rat(-1, 2), Rat(0), Rat(2)};
  auto walls = potential_destabilizers(v, region, 3, X);
  REQUIRE(!walls.empty());

  bool found = false;
  for (const auto& w : walls)
    if (w.geometry.type == WallGeometry::Type::Semicircle && w.geometry.center_b == rat(-7, 4) &&
        w.geometry.radius_sq == rat(17, 16)) {
      found = true;
      CHECK(wall_lists_class(w, {Rat(1), Rat(-1), Rat(3)}));
    }
  CHECK(found);

  // no admissible wall point on the line b = -1 above T = 1/2: a circle
  // may cross the line higher up, but only where the Im-sandwich fails
  // and nothing destabilizes
  for (const auto& w : walls) {
    if (w.geometry.type != WallGeometry::Type::Semicircle) continue;
    Rat db = Rat(-1) - w.geometry.center_b;
    Rat T_at = w.geometry.radius_sq - db * db;
    if (T_at <= rat(1, 2)) continue;
    for (const auto& d : w.destabilizers) {
      Rat im_w = d.w.c + d.w.r;  // (c - r b)/2d at b = -1
      Rat im_v = v.c + v.r;
      CHECK(!(im_w >= 0 && im_w <= im_v));
    }
  }
  auto crossings = walls_on_vertical_path(v, Rat(-1), Rat(0), Rat(2), 3, X);
  REQUIRE(!crossings.empty());
  CHECK(crossings.front().T == rat(1, 2));
}

TEST_CASE("potential_destabilizers agrees with a big-box brute force") {
  // Gieseker-chamber fixture: empty for v = (2, 1, 0) at d = 1 high up.
  SurfaceData X(1);
  MukaiClass v{Rat(2), Rat(1), Rat(0)};
  Region region{rat(-1, 4), rat(1, 4), Rat(4), Rat(8)};
  auto walls = potential_destabilizers(v, region, 4, X);
  CHECK(walls.empty());

  // independent brute force over |r| <= 4, |c| <= 20, |s| <= 60
  int hits = 0;
  for (long r2 = -4; r2 <= 4; ++r2)
    for (long c2 = -20; c2 <= 20; ++c2)
      for (long s2 = -60; s2 <= 60; ++s2) {
        MukaiClass w{Rat(r2), Rat(c2), Rat(s2)};
        if (w.is_zero()) continue;
        if (mukai_square(w, X) < -2 || mukai_square(v - w, X) < -2) continue;
        // sandwich interval {b : 0 <= c2 - r2 b <= 1 - 2b} in [-1/4, 1/4]
        Rat lo = region.b_lo, hi = region.b_hi;
        auto clip = [&](Rat a, Rat k) { // a*b <= k
          if (a > 0) {
            hi = std::min(hi, Rat(k / a));
          } else if (a < 0) {
            lo = std::max(lo, Rat(k / a));
          } else if (k < 0) {
            lo = Rat(1);
            hi = Rat(0);
          }
        };
        clip(Rat(r2), Rat(c2));
        clip(Rat(v.r - r2), Rat(v.c - c2));
        if (lo > hi) continue;
        std::optional<WallGeometry> geo;
        try {
          geo = wall_of_pair(v, w, X);
        } catch (const CoreError&) {
          continue;
        }
        if (!geo) continue;
        if (oracle_hits(*geo, lo, hi, region.T_lo, region.T_hi)) ++hits;
      }
  CHECK(hits == 0);
}

TEST_CASE("potential_destabilizers refuses degenerate regions, accepts point classes") {
  SurfaceData X(1);
  CHECK_THROWS_AS(
      potential_destabilizers(hilb_vector(2), {rat(-1, 2), rat(1, 2), Rat(0), Rat(1)}, 3, X),
      CoreError);
  CHECK_THROWS_AS(
      potential_destabilizers(hilb_vector(2), {Rat(1), Rat(0), Rat(0), Rat(1)}, 3, X),
      CoreError); // empty region
  // point class: no walls inside the geometric locus
  auto walls = potential_destabilizers({Rat(0), Rat(0), Rat(1)},
                                       {rat(-5, 4), rat(-3, 4), rat(1, 2), Rat(1)}, 3, X);
  CHECK(walls.empty());
}

TEST_CASE("mirror-side regions: flipped hosts still report decompositions of v") {
  // Right of the degenerate line Im Z(v) < 0, so the enumeration works
  // with -v internally; records must still satisfy complement = v - w.
  SurfaceData X(2);
  MukaiClass v = hilb_vector(5);
  Region left{rat(-3, 2), rat(-1, 2), Rat(0), Rat(2)};
  Region right{rat(1, 2), rat(3, 2), Rat(0), Rat(2)};
  auto wl = potential_destabilizers(v, left, 3, X);
  auto wr = potential_destabilizers(v, right, 3, X);
  REQUIRE(wl.size() == wr.size());
  // the slice picture of (1,0,1-n) is symmetric under b -> -b
  for (size_t i = 0; i < wl.size(); ++i) {
    const auto& mirror = wr[wr.size() - 1 - i];
    CHECK(wl[i].geometry.center_b == -mirror.geometry.center_b);
    CHECK(wl[i].geometry.radius_sq == mirror.geometry.radius_sq);
  }
  for (const auto& w : wr)
    for (const auto& d : w.destabilizers) {
      CHECK(d.complement == v - d.w);
      CHECK(d.pairing == mukai_pairing(d.w, d.complement, X));
      CHECK(mukai_square(d.w, X) >= -2);
      CHECK(mukai_square(d.complement, X) >= -2);
      auto geo = wall_of_pair(v, d.w, X);
      REQUIRE(geo.has_value());
      CHECK(*geo == w.geometry);
    }
  // classify accepts the flipped-host records
  for (const auto& w : wr) (void)classify_wall(v, w, X, 5);

  auto crossings = walls_on_vertical_path(v, Rat(1), Rat(0), Rat(2), 3, X);
  REQUIRE(!crossings.empty());
  CHECK(crossings.front().T == rat(1, 2)); // mirror of the b = -1 wall top
  for (const auto& c : crossings)
    for (const auto& d : c.wall.destabilizers) CHECK(d.complement == v - d.w);
}

TEST_CASE("rank-zero host classes enumerate cleanly") {
  // torsion class: Im Z is the constant 2dc, never degenerate
  SurfaceData X(1);
  MukaiClass v{Rat(0), Rat(1), Rat(-1)};
  Region region{Rat(-1), Rat(1), Rat(0), Rat(2)};
  auto ws = potential_destabilizers(v, region, 4, X, ExecMode::Serial);
  auto wp = potential_destabilizers(v, region, 4, X, ExecMode::Parallel);
  REQUIRE(ws.size() == wp.size());
  for (const auto& w : ws) {
    CHECK(w.geometry.type == WallGeometry::Type::Semicircle);
    for (const auto& d : w.destabilizers) {
      CHECK(mukai_square(d.w, X) >= -2);
      CHECK(mukai_square(d.complement, X) >= -2);
    }
  }
}

TEST_CASE("the optional Mukai-inequality filter only removes decompositions") {
  SurfaceData X(2);
  MukaiClass v = hilb_vector(5);
  Region region{rat(-3, 2), rat(-1, 2), Rat(0), Rat(2)};
  auto plain = potential_destabilizers(v, region, 3, X, ExecMode::Parallel, false);
  auto strict = potential_destabilizers(v, region, 3, X, ExecMode::Parallel, true);
  auto strict_set = geometry_set(strict);
  auto plain_set = geometry_set(plain);
  for (const auto& g : strict_set) CHECK(plain_set.count(g) == 1);
  Rat sqv = mukai_square(v, X);
  for (const auto& w : strict)
    for (const auto& d : w.destabilizers)
      CHECK(mukai_square(d.w, X) + mukai_square(d.complement, X) <= sqv - 2);
}

TEST_CASE("wall set is stable under raising the rank bound on the fixture family") {
  // Above the tallest spherical hole (T >= 1/d) the wall set of the
  // fixture family is already complete at rank bound 3. Below that scale
  // walls of high-rank spherical pairs accumulate towards T = 0, e.g.
  // (-5,7,-10) against (1,0,-2) at d=1, so no finite bound is stable on
  // regions reaching T -> 0.
  for (long d = 1; d <= 4; ++d)
    for (long n : {3L, 5L, 7L}) {
      SurfaceData X(d);
      MukaiClass v = hilb_vector(n);
      Region region{rat(-3, 2), rat(-1, 2), rat(1, d), Rat(2)};
      auto w3 = potential_destabilizers(v, region, 3, X);
      auto w6 = potential_destabilizers(v, region, 6, X);
      CHECK(!w3.empty());
      CHECK(geometry_set(w3) == geometry_set(w6));
    }
}

TEST_CASE("serial and parallel enumeration produce identical records") {
  SurfaceData X(3);
  MukaiClass v = hilb_vector(6);
  Region region{rat(-7, 4), rat(-1, 4), Rat(0), Rat(3)};
  auto ws = potential_destabilizers(v, region, 6, X, ExecMode::Serial);
  auto wp = potential_destabilizers(v, region, 6, X, ExecMode::Parallel);
  REQUIRE(ws.size() == wp.size());
  for (size_t i = 0; i < ws.size(); ++i) {
    CHECK(ws[i].geometry == wp[i].geometry);
    REQUIRE(ws[i].destabilizers.size() == wp[i].destabilizers.size());
    for (size_t j = 0; j < ws[i].destabilizers.size(); ++j) {
      CHECK(ws[i].destabilizers[j].w == wp[i].destabilizers[j].w);
      CHECK(ws[i].destabilizers[j].complement == wp[i].destabilizers[j].complement);
      CHECK(ws[i].destabilizers[j].pairing == wp[i].destabilizers[j].pairing);
    }
  }

  auto ps = walls_on_vertical_path(v, Rat(-1), Rat(0), Rat(3), 6, X, ExecMode::Serial);
  auto pp = walls_on_vertical_path(v, Rat(-1), Rat(0), Rat(3), 6, X, ExecMode::Parallel);
  REQUIRE(ps.size() == pp.size());
  for (size_t i = 0; i < ps.size(); ++i) {
    CHECK(ps[i].T == pp[i].T);
    CHECK(ps[i].wall.geometry == pp[i].wall.geometry);
  }
}

TEST_CASE("walls_on_vertical_path fixtures") {
  // topmost crossing of the Hilb^5, d=2 path at b=-1 is T = 1/2
  SurfaceData d2(2);
  auto crossings = walls_on_vertical_path(hilb_vector(5), Rat(-1), Rat(0), Rat(2), 3, d2);
  REQUIRE(!crossings.empty());
  CHECK(crossings.front().T == rat(1, 2));
  CHECK(wall_lists_class(crossings.front().wall, {Rat(1), Rat(-1), Rat(3)}));
  for (size_t i = 1; i < crossings.size(); ++i) CHECK(crossings[i].T <= crossings[i - 1].T);

  // degenerate path: Im Z(v) = 0 on the whole line
  SurfaceData d1(1);
  CHECK_THROWS_AS(walls_on_vertical_path(hilb_vector(2), Rat(0), Rat(0), Rat(2), 3, d1),
                  CoreError);

  // d = 9, b = -2/3: finite list, stable under raising the rank bound
  SurfaceData d9(9);
  auto c5 = walls_on_vertical_path(hilb_vector(5), rat(-2, 3), Rat(0), Rat(4), 5, d9);
  auto c8 = walls_on_vertical_path(hilb_vector(5), rat(-2, 3), Rat(0), Rat(4), 8, d9);
  CHECK(!c5.empty());
  REQUIRE(c5.size() == c8.size());
  for (size_t i = 0; i < c5.size(); ++i) CHECK(c5[i].T == c8[i].T);
}

TEST_CASE("path crossings lie on their wall and in range") {
  SurfaceData X(3);
  MukaiClass v = hilb_vector(7);
  auto crossings = walls_on_vertical_path(v, rat(-5, 4), Rat(0), Rat(3), 6, X);
  CHECK(!crossings.empty());
  for (const auto& c : crossings) {
    CHECK(c.T > 0);
    CHECK(c.T <= 3);
    REQUIRE(c.wall.geometry.type == WallGeometry::Type::Semicircle);
    Rat db = rat(-5, 4) - c.wall.geometry.center_b;
    CHECK(c.wall.geometry.radius_sq - db * db == c.T);
    for (const auto& d : c.wall.destabilizers) {
      CHECK(mukai_square(d.w, X) >= -2);
      CHECK(mukai_square(d.complement, X) >= -2);
      // Im-sandwich at the crossing
      Rat im_w = d.w.c - d.w.r * rat(-5, 4);
      Rat im_v = v.c - v.r * rat(-5, 4);
      CHECK(im_w >= 0);
      CHECK(im_w <= im_v);
    }
  }
}

TEST_CASE("gieseker_bound pinned fixtures") {
  SurfaceData d1(1);
  auto rep = gieseker_bound({Rat(2), Rat(1), Rat(0)}, Rat(0), d1);
  CHECK(rep.Dv.empty());
  CHECK(rep.mu_max_hat == rat(2, 3));
  CHECK(rep.T_bound == rat(7, 2));

  rep = gieseker_bound({Rat(1), Rat(2), Rat(0)}, Rat(0), d1);
  REQUIRE(rep.Dv.size() == 5);
  for (long s = -2; s <= 2; ++s)
    CHECK(std::find(rep.Dv.begin(), rep.Dv.end(), MukaiClass{Rat(1), Rat(1), Rat(s)}) !=
          rep.Dv.end());
  CHECK(rep.mu_max_hat == 2);
  CHECK(rep.T_bound == 6);

  // rank one with empty D_v falls back to mu/2
  SurfaceData d2(2);
  auto rep2 = gieseker_bound(hilb_vector(5), Rat(-1), d2);
  CHECK(rep2.Dv.empty());
  CHECK(rep2.mu_max_hat == 2); // mu_hat = 4

  CHECK_THROWS_AS(gieseker_bound({Rat(0), Rat(1), Rat(0)}, Rat(0), d1), CoreError);
  CHECK_THROWS_AS(gieseker_bound({Rat(1), Rat(0), Rat(0)}, Rat(0), d1), CoreError);
}

TEST_CASE("D_v agrees with an independent brute force on random hosts") {
  oracle::RatGen gen(53);
  int done = 0;
  for (int i = 0; i < 200 && done < 50; ++i) {
    SurfaceData X(gen.int_in(1, 4));
    MukaiClass v{Rat(gen.int_in(1, 3)), Rat(gen.int_in(-3, 4)), Rat(gen.int_in(-4, 4))};
    Rat b = rat(gen.int_in(-4, 4), gen.int_in(1, 3));
    if (mukai_square(v, X) < -2) continue;
    if (v.c - v.r * b <= 0) continue; // need positive slope
    ++done;
    auto rep = gieseker_bound(v, b, X);

    // oracle: slope and discrepancy via the cup-product twist, scan a box
    auto twist = [&](const MukaiClass& w) {
      return oracle::cup(w, oracle::exp_H(-b, X), X); // e^{-bH} w
    };
    MukaiClass vb = twist(v);
    Rat mu_v = 2 * X.d * vb.c / v.r;
    Rat delta_v = -vb.s / v.r + 1 + X.d * vb.c * vb.c / (v.r * v.r);
    std::vector<MukaiClass> expect;
    long rv = v.r.get_num().get_si();
    Rat cbox = 4 * v.r * (abs(v.c) + abs(v.r * b) + 1);
    for (long r2 = 1; r2 <= rv; ++r2)
      for (Int c2 = -rceil(cbox); c2 <= rceil(cbox); ++c2) {
        MukaiClass col{Rat(r2), Rat(c2), Rat(0)};
        MukaiClass colb = twist(col);
        Rat mu_w = 2 * X.d * colb.c / col.r;
        if (!(mu_w > 0 && mu_w < mu_v)) continue;
        // w^2 >= -2 caps s; delta is strictly decreasing in s, so walk
        // down from the cap until delta(w) < delta(v) fails
        Int s_hi = rfloor((X.d * Rat(c2) * Rat(c2) + 1) / r2);
        for (Int s2 = s_hi; s2 >= s_hi - 500; --s2) {
          MukaiClass w{Rat(r2), Rat(c2), Rat(s2)};
          REQUIRE(mukai_square(w, X) >= -2);
          MukaiClass wb = twist(w);
          Rat delta_w = -wb.s / w.r + 1 + X.d * wb.c * wb.c / (w.r * w.r);
          if (!(delta_w < delta_v)) break;
          expect.push_back(w);
        }
      }
    std::sort(expect.begin(), expect.end());
    CHECK(rep.Dv == expect);
  }
  CHECK(done >= 30);
}

TEST_CASE("no wall crossing lies above the Gieseker T bound on the fixture lines") {
  for (long d : {1L, 2L, 3L})
    for (long n : {3L, 5L, 7L}) {
      SurfaceData X(d);
      MukaiClass v = hilb_vector(n);
      auto rep = gieseker_bound(v, Rat(-1), X);
      auto crossings =
          walls_on_vertical_path(v, Rat(-1), Rat(0), Rat(4) * rep.T_bound + 4, 6, X);
      for (const auto& c : crossings) CHECK(c.T <= rep.T_bound);
    }
}

TEST_CASE("classify_wall fixtures") {
  SurfaceData d2(2);
  MukaiClass v5 = hilb_vector(5);
  MukaiClass oh{Rat(1), Rat(-1), Rat(3)};

  auto build = [](const MukaiClass& v, const MukaiClass& w, const SurfaceData& X) {
    Wall wall;
    wall.geometry = *wall_of_pair(v, w, X);
    MukaiClass comp = v - w;
    std::vector<MukaiClass> reps{w, comp};
    std::sort(reps.begin(), reps.end());
    for (const auto& r : reps)
      wall.destabilizers.push_back({r, v - r, mukai_pairing(r, v - r, X)});
    return wall;
  };

  Wall first = build(v5, oh, d2);
  auto flags = classify_wall(v5, first, d2, 5);
  CHECK(flags.has_spherical_destabilizer);
  CHECK(flags.pairing_at_least_two);
  CHECK(first.destabilizers[0].pairing == 3);
  CHECK(!flags.totally_semistable_hint); // n = 5 > d + 1 = 3
  CHECK(!flags.hilbert_chow);

  SurfaceData d4(4);
  MukaiClass v3 = hilb_vector(3);
  Wall first43 = build(v3, {Rat(1), Rat(-1), Rat(5)}, d4);
  auto flags43 = classify_wall(v3, first43, d4, 3);
  CHECK(flags43.totally_semistable_hint); // n = 3 <= d + 1 = 5

  Wall hc = build(v5, {Rat(0), Rat(0), Rat(1)}, d2);
  auto hcflags = classify_wall(v5, hc, d2, 5);
  CHECK(hcflags.hilbert_chow);
  CHECK(hcflags.has_isotropic_destabilizer);

  // foreign wall: destabilizer from a different geometry
  Wall bogus = first;
  bogus.geometry = hc.geometry;
  CHECK_THROWS_AS(classify_wall(v5, bogus, d2, 5), CoreError);
}

TEST_CASE("spherical_solver certifies the movable-cone obstruction family") {
  // odd k <= 9, n in [5, 21] with d = k^2 (n-1)/4 integral
  for (long k : {1L, 3L, 5L, 7L, 9L})
    for (long n : {5L, 9L, 13L, 17L, 21L}) {
      REQUIRE(k * k * (n - 1) % 4 == 0);
      long d = k * k * (n - 1) / 4;
      SurfaceData X(d);
      MukaiClass u{Rat(0), rat(1, k), Rat(1 - n)};
      MukaiClass v = hilb_vector(n);
      auto sols = spherical_solver({{u, rat(n - 1, 2)}, {v, Rat(-1)}}, X);
      CHECK(sols.empty());
    }
}

TEST_CASE("spherical_solver positive control and edge cases") {
  SurfaceData d1(1);
  // forced to (1, 0, 1)
  auto sols = spherical_solver(
      {{{Rat(0), Rat(0), Rat(1)}, Rat(-1)}, {{Rat(1), Rat(0), Rat(-4)}, Rat(3)}}, d1);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == MukaiClass{Rat(1), Rat(0), Rat(1)});

  // rank-3 system with the same unique solution
  sols = spherical_solver({{{Rat(0), Rat(0), Rat(1)}, Rat(-1)},
                           {{Rat(1), Rat(0), Rat(0)}, Rat(-1)},
                           {{Rat(0), Rat(1), Rat(0)}, Rat(0)}},
                          d1);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == MukaiClass{Rat(1), Rat(0), Rat(1)});

  // rank-3 system whose solution is not spherical
  sols = spherical_solver({{{Rat(0), Rat(0), Rat(1)}, Rat(-2)},
                           {{Rat(1), Rat(0), Rat(0)}, Rat(-1)},
                           {{Rat(0), Rat(1), Rat(0)}, Rat(0)}},
                          d1);
  CHECK(sols.empty());

  // under-determined: functionals span dimension 1
  CHECK_THROWS_AS(spherical_solver({{{Rat(0), Rat(0), Rat(1)}, Rat(-1)}}, d1), CoreError);
  CHECK_THROWS_AS(spherical_solver({{{Rat(0), Rat(0), Rat(1)}, Rat(-1)},
                                    {{Rat(0), Rat(0), Rat(2)}, Rat(-2)}},
                                   d1),
                  CoreError);

  // rank 2 but inconsistent: certifies emptiness rather than erroring
  sols = spherical_solver({{{Rat(1), Rat(0), Rat(0)}, Rat(0)},
                           {{Rat(0), Rat(1), Rat(0)}, Rat(0)},
                           {{Rat(2), Rat(0), Rat(0)}, Rat(1)}},
                          d1);
  CHECK(sols.empty());
}

TEST_CASE("spherical_solver finds both integral roots when they exist") {
  // d=1, pin r = 2 and s = 1: xi = (2, c, 1) is spherical iff 2c^2 - 4 = -2,
  // so c = +-1.
  SurfaceData d1(1);
  auto sols = spherical_solver(
      {{{Rat(0), Rat(0), Rat(1)}, Rat(-2)}, {{Rat(1), Rat(0), Rat(0)}, Rat(-1)}}, d1);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0] == MukaiClass{Rat(2), Rat(-1), Rat(1)});
  CHECK(sols[1] == MukaiClass{Rat(2), Rat(1), Rat(1)});
}
