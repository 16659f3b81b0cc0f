#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "algfun/continuation.hpp"
#include "algfun/parse.hpp"

using namespace algfun;

namespace {

Germ germ_of(const BiPoly& p, Complex z0, Complex w0) { return Germ{p.id(), z0, w0}; }

const std::vector<Complex> kOrigin{Complex(0, 0)};

}  // namespace

TEST_CASE("path geometry") {
  PathSpec circle = circle_path(Complex(0, 0), 1.0, 0.0);
  CHECK(std::abs(circle.start() - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(circle.end() - Complex(1, 0)) < 1e-12);
  CHECK(circle.length() == Catch::Approx(2 * M_PI));
  CHECK(path_min_distance(circle, Complex(0, 0)) == Catch::Approx(1.0));
  CHECK(path_min_distance(line_path(Complex(1, 0), Complex(4, 0)), Complex(0, 0)) ==
        Catch::Approx(1.0));
  // arc sector distance: quarter arc from angle 0 to pi/2
  Segment quarter = ArcSeg{{0, 0}, 1.0, 0.0, M_PI_2};
  CHECK(seg_distance(quarter, Complex(0, -1)) == Catch::Approx(std::sqrt(2.0)));
  CHECK(seg_distance(quarter, Complex(2, 0)) == Catch::Approx(1.0));
}

TEST_CASE("path serialization round trip") {
  PathSpec p;
  p.segments.push_back(LineSeg{{1, 0}, {2, 0.5}});
  p.segments.push_back(ArcSeg{{2, 1.5}, 1.0, -M_PI_2, M_PI_2});
  std::string text = to_string(p);
  PathSpec q = parse_path(text);
  REQUIRE(q.segments.size() == 2);
  CHECK(std::abs(q.start() - p.start()) < 1e-15);
  CHECK(std::abs(q.end() - p.end()) < 1e-12);
  CHECK_THROWS_AS(parse_path("L 0 0 1 1\nL 5 5 6 6\n"), parse_error);  // gap
  CHECK_THROWS_AS(parse_path("Q 1 2 3\n"), parse_error);
}

TEST_CASE("corridor routing detours around obstacle disks") {
  // straight shot blocked by a disk centered on the segment
  std::vector<Disk> obstacles{{Complex(2, 0), 1.0}};
  PathSpec r = route_segment(Complex(4, 0), Complex(0, 0), obstacles);
  validate_continuity(r);
  CHECK(std::abs(r.start() - Complex(4, 0)) < 1e-12);
  CHECK(std::abs(r.end() - Complex(0, 0)) < 1e-12);
  CHECK(path_min_distance(r, Complex(2, 0)) >= 1.0 - 1e-9);
  // unobstructed stays a single segment
  PathSpec s = route_segment(Complex(4, 0), Complex(4, 4), obstacles);
  CHECK(s.segments.size() == 1);
}

TEST_CASE("square root branch: half turn swaps sheets") {
  BiPoly p = parse_poly("w^2 - z");
  // counterclockwise unit circle from z=1: sqrt continues to the other branch
  Germ g = germ_of(p, Complex(1, 0), Complex(1, 0));
  Germ out = continue_germ(p, g, circle_path(Complex(0, 0), 1.0, 0.0), {}, kOrigin);
  CHECK(std::abs(out.w0 - Complex(-1, 0)) < 1e-9);
}

TEST_CASE("zero-length path is the identity") {
  BiPoly p = parse_poly("w^2 - z");
  Germ g = germ_of(p, Complex(1, 0), Complex(1, 0));
  Germ out = continue_germ(p, g, line_path(Complex(1, 0), Complex(1, 0)), {}, kOrigin);
  CHECK(out.w0 == g.w0);
  CHECK(out.z0 == g.z0);
}

TEST_CASE("real segment tracks the positive branch") {
  BiPoly p = parse_poly("w^2 - z");
  Germ g = germ_of(p, Complex(1, 0), Complex(1, 0));
  Germ out = continue_germ(p, g, line_path(Complex(1, 0), Complex(4, 0)), {}, kOrigin);
  CHECK(std::abs(out.w0 - Complex(2, 0)) < 1e-10);
}

TEST_CASE("tracked values follow the closed form along the whole path") {
  // w^2 - z around the unit circle: w(theta) = exp(i theta / 2); check the
  // oracle at intermediate stopping angles
  BiPoly p = parse_poly("w^2 - z");
  for (double frac : {0.2, 0.5, 0.8, 1.0}) {
    double th = 2 * M_PI * frac;
    PathSpec part{{ArcSeg{{0, 0}, 1.0, 0.0, th}}};
    Germ g = germ_of(p, Complex(1, 0), Complex(1, 0));
    Germ out = continue_germ(p, g, part, {}, kOrigin);
    Complex expect = std::exp(Complex(0, th / 2));
    CHECK(std::abs(out.w0 - expect) < 1e-8);
  }
  // w^3 - z: w(theta) = exp(i theta / 3)
  BiPoly c = parse_poly("w^3 - z");
  for (double frac : {0.3, 0.7, 1.0}) {
    double th = 2 * M_PI * frac;
    PathSpec part{{ArcSeg{{0, 0}, 1.0, 0.0, th}}};
    Germ g = germ_of(c, Complex(1, 0), Complex(1, 0));
    Germ out = continue_germ(c, g, part, {}, kOrigin);
    Complex expect = std::exp(Complex(0, th / 3));
    CHECK(std::abs(out.w0 - expect) < 1e-8);
  }
}

TEST_CASE("fiber transport permutations") {
  SECTION("w^2 - z loop around 0 gives the transposition") {
    BiPoly p = parse_poly("w^2 - z");
    Fiber f = fiber_at(p, Complex(1, 0));
    Transport tr = continue_fiber(p, f, circle_path(Complex(0, 0), 1.0, 0.0), {}, kOrigin);
    CHECK(tr.perm == Perm(std::vector<int>{1, 0}));
    for (size_t i = 0; i < 2; ++i)
      CHECK(std::abs(tr.arrival.values[static_cast<size_t>(tr.perm(static_cast<int>(i)))] -
                     tr.transported[i]) < 1e-12);
  }
  SECTION("single sheet: identity") {
    BiPoly p = parse_poly("w - z");
    Fiber f = fiber_at(p, Complex(1, 0));
    Transport tr = continue_fiber(p, f, circle_path(Complex(0, 0), 1.0, 0.0));
    CHECK(tr.perm.is_identity());
  }
  SECTION("w^3 - z loop around 0 is a 3-cycle") {
    BiPoly p = parse_poly("w^3 - z");
    Fiber f = fiber_at(p, Complex(1, 0));
    Transport tr = continue_fiber(p, f, circle_path(Complex(0, 0), 1.0, 0.0), {}, kOrigin);
    CHECK(tr.perm.cycle_type() == std::vector<int>{3});
  }
}

TEST_CASE("reversal returns the germ") {
  BiPoly p = parse_poly("w^3 - 3*w - z");
  std::vector<Complex> branch{{2, 0}, {-2, 0}};
  PathSpec fwd;
  fwd.segments.push_back(LineSeg{{4, 0}, {4, 3}});
  fwd.segments.push_back(ArcSeg{{0, 0}, 5.0, std::atan2(3, 4), M_PI});
  Fiber f = fiber_at(p, Complex(4, 0));
  for (Complex w0 : f.values) {
    Germ g = germ_of(p, Complex(4, 0), w0);
    Germ there = continue_germ(p, g, fwd, {}, branch);
    Germ back = continue_germ(p, there, reversed(fwd), {}, branch);
    CHECK(std::abs(back.w0 - g.w0) < 1e-8);
  }
}

TEST_CASE("concatenation equals composition") {
  BiPoly p = parse_poly("w^2 - z");
  PathSpec u = line_path(Complex(1, 0), Complex(1, 2));
  PathSpec v;
  v.segments.push_back(LineSeg{{1, 2}, {-3, 2}});
  v.segments.push_back(LineSeg{{-3, 2}, {-3, 0.5}});
  Germ g = germ_of(p, Complex(1, 0), Complex(1, 0));
  Germ two_step = continue_germ(p, continue_germ(p, g, u, {}, kOrigin), v, {}, kOrigin);
  Germ one_step = continue_germ(p, g, concat(u, v), {}, kOrigin);
  CHECK(std::abs(two_step.w0 - one_step.w0) < 1e-9);
}

TEST_CASE("homotopy invariance measurements") {
  BiPoly p = parse_poly("w^2 - z");
  Germ g = germ_of(p, Complex(1, 0), Complex(1, 0));
  SECTION("identical paths agree exactly") {
    PathSpec u = line_path(Complex(1, 0), Complex(4, 0));
    auto res = check_homotopy_invariance(p, g, u, u, {}, kOrigin);
    CHECK(res.agree);
    CHECK(res.distance == 0.0);
  }
  SECTION("homotopic two-segment chains in the right half plane") {
    PathSpec u;
    u.segments.push_back(LineSeg{{1, 0}, {2, 1}});
    u.segments.push_back(LineSeg{{2, 1}, {4, 0}});
    PathSpec v;
    v.segments.push_back(LineSeg{{1, 0}, {2, -1}});
    v.segments.push_back(LineSeg{{2, -1}, {4, 0}});
    auto res = check_homotopy_invariance(p, g, u, v, {}, kOrigin);
    CHECK(res.agree);
    CHECK(std::abs(res.w_first - Complex(2, 0)) < 1e-9);
  }
  SECTION("non-homotopic semicircles land on opposite branches") {
    PathSpec upper{{ArcSeg{{0, 0}, 1.0, 0.0, M_PI}}};
    PathSpec lower{{ArcSeg{{0, 0}, 1.0, 0.0, -M_PI}}};
    auto res = check_homotopy_invariance(p, g, upper, lower, {}, kOrigin);
    CHECK_FALSE(res.agree);
    CHECK(res.distance == Catch::Approx(2.0).margin(1e-6));
    CHECK(std::abs(res.w_first - Complex(0, 1)) < 1e-9);
    CHECK(std::abs(res.w_second - Complex(0, -1)) < 1e-9);
  }
}

TEST_CASE("monodromy invariance under same-class path jitter") {
  BiPoly p = parse_poly("w^2 - z");
  const double eps_b = branch_clearance(kOrigin);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> jit(-0.25 * eps_b, 0.25 * eps_b);
  PathSpec base;
  base.segments.push_back(LineSeg{{1, 0}, {1, 1}});
  base.segments.push_back(LineSeg{{1, 1}, {-1, 1}});
  base.segments.push_back(LineSeg{{-1, 1}, {-1, 0.25}});
  Germ g = germ_of(p, Complex(1, 0), Complex(1, 0));
  Germ ref = continue_germ(p, g, base, {}, kOrigin);
  for (int trial = 0; trial < 50; ++trial) {
    Complex j1{jit(rng), jit(rng)}, j2{jit(rng), jit(rng)};
    PathSpec pert;
    Complex v1 = Complex(1, 1) + j1, v2 = Complex(-1, 1) + j2;
    pert.segments.push_back(LineSeg{{1, 0}, v1});
    pert.segments.push_back(LineSeg{v1, v2});
    pert.segments.push_back(LineSeg{v2, {-1, 0.25}});
    Germ out = continue_germ(p, g, pert, {}, kOrigin);
    CHECK(std::abs(out.w0 - ref.w0) < 1e-8);
  }
}

TEST_CASE("tracking rejections") {
  BiPoly p = parse_poly("w^2 - z");
  Germ g = germ_of(p, Complex(1, 0), Complex(1, 0));
  // path through the branch point violates clearance
  CHECK_THROWS_AS(continue_germ(p, g, line_path(Complex(1, 0), Complex(-1, 0)), {}, kOrigin),
                  numeric_error);
  // path not starting at the germ
  CHECK_THROWS_AS(continue_germ(p, g, line_path(Complex(2, 0), Complex(3, 0)), {}, kOrigin),
                  error);
  // germ off the fiber
  Germ bad = germ_of(p, Complex(1, 0), Complex(0.5, 0));
  CHECK_THROWS_AS(continue_germ(p, bad, line_path(Complex(1, 0), Complex(2, 0)), {}, kOrigin),
                  numeric_error);
}
