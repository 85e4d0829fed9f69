#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "dirwell/catalog.hpp"
#include "dirwell/direction_set.hpp"
#include "dirwell/error.hpp"
#include "dirwell/problem_io.hpp"
#include "dirwell/sample_cloud.hpp"

using namespace dirwell;

TEST_CASE("box exit time along a ray") {
  Vec from = Vec::Constant(1, 0.5);
  Vec dir = Vec::Constant(1, 1.0);
  // moving along -dir stays in [-3, 3] until 0.5 - t = -3
  CHECK(box_exit_time(from, dir, Vec::Constant(1, -3.0), Vec::Constant(1, 3.0)) ==
        doctest::Approx(3.5));
  // a ray that exits immediately
  Vec lo(2), hi(2), f2(2), d2(2);
  lo << 0, 0;
  hi << 1, 1;
  f2 << 0, 0.5;
  d2 << 1, 0;  // from - t*d2 leaves through x0 = 0 at t = 0
  CHECK(box_exit_time(f2, d2, lo, hi) == 0.0);
}

TEST_CASE("every cloud point is feasible and reaches the anchor") {
  for (const char* name : {"x2exp", "quad", "doublewell", "l1w_5", "l2fin2"}) {
    Problem p = catalog_problem(name);
    SampleCloud cloud = sample_directional_region(p);
    REQUIRE_FALSE(cloud.points.empty());
    CHECK(cloud.points.size() <= static_cast<std::size_t>(p.budget));
    CHECK(cloud.points.size() == cloud.values.size());
    CHECK(cloud.spacing > 0.0);
    for (const Vec& x : cloud.points) {
      REQUIRE(p.feasible.contains(x));
      REQUIRE(domain_contains(p.directions, x, cloud.anchor));
    }
  }
}

TEST_CASE("the anchor is the first point and duplicates are dropped") {
  Problem p = catalog_problem("quad");
  SampleCloud cloud = sample_directional_region(p);
  CHECK(cloud.points.front() == cloud.anchor);
  std::set<std::vector<double>> seen;
  for (const Vec& x : cloud.points) {
    std::vector<double> key(x.data(), x.data() + x.size());
    CHECK(seen.insert(key).second);
  }
}

TEST_CASE("1-D grids hit the window endpoints exactly") {
  Problem p = catalog_problem("x2exp");
  SampleCloud cloud = sample_directional_region(p);
  double lo = cloud.points.front()[0], hi = lo;
  for (const Vec& x : cloud.points) {
    lo = std::min(lo, x[0]);
    hi = std::max(hi, x[0]);
  }
  // the domain is cut off at the anchor 0.5 on the right and the sample
  // box at -3 on the left
  CHECK(hi == 0.5);
  CHECK(lo == -3.0);
}

TEST_CASE("generator rays show up off the grid lattice") {
  // l1w_5 lives in 5 dimensions with budget 3000: the full lattice has
  // only 4 nodes per axis, and none of them lie on the -e_i rays except
  // the anchor, so the cloud is carried by the ray samples.
  Problem p = catalog_problem("l1w_5");
  SampleCloud cloud = sample_directional_region(p);
  REQUIRE(cloud.points.size() > 100);
  std::size_t on_some_axis = 0;
  for (const Vec& x : cloud.points) {
    int nonzero = 0;
    for (int i = 0; i < 5; ++i) nonzero += x[i] != 0.0 ? 1 : 0;
    if (nonzero <= 1) ++on_some_axis;
  }
  CHECK(on_some_axis == cloud.points.size());
}

TEST_CASE("values cache matches the objective") {
  Problem p = catalog_problem("doublewell");
  SampleCloud cloud = sample_directional_region(p);
  for (std::size_t i = 0; i < cloud.points.size(); i += 97) {
    CHECK(cloud.values[i] == p.f.value(cloud.points[i]));
  }
}

TEST_CASE("a region with no admissible samples is rejected") {
  // anchor at the left edge with M = {1}: the domain only extends left of
  // the anchor, but the box ends there.
  CHECK_THROWS_AS(parse_problem(R"({
    "dimension": 1,
    "f": {"expr": 0.0},
    "M": {"generators": [[1.0]]},
    "feasible": {"shape": "box", "lo": [2.0], "hi": [3.0]},
    "anchor": [2.0],
    "sample_box": {"lo": [2.0], "hi": [3.0]},
    "budget": 50, "seed": 1
  })"),
                  Error);
}

TEST_CASE("diameter helpers") {
  std::vector<Vec> pts;
  CHECK(diameter(pts) == 0.0);
  pts.push_back(Vec::Constant(1, 1.0));
  CHECK(diameter(pts) == 0.0);
  pts.push_back(Vec::Constant(1, -2.0));
  pts.push_back(Vec::Constant(1, 0.5));
  CHECK(diameter(pts) == doctest::Approx(3.0));

  Problem p = catalog_problem("quad");
  SampleCloud cloud = sample_directional_region(p);
  const double all = diameter_if(cloud, [](std::size_t) { return true; });
  CHECK(all == doctest::Approx(diameter(cloud.points)));
  CHECK(diameter_if(cloud, [](std::size_t) { return false; }) == 0.0);
}

TEST_CASE("cloud infimum finds the directional minimum") {
  Problem p = catalog_problem("quad");
  SampleCloud cloud = sample_directional_region(p);
  InfimumResult inf = cloud_infimum(cloud);
  CHECK(inf.value == 0.0);
  CHECK(inf.point.isZero(0.0));
  CHECK(cloud.values[inf.index] == inf.value);
}

TEST_CASE("same document, same cloud") {
  Problem p = catalog_problem("x2exp");
  SampleCloud a = sample_directional_region(p);
  SampleCloud b = sample_directional_region(p);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i] == b.points[i]);
  CHECK(a.spacing == b.spacing);
}
