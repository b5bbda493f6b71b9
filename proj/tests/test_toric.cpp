#include <doctest.h>

#include <algorithm>
#include <set>

#include "qtoric/errors.hpp"
#include "support.hpp"

using namespace testing_support;
using qt::Degree;
using qt::ErrorCode;
using qt::Fan;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const qt::Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::vector<BigRat> rats(std::initializer_list<std::pair<long, long>> v) {
  std::vector<BigRat> out;
  for (auto [p, q] : v)
    out.push_back(rat(p, q));
  return out;
}

// Every non-negative combination of the generators with omega.d <= cutoff,
// by plain nested enumeration.
std::set<Degree> brute_force_effective(const std::vector<Degree>& gens,
                                       const std::vector<BigRat>& omega, const BigRat& cutoff) {
  std::set<Degree> out;
  std::vector<Degree> frontier = {Degree(omega.size(), 0)};
  out.insert(frontier[0]);
  while (!frontier.empty()) {
    Degree d = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      Degree e = d + g;
      if (qt::grade(omega, e) <= cutoff && out.insert(e).second)
        frontier.push_back(e);
    }
  }
  return out;
}

} // namespace

TEST_CASE("wall classes, generators and omega of the fixtures") {
  struct Expect {
    Fan fan;
    std::vector<Degree> gens;
    std::vector<BigRat> omega;
  };
  std::vector<Expect> cases = {
      {qt::fans::projective_space(1), {{1, 1}}, rats({{1, 2}, {1, 2}})},
      {qt::fans::projective_space(2), {{1, 1, 1}}, rats({{1, 3}, {1, 3}, {1, 3}})},
      {qt::fans::projective_space(3), {{1, 1, 1, 1}}, rats({{1, 4}, {1, 4}, {1, 4}, {1, 4}})},
      {qt::fans::p1xp1(), {{0, 0, 1, 1}, {1, 1, 0, 0}}, rats({{1, 2}, {1, 2}, {1, 2}, {1, 2}})},
      {qt::fans::hirzebruch(1), {{0, 1, 0, 1}, {1, -1, 1, 0}},
       rats({{3, 5}, {1, 5}, {3, 5}, {4, 5}})},
      {qt::fans::hirzebruch(2), {{0, 1, 0, 1}, {1, -2, 1, 0}},
       rats({{1, 2}, {0, 1}, {1, 2}, {1, 1}})},
      {qt::fans::hirzebruch(3), {{0, 1, 0, 1}, {1, -3, 1, 0}},
       rats({{5, 13}, {-1, 13}, {5, 13}, {14, 13}})},
      {qt::fans::local_p2(), {{1, 1, 1, -3}}, rats({{1, 12}, {1, 12}, {1, 12}, {-1, 4}})},
  };
  for (const auto& c : cases) {
    auto cert = qt::validate_fan(c.fan);
    CHECK(cert.generators == c.gens);
    CHECK(cert.omega == c.omega);
    CHECK(qt::verify_certificate(c.fan, cert));
    for (const auto& w : cert.walls)
      CHECK(qt::grade(cert.omega, w.degree) >= 1);
  }
  // The third F1 wall class (1,0,1,1) is the sum of the two generators.
  auto f1 = qt::validate_fan(qt::fans::hirzebruch(1));
  CHECK(f1.walls.size() == 4);
  CHECK(std::count_if(f1.walls.begin(), f1.walls.end(),
                      [](const qt::WallClass& w) { return w.degree == Degree{1, 0, 1, 1}; }) == 1);
}

TEST_CASE("wall classes are relations among the rays") {
  for (const auto& [name, fan] : all_fixtures()) {
    CAPTURE(name);
    for (const auto& w : qt::wall_curve_classes(fan)) {
      for (int k = 0; k < fan.dim(); ++k) {
        long s = 0;
        for (std::size_t i = 0; i < fan.ray_count(); ++i)
          s += w.degree[i] * fan.rays()[i][k];
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("a tampered certificate is rejected") {
  Fan fan = qt::fans::hirzebruch(2);
  auto cert = qt::validate_fan(fan);
  auto bad = cert;
  bad.omega[1] += 1;
  CHECK_FALSE(qt::verify_certificate(fan, bad));
  bad = cert;
  bad.cone_functionals[0][0] += rat(1, 7);
  CHECK_FALSE(qt::verify_certificate(fan, bad));
}

TEST_CASE("fan validation errors carry their codes") {
  using V = std::vector<std::vector<long>>;
  using C = std::vector<std::vector<int>>;
  CHECK(code_of([] {
          qt::validate_fan(Fan::make(2, V{{1, 0}, {1, 2}, {-1, -1}}, C{{0, 1}, {1, 2}, {0, 2}}));
        }) == ErrorCode::NotSmooth);
  CHECK(code_of([] { qt::validate_fan(Fan::make(2, V{{2, 0}, {0, 1}}, C{{0, 1}})); }) ==
        ErrorCode::NonPrimitiveRay);
  CHECK(code_of([] {
          qt::validate_fan(Fan::make(2, V{{1, 0}, {0, 1}, {-1, -1}}, C{{0}, {1, 2}}));
        }) == ErrorCode::NotSimplicial);
  CHECK(code_of([] { qt::validate_fan(Fan::make(2, V{{1, 0}, {-1, 0}}, C{{0, 1}})); }) ==
        ErrorCode::NotSimplicial);
  CHECK(code_of([] { Fan::make(2, V{{1, 0}, {0, 1}, {1}}, C{{0, 1}}); }) ==
        ErrorCode::MalformedFan);
  CHECK(code_of([] { Fan::make(2, V{{1, 0}, {0, 1}}, C{{0, 5}}); }) == ErrorCode::MalformedFan);
  CHECK(code_of([] { Fan::make(2, V{{1, 0}, {0, 1}, {-1, -1}}, C{{0, 1}}); }) ==
        ErrorCode::MalformedFan);  // unused ray
  CHECK(code_of([] { Fan::make(2, V{{1, 0}, {0, 1}}, C{{0, 1}, {1, 0}}); }) ==
        ErrorCode::MalformedFan);  // duplicate cone
  // Three quadrants: non-convex support.
  CHECK(code_of([] {
          qt::validate_fan(
              Fan::make(2, V{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, C{{0, 1}, {1, 2}, {2, 3}}));
        }) == ErrorCode::NotProjective);
  // Ray (0,1) lies on three maximal cones.
  CHECK(code_of([] {
          qt::validate_fan(
              Fan::make(2, V{{1, 0}, {0, 1}, {-1, 0}, {1, 1}}, C{{0, 1}, {1, 2}, {1, 3}}));
        }) == ErrorCode::BadWallIncidence);
}

TEST_CASE("cones and labels are canonicalized") {
  Fan a = Fan::make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{2, 1}, {0, 2}, {1, 0}});
  Fan b = qt::fans::projective_space(2);
  CHECK(a.cones() == b.cones());
  CHECK(a.cones() == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(a.labels() == std::vector<std::string>{"D1", "D2", "D3"});
  CHECK_THROWS_AS(Fan::make(2, {{1, 0}, {0, 1}}, {{0, 1}}, {"only-one"}), qt::Error);
}

TEST_CASE("fixed-point restrictions satisfy the defining linear system") {
  // u_j(x) = 0 off the cone, and sum_j b_j (u_j(x) - lambda_j) = 0; these
  // m equations determine u(x), so checking them is a complete oracle.
  for (const auto& [name, fan] : all_fixtures()) {
    CAPTURE(name);
    auto pts = qt::fixed_points(fan);
    CHECK(pts.size() == fan.cones().size());
    const std::size_t m = fan.ray_count();
    for (const auto& p : pts) {
      for (std::size_t j = 0; j < m; ++j)
        if (std::find(p.cone.begin(), p.cone.end(), int(j)) == p.cone.end())
          CHECK(std::all_of(p.restriction[j].begin(), p.restriction[j].end(),
                            [](long c) { return c == 0; }));
      for (int k = 0; k < fan.dim(); ++k)
        for (std::size_t i = 0; i < m; ++i) {
          long s = 0;
          for (std::size_t j = 0; j < m; ++j)
            s += fan.rays()[j][k] * p.restriction[j][i];
          CHECK(s == fan.rays()[i][k]);
        }
      qt::MPoly e = qt::MPoly::constant(m + 1, 1);
      for (int j : p.cone)
        e *= qt::linear_form_poly(p.restriction[j], m + 1);
      CHECK(qt::RationalFunction(e) == p.euler);
    }
  }
}

TEST_CASE("P2 restriction table") {
  auto pts = qt::fixed_points(qt::fans::projective_space(2));
  REQUIRE(pts.size() == 3);
  CHECK(str(qt::linear_form_poly(pts[0].restriction[0], 4), 3) == "-l3 + l1");
  CHECK(str(qt::linear_form_poly(pts[0].restriction[1], 4), 3) == "-l3 + l2");
  CHECK(str(qt::linear_form_poly(pts[2].restriction[2], 4), 3) == "l3 - l1");
  CHECK(str(pts[1].euler, 3) == "-l2*l3 + l1*l3 + l2^2 - l1*l2");
}

TEST_CASE("section degrees") {
  auto p1 = qt::fixed_points(qt::fans::projective_space(1));
  CHECK(qt::section_degree(p1, 0, {1, 0}) == Degree{0, 0});
  CHECK(qt::section_degree(p1, 1, {1, 0}) == Degree{1, 1});
  CHECK(qt::section_degree(p1, 0, {0, 1}) == Degree{1, 1});
  CHECK(qt::section_degree(p1, 1, {0, 1}) == Degree{0, 0});
  auto f1 = qt::fixed_points(qt::fans::hirzebruch(1));
  CHECK(qt::section_degree(f1, 1, {0, 1, 0, 0}) == Degree{0, 1, 0, 1});
  // every offset is zero or an effective class
  for (const auto& [name, fan] : small_fixtures()) {
    CAPTURE(name);
    auto cert = qt::validate_fan(fan);
    auto pts = qt::fixed_points(fan);
    auto eff = qt::effective_degrees(cert.generators, cert.omega, 12);
    std::set<Degree> effective(eff.begin(), eff.end());
    for (std::size_t i = 0; i < fan.ray_count(); ++i)
      for (std::size_t x = 0; x < pts.size(); ++x)
        CHECK(effective.count(qt::section_degree(pts, x, qt::unit_cocharacter(fan.ray_count(), i))));
  }
}

TEST_CASE("effective degrees match brute-force enumeration") {
  for (const auto& [name, fan] : all_fixtures()) {
    CAPTURE(name);
    auto cert = qt::validate_fan(fan);
    for (int c : {0, 1, 3, 5}) {
      auto ds = qt::effective_degrees(cert.generators, cert.omega, BigRat(c));
      auto brute = brute_force_effective(cert.generators, cert.omega, BigRat(c));
      CHECK(std::set<Degree>(ds.begin(), ds.end()) == brute);
      CHECK(ds.size() == brute.size());
      for (std::size_t i = 1; i < ds.size(); ++i) {
        BigRat g0 = qt::grade(cert.omega, ds[i - 1]), g1 = qt::grade(cert.omega, ds[i]);
        CHECK((g0 < g1 || (g0 == g1 && ds[i - 1] < ds[i])));
      }
    }
  }
  auto p2 = qt::validate_fan(qt::fans::projective_space(2));
  CHECK(qt::effective_degrees(p2.generators, p2.omega, 2) ==
        std::vector<Degree>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
}

TEST_CASE("sliced and full charts describe the same restrictions") {
  std::mt19937 rng(17);
  for (const auto& [name, fan] : all_fixtures()) {
    CAPTURE(name);
    auto full = qt::build_model(fan, qt::Chart::full);
    auto sliced = qt::build_model(fan, qt::Chart::sliced);
    REQUIRE(full.points.size() == sliced.points.size());
    for (std::size_t x = 0; x < full.points.size(); ++x) {
      CHECK(sliced.to_full(sliced.points[x].euler) == full.points[x].euler);
      for (std::size_t j = 0; j < fan.ray_count(); ++j)
        CHECK(sliced.to_full(qt::RationalFunction(sliced.u_poly(x, j))) ==
              qt::RationalFunction(full.u_poly(x, j)));
    }
    // a chart-level cocharacter shift commutes with unslicing
    auto k = qt::unit_cocharacter(fan.ray_count(), fan.ray_count() - 1);
    auto ck = sliced.chart_cocharacter(k);
    qt::RationalFunction f(sliced.u_poly(0, 0) * sliced.u_poly(0, 0) + var(sliced.nvars(), sliced.nvars() - 1));
    qt::RationalFunction g(full.u_poly(0, 0) * full.u_poly(0, 0) + var(full.nvars(), full.nvars() - 1));
    CHECK(sliced.to_full(qt::shift_lambda(f, ck)) == qt::shift_lambda(g, k));
  }
}

TEST_CASE("omega override must pair positively with the walls") {
  Fan fan = qt::fans::projective_space(2);
  CHECK_NOTHROW(qt::build_model(fan, qt::Chart::full, rats({{1, 1}, {0, 1}, {0, 1}})));
  CHECK(code_of([&] { qt::build_model(fan, qt::Chart::full, rats({{1, 1}, {-1, 1}, {0, 1}})); }) ==
        ErrorCode::GradingMismatch);
  CHECK(code_of([&] { qt::build_model(fan, qt::Chart::full, rats({{1, 1}, {1, 1}})); }) ==
        ErrorCode::GradingMismatch);
}
