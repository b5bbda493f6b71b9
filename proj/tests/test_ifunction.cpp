#include <doctest.h>

#include <set>

#include "qtoric/errors.hpp"
#include "support.hpp"

using namespace testing_support;
using qt::Degree;
using qt::RationalFunction;

namespace {

// prod_i prod_{c<=0}(u_i + cz) / prod_{c<=d_i}(u_i + cz) evaluated directly
// from the restriction rows at a numeric point (lambda..., z).
std::optional<BigRat> ifun_value(const qt::ToricModel& model, const Degree& d, std::size_t x,
                                 const std::vector<BigRat>& at) {
  const BigRat& z = at.back();
  BigRat v = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    BigRat u = 0;
    for (std::size_t k = 0; k < model.m(); ++k)
      u += model.points[x].restriction[i][k] * at[k];
    for (long c = 1; c <= d[i]; ++c) {
      if (u + c * z == 0)
        return std::nullopt;
      v /= u + c * z;
    }
    for (long c = d[i] + 1; c <= 0; ++c)
      v *= u + c * z;
  }
  return v;
}

} // namespace

TEST_CASE("P1 coefficients") {
  auto model = qt::build_model(qt::fans::projective_space(1), qt::Chart::full);
  const std::size_t nv = model.nvars();
  qt::MPoly l1 = var(nv, 0), l2 = var(nv, 1), z = var(nv, 2);
  // point 1 is the cone {ray 1}: u1 = l1 - l2, u2 = 0
  CHECK(qt::ifun_coeff(model, {1, 1}, 0) ==
        RationalFunction::reduce(cst(nv, 1), (l1 - l2 + z) * z));
  CHECK(qt::ifun_coeff(model, {2, 2}, 1) ==
        RationalFunction::reduce(cst(nv, 1), (l2 - l1 + z) * (l2 - l1 + z * BigRat(2)) * z * z *
                                                 BigRat(2)));
  CHECK(qt::ifun_coeff(model, {0, 0}, 0).is_one());
  CHECK_THROWS_AS(qt::ifun_coeff(model, {1, 1, 1}, 0), qt::Error);
}

TEST_CASE("coefficients agree with direct numeric evaluation") {
  std::mt19937 rng(31);
  for (const auto& [name, fan] : all_fixtures()) {
    CAPTURE(name);
    auto model = qt::build_model(fan, qt::Chart::full);
    for (const auto& d : qt::lattice_box(model, 2)) {
      for (std::size_t x = 0; x < model.points.size(); ++x) {
        auto f = qt::ifun_coeff(model, d, x);
        auto p = random_point(model.nvars(), rng);
        auto lhs = eval(f, p);
        auto rhs = ifun_value(model, d, x, p);
        if (lhs && rhs)
          CHECK(*lhs == *rhs);
      }
    }
  }
}

TEST_CASE("cutoff 0 leaves the single coefficient 1") {
  for (const auto& [name, fan] : all_fixtures()) {
    auto model = qt::build_model(fan, qt::Chart::sliced);
    auto I = qt::ifun_series(model, 0);
    REQUIRE(I.size() == 1);
    const auto& v = *I.find(Degree(model.m(), 0));
    for (const auto& e : v.values)
      CHECK(e.is_one());
  }
  auto model = qt::build_model(qt::fans::projective_space(1), qt::Chart::sliced);
  CHECK_THROWS_AS(qt::ifun_series(model, -1), qt::Error);
}

TEST_CASE("support: coefficients vanish exactly off the effective cone") {
  for (const auto& [name, fan] : all_fixtures()) {
    CAPTURE(name);
    auto model = qt::build_model(fan, qt::Chart::sliced);
    auto box = qt::lattice_box(model, 3);
    BigRat top = 0;
    for (const auto& d : box)
      top = std::max(top, qt::grade(model.omega, d));
    auto eff = qt::model_degrees(model, top);
    std::set<Degree> effective(eff.begin(), eff.end());
    for (const auto& d : box) {
      bool nonzero = false;
      for (std::size_t x = 0; x < model.points.size(); ++x)
        nonzero = nonzero || !qt::ifun_coeff(model, d, x).is_zero();
      CAPTURE(qt::degree_to_string(d));
      CHECK(nonzero == (effective.count(d) > 0));
    }
  }
}

TEST_CASE("serial and parallel fills agree; sliced maps to full") {
  for (const auto& [name, fan] : small_fixtures()) {
    CAPTURE(name);
    auto sliced = qt::build_model(fan, qt::Chart::sliced);
    auto full = qt::build_model(fan, qt::Chart::full);
    auto a = qt::ifun_series(sliced, 3, qt::Execution::serial);
    auto b = qt::ifun_series(sliced, 3, qt::Execution::parallel);
    CHECK(a == b);
    auto c = qt::ifun_series(full, 3);
    REQUIRE(a.size() == c.size());
    for (const auto& [d, v] : a.terms())
      for (std::size_t x = 0; x < v.size(); ++x)
        CHECK(sliced.to_full(v[x]) == (*c.find(d))[x]);
  }
}

TEST_CASE("raising the cutoff does not change lower terms") {
  for (const auto& [name, fan] : small_fixtures()) {
    CAPTURE(name);
    auto model = qt::build_model(fan, qt::Chart::sliced);
    CHECK(qt::ifun_series(model, 4).truncated(2) == qt::ifun_series(model, 2));
  }
}

TEST_CASE("non-effective probe directions are skipped only when zero") {
  auto model = qt::build_model(qt::fans::hirzebruch(2), qt::Chart::sliced);
  // (0,1,0,1) - (1,-2,1,0) has grade 0 under omega = (1/2,0,1/2,1)
  Degree probe = {-1, 3, -1, 1};
  CHECK(qt::grade(model.omega, probe) == 0);
  auto I = qt::ifun_series_over(model, {Degree(4, 0), probe}, 2);
  CHECK(I.size() == 1);
}
