#include <doctest.h>

#include "qtoric/errors.hpp"
#include "support.hpp"

using namespace testing_support;
using qt::Cocharacter;
using qt::Degree;
using qt::RationalFunction;

namespace {

// Delta_x(k) from its product formula at a numeric point.
std::optional<BigRat> delta_value(const qt::ToricModel& model, std::size_t x,
                                  const Cocharacter& k, const std::vector<BigRat>& at) {
  const BigRat& z = at.back();
  BigRat v = 1;
  for (const auto& row : model.points[x].restriction) {
    BigRat u = 0;
    long n = 0;
    for (std::size_t i = 0; i < model.m(); ++i) {
      u += row[i] * at[i];
      n -= row[i] * k[i];
    }
    for (long c = 1; c <= n; ++c) {
      if (u + c * z == 0)
        return std::nullopt;
      v /= u + c * z;
    }
    for (long c = n + 1; c <= 0; ++c)
      v *= u + c * z;
  }
  return v;
}

bool all_zero(const qt::LocalizedSeries& s) {
  for (const auto& [d, v] : s.terms())
    if (!qt::is_zero(v))
      return false;
  return true;
}

} // namespace

TEST_CASE("shift factors match the product formula") {
  std::mt19937 rng(41);
  for (const auto& [name, fan] : all_fixtures()) {
    CAPTURE(name);
    auto model = qt::build_model(fan, qt::Chart::full);
    std::vector<Cocharacter> ks;
    for (std::size_t i = 0; i < model.m(); ++i)
      ks.push_back(qt::unit_cocharacter(model.m(), i));
    Cocharacter mixed(model.m(), 0);
    mixed[0] = 2;
    mixed[model.m() - 1] = 1;
    ks.push_back(mixed);
    for (const auto& k : ks)
      for (std::size_t x = 0; x < model.points.size(); ++x) {
        auto s = qt::delta(model, x, k);
        auto p = random_point(model.nvars(), rng);
        auto lhs = eval(s.factor, p), rhs = delta_value(model, x, k, p);
        if (lhs && rhs)
          CHECK(*lhs == *rhs);
      }
  }
}

TEST_CASE("lambda shift is evaluation at the shifted point") {
  std::mt19937 rng(43);
  const std::size_t nv = 4;
  Cocharacter k = {1, -2, 0};
  for (int trial = 0; trial < 10; ++trial) {
    qt::MPoly n = random_poly(nv, rng, 3), d = random_poly(nv, rng, 3);
    if (d.is_zero())
      continue;
    RationalFunction f = RationalFunction::reduce(n, d);
    auto p = random_point(nv, rng);
    std::vector<BigRat> q = p;
    for (std::size_t i = 0; i < k.size(); ++i)
      q[i] -= k[i] * p.back();
    auto lhs = eval(qt::shift_lambda(f, k), p), rhs = eval(f, q);
    if (lhs && rhs)
      CHECK(*lhs == *rhs);
  }
}

TEST_CASE("flow identity D_i I = S_i I") {
  for (const auto& [name, fan] : small_fixtures()) {
    CAPTURE(name);
    auto model = qt::build_model(fan, qt::Chart::sliced);
    auto I = qt::ifun_series(model, 3);
    for (std::size_t i = 0; i < model.m(); ++i)
      CHECK(all_zero(qt::flow_residual(model, i, I)));
  }
}

TEST_CASE("the flow check notices a corrupted coefficient") {
  auto model = qt::build_model(qt::fans::hirzebruch(1), qt::Chart::sliced);
  auto I = qt::ifun_series(model, 3);
  auto degrees = I.ordered_degrees();
  REQUIRE(degrees.size() > 2);
  for (const Degree& d : {degrees[1], degrees[2]}) {
    auto J = I;
    auto v = *J.find(d);
    v[1] = v[1] + RationalFunction(model.nvars(), rat(1, 7));
    J.set(d, v);
    bool caught = false;
    for (std::size_t i = 0; i < model.m(); ++i)
      caught = caught || !all_zero(qt::flow_residual(model, i, J));
    CHECK(caught);
  }
  // a wrong shift vector also fails
  auto wrong = qt::shift_apply(model, qt::make_shift(model, qt::unit_cocharacter(4, 1)), I);
  CHECK_FALSE(all_zero(qt::divisor_derivative(model, 0, I) - wrong));
}

TEST_CASE("composition offsets") {
  auto p1 = qt::build_model(qt::fans::projective_space(1), qt::Chart::sliced);
  CHECK(qt::compose_check(p1, {1, 0}, {0, 1}) == Degree{1, 1});
  CHECK(qt::compose_check(p1, {1, 0}, {1, 0}) == Degree{0, 0});
  for (const auto& [name, fan] : small_fixtures()) {
    CAPTURE(name);
    auto model = qt::build_model(fan, qt::Chart::sliced);
    for (std::size_t i = 0; i < model.m(); ++i)
      for (std::size_t j = 0; j < model.m(); ++j) {
        auto ei = qt::unit_cocharacter(model.m(), i), ej = qt::unit_cocharacter(model.m(), j);
        CHECK(qt::compose_offset(model, ei, ej) == qt::compose_offset(model, ej, ei));
      }
  }
}

TEST_CASE("shift operators commute on the I-function") {
  auto model = qt::build_model(qt::fans::p1xp1(), qt::Chart::sliced);
  auto I = qt::ifun_series(model, 3);
  auto s1 = qt::make_shift(model, qt::unit_cocharacter(4, 0));
  auto s3 = qt::make_shift(model, qt::unit_cocharacter(4, 2));
  CHECK(qt::shift_apply(model, s1, qt::shift_apply(model, s3, I)) ==
        qt::shift_apply(model, s3, qt::shift_apply(model, s1, I)));
  CHECK(qt::divisor_derivative(model, 0, qt::divisor_derivative(model, 2, I)) ==
        qt::divisor_derivative(model, 2, qt::divisor_derivative(model, 0, I)));
}

TEST_CASE("serial and parallel operators agree") {
  auto model = qt::build_model(qt::fans::hirzebruch(2), qt::Chart::sliced);
  auto I = qt::ifun_series(model, 3);
  auto op = qt::make_shift(model, qt::unit_cocharacter(4, 3));
  CHECK(qt::shift_apply(model, op, I, qt::Execution::serial) ==
        qt::shift_apply(model, op, I, qt::Execution::parallel));
  CHECK(qt::divisor_derivative(model, 1, I, qt::Execution::serial) ==
        qt::divisor_derivative(model, 1, I, qt::Execution::parallel));
}
