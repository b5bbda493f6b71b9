#include <doctest.h>

#include <algorithm>

#include "qtoric/errors.hpp"
#include "support.hpp"

using namespace testing_support;
using qt::Cohomology;
using qt::RationalFunction;
using qt::UMonomial;

namespace {

UMonomial mono(std::size_t m, std::initializer_list<int> ones) {
  UMonomial a(m, 0);
  for (int i : ones)
    a.at(i) += 1;
  return a;
}

// Complete homogeneous symmetric polynomial h_k(xs), by enumerating
// exponent vectors.
qt::MPoly complete_homogeneous(const std::vector<qt::MPoly>& xs, int k, std::size_t nv) {
  if (k < 0)
    return qt::MPoly(nv);
  qt::MPoly sum(nv);
  std::vector<int> e(xs.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == xs.size()) {
      e[i] = left;
      qt::MPoly t = cst(nv, 1);
      for (std::size_t j = 0; j < xs.size(); ++j)
        t *= xs[j].pow(unsigned(e[j]));
      sum += t;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, k);
  return sum;
}

bool is_face(const qt::Fan& fan, const std::vector<int>& s) {
  for (const auto& c : fan.cones())
    if (std::all_of(s.begin(), s.end(),
                    [&](int j) { return std::find(c.begin(), c.end(), j) != c.end(); }))
      return true;
  return false;
}

} // namespace

TEST_CASE("basis selection") {
  auto names = [](const qt::Fan& fan) {
    Cohomology coh(qt::build_model(fan, qt::Chart::sliced));
    std::vector<std::string> out;
    for (const auto& a : coh.basis())
      out.push_back(qt::monomial_name(a));
    return out;
  };
  using S = std::vector<std::string>;
  CHECK(names(qt::fans::projective_space(1)) == S{"1", "u1"});
  CHECK(names(qt::fans::projective_space(2)) == S{"1", "u1", "u1*u2"});
  CHECK(names(qt::fans::projective_space(3)) == S{"1", "u1", "u1*u2", "u1*u2*u3"});
  CHECK(names(qt::fans::p1xp1()) == S{"1", "u1", "u3", "u1*u3"});
  CHECK(names(qt::fans::hirzebruch(1)) == S{"1", "u1", "u2", "u1*u2"});
  CHECK(names(qt::fans::hirzebruch(3)) == S{"1", "u1", "u2", "u1*u2"});
  CHECK(names(qt::fans::local_p2()) == S{"1", "u1", "u1*u2"});
}

TEST_CASE("localization integrals") {
  Cohomology p1(qt::build_model(qt::fans::projective_space(1), qt::Chart::full));
  CHECK(p1.integrate(p1.one()).is_zero());
  CHECK(p1.integrate(qt::restrict_monomial(p1.model(), mono(2, {0}))).is_one());
  CHECK(p1.pairing(p1.one(), qt::restrict_monomial(p1.model(), mono(2, {1}))).is_one());

  Cohomology p2(qt::build_model(qt::fans::projective_space(2), qt::Chart::full));
  CHECK(p2.integrate(qt::restrict_monomial(p2.model(), mono(3, {0, 1}))).is_one());
  CHECK(p2.integrate(qt::restrict_monomial(p2.model(), mono(3, {0, 1, 2}))).is_zero());
  CHECK(p2.integrate(qt::restrict_monomial(p2.model(), mono(3, {0}))).is_zero());
}

TEST_CASE("powers of u1 on P^n integrate to complete homogeneous polynomials") {
  // At the fixed point missing ray j, u1 = l1 - l_j; the integral of u1^N is
  // h_{N-n}(l1 - l_1, ..., l1 - l_{n+1}).
  for (int n = 1; n <= 3; ++n) {
    const std::size_t m = std::size_t(n) + 1, nv = m + 1;
    Cohomology coh(qt::build_model(qt::fans::projective_space(n), qt::Chart::full));
    std::vector<qt::MPoly> xs;
    for (std::size_t j = 0; j < m; ++j)
      xs.push_back(var(nv, 0) - var(nv, j));
    for (int N = 0; N <= n + 3; ++N) {
      UMonomial a(m, 0);
      a[0] = N;
      CAPTURE(n);
      CAPTURE(N);
      CHECK(coh.integrate(qt::restrict_monomial(coh.model(), a)) ==
            RationalFunction(complete_homogeneous(xs, N - n, nv)));
    }
  }
}

TEST_CASE("Stanley-Reisner and linear relations vanish on every fixture") {
  for (const auto& [name, fan] : all_fixtures()) {
    CAPTURE(name);
    auto model = qt::build_model(fan, qt::Chart::full);
    const std::size_t m = fan.ray_count(), nv = model.nvars();
    // every non-face of size <= dim + 1
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> s;
      for (std::size_t j = 0; j < m; ++j)
        if (mask >> j & 1u)
          s.push_back(int(j));
      if (s.size() > std::size_t(fan.dim()) + 1 || is_face(fan, s))
        continue;
      UMonomial a(m, 0);
      for (int j : s)
        a[j] = 1;
      CHECK(qt::is_zero(qt::restrict_monomial(model, a)));
    }
    // sum_j <e_k, b_j> (u_j - lambda_j) = 0
    for (int k = 0; k < fan.dim(); ++k) {
      qt::UPolynomial rel;
      qt::MPoly shift(nv);
      for (std::size_t j = 0; j < m; ++j) {
        long c = fan.rays()[j][k];
        if (c == 0)
          continue;
        UMonomial a(m, 0);
        a[j] = 1;
        rel[a] = RationalFunction(nv, BigRat(c));
        shift += var(nv, j) * BigRat(c);
      }
      rel[UMonomial(m, 0)] = RationalFunction(-shift);
      CHECK(qt::is_zero(qt::restrict_poly(model, rel)));
    }
  }
}

TEST_CASE("interpolate and restrict are inverse") {
  std::mt19937 rng(23);
  for (const auto& [name, fan] : all_fixtures()) {
    CAPTURE(name);
    Cohomology coh(qt::build_model(fan, qt::Chart::sliced));
    const std::size_t nv = coh.model().nvars();
    for (int trial = 0; trial < 3; ++trial) {
      qt::GlobalClass c = coh.zero();
      for (auto& x : c.coeffs)
        x = RationalFunction(random_poly(nv, rng, 2, 1));
      CHECK(coh.interpolate(coh.restrict(c)) == c);
      CHECK(coh.interpolate_strict(coh.restrict(c)) == c);
      CHECK(coh.restrict(coh.interpolate(coh.restrict(c))) == coh.restrict(c));
    }
    CHECK(coh.restrict(coh.unit()) == coh.one());
  }
}

TEST_CASE("non-global localized data is rejected by strict interpolation") {
  Cohomology coh(qt::build_model(qt::fans::projective_space(1), qt::Chart::full));
  const std::size_t nv = coh.model().nvars();
  qt::LocalizedClass v = coh.one();
  v[0] = RationalFunction::reduce(cst(nv, 1), var(nv, 0) - var(nv, 1));
  CHECK_NOTHROW(coh.interpolate(v));
  try {
    coh.interpolate_strict(v);
    FAIL("expected NotGlobal");
  } catch (const qt::Error& e) {
    CHECK(e.code() == qt::ErrorCode::NotGlobal);
  }
}

TEST_CASE("sliced chart integrals agree with the full chart") {
  for (const auto& [name, fan] : small_fixtures()) {
    CAPTURE(name);
    Cohomology full(qt::build_model(fan, qt::Chart::full));
    Cohomology sliced(qt::build_model(fan, qt::Chart::sliced));
    for (const auto& a : full.basis())
      for (const auto& b : full.basis()) {
        UMonomial ab(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
          ab[i] = a[i] + b[i];
        CHECK(sliced.model().to_full(sliced.integrate(qt::restrict_monomial(sliced.model(), ab))) ==
              full.integrate(qt::restrict_monomial(full.model(), ab)));
      }
  }
}

TEST_CASE("rendering and z expansions") {
  Cohomology coh(qt::build_model(qt::fans::projective_space(2), qt::Chart::full));
  CHECK(coh.render(coh.unit()) == "1");
  CHECK(coh.render(coh.zero()) == "0");
  qt::GlobalClass c = coh.zero();
  c.coeffs[1] = RationalFunction(var(4, 0) - var(4, 2));
  c.coeffs[2] = RationalFunction(cst(4, 1));
  CHECK(coh.render(c) == "(-l3 + l1)*u1 + u1*u2");
  CHECK(qt::monomial_name(mono(3, {})) == "1");
  CHECK(qt::monomial_name(mono(3, {0, 0, 2})) == "u1^2*u3");

  const std::size_t nv = 3;
  CHECK(qt::is_z_expandable(RationalFunction::reduce(cst(nv, 1), var(nv, 2) + var(nv, 0))));
  CHECK_FALSE(
      qt::is_z_expandable(RationalFunction::reduce(cst(nv, 1), var(nv, 0) * var(nv, 2) + cst(nv, 1))));
}
