#ifndef QTORIC_TESTS_SUPPORT_HPP
#define QTORIC_TESTS_SUPPORT_HPP

// Shared helpers for the unit tests. The evaluators here are deliberately
// naive (term by term over BigRat) so they can serve as independent oracles
// for the sparse kernels.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/mirror.hpp"

namespace qt = qtoric;

namespace testing_support {

using qt::BigRat;
using qt::operator+;
using qt::operator-;

inline BigRat power(const BigRat& b, unsigned e) {
  BigRat r = 1;
  for (unsigned i = 0; i < e; ++i)
    r *= b;
  return r;
}

inline BigRat eval(const qt::MPoly& p, const std::vector<BigRat>& at) {
  BigRat s = 0;
  for (const auto& t : p.terms()) {
    BigRat v = t.coeff;
    for (std::size_t i = 0; i < p.nvars(); ++i)
      v *= power(at[i], t.mono.exp[i]);
    s += v;
  }
  return s;
}

inline std::optional<BigRat> eval(const qt::RationalFunction& f, const std::vector<BigRat>& at) {
  BigRat d = eval(f.den(), at);
  if (d == 0)
    return std::nullopt;
  return eval(f.num(), at) / d;
}

inline BigRat rat(long p, long q) {
  BigRat r(p);
  r /= q;
  return r;
}

inline BigRat small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  BigRat q = num(rng);
  q /= den(rng);
  return q;
}

inline std::vector<BigRat> random_point(std::size_t nv, std::mt19937& rng) {
  std::vector<BigRat> p(nv);
  for (auto& x : p)
    x = small_rational(rng);
  return p;
}

inline qt::MPoly var(std::size_t nv, std::size_t i) { return qt::MPoly::variable(nv, i); }
inline qt::MPoly cst(std::size_t nv, const BigRat& c) { return qt::MPoly::constant(nv, c); }

inline qt::MPoly random_poly(std::size_t nv, std::mt19937& rng, int terms = 4, int max_exp = 2) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<qt::Term> ts;
  for (int k = 0; k < terms; ++k) {
    qt::Monomial m;
    for (std::size_t i = 0; i < nv; ++i) {
      m.exp[i] = std::uint16_t(e(rng));
      m.degree += m.exp[i];
    }
    ts.push_back({m, small_rational(rng)});
  }
  return qt::MPoly::from_terms(nv, std::move(ts));
}

inline std::vector<std::pair<std::string, qt::Fan>> all_fixtures() {
  return {{"p1", qt::fans::projective_space(1)},   {"p2", qt::fans::projective_space(2)},
          {"p3", qt::fans::projective_space(3)},   {"p1xp1", qt::fans::p1xp1()},
          {"f1", qt::fans::hirzebruch(1)},         {"f2", qt::fans::hirzebruch(2)},
          {"f3", qt::fans::hirzebruch(3)},         {"local_p2", qt::fans::local_p2()}};
}

// Smaller set for the expensive per-test sweeps.
inline std::vector<std::pair<std::string, qt::Fan>> small_fixtures() {
  return {{"p1", qt::fans::projective_space(1)},
          {"p2", qt::fans::projective_space(2)},
          {"p1xp1", qt::fans::p1xp1()},
          {"f1", qt::fans::hirzebruch(1)},
          {"f2", qt::fans::hirzebruch(2)},
          {"local_p2", qt::fans::local_p2()}};
}

inline std::string str(const qt::RationalFunction& f, std::size_t m) {
  auto names = qt::default_variable_names(m);
  return f.to_string(names);
}

inline std::string str(const qt::MPoly& p, std::size_t m) {
  auto names = qt::default_variable_names(m);
  return p.to_string(names);
}

} // namespace testing_support

#endif
