// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

#include "qtoric/commands.hpp"
#include "qtoric/errors.hpp"
#include "support.hpp"

using namespace testing_support;
using qt::Degree;
using qt::Json;

namespace {

const BigRat kCutoff = 6;
const BigRat kLow = 4;

std::vector<std::pair<std::string, qt::Fan>> fixtures_without_p3() {
  auto all = all_fixtures();
  all.erase(std::remove_if(all.begin(), all.end(), [](const auto& f) { return f.first == "p3"; }),
            all.end());
  return all;
}

bool verdicts_hold(const Json& payload, std::initializer_list<const char*> names,
                   std::string& why, const std::string& fixture) {
  for (const char* n : names)
    if (!payload["verdicts"].value(n, false)) {
      why = fixture + ": " + n;
      return false;
    }
  return true;
}

// Keeps the series entries of grade <= top anywhere inside `j`; scalars
// that depend on the cutoff (term counts) are dropped.
Json low_part(const Json& j, const BigRat& top) {
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& e : j) {
      if (e.is_object() && e.contains("grade")) {
        if (BigRat(e["grade"].get<std::string>()) <= top)
          out.push_back(e);
      } else {
        out.push_back(low_part(e, top));
      }
    }
    return out;
  }
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : j.items())
      if (k != "terms" && k != "bad_degrees" && k != "tau_trivial" && k != "upsilon_trivial")
        out[k] = low_part(v, top);
    return out;
  }
  return j;
}

bool is_face(const qt::Fan& fan, const std::vector<int>& s) {
  for (const auto& c : fan.cones())
    if (std::all_of(s.begin(), s.end(),
                    [&](int j) { return std::find(c.begin(), c.end(), j) != c.end(); }))
      return true;
  return false;
}

struct Criterion {
  int id;
  std::string text;
  std::function<bool(std::string&)> run;
};

} // namespace

int main() {
  const auto exec = qt::Execution::parallel;
  std::map<std::string, Json> mirror6, mirror4, ifun6, ifun4;
  auto mirror_at = [&](const std::string& name, const qt::Fan& fan, bool high) -> const Json& {
    auto& store = high ? mirror6 : mirror4;
    if (!store.count(name))
      store[name] = qt::mirror_payload(qt::build_model(fan, qt::Chart::sliced),
                                       high ? kCutoff : kLow, true, exec);
    return store[name];
  };

  std::vector<Criterion> criteria = {
      {1, "flow identity D_i I = S_i I at cutoff 6",
       [&](std::string& why) {
         for (const auto& [name, fan] : fixtures_without_p3()) {
           auto p = qt::flowcheck_payload(qt::build_model(fan, qt::Chart::sliced), kCutoff, exec);
           for (const auto& [k, v] : p["verdicts"].items())
             if (!v.get<bool>()) {
               why = name + ": " + k;
               return false;
             }
         }
         return true;
       }},
      {2, "P^1, P^2, P^3: tau and Upsilon trivial up to cutoff 6",
       [&](std::string& why) {
         for (const char* name : {"p1", "p2", "p3"}) {
           int n = name[1] - '0';
           const Json& p = mirror_at(name, qt::fans::projective_space(n), true);
           if (!p["results"]["tau_trivial"].get<bool>() ||
               !p["results"]["upsilon_trivial"].get<bool>()) {
             why = name;
             return false;
           }
         }
         return true;
       }},
      {3, "quantum D-module relation on P^1, P^2 at cutoff 6",
       [&](std::string& why) {
         for (int n = 1; n <= 2; ++n) {
           auto p = qt::qcheck_payload(
               qt::build_model(qt::fans::projective_space(n), qt::Chart::sliced), kCutoff, exec);
           if (!verdicts_hold(p, {"quantum_relation"}, why, "p" + std::to_string(n)))
             return false;
         }
         return true;
       }},
      {4, "composition law symmetric; d(e1,e2) = (1,1) on P^1",
       [&](std::string& why) {
         for (const auto& fan : {qt::fans::projective_space(1), qt::fans::projective_space(2),
                                 qt::fans::p1xp1(), qt::fans::hirzebruch(1)}) {
           auto model = qt::build_model(fan, qt::Chart::sliced);
           for (std::size_t i = 0; i < model.m(); ++i)
             for (std::size_t j = 0; j < model.m(); ++j) {
               auto ei = qt::unit_cocharacter(model.m(), i),
                    ej = qt::unit_cocharacter(model.m(), j);
               if (qt::compose_check(model, ei, ej) != qt::compose_check(model, ej, ei)) {
                 why = "asymmetric at " + std::to_string(i + 1) + "," + std::to_string(j + 1);
                 return false;
               }
             }
         }
         auto p1 = qt::build_model(qt::fans::projective_space(1), qt::Chart::sliced);
         if (qt::compose_check(p1, {1, 0}, {0, 1}) != Degree{1, 1}) {
           why = "P^1 offset";
           return false;
         }
         return true;
       }},
      {5, "factorization L = UP exact, U proper, P and Upsilon z-polynomial at cutoff 6",
       [&](std::string& why) {
         for (const auto& [name, fan] : all_fixtures())
           if (!verdicts_hold(mirror_at(name, fan, true),
                              {"factorization_exact", "u_proper", "p_polynomial",
                               "upsilon_z_polynomial"},
                              why, name))
             return false;
         return true;
       }},
      {6, "Seidel classes from tau equal C_i [1]; C_i z-free at cutoff 6",
       [&](std::string& why) {
         for (const auto& [name, fan] : all_fixtures())
           if (!verdicts_hold(mirror_at(name, fan, true),
                              {"seidel_consistency", "connection_z_free"}, why, name))
             return false;
         return true;
       }},
      {7, "nonequivariant P^2: h * h^2 = Q^(1,1,1)",
       [&](std::string& why) {
         qt::Cohomology coh(qt::build_model(qt::fans::projective_space(2), qt::Chart::sliced));
         auto r = qt::run_mirror(coh, kCutoff, true, exec);
         auto B = qt::basis_matrices(coh, r.connection[0]);
         const std::size_t nv = coh.model().nvars();
         auto at_zero = [&](const qt::Matrix& m) {
           qt::Matrix out = m;
           for (std::size_t a = 0; a < m.rows(); ++a)
             for (std::size_t b = 0; b < m.cols(); ++b) {
               qt::RationalFunction f = m(a, b);
               for (std::size_t v = 0; v < coh.model().m(); ++v)
                 f = f.evaluate_var(v, 0);
               out(a, b) = f;
             }
           return out;
         };
         // columns are products with the basis 1, h, h^2
         qt::Matrix e0(3, 3, nv), e1(3, 3, nv);
         e0(1, 0) = qt::RationalFunction(nv, 1);
         e0(2, 1) = qt::RationalFunction(nv, 1);
         e1(0, 2) = qt::RationalFunction(nv, 1);
         for (const auto& [d, m] : B.terms()) {
           qt::Matrix v = at_zero(m);
           const qt::Matrix expect = qt::is_zero_degree(d)    ? e0
                                     : d == Degree{1, 1, 1} ? e1
                                                            : qt::Matrix(3, 3, nv);
           if (!(v == expect)) {
             why = "degree " + qt::degree_to_string(d);
             return false;
           }
         }
         return B.find({1, 1, 1}) != nullptr;
       }},
      {8, "localization integrals; SR and linear relations vanish",
       [&](std::string& why) {
         auto mono = [](std::size_t m, std::initializer_list<int> ones) {
           qt::UMonomial a(m, 0);
           for (int i : ones)
             a[i] += 1;
           return a;
         };
         qt::Cohomology p1(qt::build_model(qt::fans::projective_space(1), qt::Chart::full));
         qt::Cohomology p2(qt::build_model(qt::fans::projective_space(2), qt::Chart::full));
         if (!p1.integrate(p1.one()).is_zero() ||
             !p1.integrate(qt::restrict_monomial(p1.model(), mono(2, {0}))).is_one() ||
             !p2.integrate(qt::restrict_monomial(p2.model(), mono(3, {0, 1}))).is_one()) {
           why = "integrals";
           return false;
         }
         for (const auto& [name, fan] : all_fixtures()) {
           auto model = qt::build_model(fan, qt::Chart::full);
           const std::size_t m = fan.ray_count(), nv = model.nvars();
           for (unsigned mask = 1; mask < (1u << m); ++mask) {
             std::vector<int> s;
             for (std::size_t j = 0; j < m; ++j)
               if (mask >> j & 1u)
                 s.push_back(int(j));
             if (is_face(fan, s))
               continue;
             qt::UMonomial a(m, 0);
             for (int j : s)
               a[j] = 1;
             if (!qt::is_zero(qt::restrict_monomial(model, a))) {
               why = name + ": Stanley-Reisner";
               return false;
             }
           }
           for (int k = 0; k < fan.dim(); ++k) {
             qt::UPolynomial rel;
             qt::MPoly shift(nv);
             for (std::size_t j = 0; j < m; ++j) {
               long c = fan.rays()[j][k];
               if (c == 0)
                 continue;
               qt::UMonomial a(m, 0);
               a[j] = 1;
               rel[a] = qt::RationalFunction(nv, BigRat(c));
               shift += var(nv, j) * BigRat(c);
             }
             rel[qt::UMonomial(m, 0)] = qt::RationalFunction(-shift);
             if (!qt::is_zero(qt::restrict_poly(model, rel))) {
               why = name + ": linear relation";
               return false;
             }
           }
         }
         return true;
       }},
      {9, "coefficients with grade <= 4 unchanged from cutoff 4 to 6",
       [&](std::string& why) {
         for (const auto& [name, fan] : all_fixtures()) {
           auto model = qt::build_model(fan, qt::Chart::sliced);
           if (low_part(qt::ifun_payload(model, kCutoff, exec)["results"], kLow) !=
               low_part(qt::ifun_payload(model, kLow, exec)["results"], kLow)) {
             why = name + ": I";
             return false;
           }
           if (low_part(mirror_at(name, fan, true)["results"], kLow) !=
               low_part(mirror_at(name, fan, false)["results"], kLow)) {
             why = name + ": mirror";
             return false;
           }
         }
         return true;
       }},
      {10, "F3 has a nonzero mirror map within cutoff 6",
       [&](std::string& why) {
         const Json& p = mirror_at("f3", qt::fans::hirzebruch(3), true);
         if (p["results"]["tau_trivial"].get<bool>() || p["results"]["tau"].empty()) {
           why = "tau vanishes";
           return false;
         }
         return true;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string why;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s", ok ? "PASS" : "FAIL", c.id, c.text.c_str());
    if (!ok)
      std::printf(" [%s]", why.c_str());
    std::printf(" (%.1fs)\n", secs);
    std::fflush(stdout);
    failed += !ok;
  }
  return failed ? 1 : 0;
}
