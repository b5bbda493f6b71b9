#ifndef QTORIC_COHOMOLOGY_HPP
#define QTORIC_COHOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "qtoric/matrix.hpp"
#include "qtoric/toric.hpp"

namespace qtoric {

// Exponent vector of a monomial in u_1..u_m.
using UMonomial = std::vector<int>;

// Values of a class at the fixed points.
struct LocalizedClass {
  std::vector<RationalFunction> values;

  std::size_t size() const { return values.size(); }
  RationalFunction& operator[](std::size_t x) { return values[x]; }
  const RationalFunction& operator[](std::size_t x) const { return values[x]; }

  friend bool operator==(const LocalizedClass&, const LocalizedClass&) = default;
};

LocalizedClass operator+(const LocalizedClass& a, const LocalizedClass& b);
LocalizedClass operator-(const LocalizedClass& a, const LocalizedClass& b);
LocalizedClass operator-(const LocalizedClass& a);
bool is_zero(const LocalizedClass& v);

// Coordinates with respect to the chosen monomial basis.
struct GlobalClass {
  std::vector<RationalFunction> coeffs;

  friend bool operator==(const GlobalClass&, const GlobalClass&) = default;
};

GlobalClass operator+(const GlobalClass& a, const GlobalClass& b);
GlobalClass operator-(const GlobalClass& a, const GlobalClass& b);
GlobalClass operator*(const RationalFunction& c, const GlobalClass& a);
bool is_zero(const GlobalClass& v);

// Polynomial in u_1..u_m with rational-function coefficients.
using UPolynomial = std::map<UMonomial, RationalFunction>;

// Greedy monomial basis: square-free face monomials by (degree, lex), kept
// when independent over Frac(Q[lambda]) of those already chosen.
std::vector<UMonomial> basis_select(const ToricModel& model);

LocalizedClass restrict_monomial(const ToricModel& model, const UMonomial& a);
LocalizedClass restrict_poly(const ToricModel& model, const UPolynomial& p);

std::string monomial_name(const UMonomial& a);

class Cohomology {
public:
  explicit Cohomology(const ToricModel& model);

  const ToricModel& model() const { return model_; }
  const std::vector<UMonomial>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  // Rows: fixed points; columns: basis monomials.
  const Matrix& restriction_matrix() const { return p0_; }
  const Matrix& restriction_inverse() const { return p0_inv_; }

  LocalizedClass restrict(const GlobalClass& c) const;
  // Coordinates over Frac(Q[lambda, z]); the system is square and nonsingular.
  GlobalClass interpolate(const LocalizedClass& v) const;
  // Same, but throws NotGlobal unless every coordinate is polynomial in
  // lambda (z-polynomial coefficients allowed).
  GlobalClass interpolate_strict(const LocalizedClass& v) const;
  // sum_x v(x) / e(x).
  RationalFunction integrate(const LocalizedClass& v) const;
  RationalFunction pairing(const LocalizedClass& a, const LocalizedClass& b) const;

  LocalizedClass one() const;
  GlobalClass unit() const;
  GlobalClass zero() const;

  // Human-readable normal form, coefficients mapped to the full chart.
  std::string render(const GlobalClass& c) const;

private:
  ToricModel model_;
  std::vector<UMonomial> basis_;
  Matrix p0_, p0_inv_;
};

// True when the coordinate lies in Q[lambda]((1/z)): its denominator has a
// constant leading coefficient in z.
bool is_z_expandable(const RationalFunction& f);

} // namespace qtoric

#endif
