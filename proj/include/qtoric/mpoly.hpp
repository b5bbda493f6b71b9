#ifndef QTORIC_MPOLY_HPP
#define QTORIC_MPOLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtoric/bigrat.hpp"

namespace qtoric {

// Upper bound on polynomial arity (m equivariant parameters plus z).
inline constexpr std::size_t kMaxVars = 24;

// Exponent vector. Unused trailing slots stay zero, so comparisons do not
// need the arity.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exp == b.exp;
  }

  bool divides(const Monomial& other) const;
};

// Graded lexicographic order in which later variables are larger
// (lambda_1 < ... < lambda_m < z). Returns <0, 0, >0.
int compare(const Monomial& a, const Monomial& b);

Monomial operator*(const Monomial& a, const Monomial& b);
// Requires b.divides(a).
Monomial operator/(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  BigRat coeff;
};

// Sparse polynomial over Q in a fixed number of variables. Terms are stored
// strictly decreasing in the canonical order and no coefficient is zero.
class MPoly {
public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const BigRat& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(std::size_t nvars, const Monomial& m, const BigRat& c);
  // c_0 + sum_i coeffs[i] * x_i.
  static MPoly linear(std::size_t nvars, std::span<const BigRat> coeffs,
                      const BigRat& c0 = 0);
  // Takes unsorted terms, combines duplicates, drops zeros.
  static MPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Constant coefficient (zero if absent).
  BigRat constant_term() const;

  const Term& leading_term() const { return terms_.front(); }
  const BigRat& leading_coeff() const { return terms_.front().coeff; }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;
  // Componentwise minimum exponent over all terms.
  Monomial min_monomial() const;

  // Coefficients with respect to `var`: result[k] multiplies var^k and does
  // not involve var.
  std::vector<MPoly> coefficients_in(std::size_t var) const;
  static MPoly from_coefficients_in(std::size_t nvars, std::size_t var,
                                    const std::vector<MPoly>& coeffs);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const BigRat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const BigRat& c) { return a *= c; }
  friend MPoly operator*(const BigRat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly mul_monomial(const Monomial& m, const BigRat& c) const;
  // Exact quotient if `divisor` divides *this, otherwise nullopt.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;
  MPoly pow(unsigned n) const;

  // Ring homomorphism x_i -> images[i]; images must share an arity, which
  // becomes the arity of the result.
  MPoly substitute(std::span<const MPoly> images) const;
  // x_var -> value.
  MPoly evaluate_var(std::size_t var, const BigRat& value) const;

  // Scalar multiple with integer coefficients of content 1 and positive
  // leading coefficient; returns the scale that was applied.
  BigRat make_primitive();
  // Divides by the leading coefficient.
  MPoly monic() const;

  std::string to_string(std::span<const std::string> names) const;

private:
  void check_arity(const MPoly& other) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Greatest common divisor over Q, normalized monic (1 when coprime, 0 only
// for gcd(0, 0)).
MPoly gcd(const MPoly& a, const MPoly& b);

// Pseudo-remainder of a by b with respect to var.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var);

// Default variable names l1..lm, z.
std::vector<std::string> default_variable_names(std::size_t m);

} // namespace qtoric

#endif
