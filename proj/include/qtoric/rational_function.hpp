#ifndef QTORIC_RATIONAL_FUNCTION_HPP
#define QTORIC_RATIONAL_FUNCTION_HPP

#include <span>
#include <string>
#include <vector>

#include "qtoric/mpoly.hpp"

namespace qtoric {

// Reduced quotient num/den of polynomials in lambda_1..lambda_m, z. The last
// variable is z. Canonical: gcd(num, den) = 1, den has leading coefficient 1,
// zero is 0/1. Equal functions have identical representations.
class RationalFunction {
public:
  RationalFunction() = default;
  explicit RationalFunction(std::size_t nvars)
      : num_(nvars), den_(MPoly::constant(nvars, 1)) {}
  explicit RationalFunction(MPoly poly);
  RationalFunction(std::size_t nvars, const BigRat& c);

  // Reduces num/den; throws DivisionByZero when den = 0.
  static RationalFunction reduce(MPoly num, MPoly den);
  // Caller guarantees coprimality; only the scalar normalization is applied.
  static RationalFunction from_coprime(MPoly num, MPoly den);

  std::size_t nvars() const { return num_.nvars(); }
  std::size_t z_index() const { return num_.nvars() - 1; }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool involves(std::size_t var) const {
    return num_.involves(var) || den_.involves(var);
  }
  bool is_z_free() const { return !involves(z_index()); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Applies the same substitution to num and den and re-reduces. When the
  // substitution is an injective linear change of variables no gcd is needed;
  // pass `injective_linear = true` to skip it.
  RationalFunction substitute(std::span<const MPoly> images,
                              bool injective_linear) const;
  RationalFunction evaluate_var(std::size_t var, const BigRat& value) const;

  std::string to_string(std::span<const std::string> names) const;

private:
  MPoly num_;
  MPoly den_;
};

// f * p for p irreducible (typically a linear form): cancels p against the
// denominator by one trial division instead of a gcd.
RationalFunction multiply_irreducible(const RationalFunction& f, const MPoly& p);

// Split along z at infinity: f = poly + proper, with poly a polynomial in z
// whose coefficients are z-free rational functions, and proper vanishing as
// z -> oo. Unique.
struct ZSplit {
  std::vector<RationalFunction> poly_coeffs;  // index = power of z
  RationalFunction proper;

  RationalFunction poly_part() const;
};

ZSplit z_split(const RationalFunction& f);

// True when deg_z num < deg_z den.
bool is_proper_in_z(const RationalFunction& f);
// True when the function is a polynomial in z over Frac(lambda).
bool is_z_polynomial(const RationalFunction& f);

// lim_{z->oo} z f for proper f; throws NotProper otherwise.
RationalFunction z_inf_leading(const RationalFunction& f);

} // namespace qtoric

#endif
