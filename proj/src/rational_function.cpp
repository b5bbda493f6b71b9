#include "qtoric/rational_function.hpp"

#include "qtoric/errors.hpp"

namespace qtoric {

RationalFunction::RationalFunction(MPoly poly)
    : num_(std::move(poly)), den_(MPoly::constant(num_.nvars(), 1)) {}

RationalFunction::RationalFunction(std::size_t nvars, const BigRat& c)
    : num_(MPoly::constant(nvars, c)), den_(MPoly::constant(nvars, 1)) {}

RationalFunction RationalFunction::from_coprime(MPoly num, MPoly den) {
  if (den.is_zero())
    throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  RationalFunction r;
  if (num.is_zero()) {
    r.num_ = MPoly(num.nvars());
    r.den_ = MPoly::constant(num.nvars(), 1);
    return r;
  }
  BigRat lc = den.leading_coeff();
  if (lc != 1) {
    BigRat inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RationalFunction RationalFunction::reduce(MPoly num, MPoly den) {
  if (den.is_zero())
    throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.nvars() != den.nvars())
    throw Error(ErrorCode::ArityMismatch, "numerator/denominator arity mismatch");
  if (num.is_zero() || den.is_constant())
    return from_coprime(std::move(num), std::move(den));
  MPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = *num.divide_exact(g);
    den = *den.divide_exact(g);
  }
  return from_coprime(std::move(num), std::move(den));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero())
    throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return from_coprime(den_, num_);
}

namespace {

RationalFunction add_impl(const RationalFunction& a, const RationalFunction& b,
                          bool subtract) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::ArityMismatch, "rational function arity mismatch");
  if (b.is_zero())
    return a;
  if (a.is_zero())
    return subtract ? -b : b;
  if (a.den() == b.den()) {
    MPoly n = subtract ? a.num() - b.num() : a.num() + b.num();
    if (a.den().is_one())
      return RationalFunction::from_coprime(std::move(n), a.den());
    return RationalFunction::reduce(std::move(n), a.den());
  }
  if (a.den().is_one() || b.den().is_one()) {
    // p + n/d = (p d + n)/d stays reduced.
    const RationalFunction& poly = a.den().is_one() ? a : b;
    const RationalFunction& frac = a.den().is_one() ? b : a;
    MPoly n = poly.num() * frac.den();
    bool poly_first = &poly == &a;
    if (!subtract)
      n += frac.num();
    else if (poly_first)
      n -= frac.num();
    else
      n = frac.num() - n;
    return RationalFunction::from_coprime(std::move(n), frac.den());
  }
  // Henrici: g = gcd(b1, b2); a1/b1 + a2/b2 = (a1 b2' + a2 b1') / (b1 b2')
  MPoly g = gcd(a.den(), b.den());
  MPoly bd = g.is_one() ? b.den() : *b.den().divide_exact(g);
  MPoly ad = g.is_one() ? a.den() : *a.den().divide_exact(g);
  MPoly n = subtract ? a.num() * bd - b.num() * ad : a.num() * bd + b.num() * ad;
  MPoly d = a.den() * bd;
  if (g.is_one())
    return RationalFunction::from_coprime(std::move(n), std::move(d));
  if (n.is_zero())
    return RationalFunction(a.nvars());
  MPoly h = gcd(n, g);
  if (!h.is_one()) {
    n = *n.divide_exact(h);
    d = *d.divide_exact(h);
  }
  return RationalFunction::from_coprime(std::move(n), std::move(d));
}

} // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return add_impl(a, b, false);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return add_impl(a, b, true);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::ArityMismatch, "rational function arity mismatch");
  if (a.is_zero() || b.is_zero())
    return RationalFunction(a.nvars());
  if (a.is_one())
    return b;
  if (b.is_one())
    return a;
  MPoly n1 = a.num(), d1 = a.den(), n2 = b.num(), d2 = b.den();
  if (!d2.is_one()) {
    MPoly g = gcd(n1, d2);
    if (!g.is_one()) {
      n1 = *n1.divide_exact(g);
      d2 = *d2.divide_exact(g);
    }
  }
  if (!d1.is_one()) {
    MPoly g = gcd(n2, d1);
    if (!g.is_one()) {
      n2 = *n2.divide_exact(g);
      d1 = *d1.divide_exact(g);
    }
  }
  return RationalFunction::from_coprime(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction multiply_irreducible(const RationalFunction& f, const MPoly& p) {
  if (f.is_zero() || p.is_zero())
    return RationalFunction(f.nvars());
  if (p.is_constant())
    return RationalFunction::from_coprime(f.num() * p.constant_term(), f.den());
  if (auto q = f.den().divide_exact(p))
    return RationalFunction::from_coprime(f.num(), std::move(*q));
  return RationalFunction::from_coprime(f.num() * p, f.den());
}

RationalFunction RationalFunction::substitute(std::span<const MPoly> images,
                                              bool injective_linear) const {
  MPoly n = num_.substitute(images);
  MPoly d = den_.substitute(images);
  if (injective_linear)
    return from_coprime(std::move(n), std::move(d));
  return reduce(std::move(n), std::move(d));
}

RationalFunction RationalFunction::evaluate_var(std::size_t var,
                                                const BigRat& value) const {
  return reduce(num_.evaluate_var(var, value), den_.evaluate_var(var, value));
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
  if (den_.is_one())
    return num_.to_string(names);
  auto wrap = [&](const MPoly& p) {
    std::string s = p.to_string(names);
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

// ------------------------------------------------------------- z-direction

namespace {

RationalFunction z_power(std::size_t nvars, std::size_t k) {
  Monomial m;
  m.exp[nvars - 1] = std::uint16_t(k);
  m.degree = std::uint32_t(k);
  return RationalFunction(MPoly::monomial(nvars, m, 1));
}

} // namespace

RationalFunction ZSplit::poly_part() const {
  if (poly_coeffs.empty())
    return RationalFunction(proper.nvars());
  std::size_t n = proper.nvars();
  RationalFunction acc(n);
  for (std::size_t k = 0; k < poly_coeffs.size(); ++k)
    if (!poly_coeffs[k].is_zero())
      acc += poly_coeffs[k] * z_power(n, k);
  return acc;
}

bool is_proper_in_z(const RationalFunction& f) {
  if (f.is_zero())
    return true;
  std::size_t z = f.z_index();
  return f.num().degree_in(z) < f.den().degree_in(z);
}

bool is_z_polynomial(const RationalFunction& f) {
  return !f.den().involves(f.z_index());
}

ZSplit z_split(const RationalFunction& f) {
  std::size_t n = f.nvars();
  std::size_t z = f.z_index();
  ZSplit out;
  if (is_proper_in_z(f)) {
    out.proper = f;
    return out;
  }
  if (is_z_polynomial(f)) {
    // den is z-free: split the numerator by powers of z.
    auto cs = f.num().coefficients_in(z);
    RationalFunction dinv = RationalFunction(f.den()).inverse();
    for (auto& c : cs)
      out.poly_coeffs.push_back(RationalFunction(std::move(c)) * dinv);
    out.proper = RationalFunction(n);
    return out;
  }
  // Long division of num by den in z over Frac(lambda).
  auto dc = f.den().coefficients_in(z);
  std::vector<RationalFunction> den_c, rem;
  for (auto& c : dc)
    den_c.emplace_back(std::move(c));
  for (auto& c : f.num().coefficients_in(z))
    rem.emplace_back(std::move(c));
  std::size_t dd = den_c.size() - 1;
  RationalFunction lc_inv = den_c.back().inverse();
  out.poly_coeffs.assign(rem.size() - dd, RationalFunction(n));
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k].is_zero())
      continue;
    RationalFunction q = rem[k] * lc_inv;
    out.poly_coeffs[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[k - dd + j] -= q * den_c[j];
  }
  // proper = (sum_{k<dd} rem_k z^k) / den
  RationalFunction r(n);
  for (std::size_t k = 0; k < dd; ++k)
    if (!rem[k].is_zero())
      r += rem[k] * z_power(n, k);
  out.proper = r * RationalFunction(f.den()).inverse();
  while (!out.poly_coeffs.empty() && out.poly_coeffs.back().is_zero())
    out.poly_coeffs.pop_back();
  return out;
}

RationalFunction z_inf_leading(const RationalFunction& f) {
  if (!is_proper_in_z(f))
    throw Error(ErrorCode::NotProper, "z_inf_leading needs a function proper in z");
  std::size_t n = f.nvars();
  if (f.is_zero())
    return RationalFunction(n);
  std::size_t z = f.z_index();
  auto dn = f.num().degree_in(z), dd = f.den().degree_in(z);
  if (dn + 1 < dd)
    return RationalFunction(n);
  auto nc = f.num().coefficients_in(z);
  auto dc = f.den().coefficients_in(z);
  return RationalFunction::reduce(nc.back(), dc.back());
}

} // namespace qtoric
