#include "qtoric/mpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>

#include "qtoric/errors.hpp"

namespace qtoric {

BigRat parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() {
    return Error(ErrorCode::ParseError, "not a rational number: '" + s + "'");
  };
  if (s.empty())
    throw bad();
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to)
      return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(start, s.size()))
      throw bad();
  } else if (!digits(start, slash) || !digits(slash + 1, s.size())) {
    throw bad();
  }
  BigRat q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0 || q.get_den() == 0)
    throw bad();
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Monomial

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree)
    return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i])
      return false;
  return true;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree)
    return a.degree < b.degree ? -1 : 1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.exp[i] != b.exp[i])
      return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(a.exp[i]) + b.exp[i];
    if (e > 0xffffu)
      throw Error(ErrorCode::InvalidArgument, "monomial exponent overflow");
    r.exp[i] = std::uint16_t(e);
  }
  r.degree = a.degree + b.degree;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.exp[i] = std::uint16_t(a.exp[i] - b.exp[i]);
  r.degree = a.degree - b.degree;
  return r;
}

namespace {

bool term_greater(const Term& a, const Term& b) {
  return compare(a.mono, b.mono) > 0;
}

} // namespace

// ------------------------------------------------------------------ MPoly

MPoly MPoly::constant(std::size_t nvars, const BigRat& c) {
  MPoly p(nvars);
  if (c != 0)
    p.terms_.push_back({Monomial{}, c});
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars || nvars > kMaxVars)
    throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  m.degree = 1;
  return monomial(nvars, m, 1);
}

MPoly MPoly::monomial(std::size_t nvars, const Monomial& m, const BigRat& c) {
  MPoly p(nvars);
  if (c != 0)
    p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::linear(std::size_t nvars, std::span<const BigRat> coeffs,
                    const BigRat& c0) {
  if (coeffs.size() > nvars)
    throw Error(ErrorCode::ArityMismatch, "too many linear coefficients");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0)
      continue;
    Monomial m;
    m.exp[i] = 1;
    m.degree = 1;
    terms.push_back({m, coeffs[i]});
  }
  if (c0 != 0)
    terms.push_back({Monomial{}, c0});
  return from_terms(nvars, std::move(terms));
}

MPoly MPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MPoly p(nvars);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0)
        p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0)
    p.terms_.pop_back();
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0);
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.degree == 0 &&
         terms_[0].coeff == 1;
}

BigRat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree == 0)
    return terms_.back().coeff;
  return 0;
}

std::uint32_t MPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree;
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_)
    d = std::max<std::uint32_t>(d, t.mono.exp[var]);
  return d;
}

bool MPoly::involves(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.mono.exp[var] != 0)
      return true;
  return false;
}

Monomial MPoly::min_monomial() const {
  Monomial m;
  if (terms_.empty())
    return m;
  m = terms_.front().mono;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      m.exp[i] = std::min(m.exp[i], t.mono.exp[i]);
  m.degree = 0;
  for (auto e : m.exp)
    m.degree += e;
  return m;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
  std::vector<MPoly> out(degree_in(var) + 1, MPoly(nvars_));
  for (const auto& t : terms_) {
    Term u = t;
    std::uint16_t k = u.mono.exp[var];
    u.mono.exp[var] = 0;
    u.mono.degree -= k;
    // Removing the same power of var keeps the relative order.
    out[k].terms_.push_back(std::move(u));
  }
  return out;
}

MPoly MPoly::from_coefficients_in(std::size_t nvars, std::size_t var,
                                  const std::vector<MPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms_) {
      Term u = t;
      u.mono.exp[var] = std::uint16_t(u.mono.exp[var] + k);
      u.mono.degree += std::uint32_t(k);
      terms.push_back(std::move(u));
    }
  }
  return from_terms(nvars, std::move(terms));
}

void MPoly::check_arity(const MPoly& other) const {
  if (nvars_ != other.nvars_)
    throw Error(ErrorCode::ArityMismatch,
                "polynomial arity mismatch: " + std::to_string(nvars_) +
                    " vs " + std::to_string(other.nvars_));
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two sorted term lists; sign = +1 or -1 applied to b.
std::vector<Term> merge_terms(const std::vector<Term>& a,
                              const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0)
        out.back().coeff = -out.back().coeff;
    } else {
      BigRat s = sign > 0 ? BigRat(a[i].coeff + b[j].coeff)
                          : BigRat(a[i].coeff - b[j].coeff);
      if (s != 0)
        out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i)
    out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0)
      out.back().coeff = -out.back().coeff;
  }
  return out;
}

} // namespace

MPoly& MPoly::operator+=(const MPoly& other) {
  check_arity(other);
  if (other.terms_.empty())
    return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  check_arity(other);
  if (other.terms_.empty())
    return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

MPoly& MPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_)
    t.coeff *= c;
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly MPoly::mul_monomial(const Monomial& m, const BigRat& c) const {
  MPoly r(nvars_);
  if (c == 0)
    return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_arity(b);
  if (a.is_zero() || b.is_zero())
    return MPoly(a.nvars_);
  const MPoly& small = a.size() <= b.size() ? a : b;
  const MPoly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1)
    return large.mul_monomial(small.terms_[0].mono, small.terms_[0].coeff);
  if (small.size() <= 4) {
    MPoly acc = large.mul_monomial(small.terms_[0].mono, small.terms_[0].coeff);
    for (std::size_t i = 1; i < small.size(); ++i)
      acc.terms_ = merge_terms(
          acc.terms_,
          large.mul_monomial(small.terms_[i].mono, small.terms_[i].coeff)
              .terms_,
          +1);
    return acc;
  }
  std::vector<Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& ta : small.terms_)
    for (const auto& tb : large.terms_)
      prods.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  return MPoly::from_terms(a.nvars_, std::move(prods));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  check_arity(divisor);
  if (divisor.is_zero())
    throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (is_zero())
    return MPoly(nvars_);
  if (divisor.is_constant()) {
    MPoly q = *this;
    q *= BigRat(1 / divisor.leading_coeff());
    return q;
  }
  const Term& dl = divisor.leading_term();
  if (dl.mono.degree > total_degree())
    return std::nullopt;
  if (divisor.size() == 1) {
    MPoly q(nvars_);
    BigRat inv = 1 / dl.coeff;
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!dl.mono.divides(t.mono))
        return std::nullopt;
      q.terms_.push_back({t.mono / dl.mono, t.coeff * inv});
    }
    return q;
  }
  // Cheap rejection: every variable degree of the divisor must fit.
  for (std::size_t v = 0; v < nvars_; ++v)
    if (divisor.degree_in(v) > degree_in(v))
      return std::nullopt;

  MPoly rem = *this;
  std::vector<Term> quot;
  BigRat inv = 1 / dl.coeff;
  while (!rem.is_zero()) {
    const Term& rl = rem.leading_term();
    if (!dl.mono.divides(rl.mono))
      return std::nullopt;
    Term qt{rl.mono / dl.mono, rl.coeff * inv};
    rem -= divisor.mul_monomial(qt.mono, qt.coeff);
    quot.push_back(std::move(qt));
  }
  MPoly q(nvars_);
  q.terms_ = std::move(quot);  // generated in decreasing order
  return q;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result = constant(nvars_, 1);
  MPoly base = *this;
  while (n) {
    if (n & 1u)
      result = result * base;
    n >>= 1u;
    if (n)
      base = base * base;
  }
  return result;
}

MPoly MPoly::substitute(std::span<const MPoly> images) const {
  if (images.size() < nvars_)
    throw Error(ErrorCode::ArityMismatch, "substitution needs an image per variable");
  std::size_t out_vars = images.empty() ? 0 : images[0].nvars_;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (images[i].nvars_ != out_vars)
      throw Error(ErrorCode::ArityMismatch, "substitution images disagree in arity");
  // Powers cache per variable.
  std::vector<std::vector<MPoly>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    powers[i].push_back(constant(out_vars, 1));
  std::vector<Term> acc;
  MPoly result(out_vars);
  for (const auto& t : terms_) {
    MPoly prod = constant(out_vars, t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = t.mono.exp[i];
      if (e == 0)
        continue;
      while (powers[i].size() <= e)
        powers[i].push_back(powers[i].back() * images[i]);
      prod = prod * powers[i][e];
    }
    for (auto& u : prod.terms_)
      acc.push_back(std::move(u));
  }
  return from_terms(out_vars, std::move(acc));
}

MPoly MPoly::evaluate_var(std::size_t var, const BigRat& value) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u = t;
    unsigned e = u.mono.exp[var];
    if (e) {
      BigRat p = 1;
      for (unsigned k = 0; k < e; ++k)
        p *= value;
      u.coeff *= p;
      u.mono.exp[var] = 0;
      u.mono.degree -= e;
    }
    acc.push_back(std::move(u));
  }
  return from_terms(nvars_, std::move(acc));
}

BigRat MPoly::make_primitive() {
  if (terms_.empty())
    return 1;
  BigInt den_lcm = 1;
  for (const auto& t : terms_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  BigInt num_gcd = 0;
  for (const auto& t : terms_) {
    BigInt n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    if (num_gcd == 1)
      break;
  }
  BigRat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.front().coeff < 0)
    scale = -scale;
  if (scale != 1)
    for (auto& t : terms_)
      t.coeff *= scale;
  return scale;
}

MPoly MPoly::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1)
    return *this;
  MPoly r = *this;
  r *= BigRat(1 / terms_.front().coeff);
  return r;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigRat c = t.coeff;
    bool neg = c < 0;
    if (neg)
      c = -c;
    if (first) {
      if (neg)
        os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    if (!unit || t.mono.degree == 0)
      os << c.get_str();
    bool need_star = !unit || t.mono.degree == 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = t.mono.exp[i];
      if (!e)
        continue;
      if (need_star)
        os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e > 1)
        os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

std::vector<std::string> default_variable_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    names.push_back("l" + std::to_string(i + 1));
  names.push_back("z");
  return names;
}

// ------------------------------------------------------------------- GCD

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
  std::size_t n = b.nvars();
  auto bc = b.coefficients_in(var);
  std::size_t db = bc.size() - 1;
  const MPoly& lc = bc.back();
  auto rc = a.coefficients_in(var);
  while (!rc.empty() && rc.back().is_zero())
    rc.pop_back();
  while (rc.size() > db && !rc.empty()) {
    std::size_t dr = rc.size() - 1;
    MPoly lead = rc.back();
    std::size_t shift = dr - db;
    for (auto& c : rc)
      c = c * lc;
    for (std::size_t k = 0; k <= db; ++k)
      rc[k + shift] -= lead * bc[k];
    while (!rc.empty() && rc.back().is_zero())
      rc.pop_back();
  }
  return MPoly::from_coefficients_in(n, var, rc);
}

namespace {

using UPoly = std::vector<BigRat>;  // dense, index = power

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

// Degree of gcd over Q of two univariate polynomials.
std::size_t upoly_gcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    BigRat inv = 1 / b.back();
    while (a.size() >= b.size() && !a.empty()) {
      BigRat f = a.back() * inv;
      std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k)
        a[k + shift] -= f * b[k];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Evaluates every variable except `keep` at `point`.
UPoly univariate_image(const MPoly& p, std::size_t keep,
                       const std::vector<BigRat>& point) {
  UPoly out(p.degree_in(keep) + 1, BigRat(0));
  for (const auto& t : p.terms()) {
    BigRat c = t.coeff;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (i == keep)
        continue;
      for (unsigned k = 0; k < t.mono.exp[i]; ++k)
        c *= point[i];
    }
    out[t.mono.exp[keep]] += c;
  }
  return out;
}

MPoly content_in(const MPoly& p, std::size_t var) {
  auto cs = p.coefficients_in(var);
  MPoly g(p.nvars());
  // Start from the sparsest coefficient to reach 1 early.
  std::sort(cs.begin(), cs.end(),
            [](const MPoly& x, const MPoly& y) { return x.size() < y.size(); });
  for (const auto& c : cs) {
    if (c.is_zero())
      continue;
    g = gcd(g, c);
    if (g.is_one())
      break;
  }
  return g;
}

MPoly primitive_part_in(const MPoly& p, std::size_t var) {
  MPoly c = content_in(p, var);
  MPoly r = c.is_one() ? p : *p.divide_exact(c);
  r.make_primitive();
  return r;
}

// True when the images certify that pa, pb (primitive in var) are coprime.
bool coprime_by_evaluation(const MPoly& pa, const MPoly& pb, std::size_t var) {
  thread_local std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> dist(-97, 97);
  auto la = pa.coefficients_in(var).back();
  auto lb = pb.coefficients_in(var).back();
  std::size_t n = pa.nvars();
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<BigRat> point(n);
    for (auto& x : point)
      x = dist(rng);
    auto ev = [&](const MPoly& q) {
      BigRat acc = 0;
      for (const auto& t : q.terms()) {
        BigRat c = t.coeff;
        for (std::size_t i = 0; i < n; ++i)
          for (unsigned k = 0; k < t.mono.exp[i]; ++k)
            c *= point[i];
        acc += c;
      }
      return acc;
    };
    if (ev(la) == 0 || ev(lb) == 0)
      continue;
    return upoly_gcd_degree(univariate_image(pa, var, point),
                            univariate_image(pb, var, point)) == 0;
  }
  return false;
}

MPoly primitive_prs(MPoly pa, MPoly pb, std::size_t var) {
  if (pa.degree_in(var) < pb.degree_in(var))
    std::swap(pa, pb);
  while (true) {
    if (!pb.involves(var))
      return MPoly::constant(pa.nvars(), 1);
    MPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero())
      return pb;
    if (!r.involves(var))
      return MPoly::constant(pa.nvars(), 1);
    pa = std::move(pb);
    pb = primitive_part_in(r, var);
  }
}

MPoly gcd_core(const MPoly& a, const MPoly& b) {
  std::size_t n = a.nvars();
  MPoly one = MPoly::constant(n, 1);
  if (a.is_constant() || b.is_constant())
    return one;
  if (a == b)
    return a.monic();
  if (a.size() >= b.size()) {
    if (a.divide_exact(b))
      return b.monic();
  } else if (b.divide_exact(a)) {
    return a.monic();
  }
  // A variable present in only one argument can be eliminated via content.
  for (std::size_t v = 0; v < n; ++v) {
    bool ia = a.involves(v), ib = b.involves(v);
    if (ia && !ib)
      return gcd(content_in(a, v), b);
    if (ib && !ia)
      return gcd(a, content_in(b, v));
  }
  std::size_t var = n;
  std::uint32_t best = ~0u;
  for (std::size_t v = 0; v < n; ++v) {
    if (!a.involves(v))
      continue;
    std::uint32_t d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }
  if (var == n)
    return one;
  MPoly ca = content_in(a, var);
  MPoly cb = content_in(b, var);
  MPoly c = gcd(ca, cb);
  MPoly pa = ca.is_one() ? a : *a.divide_exact(ca);
  MPoly pb = cb.is_one() ? b : *b.divide_exact(cb);
  pa.make_primitive();
  pb.make_primitive();
  if (coprime_by_evaluation(pa, pb, var))
    return c.monic();
  MPoly g = primitive_prs(std::move(pa), std::move(pb), var);
  return (c * g).monic();
}

MPoly divide_by_monomial(const MPoly& p, const Monomial& m) {
  if (m.degree == 0)
    return p;
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms())
    terms.push_back({t.mono / m, t.coeff});
  return MPoly::from_terms(p.nvars(), std::move(terms));
}

} // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::ArityMismatch, "gcd arity mismatch");
  if (a.is_zero())
    return b.monic();
  if (b.is_zero())
    return a.monic();
  std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant())
    return MPoly::constant(n, 1);
  Monomial ma = a.min_monomial(), mb = b.min_monomial();
  Monomial mg;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    mg.exp[i] = std::min(ma.exp[i], mb.exp[i]);
    mg.degree += mg.exp[i];
  }
  MPoly core = gcd_core(divide_by_monomial(a, ma), divide_by_monomial(b, mb));
  if (mg.degree == 0)
    return core;
  return core.mul_monomial(mg, 1).monic();
}

} // namespace qtoric
