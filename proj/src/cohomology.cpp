#include "qtoric/cohomology.hpp"

#include <algorithm>

#include "qtoric/errors.hpp"

namespace qtoric {

LocalizedClass operator+(const LocalizedClass& a, const LocalizedClass& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::ArityMismatch, "localized classes of different length");
  LocalizedClass r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

LocalizedClass operator-(const LocalizedClass& a, const LocalizedClass& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::ArityMismatch, "localized classes of different length");
  LocalizedClass r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

LocalizedClass operator-(const LocalizedClass& a) {
  LocalizedClass r = a;
  for (auto& v : r.values)
    v = -v;
  return r;
}

bool is_zero(const LocalizedClass& v) {
  return std::all_of(v.values.begin(), v.values.end(),
                     [](const RationalFunction& f) { return f.is_zero(); });
}

GlobalClass operator+(const GlobalClass& a, const GlobalClass& b) {
  GlobalClass r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    r.coeffs[i] += b.coeffs.at(i);
  return r;
}

GlobalClass operator-(const GlobalClass& a, const GlobalClass& b) {
  GlobalClass r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    r.coeffs[i] -= b.coeffs.at(i);
  return r;
}

GlobalClass operator*(const RationalFunction& c, const GlobalClass& a) {
  GlobalClass r = a;
  for (auto& x : r.coeffs)
    x = c * x;
  return r;
}

bool is_zero(const GlobalClass& v) {
  return std::all_of(v.coeffs.begin(), v.coeffs.end(),
                     [](const RationalFunction& f) { return f.is_zero(); });
}

LocalizedClass restrict_monomial(const ToricModel& model, const UMonomial& a) {
  const std::size_t n = model.nvars();
  LocalizedClass v;
  for (std::size_t x = 0; x < model.points.size(); ++x) {
    MPoly p = MPoly::constant(n, 1);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] > 0)
        p *= model.u_poly(x, j).pow(unsigned(a[j]));
    v.values.emplace_back(std::move(p));
  }
  return v;
}

LocalizedClass restrict_poly(const ToricModel& model, const UPolynomial& p) {
  LocalizedClass v;
  v.values.assign(model.points.size(), RationalFunction(model.nvars()));
  for (const auto& [a, c] : p) {
    LocalizedClass r = restrict_monomial(model, a);
    for (std::size_t x = 0; x < v.size(); ++x)
      v[x] += c * r[x];
  }
  return v;
}

std::string monomial_name(const UMonomial& a) {
  std::string s;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0)
      continue;
    if (!s.empty())
      s += "*";
    s += "u" + std::to_string(j + 1);
    if (a[j] > 1)
      s += "^" + std::to_string(a[j]);
  }
  return s.empty() ? "1" : s;
}

namespace {

// Faces of the fan (subsets of maximal cones), ordered by (size, lex).
std::vector<std::vector<int>> fan_faces(const Fan& fan) {
  std::vector<std::vector<int>> faces;
  for (const auto& cone : fan.cones()) {
    const std::size_t k = cone.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i))
          f.push_back(cone[i]);
      faces.push_back(std::move(f));
    }
  }
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

} // namespace

std::vector<UMonomial> basis_select(const ToricModel& model) {
  const std::size_t npts = model.points.size();
  const std::size_t m = model.m();
  std::vector<UMonomial> chosen;
  // Echelon rows with their pivot positions.
  std::vector<std::vector<RationalFunction>> rows;
  std::vector<std::size_t> pivots;
  for (const auto& face : fan_faces(model.fan)) {
    UMonomial a(m, 0);
    for (int j : face)
      a[j] = 1;
    std::vector<RationalFunction> v = restrict_monomial(model, a).values;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]].is_zero())
        continue;
      RationalFunction f = v[pivots[r]] / rows[r][pivots[r]];
      for (std::size_t x = 0; x < npts; ++x)
        if (!rows[r][x].is_zero())
          v[x] -= f * rows[r][x];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const RationalFunction& f) { return !f.is_zero(); });
    if (it == v.end())
      continue;
    pivots.push_back(std::size_t(it - v.begin()));
    rows.push_back(std::move(v));
    chosen.push_back(std::move(a));
    if (chosen.size() == npts)
      return chosen;
  }
  throw Error(ErrorCode::BasisIncomplete,
              "face monomials span rank " + std::to_string(chosen.size()) + " < " +
                  std::to_string(npts));
}

Cohomology::Cohomology(const ToricModel& model) : model_(model) {
  basis_ = basis_select(model_);
  const std::size_t n = basis_.size();
  p0_ = Matrix(n, n, model_.nvars());
  for (std::size_t c = 0; c < n; ++c)
    p0_.set_column(c, restrict_monomial(model_, basis_[c]).values);
  p0_inv_ = inverse(p0_);
}

LocalizedClass Cohomology::restrict(const GlobalClass& c) const {
  if (c.coeffs.size() != rank())
    throw Error(ErrorCode::ArityMismatch, "class has wrong number of coordinates");
  return LocalizedClass{p0_.apply(c.coeffs)};
}

GlobalClass Cohomology::interpolate(const LocalizedClass& v) const {
  if (v.size() != rank())
    throw Error(ErrorCode::ArityMismatch, "localized class has wrong length");
  return GlobalClass{p0_inv_.apply(v.values)};
}

GlobalClass Cohomology::interpolate_strict(const LocalizedClass& v) const {
  GlobalClass g = interpolate(v);
  for (std::size_t i = 0; i < g.coeffs.size(); ++i)
    if (!g.coeffs[i].is_polynomial())
      throw Error(ErrorCode::NotGlobal, "coordinate of " + monomial_name(basis_[i]) +
                                            " is not polynomial in the equivariant parameters");
  return g;
}

RationalFunction Cohomology::integrate(const LocalizedClass& v) const {
  if (v.size() != model_.points.size())
    throw Error(ErrorCode::ArityMismatch, "localized class has wrong length");
  RationalFunction acc(model_.nvars());
  for (std::size_t x = 0; x < v.size(); ++x)
    if (!v[x].is_zero())
      acc += v[x] / model_.points[x].euler;
  return acc;
}

RationalFunction Cohomology::pairing(const LocalizedClass& a, const LocalizedClass& b) const {
  LocalizedClass ab = a;
  for (std::size_t x = 0; x < ab.size(); ++x)
    ab[x] *= b.values.at(x);
  return integrate(ab);
}

LocalizedClass Cohomology::one() const {
  return LocalizedClass{std::vector<RationalFunction>(model_.points.size(),
                                                      RationalFunction(model_.nvars(), 1))};
}

GlobalClass Cohomology::unit() const {
  GlobalClass g = zero();
  g.coeffs[0] = RationalFunction(model_.nvars(), 1);
  return g;
}

GlobalClass Cohomology::zero() const {
  return GlobalClass{std::vector<RationalFunction>(rank(), RationalFunction(model_.nvars()))};
}

std::string Cohomology::render(const GlobalClass& c) const {
  auto names = default_variable_names(model_.m());
  std::string s;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (c.coeffs[i].is_zero())
      continue;
    std::string coeff = model_.to_full(c.coeffs[i]).to_string(names);
    std::string term;
    std::string mono = monomial_name(basis_[i]);
    if (mono == "1")
      term = coeff;
    else if (coeff == "1")
      term = mono;
    else
      term = "(" + coeff + ")*" + mono;
    if (!s.empty())
      s += " + ";
    s += term;
  }
  return s.empty() ? "0" : s;
}

bool is_z_expandable(const RationalFunction& f) {
  auto cs = f.den().coefficients_in(f.z_index());
  return cs.back().is_constant();
}

} // namespace qtoric
