#include "qtoric/ifunction.hpp"

#include "qtoric/errors.hpp"

namespace qtoric {

HyperFactor hypergeometric_factor(const MPoly& u, long n) {
  const std::size_t nv = u.nvars();
  const MPoly z = MPoly::variable(nv, nv - 1);
  HyperFactor h{MPoly::constant(nv, 1), MPoly::constant(nv, 1)};
  if (n > 0) {
    for (long c = 1; c <= n; ++c) {
      MPoly f = u + z * BigRat(c);
      if (f.is_zero())
        throw Error(ErrorCode::ZeroDenominator, "vanishing factor in a denominator");
      h.den *= f;
    }
  } else {
    for (long c = n + 1; c <= 0; ++c)
      h.num *= u + z * BigRat(c);
  }
  return h;
}

RationalFunction ifun_coeff(const ToricModel& model, const Degree& d, std::size_t x) {
  const std::size_t nv = model.nvars();
  if (d.size() != model.m())
    throw Error(ErrorCode::ArityMismatch, "degree length does not match ray count");
  MPoly num = MPoly::constant(nv, 1), den = MPoly::constant(nv, 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0)
      continue;
    HyperFactor h = hypergeometric_factor(model.u_poly(x, i), d[i]);
    num *= h.num;
    den *= h.den;
    if (num.is_zero())
      return RationalFunction(nv);
  }
  // The factors u_i(x) + cz for i in the cone are pairwise non-associate and
  // never equal to cz, so num and den are coprime.
  return RationalFunction::from_coprime(std::move(num), std::move(den));
}

std::vector<Degree> model_degrees(const ToricModel& model, const BigRat& cutoff) {
  return effective_degrees(model.certificate.generators, model.omega, cutoff);
}

LocalizedSeries ifun_series_over(const ToricModel& model, const std::vector<Degree>& degrees,
                                 const BigRat& cutoff, Execution exec) {
  if (cutoff < 0)
    throw Error(ErrorCode::InvalidArgument, "cutoff must be non-negative");
  std::vector<Degree> ds;
  for (const auto& d : degrees)
    if (grade(model.omega, d) <= cutoff)
      ds.push_back(d);
  const std::size_t npts = model.points.size();
  std::vector<RationalFunction> cells(ds.size() * npts);
  for_each_index(cells.size(), exec, [&](std::size_t k) {
    cells[k] = ifun_coeff(model, ds[k / npts], k % npts);
  });
  LocalizedSeries s(model.omega, cutoff);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    LocalizedClass v;
    v.values.assign(cells.begin() + i * npts, cells.begin() + (i + 1) * npts);
    if (!is_zero_degree(ds[i]) && grade(model.omega, ds[i]) <= 0) {
      // Non-effective probe directions with non-positive grade cannot be
      // stored; they are only meaningful when the coefficient vanishes.
      if (!is_zero(v))
        throw Error(ErrorCode::GradingMismatch,
                    "nonzero coefficient at non-positive degree " + degree_to_string(ds[i]));
      continue;
    }
    s.set(ds[i], std::move(v));
  }
  return s;
}

LocalizedSeries ifun_series(const ToricModel& model, const BigRat& cutoff, Execution exec) {
  return ifun_series_over(model, model_degrees(model, cutoff), cutoff, exec);
}

std::vector<Degree> lattice_box(const ToricModel& model, long radius) {
  const auto& basis = model.slice.kernel_basis;
  const std::size_t r = basis.size();
  std::vector<Degree> out;
  std::vector<long> t(r, -radius);
  if (r == 0)
    return {Degree(model.m(), 0)};
  while (true) {
    Degree d(model.m(), 0);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < d.size(); ++i)
        d[i] += t[j] * basis[j][i];
    out.push_back(std::move(d));
    std::size_t j = 0;
    while (j < r && t[j] == radius)
      t[j++] = -radius;
    if (j == r)
      break;
    ++t[j];
  }
  return out;
}

} // namespace qtoric
