#include "qtoric/shift.hpp"

#include <map>

#include "qtoric/errors.hpp"

namespace qtoric {

Cocharacter unit_cocharacter(std::size_t m, std::size_t i) {
  Cocharacter k(m, 0);
  k.at(i) = 1;
  return k;
}

namespace {

RationalFunction delta_factor(const ToricModel& model, std::size_t x, const Cocharacter& ck) {
  const std::size_t nv = model.nvars();
  MPoly num = MPoly::constant(nv, 1), den = MPoly::constant(nv, 1);
  const auto& rows = model.points[x].restriction;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    long e = -pairing(rows[j], ck);
    if (e == 0)
      continue;
    HyperFactor h = hypergeometric_factor(linear_form_poly(rows[j], nv), e);
    num *= h.num;
    den *= h.den;
  }
  if (num.is_zero())
    return RationalFunction(nv);
  return RationalFunction::from_coprime(std::move(num), std::move(den));
}

} // namespace

ShiftFactor delta(const ToricModel& model, std::size_t x, const Cocharacter& k) {
  ShiftFactor s;
  s.x = x;
  s.k = model.chart_cocharacter(k);
  s.offset = section_degree(model.points, x, s.k);
  s.factor = delta_factor(model, x, s.k);
  return s;
}

StrippedShiftOp make_shift(const ToricModel& model, const Cocharacter& k) {
  StrippedShiftOp op;
  op.k = k;
  op.chart_k = model.chart_cocharacter(k);
  for (std::size_t x = 0; x < model.points.size(); ++x)
    op.table.push_back(delta(model, x, k));
  return op;
}

RationalFunction shift_lambda(const RationalFunction& f, const Cocharacter& k) {
  const std::size_t nv = f.nvars();
  bool trivial = true;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] != 0 && f.involves(i))
      trivial = false;
  if (trivial)
    return f;
  const MPoly z = MPoly::variable(nv, nv - 1);
  std::vector<MPoly> images;
  for (std::size_t v = 0; v < nv; ++v) {
    MPoly img = MPoly::variable(nv, v);
    if (v < k.size() && k[v] != 0)
      img -= z * BigRat(k[v]);
    images.push_back(std::move(img));
  }
  return f.substitute(images, true);
}

LocalizedSeries shift_apply(const ToricModel& model, const StrippedShiftOp& op,
                            const LocalizedSeries& f, Execution exec) {
  const std::size_t npts = model.points.size();
  // target degree -> per fixed point source coefficient
  std::map<Degree, std::vector<const RationalFunction*>> targets;
  for (const auto& [d, v] : f.terms())
    for (std::size_t x = 0; x < npts; ++x) {
      if (v[x].is_zero())
        continue;
      Degree e = d + op.table[x].offset;
      if (!f.within(e))
        continue;
      auto& slot = targets[e];
      slot.resize(npts, nullptr);
      slot[x] = &v[x];
    }
  std::vector<const Degree*> keys;
  for (const auto& [e, slot] : targets)
    keys.push_back(&e);
  std::vector<RationalFunction> cells(keys.size() * npts);
  for_each_index(cells.size(), exec, [&](std::size_t c) {
    std::size_t i = c / npts, x = c % npts;
    const RationalFunction* src = targets.at(*keys[i])[x];
    cells[c] = src ? op.table[x].factor * shift_lambda(*src, op.chart_k)
                   : RationalFunction(model.nvars());
  });
  LocalizedSeries r(f.omega(), f.cutoff());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    LocalizedClass v;
    v.values.assign(cells.begin() + i * npts, cells.begin() + (i + 1) * npts);
    r.set(*keys[i], std::move(v));
  }
  return r;
}

LocalizedSeries divisor_derivative(const ToricModel& model, std::size_t i,
                                   const LocalizedSeries& f, Execution exec) {
  const std::size_t npts = model.points.size();
  const std::size_t nv = model.nvars();
  const MPoly z = MPoly::variable(nv, nv - 1);
  std::vector<std::pair<const Degree*, const LocalizedClass*>> items;
  for (const auto& [d, v] : f.terms())
    items.emplace_back(&d, &v);
  std::vector<RationalFunction> cells(items.size() * npts);
  for_each_index(cells.size(), exec, [&](std::size_t c) {
    std::size_t k = c / npts, x = c % npts;
    const Degree& d = *items[k].first;
    MPoly l = model.u_poly(x, i) + z * BigRat(d.at(i));
    cells[c] = multiply_irreducible((*items[k].second)[x], l);
  });
  LocalizedSeries r(f.omega(), f.cutoff());
  for (std::size_t k = 0; k < items.size(); ++k) {
    LocalizedClass v;
    v.values.assign(cells.begin() + k * npts, cells.begin() + (k + 1) * npts);
    r.set(*items[k].first, std::move(v));
  }
  return r;
}

LocalizedSeries flow_residual(const ToricModel& model, std::size_t i, const LocalizedSeries& I,
                              Execution exec) {
  auto lhs = divisor_derivative(model, i, I, exec);
  auto rhs = shift_apply(model, make_shift(model, unit_cocharacter(model.m(), i)), I, exec);
  return lhs - rhs;
}

Degree compose_offset(const ToricModel& model, const Cocharacter& k, const Cocharacter& l) {
  Cocharacter kl(k.size());
  for (std::size_t i = 0; i < k.size(); ++i)
    kl[i] = k[i] + l.at(i);
  std::optional<Degree> common;
  for (std::size_t x = 0; x < model.points.size(); ++x) {
    ShiftFactor a = delta(model, x, k), b = delta(model, x, l), ab = delta(model, x, kl);
    RationalFunction lhs = a.factor * shift_lambda(b.factor, a.k);
    if (lhs != ab.factor)
      throw Error(ErrorCode::InconsistentComposition,
                  "shift factors do not compose at fixed point " + std::to_string(x + 1));
    Degree off = a.offset + b.offset - ab.offset;
    if (common && *common != off)
      throw Error(ErrorCode::InconsistentComposition,
                  "composition offset depends on the fixed point");
    common = off;
  }
  return *common;
}

Degree compose_check(const ToricModel& model, const Cocharacter& k, const Cocharacter& l) {
  Degree a = compose_offset(model, k, l);
  Degree b = compose_offset(model, l, k);
  if (a != b)
    throw Error(ErrorCode::InconsistentComposition,
                "d(k,l) = " + degree_to_string(a) + " differs from d(l,k) = " + degree_to_string(b));
  return a;
}

} // namespace qtoric
