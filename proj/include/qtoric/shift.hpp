#ifndef QTORIC_SHIFT_HPP
#define QTORIC_SHIFT_HPP

#include "qtoric/ifunction.hpp"

namespace qtoric {

struct ShiftFactor {
  std::size_t x = 0;
  Cocharacter k;          // in the model's chart
  Degree offset;          // d_k(x)
  RationalFunction factor;
};

// Delta_x(k) = prod_j prod_{c<=0}(u_j(x)+cz) / prod_{c<=-u_j(x).k}(u_j(x)+cz)
// together with the section degree d_k(x). k is given in full coordinates.
ShiftFactor delta(const ToricModel& model, std::size_t x, const Cocharacter& k);

struct StrippedShiftOp {
  Cocharacter k;        // full coordinates
  Cocharacter chart_k;  // as seen by the model's chart
  std::vector<ShiftFactor> table;
};

StrippedShiftOp make_shift(const ToricModel& model, const Cocharacter& k);

// f(lambda) -> f(lambda - z k), k in chart coordinates.
RationalFunction shift_lambda(const RationalFunction& f, const Cocharacter& k);

// (S_k f)(x) = Delta_x(k) (Qy)^{d_k(x)} f(x)|_{lambda -> lambda - zk}.
LocalizedSeries shift_apply(const ToricModel& model, const StrippedShiftOp& op,
                            const LocalizedSeries& f, Execution exec = Execution::parallel);

// (D_i f)_d(x) = (u_i(x) + z (u_i.d)) f_d(x).
LocalizedSeries divisor_derivative(const ToricModel& model, std::size_t i,
                                   const LocalizedSeries& f,
                                   Execution exec = Execution::parallel);

// D_i I - S_i I; identically zero by the flow identity.
LocalizedSeries flow_residual(const ToricModel& model, std::size_t i, const LocalizedSeries& I,
                              Execution exec = Execution::parallel);

Cocharacter unit_cocharacter(std::size_t m, std::size_t i);

// Verifies S_k S_l = (Qy)^{d(k,l)} S_{k+l} at every fixed point and returns
// d(k,l); throws InconsistentComposition when no common offset exists.
Degree compose_offset(const ToricModel& model, const Cocharacter& k, const Cocharacter& l);

// compose_offset for (k,l) and (l,k), with the symmetry check.
Degree compose_check(const ToricModel& model, const Cocharacter& k, const Cocharacter& l);

} // namespace qtoric

#endif
