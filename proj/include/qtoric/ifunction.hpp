#ifndef QTORIC_IFUNCTION_HPP
#define QTORIC_IFUNCTION_HPP

#include "qtoric/cohomology.hpp"
#include "qtoric/novikov.hpp"
#include "qtoric/parallel.hpp"

namespace qtoric {

using LocalizedSeries = NovikovSeries<LocalizedClass>;

// prod_{c<=0}(u + cz) / prod_{c<=n}(u + cz), telescoped. Returns the
// numerator and denominator as products of linear factors; they never share
// a factor when u is not a multiple of z.
struct HyperFactor {
  MPoly num, den;
};
HyperFactor hypergeometric_factor(const MPoly& u, long n);

// I-function coefficient at degree d, restricted to fixed point x.
RationalFunction ifun_coeff(const ToricModel& model, const Degree& d, std::size_t x);

// Stripped, fused I-function sum_d I_d (Qy)^d with omega.d <= cutoff.
// The degree list defaults to the effective degrees of the model.
LocalizedSeries ifun_series(const ToricModel& model, const BigRat& cutoff,
                            Execution exec = Execution::parallel);

// Same fill over an explicit degree list (used to probe non-effective
// degrees). Degrees beyond the cutoff are skipped.
LocalizedSeries ifun_series_over(const ToricModel& model, const std::vector<Degree>& degrees,
                                 const BigRat& cutoff, Execution exec = Execution::parallel);

// Effective degrees of the model up to the cutoff, ordered by (omega.d, lex).
std::vector<Degree> model_degrees(const ToricModel& model, const BigRat& cutoff);

// All lattice points sum_j t_j l^(j) with |t_j| <= radius, including
// non-effective ones.
std::vector<Degree> lattice_box(const ToricModel& model, long radius);

} // namespace qtoric

#endif
