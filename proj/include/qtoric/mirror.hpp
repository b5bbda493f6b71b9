#ifndef QTORIC_MIRROR_HPP
#define QTORIC_MIRROR_HPP

#include <optional>

#include "qtoric/shift.hpp"

namespace qtoric {

using MatrixSeries = NovikovSeries<Matrix>;
using ClassSeries = NovikovSeries<GlobalClass>;

// Column a is prod_i D_i^{a_i} applied to I (indices in increasing order).
// Rows are fixed points; the degree-0 part is the restriction matrix P0.
MatrixSeries derivative_frame(const Cohomology& coh, const LocalizedSeries& I,
                              Execution exec = Execution::parallel);

// L = U P with U = Id + (proper in z) and P polynomial in z, P_0 = P0.
// U acts on localized vectors; P maps basis coordinates to localized values.
struct BirkhoffFactors {
  MatrixSeries U, P;
};

// Degree-by-degree recursion over `degrees` (ordered by omega.d, must be
// closed under the splittings that occur, e.g. model_degrees()).
BirkhoffFactors birkhoff_factorize(const Cohomology& coh, const MatrixSeries& L,
                                   const std::vector<Degree>& degrees,
                                   Execution exec = Execution::parallel);

struct FactorizationCheck {
  bool exact = true;         // L - U P = 0 at every degree
  bool u_proper = true;      // U_d proper in z for d != 0
  bool p_polynomial = true;  // P_d polynomial in z
  std::vector<Degree> bad_degrees;
  bool ok() const { return exact && u_proper && p_polynomial; }
};

FactorizationCheck verify_factorization(const MatrixSeries& L, const BirkhoffFactors& F,
                                        Execution exec = Execution::parallel);

// tau_d = lim_{z->oo} z U_d 1, as classes; the logarithmic head
// sum_i u_i log y_i is implicit and not stored.
ClassSeries extract_tau(const Cohomology& coh, const BirkhoffFactors& F);

// Upsilon = first column of P as classes; includes Upsilon_0 = 1.
ClassSeries extract_upsilon(const Cohomology& coh, const BirkhoffFactors& F);

// Series inverse of a matrix series with invertible degree-0 part.
MatrixSeries series_inverse(const MatrixSeries& A, const std::vector<Degree>& degrees,
                            Execution exec = Execution::parallel);

// D_i applied to the rows of a localized frame.
MatrixSeries frame_derivative(const ToricModel& model, std::size_t i, const MatrixSeries& L,
                              Execution exec = Execution::parallel);

// C_i = U^{-1} (D_i L) P^{-1} - (z theta_i P) P^{-1}, where theta_i scales
// degree d by u_i.d. Throws ZDependentConnection unless every entry is z-free.
MatrixSeries connection_matrix(const Cohomology& coh, std::size_t i, const MatrixSeries& L,
                               const BirkhoffFactors& F, const MatrixSeries& U_inv,
                               const MatrixSeries& P_inv, Execution exec = Execution::parallel);

// The same matrix from U alone: since L = U P, C_i = U^{-1} D_i U, solved
// degree by degree from U C_i = D_i U. No series inverse is needed.
MatrixSeries connection_from_u(const Cohomology& coh, std::size_t i, const BirkhoffFactors& F,
                               const std::vector<Degree>& degrees,
                               Execution exec = Execution::parallel);

// S_i from the mirror map: u_i at degree 0 and (u_i.d) tau_d at degree d.
ClassSeries seidel_from_tau(const Cohomology& coh, std::size_t i, const ClassSeries& tau);

// Classes C_{i,d} 1 (strict interpolation).
ClassSeries connection_classes(const Cohomology& coh, const MatrixSeries& C);

// Quantum multiplication matrices in basis coordinates: P0^{-1} C_d P0.
MatrixSeries basis_matrices(const Cohomology& coh, const MatrixSeries& C);

// D_1 ... D_m I - (Qy)^{(1,...,1)} I|_{lambda -> lambda - z(1,...,1)};
// requires a projective space fan.
LocalizedSeries quantum_relation_residual(const ToricModel& model, const LocalizedSeries& I,
                                          Execution exec = Execution::parallel);

bool is_projective_space(const ToricModel& model);

// Full pipeline at one cutoff.
struct MirrorResult {
  std::vector<Degree> degrees;
  LocalizedSeries I;
  MatrixSeries L;
  BirkhoffFactors F;
  FactorizationCheck check;
  ClassSeries tau, upsilon;
  std::vector<ClassSeries> seidel;            // from tau
  std::vector<MatrixSeries> connection;       // C_i (empty unless requested)
  std::vector<ClassSeries> connection_class;  // C_i 1
};

MirrorResult run_mirror(const Cohomology& coh, const BigRat& cutoff, bool with_connection,
                        Execution exec = Execution::parallel);

} // namespace qtoric

#endif
