#include "qtoric/mirror.hpp"

#include "qtoric/errors.hpp"

namespace qtoric {

namespace {

Degree zero_degree(std::size_t m) { return Degree(m, 0); }

MatrixSeries empty_like(const MatrixSeries& a) { return MatrixSeries(a.omega(), a.cutoff()); }

void require_z_free(const MatrixSeries& C);

} // namespace

MatrixSeries derivative_frame(const Cohomology& coh, const LocalizedSeries& I, Execution exec) {
  const ToricModel& model = coh.model();
  const std::size_t npts = model.points.size();
  const std::size_t nb = coh.rank();
  std::vector<LocalizedSeries> columns;
  for (const auto& a : coh.basis()) {
    LocalizedSeries col = I;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int e = 0; e < a[i]; ++e)
        col = divisor_derivative(model, i, col, exec);
    columns.push_back(std::move(col));
  }
  std::map<Degree, Matrix> frame;
  for (std::size_t c = 0; c < nb; ++c)
    for (const auto& [d, v] : columns[c].terms()) {
      auto it = frame.try_emplace(d, npts, nb, model.nvars()).first;
      it->second.set_column(c, v.values);
    }
  MatrixSeries L(I.omega(), I.cutoff());
  for (auto& [d, m] : frame)
    L.set(d, std::move(m));
  const Matrix* l0 = L.find(zero_degree(model.m()));
  if (!l0 || !(*l0 == coh.restriction_matrix()))
    throw Error(ErrorCode::SingularFrame, "degree-0 frame is not the restriction matrix");
  return L;
}

BirkhoffFactors birkhoff_factorize(const Cohomology& coh, const MatrixSeries& L,
                                   const std::vector<Degree>& degrees, Execution exec) {
  const ToricModel& model = coh.model();
  const std::size_t n = coh.rank();
  const std::size_t nv = model.nvars();
  const Matrix& P0 = coh.restriction_matrix();
  const Matrix& P0inv = coh.restriction_inverse();
  BirkhoffFactors F{empty_like(L), empty_like(L)};
  const Degree zero = zero_degree(model.m());
  F.U.set(zero, Matrix::identity(n, nv));
  F.P.set(zero, P0);
  for (const auto& d : degrees) {
    if (is_zero_degree(d) || !L.within(d))
      continue;
    MatrixPairs terms;
    for (const auto& [d1, u1] : F.U.terms()) {
      if (is_zero_degree(d1))
        continue;
      Degree d2 = d - d1;
      if (is_zero_degree(d2))
        continue;
      if (const Matrix* p2 = F.P.find(d2))
        terms.emplace_back(&u1, p2);
    }
    Matrix K = sum_of_products(terms, n, n, nv, exec);
    if (const Matrix* ld = L.find(d))
      K = *ld - K;
    else
      K = -K;
    if (K.is_zero())
      continue;
    Matrix G = multiply(K, P0inv, exec);
    std::vector<ZSplit> parts(n * n);
    for_each_index(n * n, exec, [&](std::size_t e) { parts[e] = z_split(G(e / n, e % n)); });
    Matrix Ud(n, n, nv), poly(n, n, nv);
    for (std::size_t e = 0; e < n * n; ++e) {
      Ud(e / n, e % n) = parts[e].proper;
      poly(e / n, e % n) = parts[e].poly_part();
    }
    F.U.set(d, std::move(Ud));
    F.P.set(d, multiply(poly, P0, exec));
  }
  return F;
}

FactorizationCheck verify_factorization(const MatrixSeries& L, const BirkhoffFactors& F,
                                        Execution exec) {
  FactorizationCheck c;
  MatrixSeries residual = L - multiply(F.U, F.P, exec);
  for (const auto& [d, m] : residual.terms()) {
    c.exact = false;
    c.bad_degrees.push_back(d);
  }
  for (const auto& [d, m] : F.U.terms()) {
    if (is_zero_degree(d))
      continue;
    for (const auto& e : m.data())
      if (!is_proper_in_z(e)) {
        c.u_proper = false;
        c.bad_degrees.push_back(d);
        break;
      }
  }
  for (const auto& [d, m] : F.P.terms())
    for (const auto& e : m.data())
      if (!is_z_polynomial(e)) {
        c.p_polynomial = false;
        c.bad_degrees.push_back(d);
        break;
      }
  return c;
}

ClassSeries extract_tau(const Cohomology& coh, const BirkhoffFactors& F) {
  ClassSeries tau(F.U.omega(), F.U.cutoff());
  const LocalizedClass one = coh.one();
  for (const auto& [d, u] : F.U.terms()) {
    if (is_zero_degree(d))
      continue;
    LocalizedClass v{u.apply(one.values)};
    for (auto& e : v.values)
      e = z_inf_leading(e);
    tau.set(d, coh.interpolate_strict(v));
  }
  return tau;
}

ClassSeries extract_upsilon(const Cohomology& coh, const BirkhoffFactors& F) {
  ClassSeries ups(F.P.omega(), F.P.cutoff());
  for (const auto& [d, p] : F.P.terms()) {
    if (is_zero_degree(d)) {
      ups.set(d, coh.unit());
      continue;
    }
    GlobalClass g = coh.interpolate(LocalizedClass{p.column(0)});
    for (const auto& c : g.coeffs)
      if (!is_z_polynomial(c))
        throw Error(ErrorCode::NonPolynomialUpsilon,
                    "Upsilon at degree " + degree_to_string(d) + " is not polynomial in z");
    ups.set(d, std::move(g));
  }
  return ups;
}

MatrixSeries series_inverse(const MatrixSeries& A, const std::vector<Degree>& degrees,
                            Execution exec) {
  if (degrees.empty())
    throw Error(ErrorCode::InvalidArgument, "series_inverse needs a degree list");
  const Degree zero = zero_degree(degrees.front().size());
  const Matrix* a0 = A.find(zero);
  if (!a0)
    throw Error(ErrorCode::SingularFrame, "series has no degree-0 part");
  const std::size_t n = a0->rows();
  const Matrix a0inv = a0->is_identity() ? *a0 : inverse(*a0);
  MatrixSeries R = empty_like(A);
  R.set(zero, a0inv);
  for (const auto& d : degrees) {
    if (is_zero_degree(d) || !A.within(d))
      continue;
    MatrixPairs terms;
    for (const auto& [d1, a1] : A.terms()) {
      if (is_zero_degree(d1))
        continue;
      if (const Matrix* r2 = R.find(d - d1))
        terms.emplace_back(&a1, r2);
    }
    if (terms.empty())
      continue;
    Matrix S = sum_of_products(terms, n, a0->cols(), a0->nvars(), exec);
    R.set(d, a0->is_identity() ? -S : -multiply(a0inv, S, exec));
  }
  return R;
}

MatrixSeries frame_derivative(const ToricModel& model, std::size_t i, const MatrixSeries& L,
                              Execution exec) {
  const std::size_t nv = model.nvars();
  const MPoly z = MPoly::variable(nv, nv - 1);
  MatrixSeries r = empty_like(L);
  for (const auto& [d, m] : L.terms()) {
    const BigRat di = d.at(i);
    r.set(d, map_entries(m, exec, [&](std::size_t x, std::size_t, const RationalFunction& f) {
            return multiply_irreducible(f, model.u_poly(x, i) + z * di);
          }));
  }
  return r;
}

MatrixSeries connection_matrix(const Cohomology& coh, std::size_t i, const MatrixSeries& L,
                               const BirkhoffFactors& F, const MatrixSeries& U_inv,
                               const MatrixSeries& P_inv, Execution exec) {
  const ToricModel& model = coh.model();
  const std::size_t nv = model.nvars();
  const MPoly z = MPoly::variable(nv, nv - 1);
  MatrixSeries DL = frame_derivative(model, i, L, exec);
  MatrixSeries zP = empty_like(F.P);
  for (const auto& [d, p] : F.P.terms()) {
    if (d.at(i) == 0)
      continue;
    const MPoly f = z * BigRat(d[i]);
    zP.set(d, map_entries(p, exec, [&](std::size_t, std::size_t, const RationalFunction& e) {
             return multiply_irreducible(e, f);
           }));
  }
  MatrixSeries C = multiply(multiply(U_inv, DL, exec), P_inv, exec) - multiply(zP, P_inv, exec);
  require_z_free(C);
  return C;
}

namespace {

void require_z_free(const MatrixSeries& C) {
  for (const auto& [d, m] : C.terms())
    for (const auto& e : m.data())
      if (!e.is_z_free())
        throw Error(ErrorCode::ZDependentConnection,
                    "connection matrix depends on z at degree " + degree_to_string(d));
}

} // namespace

MatrixSeries connection_from_u(const Cohomology& coh, std::size_t i, const BirkhoffFactors& F,
                               const std::vector<Degree>& degrees, Execution exec) {
  const ToricModel& model = coh.model();
  const std::size_t n = coh.rank();
  const std::size_t nv = model.nvars();
  MatrixSeries DU = frame_derivative(model, i, F.U, exec);
  MatrixSeries C = empty_like(F.U);
  for (const auto& d : degrees) {
    if (!F.U.within(d))
      continue;
    MatrixPairs terms;
    for (const auto& [d1, u1] : F.U.terms()) {
      if (is_zero_degree(d1))
        continue;
      if (const Matrix* c2 = C.find(d - d1))
        terms.emplace_back(&u1, c2);
    }
    Matrix S = sum_of_products(terms, n, n, nv, exec);
    if (const Matrix* du = DU.find(d))
      S = *du - S;
    else
      S = -S;
    C.set(d, std::move(S));
  }
  require_z_free(C);
  return C;
}

ClassSeries seidel_from_tau(const Cohomology& coh, std::size_t i, const ClassSeries& tau) {
  const ToricModel& model = coh.model();
  ClassSeries s(tau.omega(), tau.cutoff());
  UMonomial ui(model.m(), 0);
  ui.at(i) = 1;
  s.set(zero_degree(model.m()), coh.interpolate_strict(restrict_monomial(model, ui)));
  for (const auto& [d, t] : tau.terms())
    if (d[i] != 0)
      s.set(d, RationalFunction(model.nvars(), d[i]) * t);
  return s;
}

ClassSeries connection_classes(const Cohomology& coh, const MatrixSeries& C) {
  ClassSeries s(C.omega(), C.cutoff());
  const LocalizedClass one = coh.one();
  for (const auto& [d, m] : C.terms())
    s.set(d, coh.interpolate_strict(LocalizedClass{m.apply(one.values)}));
  return s;
}

MatrixSeries basis_matrices(const Cohomology& coh, const MatrixSeries& C) {
  MatrixSeries r = empty_like(C);
  for (const auto& [d, m] : C.terms())
    r.set(d, coh.restriction_inverse() * m * coh.restriction_matrix());
  return r;
}

bool is_projective_space(const ToricModel& model) {
  if (model.m() != std::size_t(model.fan.dim()) + 1)
    return false;
  const auto& g = model.certificate.generators;
  return g.size() == 1 && g[0] == Degree(model.m(), 1);
}

LocalizedSeries quantum_relation_residual(const ToricModel& model, const LocalizedSeries& I,
                                          Execution exec) {
  if (!is_projective_space(model))
    throw Error(ErrorCode::NotProjectiveSpace, "relation check needs a projective space fan");
  LocalizedSeries lhs = I;
  for (std::size_t i = 0; i < model.m(); ++i)
    lhs = divisor_derivative(model, i, lhs, exec);
  const Degree all_ones(model.m(), 1);
  const Cocharacter k = model.chart_cocharacter(Cocharacter(model.m(), 1));
  LocalizedSeries rhs(I.omega(), I.cutoff());
  for (const auto& [d, v] : I.terms()) {
    Degree e = d + all_ones;
    if (!I.within(e))
      continue;
    LocalizedClass w = v;
    for_each_index(w.size(), exec, [&](std::size_t x) { w[x] = shift_lambda(v[x], k); });
    rhs.set(e, std::move(w));
  }
  return lhs - rhs;
}

MirrorResult run_mirror(const Cohomology& coh, const BigRat& cutoff, bool with_connection,
                        Execution exec) {
  const ToricModel& model = coh.model();
  MirrorResult r;
  r.degrees = model_degrees(model, cutoff);
  r.I = ifun_series_over(model, r.degrees, cutoff, exec);
  r.L = derivative_frame(coh, r.I, exec);
  r.F = birkhoff_factorize(coh, r.L, r.degrees, exec);
  r.check = verify_factorization(r.L, r.F, exec);
  r.tau = extract_tau(coh, r.F);
  r.upsilon = extract_upsilon(coh, r.F);
  for (std::size_t i = 0; i < model.m(); ++i)
    r.seidel.push_back(seidel_from_tau(coh, i, r.tau));
  if (with_connection) {
    for (std::size_t i = 0; i < model.m(); ++i) {
      r.connection.push_back(connection_from_u(coh, i, r.F, r.degrees, exec));
      r.connection_class.push_back(connection_classes(coh, r.connection.back()));
    }
  }
  return r;
}

} // namespace qtoric
