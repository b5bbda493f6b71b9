#include "qtoric/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qtoric/errors.hpp"
#include "qtoric/lp.hpp"

namespace qtoric {

namespace {

using RatMatrix = std::vector<std::vector<BigRat>>;

// Determinant by fraction-free elimination over Q.
BigRat determinant(RatMatrix a) {
  const std::size_t n = a.size();
  BigRat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0)
        continue;
      BigRat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k)
        a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Solves a x = b for nonsingular square a.
std::vector<BigRat> solve_rational(RatMatrix a, std::vector<BigRat> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      throw Error(ErrorCode::NotSimplicial, "singular cone matrix");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0)
        continue;
      BigRat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k)
        a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    b[i] /= a[i][i];
  return b;
}

// Columns b_j, j in cone.
RatMatrix cone_matrix(const Fan& fan, const std::vector<int>& cone) {
  const int D = fan.dim();
  RatMatrix a(D, std::vector<BigRat>(D));
  for (int r = 0; r < D; ++r)
    for (int c = 0; c < D; ++c)
      a[r][c] = fan.rays()[cone[c]][r];
  return a;
}

// Coefficients of v in the ray basis of a unimodular cone.
std::vector<long> coords_in_cone(const Fan& fan, const std::vector<int>& cone,
                                 const std::vector<long>& v) {
  std::vector<BigRat> rhs(v.begin(), v.end());
  auto sol = solve_rational(cone_matrix(fan, cone), rhs);
  std::vector<long> out(sol.size());
  for (std::size_t i = 0; i < sol.size(); ++i) {
    if (sol[i].get_den() != 1)
      throw Error(ErrorCode::NotSmooth, "cone is not unimodular");
    out[i] = sol[i].get_num().get_si();
  }
  return out;
}

std::string cone_string(const std::vector<int>& cone) {
  std::string s = "{";
  for (std::size_t i = 0; i < cone.size(); ++i)
    s += (i ? "," : "") + std::to_string(cone[i] + 1);
  return s + "}";
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

void check_structure(const Fan& fan) {
  const int D = fan.dim();
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    long g = 0;
    for (long c : fan.rays()[i])
      g = std::gcd(g, c);
    if (g != 1)
      throw Error(ErrorCode::NonPrimitiveRay,
                  "ray " + std::to_string(i + 1) + " is not primitive");
  }
  for (const auto& cone : fan.cones()) {
    if (cone.size() != std::size_t(D))
      throw Error(ErrorCode::NotSimplicial,
                  "cone " + cone_string(cone) + " does not have " + std::to_string(D) + " rays");
    BigRat det = determinant(cone_matrix(fan, cone));
    if (det == 0)
      throw Error(ErrorCode::NotSimplicial, "cone " + cone_string(cone) + " is degenerate");
    if (abs(det) != 1)
      throw Error(ErrorCode::NotSmooth,
                  "cone " + cone_string(cone) + " has determinant " + to_string(det));
  }
}

// Facet (cone minus one ray) -> cones containing it.
std::map<std::vector<int>, std::vector<int>> facet_incidence(const Fan& fan) {
  std::map<std::vector<int>, std::vector<int>> inc;
  for (std::size_t s = 0; s < fan.cones().size(); ++s) {
    const auto& cone = fan.cones()[s];
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> facet;
      for (std::size_t i = 0; i < cone.size(); ++i)
        if (i != drop)
          facet.push_back(cone[i]);
      inc[facet].push_back(int(s));
    }
  }
  return inc;
}

// The support must be convex: every ray lies on the inner side of each
// boundary facet.
void check_convex_support(const Fan& fan,
                          const std::map<std::vector<int>, std::vector<int>>& inc) {
  for (const auto& [facet, cones] : inc) {
    if (cones.size() != 1)
      continue;
    const auto& cone = fan.cones()[cones[0]];
    int apex = -1;
    for (int r : cone)
      if (!std::binary_search(facet.begin(), facet.end(), r))
        apex = r;
    auto pos = std::find(cone.begin(), cone.end(), apex) - cone.begin();
    for (std::size_t i = 0; i < fan.ray_count(); ++i) {
      // Sign of the apex coordinate of b_i in the cone basis.
      auto c = coords_in_cone(fan, cone, fan.rays()[i]);
      if (c[pos] < 0)
        throw Error(ErrorCode::NotProjective,
                    "support is not convex across boundary facet " + cone_string(facet));
    }
  }
}

std::vector<WallClass> walls_from_incidence(
    const Fan& fan, const std::map<std::vector<int>, std::vector<int>>& inc) {
  const std::size_t m = fan.ray_count();
  std::vector<WallClass> out;
  for (const auto& [facet, cones] : inc) {
    if (cones.size() > 2)
      throw Error(ErrorCode::BadWallIncidence,
                  "facet " + cone_string(facet) + " lies in more than two cones");
    if (cones.size() < 2)
      continue;
    const auto& sa = fan.cones()[cones[0]];
    const auto& sb = fan.cones()[cones[1]];
    int j = -1, jp = -1;
    for (int r : sa)
      if (!std::binary_search(facet.begin(), facet.end(), r))
        j = r;
    for (int r : sb)
      if (!std::binary_search(facet.begin(), facet.end(), r))
        jp = r;
    auto a = coords_in_cone(fan, sa, fan.rays()[jp]);
    WallClass w;
    w.degree.assign(m, 0);
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (sa[i] == j) {
        if (a[i] != -1)
          throw Error(ErrorCode::BadWallIncidence,
                      "cones " + cone_string(sa) + " and " + cone_string(sb) +
                          " do not lie on opposite sides of their common facet");
        continue;
      }
      w.degree[sa[i]] = -a[i];
    }
    w.degree[j] = 1;
    w.degree[jp] = 1;
    w.wall = facet;
    w.cone_a = cones[0];
    w.cone_b = cones[1];
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(),
            [](const WallClass& x, const WallClass& y) { return x.wall < y.wall; });
  return out;
}

std::vector<Degree> distinct_classes(const std::vector<WallClass>& walls) {
  std::set<Degree> s;
  for (const auto& w : walls)
    s.insert(w.degree);
  return {s.begin(), s.end()};
}

// Kernel basis l^(j) = e_j + sum_{i in base} c_ji e_i with sum l_i b_i = 0.
std::vector<LinearForm> kernel_basis(const Fan& fan, const std::vector<int>& base) {
  const std::size_t m = fan.ray_count();
  std::vector<LinearForm> out;
  for (std::size_t j = 0; j < m; ++j) {
    if (std::binary_search(base.begin(), base.end(), int(j)))
      continue;
    auto a = coords_in_cone(fan, base, fan.rays()[j]);
    LinearForm l(m, 0);
    l[j] = 1;
    for (std::size_t i = 0; i < base.size(); ++i)
      l[base[i]] = -a[i];
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::vector<BigRat>> cone_functionals(const Fan& fan,
                                                  const std::vector<BigRat>& omega) {
  std::vector<std::vector<BigRat>> out;
  const int D = fan.dim();
  for (const auto& cone : fan.cones()) {
    // m(b_i) = omega_i: rows b_i^T.
    RatMatrix a(D, std::vector<BigRat>(D));
    std::vector<BigRat> rhs(D);
    for (int r = 0; r < D; ++r) {
      for (int c = 0; c < D; ++c)
        a[r][c] = fan.rays()[cone[r]][c];
      rhs[r] = omega[cone[r]];
    }
    out.push_back(solve_rational(std::move(a), std::move(rhs)));
  }
  return out;
}

} // namespace

Fan Fan::make(int dim, std::vector<std::vector<long>> rays,
              std::vector<std::vector<int>> cones, std::vector<std::string> labels) {
  if (dim < 1)
    throw Error(ErrorCode::MalformedFan, "dimension must be positive");
  if (rays.empty())
    throw Error(ErrorCode::MalformedFan, "fan has no rays");
  if (rays.size() + 1 > kMaxVars)
    throw Error(ErrorCode::MalformedFan,
                "at most " + std::to_string(kMaxVars - 1) + " rays are supported");
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i].size() != std::size_t(dim))
      throw Error(ErrorCode::MalformedFan,
                  "ray " + std::to_string(i + 1) + " has wrong length");
  if (cones.empty())
    throw Error(ErrorCode::MalformedFan, "fan has no cones");
  std::vector<bool> used(rays.size(), false);
  for (auto& cone : cones) {
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw Error(ErrorCode::MalformedFan, "cone repeats a ray");
    for (int r : cone) {
      if (r < 0 || std::size_t(r) >= rays.size())
        throw Error(ErrorCode::MalformedFan, "cone index out of range");
      used[r] = true;
    }
  }
  std::sort(cones.begin(), cones.end());
  if (std::adjacent_find(cones.begin(), cones.end()) != cones.end())
    throw Error(ErrorCode::MalformedFan, "duplicate cone");
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      throw Error(ErrorCode::MalformedFan,
                  "ray " + std::to_string(i + 1) + " is not in any cone");
  if (labels.empty())
    for (std::size_t i = 0; i < rays.size(); ++i)
      labels.push_back("D" + std::to_string(i + 1));
  if (labels.size() != rays.size())
    throw Error(ErrorCode::MalformedFan, "label count does not match ray count");
  Fan f;
  f.dim_ = dim;
  f.rays_ = std::move(rays);
  f.cones_ = std::move(cones);
  f.labels_ = std::move(labels);
  return f;
}

std::vector<WallClass> wall_curve_classes(const Fan& fan) {
  check_structure(fan);
  return walls_from_incidence(fan, facet_incidence(fan));
}

std::vector<Degree> effective_generators(const std::vector<WallClass>& walls,
                                         const std::vector<BigRat>& omega) {
  std::vector<Degree> gens = distinct_classes(walls);
  // Drop a class if it is a Z>=0-combination of the remaining ones; checking
  // against the others in order of increasing omega keeps the result stable.
  std::sort(gens.begin(), gens.end(), [&](const Degree& a, const Degree& b) {
    BigRat ga = grade(omega, a), gb = grade(omega, b);
    return ga != gb ? ga < gb : a < b;
  });
  std::vector<Degree> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Degree> others = kept;
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      others.push_back(gens[j]);
    BigRat g = grade(omega, gens[i]);
    bool redundant = false;
    if (!others.empty()) {
      for (const auto& d : effective_degrees(others, omega, g))
        if (d == gens[i]) {
          redundant = true;
          break;
        }
    }
    if (!redundant)
      kept.push_back(gens[i]);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

ProjectivityCertificate validate_fan(const Fan& fan) {
  check_structure(fan);
  auto inc = facet_incidence(fan);
  ProjectivityCertificate cert;
  cert.walls = walls_from_incidence(fan, inc);
  check_convex_support(fan, inc);

  const std::size_t m = fan.ray_count();
  auto classes = distinct_classes(cert.walls);
  auto basis = kernel_basis(fan, fan.cones()[0]);
  // omega = sum_j t_j l^(j); constraints omega.g >= 1, objective sum omega.g.
  RatMatrix A;
  std::vector<BigRat> rhs, cost(basis.size(), BigRat(0));
  for (const auto& g : classes) {
    std::vector<BigRat> row;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      row.emplace_back(dot(basis[j], g));
      cost[j] += row.back();
    }
    A.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  std::vector<BigRat> t(basis.size(), BigRat(0));
  if (!classes.empty()) {
    LpResult lp = minimize_free(A, rhs, cost);
    if (lp.status != LpStatus::optimal)
      throw Error(ErrorCode::NotProjective, "no strictly convex support function exists");
    t = lp.x;
  }
  cert.omega.assign(m, BigRat(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < m; ++i)
      if (basis[j][i] != 0)
        cert.omega[i] += t[j] * basis[j][i];
  cert.cone_functionals = cone_functionals(fan, cert.omega);
  cert.generators = effective_generators(cert.walls, cert.omega);
  if (!verify_certificate(fan, cert))
    throw Error(ErrorCode::NotProjective, "support function certificate failed verification");
  return cert;
}

bool verify_certificate(const Fan& fan, const ProjectivityCertificate& cert) {
  const std::size_t m = fan.ray_count();
  if (cert.omega.size() != m || cert.cone_functionals.size() != fan.cones().size())
    return false;
  auto eval = [&](std::size_t s, std::size_t ray) {
    BigRat v = 0;
    for (int a = 0; a < fan.dim(); ++a)
      v += cert.cone_functionals[s][a] * fan.rays()[ray][a];
    return v;
  };
  for (std::size_t s = 0; s < fan.cones().size(); ++s)
    for (int r : fan.cones()[s])
      if (eval(s, r) != cert.omega[r])
        return false;
  for (const auto& w : cert.walls) {
    BigRat g = grade(cert.omega, w.degree);
    if (g < 1)
      return false;
    // The jump of the support function across the wall equals omega.d.
    int jp = -1;
    for (int r : fan.cones()[w.cone_b])
      if (!std::binary_search(w.wall.begin(), w.wall.end(), r))
        jp = r;
    if (cert.omega[jp] - eval(w.cone_a, jp) != g)
      return false;
    for (int a = 0; a < fan.dim(); ++a) {
      long s = 0;
      for (std::size_t i = 0; i < m; ++i)
        s += w.degree[i] * fan.rays()[i][a];
      if (s != 0)
        return false;
    }
  }
  return true;
}

MPoly linear_form_poly(const LinearForm& form, std::size_t nvars) {
  std::vector<BigRat> c(nvars, BigRat(0));
  for (std::size_t k = 0; k < form.size(); ++k)
    c[k] = form[k];
  return MPoly::linear(nvars, c);
}

long pairing(const LinearForm& form, const Cocharacter& k) {
  if (form.size() != k.size())
    throw Error(ErrorCode::ArityMismatch, "cocharacter length does not match ray count");
  return dot(form, k);
}

namespace {

RationalFunction euler_of(const std::vector<int>& cone, const std::vector<LinearForm>& rows,
                          std::size_t nvars) {
  MPoly e = MPoly::constant(nvars, 1);
  for (int j : cone)
    e *= linear_form_poly(rows[j], nvars);
  return RationalFunction(std::move(e));
}

} // namespace

std::vector<FixedPoint> fixed_points(const Fan& fan) {
  const std::size_t m = fan.ray_count();
  std::vector<FixedPoint> out;
  for (const auto& cone : fan.cones()) {
    FixedPoint x;
    x.cone = cone;
    x.restriction.assign(m, LinearForm(m, 0));
    // v_sigma = B_sigma^{-1} sum_{i notin sigma} b_i lambda_i, u_j = v_j + lambda_j.
    for (std::size_t i = 0; i < m; ++i) {
      if (std::binary_search(cone.begin(), cone.end(), int(i)))
        continue;
      auto c = coords_in_cone(fan, cone, fan.rays()[i]);
      for (std::size_t a = 0; a < cone.size(); ++a)
        x.restriction[cone[a]][i] = c[a];
    }
    for (int j : cone)
      x.restriction[j][j] += 1;
    x.euler = euler_of(cone, x.restriction, m + 1);
    out.push_back(std::move(x));
  }
  return out;
}

Degree section_degree(const std::vector<FixedPoint>& points, std::size_t x,
                      const Cocharacter& k) {
  auto pairings = [&](const FixedPoint& p) {
    Degree v(p.restriction.size());
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = pairing(p.restriction[j], k);
    return v;
  };
  std::optional<Degree> minimal;
  for (const auto& p : points) {
    Degree v = pairings(p);
    bool candidate = std::all_of(p.cone.begin(), p.cone.end(), [&](int j) { return v[j] >= 0; });
    if (!candidate)
      continue;
    if (minimal && *minimal != v)
      throw Error(ErrorCode::NoIsolatedMinimum,
                  "minimal fixed locus of the cocharacter is not isolated");
    minimal = v;
  }
  if (!minimal)
    throw Error(ErrorCode::NoIsolatedMinimum, "cocharacter has no minimal fixed point");
  return *minimal - pairings(points.at(x));
}

std::vector<Degree> effective_degrees(const std::vector<Degree>& generators,
                                      const std::vector<BigRat>& omega,
                                      const BigRat& cutoff) {
  if (omega.empty())
    return {Degree{}};
  for (const auto& g : generators)
    if (grade(omega, g) <= 0)
      throw Error(ErrorCode::GradingMismatch,
                  "grading is not positive on generator " + degree_to_string(g));
  std::set<Degree> seen;
  std::vector<Degree> frontier{Degree(omega.size(), 0)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Degree> next;
    for (const auto& d : frontier)
      for (const auto& g : generators) {
        Degree e = d + g;
        if (grade(omega, e) <= cutoff && seen.insert(e).second)
          next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
  std::vector<std::pair<BigRat, Degree>> keyed;
  for (const auto& d : seen)
    keyed.emplace_back(grade(omega, d), d);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Degree> out;
  for (auto& [g, d] : keyed)
    out.push_back(std::move(d));
  return out;
}

// ---------------------------------------------------------------- slice

EquivariantSlice make_slice(const Fan& fan) {
  const std::size_t m = fan.ray_count();
  EquivariantSlice s;
  s.base_cone = fan.cones()[0];
  s.kernel_basis = kernel_basis(fan, s.base_cone);
  s.lift.assign(m, LinearForm(m, 0));
  // iota_i = e_i - sum_j c_ji e_j where l^(j) = e_j + sum_i c_ji e_i.
  for (int i : s.base_cone) {
    s.lift[i][i] = 1;
    for (const auto& l : s.kernel_basis) {
      std::size_t j = 0;
      while (l[j] != 1 || std::binary_search(s.base_cone.begin(), s.base_cone.end(), int(j)))
        ++j;
      s.lift[i][j] -= l[i];
    }
  }
  return s;
}

LinearForm EquivariantSlice::slice_row(const LinearForm& row) const {
  LinearForm out(row.size(), 0);
  for (int i : base_cone)
    out[i] = row[i];
  return out;
}

Cocharacter EquivariantSlice::slice_cocharacter(const Cocharacter& k) const {
  // k' = k - sum_{j outside base} k_j l^(j); supported on the base cone.
  Cocharacter out = k;
  for (const auto& l : kernel_basis) {
    std::size_t j = 0;
    while (l[j] != 1 || std::binary_search(base_cone.begin(), base_cone.end(), int(j)))
      ++j;
    long kj = k[j];
    if (kj == 0)
      continue;
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] -= kj * l[i];
  }
  return out;
}

MPoly EquivariantSlice::unslice(const MPoly& p) const {
  const std::size_t n = p.nvars();
  std::vector<MPoly> images;
  for (std::size_t v = 0; v < n; ++v)
    images.push_back(MPoly::variable(n, v));
  for (int i : base_cone)
    images[i] = linear_form_poly(lift[i], n);
  return p.substitute(images);
}

RationalFunction EquivariantSlice::unslice(const RationalFunction& f) const {
  const std::size_t n = f.nvars();
  std::vector<MPoly> images;
  for (std::size_t v = 0; v < n; ++v)
    images.push_back(MPoly::variable(n, v));
  for (int i : base_cone)
    images[i] = linear_form_poly(lift[i], n);
  return f.substitute(images, true);
}

Cocharacter ToricModel::chart_cocharacter(const Cocharacter& k) const {
  if (k.size() != m())
    throw Error(ErrorCode::ArityMismatch, "cocharacter length does not match ray count");
  return chart == Chart::full ? k : slice.slice_cocharacter(k);
}

RationalFunction ToricModel::to_full(const RationalFunction& f) const {
  return chart == Chart::full ? f : slice.unslice(f);
}

ToricModel build_model(const Fan& fan, Chart chart,
                       const std::optional<std::vector<BigRat>>& omega) {
  ToricModel model;
  model.fan = fan;
  model.certificate = validate_fan(fan);
  model.omega = model.certificate.omega;
  if (omega) {
    if (omega->size() != fan.ray_count())
      throw Error(ErrorCode::GradingMismatch, "omega length does not match ray count");
    for (const auto& w : model.certificate.walls)
      if (grade(*omega, w.degree) <= 0)
        throw Error(ErrorCode::GradingMismatch,
                    "omega does not pair positively with wall class " +
                        degree_to_string(w.degree));
    model.omega = *omega;
  }
  model.points = fixed_points(fan);
  model.chart = chart;
  model.slice = make_slice(fan);
  if (chart == Chart::sliced) {
    for (auto& x : model.points) {
      for (auto& row : x.restriction)
        row = model.slice.slice_row(row);
      x.euler = euler_of(x.cone, x.restriction, model.nvars());
    }
  }
  return model;
}

namespace fans {

Fan projective_space(int n) {
  std::vector<std::vector<long>> rays;
  for (int i = 0; i < n; ++i) {
    std::vector<long> r(n, 0);
    r[i] = 1;
    rays.push_back(r);
  }
  rays.push_back(std::vector<long>(n, -1));
  std::vector<std::vector<int>> cones;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> c;
    for (int i = 0; i <= n; ++i)
      if (i != skip)
        c.push_back(i);
    cones.push_back(c);
  }
  return Fan::make(n, rays, cones);
}

Fan p1xp1() {
  return Fan::make(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                   {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Fan hirzebruch(int a) {
  return Fan::make(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Fan local_p2() {
  return Fan::make(3, {{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}, {0, 0, 1}},
                   {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

} // namespace fans

} // namespace qtoric
