#ifndef QTORIC_TORIC_HPP
#define QTORIC_TORIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "qtoric/bigrat.hpp"
#include "qtoric/novikov.hpp"
#include "qtoric/rational_function.hpp"

namespace qtoric {

// Integer linear form sum_k coeffs[k] * lambda_k.
using LinearForm = std::vector<long>;
// Cocharacter k in Z^m.
using Cocharacter = std::vector<long>;

// Smooth fan: primitive rays b_1..b_m in Z^D and maximal cones given as
// 0-based index sets. Fan::make sorts each cone and the list of cones, so
// cone (and hence fixed point) indices are canonical.
class Fan {
public:
  static Fan make(int dim, std::vector<std::vector<long>> rays,
                  std::vector<std::vector<int>> cones,
                  std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<std::vector<long>>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& cones() const { return cones_; }
  const std::vector<std::string>& labels() const { return labels_; }

private:
  int dim_ = 0;
  std::vector<std::vector<long>> rays_;
  std::vector<std::vector<int>> cones_;
  std::vector<std::string> labels_;
};

struct WallClass {
  Degree degree;            // pairing vector
  std::vector<int> wall;    // the D-1 shared rays
  int cone_a = 0, cone_b = 0;  // flanking maximal cones
};

// Support function data certifying projectivity over the affinization.
// cone_functionals[s] takes the value omega_i on each ray i of cone s, and
// across every interior wall the function jumps by omega.d >= 1.
struct ProjectivityCertificate {
  std::vector<std::vector<BigRat>> cone_functionals;
  std::vector<BigRat> omega;  // lies in L (x) Q
  std::vector<WallClass> walls;
  std::vector<Degree> generators;  // distinct, non-redundant wall classes
};

// Throws Error with NotSimplicial / NotSmooth / NonPrimitiveRay /
// BadWallIncidence / NotProjective / MalformedFan.
ProjectivityCertificate validate_fan(const Fan& fan);

// Re-checks a certificate against the fan; true when consistent.
bool verify_certificate(const Fan& fan, const ProjectivityCertificate& cert);

// Interior walls with their relation classes.
std::vector<WallClass> wall_curve_classes(const Fan& fan);

// Removes duplicates and classes lying in the Z>=0-span of the others.
std::vector<Degree> effective_generators(const std::vector<WallClass>& walls,
                                         const std::vector<BigRat>& omega);

struct FixedPoint {
  std::vector<int> cone;
  std::vector<LinearForm> restriction;  // row j: u_j(x)
  RationalFunction euler;               // prod_{j in cone} u_j(x)
};

// One fixed point per maximal cone, in the canonical cone order.
std::vector<FixedPoint> fixed_points(const Fan& fan);

// u_j(x) as a polynomial in lambda_1..lambda_m, z (arity m+1).
MPoly linear_form_poly(const LinearForm& form, std::size_t nvars);

// Pairing u_j(x).k of a restriction row with a cocharacter.
long pairing(const LinearForm& form, const Cocharacter& k);

// Degree d_k(x) of the section attached to x relative to the minimal one;
// for k = e_i its pairing vector is (delta_ij - u_j(x).e_i)_j.
Degree section_degree(const std::vector<FixedPoint>& points, std::size_t x,
                      const Cocharacter& k);

// Lattice points of the Z>=0-span of the generators with omega.d <= cutoff,
// ordered by (omega.d, lex). Always contains 0.
std::vector<Degree> effective_degrees(const std::vector<Degree>& generators,
                                      const std::vector<BigRat>& omega,
                                      const BigRat& cutoff);

// Gauge slice lambda_j = 0 for j outside a base cone. Every quantity the
// mirror pipeline manipulates is invariant under lambda -> lambda + L (x) Q,
// so it is determined by its values on the slice; `lift` maps each slice
// coordinate back to the invariant linear form it represents.
struct EquivariantSlice {
  std::vector<int> base_cone;
  std::vector<LinearForm> kernel_basis;  // l^(j) for j outside base_cone
  std::vector<LinearForm> lift;          // iota_i, i in base_cone (others zero)

  LinearForm slice_row(const LinearForm& row) const;
  Cocharacter slice_cocharacter(const Cocharacter& k) const;
  MPoly unslice(const MPoly& p) const;
  RationalFunction unslice(const RationalFunction& f) const;
};

EquivariantSlice make_slice(const Fan& fan);

enum class Chart { full, sliced };

// Everything downstream modules need about a validated fan, with the
// restriction data expressed in the chosen chart.
struct ToricModel {
  Fan fan;
  ProjectivityCertificate certificate;
  std::vector<BigRat> omega;  // grading used for series (certificate or override)
  std::vector<FixedPoint> points;
  Chart chart = Chart::full;
  EquivariantSlice slice;

  std::size_t m() const { return fan.ray_count(); }
  std::size_t nvars() const { return fan.ray_count() + 1; }
  // Shift vector expressed in the active chart.
  Cocharacter chart_cocharacter(const Cocharacter& k) const;
  RationalFunction to_full(const RationalFunction& f) const;
  MPoly u_poly(std::size_t x, std::size_t j) const {
    return linear_form_poly(points[x].restriction[j], nvars());
  }
};

// Validates, computes fixed points and applies the chart. An omega override
// must pair positively with every wall class.
ToricModel build_model(const Fan& fan, Chart chart,
                       const std::optional<std::vector<BigRat>>& omega = std::nullopt);

// Standard fixtures used by tests, benches and docs.
namespace fans {
Fan projective_space(int n);  // P^n
Fan p1xp1();
Fan hirzebruch(int a);
Fan local_p2();
} // namespace fans

} // namespace qtoric

#endif
