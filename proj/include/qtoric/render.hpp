#ifndef QTORIC_RENDER_HPP
#define QTORIC_RENDER_HPP

#include <string>

#include <json.hpp>

#include "qtoric/mirror.hpp"

namespace qtoric {

using Json = nlohmann::json;

// Keys come out sorted (nlohmann's default std::map) and rationals are
// strings "p/q", so dump() is byte-stable.
std::string dump_report(const Json& report);

Json rational_json(const BigRat& q);
Json rationals_json(const std::vector<BigRat>& v);
Json degree_json(const Degree& d);

// Rational function in l1..lm, z after mapping back to the full chart.
std::string function_string(const ToricModel& model, const RationalFunction& f);

// Fixed-point key: 1-based cone indices, e.g. "1,3".
std::string point_key(const FixedPoint& p);

Json localized_json(const ToricModel& model, const LocalizedClass& v);
// Nonzero basis coordinates keyed by monomial name ("1", "u1*u2").
Json class_json(const Cohomology& coh, const GlobalClass& c);
Json matrix_json(const ToricModel& model, const Matrix& a);

// [{degree, grade, value}], ordered by (grade, lex). Zero terms are absent.
Json localized_series_json(const ToricModel& model, const LocalizedSeries& s);
Json class_series_json(const Cohomology& coh, const ClassSeries& s);
Json matrix_series_json(const ToricModel& model, const MatrixSeries& s);

} // namespace qtoric

#endif
