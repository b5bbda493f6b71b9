#include "qtoric/render.hpp"

namespace qtoric {

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

Json rational_json(const BigRat& q) { return to_string(q); }

Json rationals_json(const std::vector<BigRat>& v) {
  Json a = Json::array();
  for (const auto& q : v)
    a.push_back(rational_json(q));
  return a;
}

Json degree_json(const Degree& d) {
  Json a = Json::array();
  for (long x : d)
    a.push_back(x);
  return a;
}

std::string function_string(const ToricModel& model, const RationalFunction& f) {
  static thread_local std::vector<std::string> names;
  if (names.size() != model.nvars())
    names = default_variable_names(model.m());
  return model.to_full(f).to_string(names);
}

std::string point_key(const FixedPoint& p) {
  std::string s;
  for (int i : p.cone) {
    if (!s.empty())
      s += ',';
    s += std::to_string(i + 1);
  }
  return s;
}

Json localized_json(const ToricModel& model, const LocalizedClass& v) {
  Json o = Json::object();
  for (std::size_t x = 0; x < v.size(); ++x)
    o[point_key(model.points[x])] = function_string(model, v[x]);
  return o;
}

Json class_json(const Cohomology& coh, const GlobalClass& c) {
  Json o = Json::object();
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    if (!c.coeffs[i].is_zero())
      o[monomial_name(coh.basis()[i])] = function_string(coh.model(), c.coeffs[i]);
  return o;
}

Json matrix_json(const ToricModel& model, const Matrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c)
      row.push_back(function_string(model, a(r, c)));
    rows.push_back(row);
  }
  return rows;
}

namespace {

template <class C, class F>
Json series_json(const NovikovSeries<C>& s, F&& value) {
  Json a = Json::array();
  for (const auto& d : s.ordered_degrees()) {
    Json t;
    t["degree"] = degree_json(d);
    t["grade"] = rational_json(s.grade_of(d));
    t["value"] = value(*s.find(d));
    a.push_back(std::move(t));
  }
  return a;
}

} // namespace

Json localized_series_json(const ToricModel& model, const LocalizedSeries& s) {
  return series_json(s, [&](const LocalizedClass& v) { return localized_json(model, v); });
}

Json class_series_json(const Cohomology& coh, const ClassSeries& s) {
  return series_json(s, [&](const GlobalClass& c) { return class_json(coh, c); });
}

Json matrix_series_json(const ToricModel& model, const MatrixSeries& s) {
  return series_json(s, [&](const Matrix& a) { return matrix_json(model, a); });
}

} // namespace qtoric
