#ifndef QTORIC_NOVIKOV_HPP
#define QTORIC_NOVIKOV_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/bigrat.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/parallel.hpp"

namespace qtoric {

// Curve class recorded by its pairing vector (u_1.d, ..., u_m.d).
using Degree = std::vector<long>;

inline Degree operator+(const Degree& a, const Degree& b) {
  Degree r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

inline Degree operator-(const Degree& a, const Degree& b) {
  Degree r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

inline bool is_zero_degree(const Degree& d) {
  return std::all_of(d.begin(), d.end(), [](long x) { return x == 0; });
}

inline BigRat grade(const std::vector<BigRat>& omega, const Degree& d) {
  if (omega.size() != d.size())
    throw Error(ErrorCode::GradingMismatch, "degree length does not match grading");
  BigRat g = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0)
      g += omega[i] * d[i];
  return g;
}

std::string degree_to_string(const Degree& d);

// Truncated series sum_d c_d (Qy)^d over degrees with omega.d <= cutoff.
// Zero coefficients are never stored; an absent degree means zero.
template <class C>
class NovikovSeries {
public:
  NovikovSeries() = default;
  NovikovSeries(std::vector<BigRat> omega, BigRat cutoff)
      : omega_(std::move(omega)), cutoff_(std::move(cutoff)) {}

  const std::vector<BigRat>& omega() const { return omega_; }
  const BigRat& cutoff() const { return cutoff_; }
  BigRat grade_of(const Degree& d) const { return grade(omega_, d); }
  bool within(const Degree& d) const { return grade_of(d) <= cutoff_; }

  // Drops degrees beyond the cutoff; a zero coefficient erases the entry.
  void set(const Degree& d, C c) {
    BigRat g = grade_of(d);
    if (!is_zero_degree(d) && g <= 0)
      throw Error(ErrorCode::GradingMismatch,
                  "grading is not positive on degree " + degree_to_string(d));
    if (g > cutoff_)
      return;
    if (is_zero(c)) {
      terms_.erase(d);
      return;
    }
    terms_.insert_or_assign(d, std::move(c));
  }

  const C* find(const Degree& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? nullptr : &it->second;
  }

  const std::map<Degree, C>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Degrees sorted by (omega.d, lexicographic).
  std::vector<Degree> ordered_degrees() const {
    std::vector<std::pair<BigRat, Degree>> keyed;
    keyed.reserve(terms_.size());
    for (const auto& [d, c] : terms_)
      keyed.emplace_back(grade_of(d), d);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Degree> out;
    out.reserve(keyed.size());
    for (auto& k : keyed)
      out.push_back(std::move(k.second));
    return out;
  }

  NovikovSeries truncated(const BigRat& cutoff) const {
    NovikovSeries r(omega_, std::min(cutoff, cutoff_));
    for (const auto& [d, c] : terms_)
      if (grade_of(d) <= r.cutoff_)
        r.terms_.emplace(d, c);
    return r;
  }

  template <class F>
  auto transform(F&& f) const {
    using R = decltype(f(std::declval<const Degree&>(), std::declval<const C&>()));
    NovikovSeries<R> r(omega_, cutoff_);
    for (const auto& [d, c] : terms_)
      r.set(d, f(d, c));
    return r;
  }

  friend bool operator==(const NovikovSeries& a, const NovikovSeries& b) {
    return a.omega_ == b.omega_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }

private:
  std::vector<BigRat> omega_;
  BigRat cutoff_ = 0;
  std::map<Degree, C> terms_;
};

template <class C>
void check_compatible(const NovikovSeries<C>& a, const NovikovSeries<C>& b) {
  if (a.omega() != b.omega())
    throw Error(ErrorCode::GradingMismatch, "series have different gradings");
}

template <class C>
NovikovSeries<C> operator+(const NovikovSeries<C>& a, const NovikovSeries<C>& b) {
  check_compatible(a, b);
  NovikovSeries<C> r(a.omega(), std::min(a.cutoff(), b.cutoff()));
  for (const auto& [d, c] : a.terms())
    r.set(d, c);
  for (const auto& [d, c] : b.terms()) {
    if (const C* x = r.find(d))
      r.set(d, *x + c);
    else
      r.set(d, c);
  }
  return r;
}

template <class C>
NovikovSeries<C> operator-(const NovikovSeries<C>& a, const NovikovSeries<C>& b) {
  check_compatible(a, b);
  NovikovSeries<C> r(a.omega(), std::min(a.cutoff(), b.cutoff()));
  for (const auto& [d, c] : a.terms())
    r.set(d, c);
  for (const auto& [d, c] : b.terms()) {
    if (const C* x = r.find(d))
      r.set(d, *x - c);
    else
      r.set(d, -c);
  }
  return r;
}

// Truncated Cauchy product. Output degrees are independent, so the parallel
// path distributes them over threads; the serial path is the reference.
template <class A, class B>
auto multiply(const NovikovSeries<A>& a, const NovikovSeries<B>& b,
              Execution exec = Execution::parallel) {
  using R = decltype(std::declval<const A&>() * std::declval<const B&>());
  if (a.omega() != b.omega())
    throw Error(ErrorCode::GradingMismatch, "series have different gradings");
  NovikovSeries<R> r(a.omega(), std::min(a.cutoff(), b.cutoff()));
  std::map<Degree, std::vector<std::pair<const A*, const B*>>> targets;
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) {
      Degree d = da + db;
      if (r.within(d))
        targets[d].emplace_back(&ca, &cb);
    }
  std::vector<const Degree*> keys;
  std::vector<const std::vector<std::pair<const A*, const B*>>*> work;
  for (const auto& [d, pairs] : targets) {
    keys.push_back(&d);
    work.push_back(&pairs);
  }
  std::vector<R> sums(keys.size());
  for_each_index(keys.size(), exec, [&](std::size_t i) {
    const auto& pairs = *work[i];
    R acc = *pairs[0].first * *pairs[0].second;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      acc = acc + *pairs[k].first * *pairs[k].second;
    sums[i] = std::move(acc);
  });
  for (std::size_t i = 0; i < keys.size(); ++i)
    r.set(*keys[i], std::move(sums[i]));
  return r;
}

inline std::string degree_to_string(const Degree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

} // namespace qtoric

#endif
