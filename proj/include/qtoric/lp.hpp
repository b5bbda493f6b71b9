#ifndef QTORIC_LP_HPP
#define QTORIC_LP_HPP

#include <vector>

#include "qtoric/bigrat.hpp"

namespace qtoric {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<BigRat> x;
  BigRat objective = 0;
};

// Exact two-phase simplex (Bland's rule) for
//   minimize c.x  subject to  A x >= b,  x free.
LpResult minimize_free(const std::vector<std::vector<BigRat>>& A,
                       const std::vector<BigRat>& b,
                       const std::vector<BigRat>& c);

} // namespace qtoric

#endif
