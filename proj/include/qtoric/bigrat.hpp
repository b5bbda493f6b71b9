#ifndef QTORIC_BIGRAT_HPP
#define QTORIC_BIGRAT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qtoric {

using BigInt = mpz_class;
// Always kept canonical (gcd(num, den) = 1, den > 0); every mpq_class
// operation in this code base ends in canonical form.
using BigRat = mpq_class;

// "p/q", or "p" when q = 1.
inline std::string to_string(const BigRat& q) { return q.get_str(); }

inline bool is_zero(const BigRat& q) { return q == 0; }

// Accepts "p", "p/q", and "-p/q"; throws Error(ParseError) otherwise.
BigRat parse_rational(std::string_view text);

} // namespace qtoric

#endif
