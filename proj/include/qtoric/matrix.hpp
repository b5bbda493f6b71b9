#ifndef QTORIC_MATRIX_HPP
#define QTORIC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "qtoric/errors.hpp"
#include "qtoric/parallel.hpp"
#include "qtoric/rational_function.hpp"

namespace qtoric {

// Dense row-major matrix of rational functions.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars),
        data_(rows * cols, RationalFunction(nvars)) {}

  static Matrix identity(std::size_t n, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  RationalFunction& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RationalFunction& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<RationalFunction>& data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix& operator+=(const Matrix& b);
  Matrix& operator-=(const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<RationalFunction> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<RationalFunction>& v);
  std::vector<RationalFunction> apply(const std::vector<RationalFunction>& v) const;

private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<RationalFunction> data_;
};

// Exact Gauss-Jordan inverse; throws SingularFrame when not invertible.
Matrix inverse(const Matrix& a);

// Solves a x = b for square invertible a.
std::vector<RationalFunction> solve(const Matrix& a, const std::vector<RationalFunction>& b);

// Product with entries distributed over threads; operator* is the serial
// reference.
Matrix multiply(const Matrix& a, const Matrix& b, Execution exec);

// sum_t a_t * b_t, one task per output entry.
using MatrixPairs = std::vector<std::pair<const Matrix*, const Matrix*>>;
Matrix sum_of_products(const MatrixPairs& terms, std::size_t rows, std::size_t cols,
                       std::size_t nvars, Execution exec);

// Applies f to every entry, in parallel.
template <class F>
Matrix map_entries(const Matrix& a, Execution exec, F&& f) {
  Matrix r(a.rows(), a.cols(), a.nvars());
  for_each_index(a.rows() * a.cols(), exec, [&](std::size_t k) {
    r(k / a.cols(), k % a.cols()) = f(k / a.cols(), k % a.cols(), a(k / a.cols(), k % a.cols()));
  });
  return r;
}

inline bool is_zero(const Matrix& m) { return m.is_zero(); }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

} // namespace qtoric

#endif
