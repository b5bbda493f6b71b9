#include "qtoric/matrix.hpp"

namespace qtoric {

Matrix Matrix::identity(std::size_t n, std::size_t nvars) {
  Matrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = RationalFunction(nvars, 1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero())
      return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& e = (*this)(r, c);
      if (r == c ? !e.is_one() : !e.is_zero())
        return false;
    }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_)
    throw Error(ErrorCode::ArityMismatch, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += b.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_)
    throw Error(ErrorCode::ArityMismatch, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= b.data_[i];
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.data_)
    e = -e;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::ArityMismatch, "matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_, a.nvars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& bkj = b(k, j);
        if (!bkj.is_zero())
          r(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix multiply(const Matrix& a, const Matrix& b, Execution exec) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::ArityMismatch, "matrix product shape mismatch");
  return sum_of_products({{&a, &b}}, a.rows(), b.cols(), a.nvars(), exec);
}

Matrix sum_of_products(const MatrixPairs& terms, std::size_t rows, std::size_t cols,
                       std::size_t nvars, Execution exec) {
  for (const auto& [a, b] : terms)
    if (a->rows() != rows || b->cols() != cols || a->cols() != b->rows())
      throw Error(ErrorCode::ArityMismatch, "matrix product shape mismatch");
  Matrix r(rows, cols, nvars);
  for_each_index(rows * cols, exec, [&](std::size_t e) {
    const std::size_t i = e / cols, j = e % cols;
    RationalFunction acc(nvars);
    for (const auto& [a, b] : terms)
      for (std::size_t k = 0; k < a->cols(); ++k) {
        const auto& aik = (*a)(i, k);
        if (aik.is_zero())
          continue;
        const auto& bkj = (*b)(k, j);
        if (!bkj.is_zero())
          acc += aik * bkj;
      }
    r(i, j) = std::move(acc);
  });
  return r;
}

std::vector<RationalFunction> Matrix::column(std::size_t c) const {
  std::vector<RationalFunction> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const std::vector<RationalFunction>& v) {
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = v[r];
}

std::vector<RationalFunction> Matrix::apply(const std::vector<RationalFunction>& v) const {
  if (v.size() != cols_)
    throw Error(ErrorCode::ArityMismatch, "matrix-vector shape mismatch");
  std::vector<RationalFunction> out(rows_, RationalFunction(nvars_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!(*this)(i, k).is_zero() && !v[k].is_zero())
        out[i] += (*this)(i, k) * v[k];
  return out;
}

namespace {

std::size_t pick_pivot(const Matrix& a, std::size_t col, std::size_t from) {
  std::size_t best = a.rows();
  std::size_t best_size = 0;
  for (std::size_t r = from; r < a.rows(); ++r) {
    const auto& e = a(r, col);
    if (e.is_zero())
      continue;
    std::size_t s = e.num().size() + e.den().size();
    if (best == a.rows() || s < best_size) {
      best = r;
      best_size = s;
    }
  }
  return best;
}

void swap_rows(Matrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2)
    return;
  for (std::size_t c = 0; c < a.cols(); ++c)
    std::swap(a(r1, c), a(r2, c));
}

} // namespace

Matrix inverse(const Matrix& input) {
  std::size_t n = input.rows();
  if (n != input.cols())
    throw Error(ErrorCode::ArityMismatch, "inverse of a non-square matrix");
  Matrix a = input;
  Matrix inv = Matrix::identity(n, input.nvars());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = pick_pivot(a, col, col);
    if (p == n)
      throw Error(ErrorCode::SingularFrame, "matrix is singular");
    swap_rows(a, p, col);
    swap_rows(inv, p, col);
    RationalFunction pinv = a(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      if (!a(col, c).is_zero())
        a(col, c) = a(col, c) * pinv;
      if (!inv(col, c).is_zero())
        inv(col, c) = inv(col, c) * pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero())
        continue;
      RationalFunction f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(col, c).is_zero())
          a(r, c) -= f * a(col, c);
        if (!inv(col, c).is_zero())
          inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::vector<RationalFunction> solve(const Matrix& a, const std::vector<RationalFunction>& b) {
  return inverse(a).apply(b);
}

} // namespace qtoric
