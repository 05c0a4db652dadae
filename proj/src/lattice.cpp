#include "atlas/lattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace atlas {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty())
    return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw std::invalid_argument("IntMatrix::from_columns: bad column size");
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, j) += a * other(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] -= other.data_[i];
  return out;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalVector IntMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  RationalVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0)
        out[i] += Rational((*this)(i, j)) * v[j];
  return out;
}

IntVector IntMatrix::apply_left(const IntVector& v) const {
  if (v.size() != rows_)
    throw std::invalid_argument("IntMatrix::apply_left: dimension mismatch");
  IntVector out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[j] += v[i] * (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0))
        return false;
  return true;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& functional, const RationalVector& v) {
  if (functional.size() != v.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (functional[i] != 0)
      s += Rational(functional[i]) * v[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("add: dimension mismatch");
  IntVector c(a);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] += b[i];
  return c;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("subtract: dimension mismatch");
  IntVector c(a);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] -= b[i];
  return c;
}

IntVector scale(const IntVector& a, Int k) {
  IntVector c(a);
  for (auto& x : c)
    x *= k;
  return c;
}

RationalVector to_rational(const IntVector& v) {
  return RationalVector(v.begin(), v.end());
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n)
    throw std::domain_error("unimodular_inverse: matrix is not square");
  // Gauss-Jordan over Q, then check integrality.
  std::vector<RationalVector> aug(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw std::domain_error("unimodular_inverse: singular matrix");
    std::swap(aug[piv], aug[col]);
    Rational p = aug[col][col];
    for (auto& x : aug[col])
      x /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0)
        continue;
      Rational f = aug[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j)
        aug[i][j] -= f * aug[col][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = aug[i][n + j];
      if (denominator(q) != 1)
        throw std::domain_error("unimodular_inverse: matrix is not unimodular");
      inv(i, j) = static_cast<Int>(numerator(q));
    }
  return inv;
}

std::optional<RationalVector> solve_rational(const IntMatrix& a,
                                             const RationalVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m)
    throw std::invalid_argument("solve_rational: dimension mismatch");
  std::vector<RationalVector> aug(m, RationalVector(n + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && aug[piv][col] == 0)
      ++piv;
    if (piv == m)
      throw std::invalid_argument("solve_rational: columns are dependent");
    std::swap(aug[piv], aug[row]);
    Rational p = aug[row][col];
    for (auto& x : aug[row])
      x /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug[i][col] == 0)
        continue;
      Rational f = aug[i][col];
      for (std::size_t j = col; j <= n; ++j)
        aug[i][j] -= f * aug[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (pivot_cols.size() != n)
    throw std::invalid_argument("solve_rational: columns are dependent");
  for (std::size_t i = row; i < m; ++i)
    if (aug[i][n] != 0)
      return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[pivot_cols[i]] = aug[i][n];
  return x;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2)
    return;
  for (std::size_t j = 0; j < a.cols(); ++j)
    std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2)
    return;
  for (std::size_t i = 0; i < a.rows(); ++i)
    std::swap(a(i, c1), a(i, c2));
}

// row_dst -= k * row_src
void row_axpy(IntMatrix& a, std::size_t dst, std::size_t src, Int k) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    a(dst, j) -= k * a(src, j);
}

void col_axpy(IntMatrix& a, std::size_t dst, std::size_t src, Int k) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    a(i, dst) -= k * a(i, src);
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix u = IntMatrix::identity(m);
  std::vector<Int> invariants;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool found = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = 0, pc = 0;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (best == 0 || std::llabs(a(i, j)) < best)) {
            best = std::llabs(a(i, j));
            pr = i;
            pc = j;
          }
      if (best == 0)
        break;
      found = true;
      swap_rows(a, t, pr);
      swap_rows(u, t, pr);
      swap_cols(a, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Int q = a(i, t) / a(t, t);
        if (q != 0) {
          row_axpy(a, i, t, q);
          row_axpy(u, i, t, q);
        }
        if (a(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Int q = a(t, j) / a(t, t);
        if (q != 0)
          col_axpy(a, j, t, q);
        if (a(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // Divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_axpy(a, t, i, -1);
            row_axpy(u, t, i, -1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (!found)
      break;
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j)
        a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < m; ++j)
        u(t, j) = -u(t, j);
    }
    invariants.push_back(a(t, t));
  }
  return SmithForm{std::move(u), std::move(invariants)};
}

LatticeQuotient::LatticeQuotient(std::size_t dimension,
                                 const std::vector<IntVector>& generators)
    : dimension_(dimension) {
  if (generators.empty()) {
    left_ = IntMatrix::identity(dimension);
    return;
  }
  SmithForm snf =
      smith_normal_form(IntMatrix::from_columns(generators, dimension));
  left_ = std::move(snf.left);
  rank_ = snf.invariants.size();
  for (std::size_t i = 0; i < rank_; ++i)
    if (snf.invariants[i] != 1) {
      torsion_rows_.push_back(i);
      moduli_.push_back(snf.invariants[i]);
    }
}

QuotientClass LatticeQuotient::classify(const IntVector& v) const {
  IntVector image = left_.apply(v);
  QuotientClass c;
  for (std::size_t k = 0; k < torsion_rows_.size(); ++k) {
    Int r = image[torsion_rows_[k]] % moduli_[k];
    if (r < 0)
      r += moduli_[k];
    c.torsion.push_back(r);
  }
  for (std::size_t i = rank_; i < dimension_; ++i)
    c.free.push_back(image[i]);
  return c;
}

QuotientClass LatticeQuotient::add(const QuotientClass& a,
                                   const QuotientClass& b) const {
  QuotientClass c;
  c.free = atlas::add(a.free, b.free);
  c.torsion.resize(moduli_.size());
  for (std::size_t k = 0; k < moduli_.size(); ++k)
    c.torsion[k] = (a.torsion[k] + b.torsion[k]) % moduli_[k];
  return c;
}

QuotientClass LatticeQuotient::zero() const {
  return QuotientClass{IntVector(free_rank(), 0), IntVector(moduli_.size(), 0)};
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1)
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace atlas
