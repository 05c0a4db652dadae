#ifndef ATLAS_LATTICE_HPP
#define ATLAS_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace atlas {

using Int = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

// Dense integer matrix, row-major. Acts on column vectors.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& columns,
                                std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntVector apply(const IntVector& v) const;
  RationalVector apply(const RationalVector& v) const;
  // v^T * M, for functionals stored as row vectors.
  IntVector apply_left(const IntVector& v) const;
  IntMatrix transpose() const;

  bool is_identity() const;

  const std::vector<Int>& data() const { return data_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

Int dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& functional, const RationalVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, Int k);
RationalVector to_rational(const IntVector& v);

// Inverse of a unimodular matrix. Throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Unique solution of A c = b over Q where A has linearly independent
// columns; nullopt when b is not in the column span.
std::optional<RationalVector> solve_rational(const IntMatrix& a,
                                             const RationalVector& b);

// U * A * V = diag(d_1, ..., d_k, 0, ...) with d_i | d_{i+1}, d_i > 0.
// Only the row transform U is kept; it is all a quotient computation needs.
struct SmithForm {
  IntMatrix left;
  std::vector<Int> invariants;
};

SmithForm smith_normal_form(IntMatrix a);

// Element of a finitely generated abelian group Z^k x Z/d_1 x ... x Z/d_t.
struct QuotientClass {
  IntVector free;
  IntVector torsion;

  friend bool operator==(const QuotientClass&, const QuotientClass&) = default;
  friend auto operator<=>(const QuotientClass&, const QuotientClass&) = default;
};

// The quotient Z^n / span(generators), presented through a Smith form.
class LatticeQuotient {
public:
  LatticeQuotient() = default;
  LatticeQuotient(std::size_t dimension, const std::vector<IntVector>& generators);

  QuotientClass classify(const IntVector& v) const;
  QuotientClass add(const QuotientClass& a, const QuotientClass& b) const;
  QuotientClass zero() const;

  std::size_t free_rank() const { return dimension_ - rank_; }
  const std::vector<Int>& torsion_moduli() const { return moduli_; }
  bool is_finite() const { return free_rank() == 0; }

private:
  std::size_t dimension_ = 0;
  std::size_t rank_ = 0;
  IntMatrix left_;
  // Positions (rows of left_) carrying torsion, and their moduli.
  std::vector<std::size_t> torsion_rows_;
  std::vector<Int> moduli_;
};

std::string to_string(const Rational& q);

}  // namespace atlas

#endif  // ATLAS_LATTICE_HPP
