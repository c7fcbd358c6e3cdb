#include "mildcert/fp_linalg.hpp"

#include <utility>

#include "mildcert/error.hpp"

namespace mildcert {

namespace {

void require_same_modulus(Integer a, Integer b) {
  if (a != b) throw Error("mixed moduli in F_p arithmetic");
}

}  // namespace

FpScalar::FpScalar(Integer v, Integer p) : value(0), modulus(p) {
  if (p < 2) throw Error("modulus must be at least 2");
  value = reduce_mod(v, p);
}

FpScalar operator+(FpScalar a, FpScalar b) {
  require_same_modulus(a.modulus, b.modulus);
  return FpScalar(a.value + b.value, a.modulus);
}

FpScalar operator-(FpScalar a, FpScalar b) {
  require_same_modulus(a.modulus, b.modulus);
  return FpScalar(a.value - b.value, a.modulus);
}

FpScalar operator*(FpScalar a, FpScalar b) {
  require_same_modulus(a.modulus, b.modulus);
  return FpScalar(a.value * b.value, a.modulus);
}

FpScalar FpScalar::inverse() const { return FpScalar(inverse_mod(value, modulus), modulus); }

Integer inverse_mod(Integer a, Integer p) {
  Integer r0 = p, r1 = reduce_mod(a, p);
  Integer s0 = 0, s1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != 1) throw Error("element is not invertible");
  return reduce_mod(s0, p);
}

FpMatrix::FpMatrix(Eigen::Index rows, Eigen::Index cols, Integer modulus)
    : entries_(Storage::Zero(rows, cols)), modulus_(modulus) {
  if (modulus < 2) throw Error("modulus must be at least 2");
}

FpMatrix::FpMatrix(const Storage& entries, Integer modulus)
    : entries_(entries.unaryExpr([modulus](Integer v) { return reduce_mod(v, modulus); })),
      modulus_(modulus) {
  if (modulus < 2) throw Error("modulus must be at least 2");
}

FpMatrix FpMatrix::identity(Eigen::Index n, Integer modulus) {
  return FpMatrix(Storage::Identity(n, n), modulus);
}

FpMatrix FpMatrix::from_rows(std::initializer_list<std::initializer_list<Integer>> rows,
                             Integer modulus) {
  const auto nrows = static_cast<Eigen::Index>(rows.size());
  const auto ncols = nrows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.begin()->size());
  FpMatrix m(nrows, ncols, modulus);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != ncols) throw Error("ragged matrix rows");
    Eigen::Index c = 0;
    for (Integer v : row) m.set(r, c++, v);
    ++r;
  }
  return m;
}

FpMatrix FpMatrix::from_row_vectors(const std::vector<FpVector>& rows, Eigen::Index cols,
                                    Integer modulus) {
  FpMatrix m(static_cast<Eigen::Index>(rows.size()), cols, modulus);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row vector has wrong length");
    for (Eigen::Index c = 0; c < cols; ++c) m.set(static_cast<Eigen::Index>(r), c, rows[r](c));
  }
  return m;
}

FpMatrix FpMatrix::transpose() const { return FpMatrix(entries_.transpose(), modulus_); }

FpVector FpMatrix::operator*(const FpVector& v) const {
  if (v.size() != cols()) throw Error("dimension mismatch in matrix-vector product");
  FpVector out = entries_ * v;
  return out.unaryExpr([p = modulus_](Integer x) { return reduce_mod(x, p); });
}

FpMatrix FpMatrix::without_column(Eigen::Index c) const {
  if (c < 0 || c >= cols()) throw Error("column index out of range");
  Storage out(rows(), cols() - 1);
  out.leftCols(c) = entries_.leftCols(c);
  out.rightCols(cols() - c - 1) = entries_.rightCols(cols() - c - 1);
  return FpMatrix(out, modulus_);
}

FpMatrix FpMatrix::with_row(const FpVector& extra) const {
  if (extra.size() != cols()) throw Error("appended row has wrong length");
  Storage out(rows() + 1, cols());
  out.topRows(rows()) = entries_;
  out.row(rows()) = extra.transpose();
  return FpMatrix(out, modulus_);
}

RowEchelon row_echelon(const FpMatrix& m) {
  const Integer p = m.modulus();
  FpMatrix::Storage a = m.entries();
  std::vector<Eigen::Index> pivots;
  Eigen::Index pivot_row = 0;
  for (Eigen::Index c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    Eigen::Index found = -1;
    for (Eigen::Index r = pivot_row; r < a.rows(); ++r) {
      if (a(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    a.row(pivot_row).swap(a.row(found));
    const Integer inv = inverse_mod(a(pivot_row, c), p);
    a.row(pivot_row) = a.row(pivot_row).unaryExpr([&](Integer x) { return reduce_mod(x * inv, p); });
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, c) == 0) continue;
      const Integer f = a(r, c);
      for (Eigen::Index k = 0; k < a.cols(); ++k) a(r, k) = reduce_mod(a(r, k) - f * a(pivot_row, k), p);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {FpMatrix(a, p), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return row_echelon(m).pivot_columns.size(); }

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
  const auto ech = row_echelon(m);
  const Integer p = m.modulus();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : ech.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<FpVector> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    FpVector v = FpVector::Zero(m.cols());
    v(free) = 1;
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
      v(ech.pivot_columns[i]) = reduce_mod(-ech.reduced(static_cast<Eigen::Index>(i), free), p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_surjective_onto_full_space(const FpMatrix& m) {
  return rank(m) == static_cast<std::size_t>(m.rows());
}

std::optional<FpVector> solve(const FpMatrix& m, const FpVector& rhs) {
  if (rhs.size() != m.rows()) throw Error("right-hand side has wrong length");
  FpMatrix::Storage augmented(m.rows(), m.cols() + 1);
  augmented.leftCols(m.cols()) = m.entries();
  augmented.col(m.cols()) = rhs;
  const auto ech = row_echelon(FpMatrix(augmented, m.modulus()));
  if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == m.cols()) return std::nullopt;
  FpVector x = FpVector::Zero(m.cols());
  for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
    x(ech.pivot_columns[i]) = ech.reduced(static_cast<Eigen::Index>(i), m.cols());
  }
  return x;
}

bool in_row_span(const FpMatrix& m, const FpVector& v) {
  if (is_zero_vector(v)) return true;
  if (m.rows() == 0) return false;
  return rank(m.with_row(v)) == rank(m);
}

bool is_zero_vector(const FpVector& v) { return v.isZero(); }

}  // namespace mildcert
