#ifndef MILDCERT_FP_LINALG_HPP
#define MILDCERT_FP_LINALG_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace mildcert {

using Integer = std::int64_t;

/// An element of the prime field F_p. `value` is always reduced into [0, p).
struct FpScalar {
  Integer value = 0;
  Integer modulus = 3;

  FpScalar() = default;
  FpScalar(Integer v, Integer p);

  bool is_zero() const noexcept { return value == 0; }

  friend bool operator==(const FpScalar&, const FpScalar&) = default;
  friend FpScalar operator+(FpScalar a, FpScalar b);
  friend FpScalar operator-(FpScalar a, FpScalar b);
  friend FpScalar operator*(FpScalar a, FpScalar b);
  FpScalar operator-() const { return FpScalar(-value, modulus); }
  FpScalar inverse() const;
};

/// Reduce an arbitrary integer into [0, p).
inline Integer reduce_mod(Integer v, Integer p) {
  Integer r = v % p;
  return r < 0 ? r + p : r;
}

Integer inverse_mod(Integer a, Integer p);

using FpVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

/// Dense matrix over F_p. Entries are stored reduced; the modulus travels
/// with the matrix so mixed-modulus arithmetic is caught at the call site.
class FpMatrix {
 public:
  using Storage = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  explicit FpMatrix(Integer modulus) : FpMatrix(0, 0, modulus) {}
  FpMatrix(Eigen::Index rows, Eigen::Index cols, Integer modulus);
  FpMatrix(const Storage& entries, Integer modulus);

  static FpMatrix identity(Eigen::Index n, Integer modulus);
  static FpMatrix from_rows(std::initializer_list<std::initializer_list<Integer>> rows,
                            Integer modulus);
  /// Stack vectors as rows. All vectors must have length `cols`.
  static FpMatrix from_row_vectors(const std::vector<FpVector>& rows, Eigen::Index cols,
                                   Integer modulus);

  Eigen::Index rows() const noexcept { return entries_.rows(); }
  Eigen::Index cols() const noexcept { return entries_.cols(); }
  Integer modulus() const noexcept { return modulus_; }
  bool empty() const noexcept { return entries_.size() == 0; }

  Integer operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }
  void set(Eigen::Index r, Eigen::Index c, Integer v) { entries_(r, c) = reduce_mod(v, modulus_); }

  const Storage& entries() const noexcept { return entries_; }

  FpMatrix transpose() const;
  FpVector row(Eigen::Index r) const { return entries_.row(r).transpose(); }
  FpVector operator*(const FpVector& v) const;
  /// Matrix with column `c` removed.
  FpMatrix without_column(Eigen::Index c) const;
  /// Matrix with `extra` appended as a final row.
  FpMatrix with_row(const FpVector& extra) const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.modulus_ == b.modulus_ && a.rows() == b.rows() && a.cols() == b.cols() &&
           a.entries_ == b.entries_;
  }

 private:
  Storage entries_;
  Integer modulus_;
};

/// Reduced row echelon form with first-nonzero pivoting.
struct RowEchelon {
  FpMatrix reduced;
  std::vector<Eigen::Index> pivot_columns;
};

RowEchelon row_echelon(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Basis of the right null space, one vector per free column.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

/// Rows index the coordinates of the target space; the map is onto iff the
/// rank equals the row count.
bool is_surjective_onto_full_space(const FpMatrix& m);

/// Some solution x of m x = rhs (free variables set to zero), or nullopt.
std::optional<FpVector> solve(const FpMatrix& m, const FpVector& rhs);

/// Whether `v` lies in the span of the rows of `m`. The zero vector lies in
/// every span, including the span of an empty row set.
bool in_row_span(const FpMatrix& m, const FpVector& v);

bool is_zero_vector(const FpVector& v);

}  // namespace mildcert

#endif  // MILDCERT_FP_LINALG_HPP
