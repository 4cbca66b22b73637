#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace ncspec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
/// Column-major sparse operator; the workhorse for truncated GNS spaces.
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using Index = Eigen::Index;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Raised when a certified algebraic relation does not hold.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Max entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const SparseMatrix& a, const SparseMatrix& b);
double max_abs(const SparseMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
SparseMatrix kron(const SparseMatrix& a, const ComplexMatrix& b);
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

SparseMatrix sparse_identity(Index n);
SparseMatrix to_sparse(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, ascending. Only the lower triangle is read.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Largest Euclidean column norm among the listed columns.
double max_column_norm(const SparseMatrix& a, std::span<const Index> columns);

/// Max entrywise modulus of a - b restricted to the listed columns.
double max_column_diff(const SparseMatrix& a, const SparseMatrix& b,
                       std::span<const Index> columns);

/// Submatrix made of the listed columns, in order.
SparseMatrix select_columns(const SparseMatrix& a, std::span<const Index> columns);

/// Largest singular value. Dense SVD for small operators, Lanczos on A^H A
/// otherwise (deterministic start vector).
double largest_singular_value(const SparseMatrix& a);

/// Antilinear map v -> C * conj(v). C must be unitary.
class AntiUnitary {
 public:
  explicit AntiUnitary(SparseMatrix c, double tolerance = 1e-12);
  explicit AntiUnitary(const ComplexMatrix& c, double tolerance = 1e-12);

  [[nodiscard]] const SparseMatrix& matrix() const { return c_; }
  [[nodiscard]] ComplexMatrix dense() const { return ComplexMatrix(c_); }
  [[nodiscard]] Index dim() const { return c_.rows(); }

  [[nodiscard]] ComplexVector apply(const ComplexVector& v) const;
  /// J^2 as a linear operator, C * conj(C).
  [[nodiscard]] SparseMatrix square() const;
  /// J A J^{-1} = C conj(A) C^H.
  [[nodiscard]] SparseMatrix conjugate(const SparseMatrix& a) const;
  [[nodiscard]] ComplexMatrix conjugate(const ComplexMatrix& a) const;
  /// (J (x) K)(x (x) y) = Jx (x) Ky
  [[nodiscard]] AntiUnitary tensor(const AntiUnitary& other) const;

 private:
  SparseMatrix c_;
};

}  // namespace ncspec
