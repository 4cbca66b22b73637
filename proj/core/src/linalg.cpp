#include "ncspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ncspec {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs(const SparseMatrix& a) {
  double best = 0.0;
  for (Index k = 0; k < a.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(a, k); it; ++it) {
      best = std::max(best, std::abs(it.value()));
    }
  }
  return best;
}

double max_abs_diff(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return max_abs(SparseMatrix(a - b));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Index ka = 0; ka < a.outerSize(); ++ka) {
    for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia) {
      for (Index kb = 0; kb < b.outerSize(); ++kb) {
        for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib) {
          triplets.emplace_back(ia.row() * b.rows() + ib.row(),
                                ia.col() * b.cols() + ib.col(),
                                ia.value() * ib.value());
        }
      }
    }
  }
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const ComplexMatrix& b) {
  return kron(a, to_sparse(b));
}

SparseMatrix sparse_identity(Index n) {
  SparseMatrix id(n, n);
  id.setIdentity();
  return id;
}

SparseMatrix to_sparse(const ComplexMatrix& m) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != Complex{}) triplets.emplace_back(i, j, m(i, j));
    }
  }
  SparseMatrix out(m.rows(), m.cols());
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  }
  if (h.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double max_column_norm(const SparseMatrix& a, std::span<const Index> columns) {
  double best = 0.0;
  for (Index c : columns) {
    double sq = 0.0;
    for (SparseMatrix::InnerIterator it(a, c); it; ++it) sq += std::norm(it.value());
    best = std::max(best, std::sqrt(sq));
  }
  return best;
}

double max_column_diff(const SparseMatrix& a, const SparseMatrix& b,
                       std::span<const Index> columns) {
  const SparseMatrix diff = a - b;
  double best = 0.0;
  for (Index c : columns) {
    for (SparseMatrix::InnerIterator it(diff, c); it; ++it) {
      best = std::max(best, std::abs(it.value()));
    }
  }
  return best;
}

SparseMatrix select_columns(const SparseMatrix& a, std::span<const Index> columns) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (SparseMatrix::InnerIterator it(a, columns[j]); it; ++it) {
      triplets.emplace_back(it.row(), static_cast<Index>(j), it.value());
    }
  }
  SparseMatrix out(a.rows(), static_cast<Index>(columns.size()));
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

namespace {

constexpr Index kDenseSvdLimit = 256;
constexpr int kLanczosSteps = 120;

// Largest eigenvalue of a Hermitian positive semidefinite operator by Lanczos
// with full reorthogonalization.
double lanczos_largest(const SparseMatrix& m) {
  const Index n = m.rows();
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  ComplexVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
  v.normalize();

  const int steps = static_cast<int>(std::min<Index>(kLanczosSteps, n));
  std::vector<ComplexVector> basis;
  std::vector<double> alpha;
  std::vector<double> beta;
  basis.push_back(v);
  double estimate = 0.0;
  for (int k = 0; k < steps; ++k) {
    ComplexVector w = m * basis.back();
    alpha.push_back(basis.back().dot(w).real());
    for (const auto& q : basis) w -= q.dot(w) * q;
    for (const auto& q : basis) w -= q.dot(w) * q;
    const double b = w.norm();

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k + 1, k + 1);
    for (int i = 0; i <= k; ++i) t(i, i) = alpha[static_cast<std::size_t>(i)];
    for (int i = 0; i < k; ++i) {
      t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri(t);
    estimate = tri.eigenvalues()(k);
    const double residual = std::abs(b * tri.eigenvectors()(k, k));
    if (b < 1e-14 * std::max(1.0, estimate) ||
        residual < 1e-13 * std::max(1.0, estimate)) {
      break;
    }
    beta.push_back(b);
    basis.push_back(w / b);
  }
  return estimate;
}

}  // namespace

double largest_singular_value(const SparseMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  if (std::min(a.rows(), a.cols()) <= kDenseSvdLimit) {
    const ComplexMatrix dense(a);
    Eigen::JacobiSVD<ComplexMatrix> svd(dense);
    return svd.singularValues()(0);
  }
  const SparseMatrix gram = a.adjoint() * a;
  return std::sqrt(std::max(0.0, lanczos_largest(gram)));
}

AntiUnitary::AntiUnitary(SparseMatrix c, double tolerance) : c_(std::move(c)) {
  if (c_.rows() != c_.cols()) {
    throw std::invalid_argument("AntiUnitary: matrix not square");
  }
  const SparseMatrix gram = c_.adjoint() * c_;
  if (max_abs_diff(gram, sparse_identity(c_.rows())) > tolerance) {
    throw std::invalid_argument("AntiUnitary: matrix is not unitary");
  }
  c_.makeCompressed();
}

AntiUnitary::AntiUnitary(const ComplexMatrix& c, double tolerance)
    : AntiUnitary(to_sparse(c), tolerance) {}

ComplexVector AntiUnitary::apply(const ComplexVector& v) const {
  return c_ * v.conjugate();
}

SparseMatrix AntiUnitary::square() const {
  return c_ * SparseMatrix(c_.conjugate());
}

SparseMatrix AntiUnitary::conjugate(const SparseMatrix& a) const {
  return c_ * SparseMatrix(a.conjugate()) * SparseMatrix(c_.adjoint());
}

ComplexMatrix AntiUnitary::conjugate(const ComplexMatrix& a) const {
  const ComplexMatrix c = dense();
  return c * a.conjugate() * c.adjoint();
}

AntiUnitary AntiUnitary::tensor(const AntiUnitary& other) const {
  return AntiUnitary(kron(c_, other.c_));
}

}  // namespace ncspec
