#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncspec/linalg.hpp"

namespace ncspec {

using LatticePoint = std::vector<int>;

/// Antisymmetric matrix of angles (in full turns) with
/// U_j U_k = exp(2 pi i theta_jk) U_k U_j.
class ThetaMatrix {
 public:
  ThetaMatrix() = default;
  /// Row-major n*n entries; throws std::invalid_argument unless antisymmetric.
  ThetaMatrix(int n, std::vector<double> row_major, double tolerance = 1e-12);

  static ThetaMatrix zero(int n);
  /// theta_jk = value for j < k, -value for j > k. For n = 2 this is the scalar theta.
  static ThetaMatrix uniform(int n, double value);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] double operator()(int j, int k) const {
    return entries_[static_cast<std::size_t>(j * n_ + k)];
  }
  [[nodiscard]] const std::vector<double>& entries() const { return entries_; }
  /// Stable short hash of the entries, for reports.
  [[nodiscard]] std::string fingerprint() const;

 private:
  int n_ = 0;
  std::vector<double> entries_;
};

/// Angle phi(p, q) = sum_{j>k} theta_jk p_j q_k with U^p U^q = e^{2 pi i phi} U^{p+q}.
double product_phase_angle(const ThetaMatrix& theta, const LatticePoint& p, const LatticePoint& q);
Complex product_phase(const ThetaMatrix& theta, const LatticePoint& p, const LatticePoint& q);

/// Finitely supported Fourier series sum_p a_p U^p over ordered monomials
/// U^p = U_1^{p_1} ... U_n^{p_n}.
class FourierElement {
 public:
  using Terms = std::map<LatticePoint, Complex>;

  explicit FourierElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("FourierElement: n must be positive");
  }
  FourierElement(int n, Terms terms);

  static FourierElement identity(int n);
  static FourierElement monomial(LatticePoint p, Complex c = 1.0);
  /// U_j, 0-based direction.
  static FourierElement generator(int n, int direction);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] Complex coefficient(const LatticePoint& p) const;
  /// max over the support of max_j |p_j|; 0 for the zero element.
  [[nodiscard]] int radius() const;

  /// Adds c to the coefficient at p; exact zeros are erased.
  void add(const LatticePoint& p, Complex c);

  FourierElement& operator+=(const FourierElement& other);
  FourierElement& operator-=(const FourierElement& other);
  friend FourierElement operator+(FourierElement a, const FourierElement& b) { return a += b; }
  friend FourierElement operator-(FourierElement a, const FourierElement& b) { return a -= b; }
  friend FourierElement operator*(Complex s, FourierElement a);

  /// Max coefficient distance; supports are merged.
  [[nodiscard]] double distance(const FourierElement& other) const;

 private:
  int n_;
  Terms terms_;
};

FourierElement multiply(const FourierElement& a, const FourierElement& b, const ThetaMatrix& theta);
/// Involution; the phase of each (U^p)* is accumulated by multiplying the
/// reversed factors U_n^{-p_n} ... U_1^{-p_1}.
FourierElement adjoint(const FourierElement& a, const ThetaMatrix& theta);
/// d_j(sum a_p U^p) = sum 2 pi i p_j a_p U^p, 0-based direction.
FourierElement derivation(int direction, const FourierElement& a);
/// Canonical trace: coefficient of U^0.
Complex trace(const FourierElement& a);
/// alpha_z: scales a_p by z^p.
FourierElement torus_action(const FourierElement& a, const std::vector<Complex>& z);
/// Fourier component a_l U^l.
FourierElement isotypic_projection(const FourierElement& a, const LatticePoint& l);
/// tau(a0 (d_1(a1) d_2(a2) - d_2(a1) d_1(a2))); n = 2 only.
Complex cyclic_cocycle_2d(const FourierElement& a0, const FourierElement& a1,
                          const FourierElement& a2, const ThetaMatrix& theta);

/// GNS space of the trace truncated to the box |p_j| <= N. Basis vector
/// delta_p is the class [U^p]; indices are mixed-radix with the first
/// coordinate most significant.
class TruncatedGNS {
 public:
  TruncatedGNS(int n, int radius);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int radius() const { return radius_; }
  [[nodiscard]] Index dim() const { return dim_; }
  [[nodiscard]] bool contains(const LatticePoint& p) const;
  [[nodiscard]] std::optional<Index> index(const LatticePoint& p) const;
  [[nodiscard]] LatticePoint point(Index i) const;
  /// Indices of points with |p_j| <= N - margin for all j (empty if margin > N).
  [[nodiscard]] std::vector<Index> interior(int margin) const;

 private:
  int n_;
  int radius_;
  Index dim_;
};

/// Left multiplication pi(a)[a'] = [a a'], cut to the box.
/// Throws std::invalid_argument if radius(a) > N.
SparseMatrix gns_operator(const FourierElement& a, const TruncatedGNS& h, const ThetaMatrix& theta);
/// Right multiplication [a'] -> [a' b], cut to the box.
SparseMatrix gns_right_operator(const FourierElement& b, const TruncatedGNS& h, const ThetaMatrix& theta);
/// Diagonal U_z delta_p = z^p delta_p. Throws unless |z_j| = 1 within 1e-9.
SparseMatrix torus_unitary(const std::vector<Complex>& z, const TruncatedGNS& h);
/// Infinitesimal generator of the torus action on the GNS space, diag(2 pi i p_j).
SparseMatrix gns_generator(int direction, const TruncatedGNS& h);

}  // namespace ncspec
