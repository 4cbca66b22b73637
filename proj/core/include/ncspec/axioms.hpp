#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncspec/clifford.hpp"
#include "ncspec/dirac.hpp"
#include "ncspec/nctorus.hpp"

namespace ncspec {

/// J = J_0 (x) J_S on the truncated H_0 (x) S, where J_0 [a] = [a*].
struct RealStructure {
  AntiUnitary J0;
  AntiUnitary J;
  SignTriple signs;
  Index spinor_dim = 1;
};

/// J_0 delta_p = c_p delta_{-p} with (U^p)* = c_p U^{-p} taken from adjoint().
RealStructure build_real_structure(const CliffordRep& cliff, const TruncatedGNS& h,
                                   const ThetaMatrix& theta);

/// Interior margin used by the order conditions: radius(a) + radius(b) + 1.
int order_margin(const FourierElement& a, const FourierElement& b);

/// J (pi(b*) (x) 1) J^{-1}, which should act as right multiplication by b.
SparseMatrix opposite_action(const FourierElement& b, const RealStructure& j,
                             const TruncatedGNS& h, const ThetaMatrix& theta);

/// sup over interior basis vectors of |[pi(a) (x) 1, J b* J^{-1}] xi|.
/// Throws std::invalid_argument if the interior is empty.
double check_zeroth_order(const FourierElement& a, const FourierElement& b,
                          const RealStructure& j, const TruncatedGNS& h, const ThetaMatrix& theta);

/// sup over interior basis vectors of |[[D, a], J b* J^{-1}] xi|.
double check_first_order(const BlockDiracOperator& d, const FourierElement& a,
                         const FourierElement& b, const RealStructure& j,
                         const ThetaMatrix& theta);

/// Max interior deviation between J b* J^{-1} and right multiplication by b.
double opposite_action_deviation(const FourierElement& b, const RealStructure& j,
                                 const TruncatedGNS& h, const ThetaMatrix& theta);

struct RealitySigns {
  SignTriple measured;
  /// Residual of each relation with the measured sign.
  double j_square_deviation = 0.0;
  double jd_deviation = 0.0;
  std::optional<double> jgamma_deviation;
};

/// Measures eps_J from J^2, eps_D from J D J^{-1} and eps_gamma from J gamma J^{-1}
/// on interior vectors. Throws VerificationError naming the relation that
/// matches neither sign or disagrees with the table for the Clifford degree.
RealitySigns check_reality_signs(const BlockDiracOperator& d, const std::optional<SparseMatrix>& gamma,
                                 const RealStructure& j, double tolerance = 1e-10);

/// Largest | <J xi, J eta> - <eta, xi> | over `samples` seeded random pairs.
double norm_preservation_deviation(const AntiUnitary& j, int samples, unsigned long long seed);

struct DoublingStage {
  std::string name;
  Sign eps_j_before = Sign::Plus;
  Sign eps_d_before = Sign::Plus;
};

struct DoublingResult {
  ComplexMatrix D2;
  AntiUnitary J2{ComplexMatrix::Identity(1, 1)};
  std::vector<DoublingStage> stages;
  double j2_square_deviation = 0.0;   // |J2^2 - 1|
  double commute_deviation = 0.0;     // |J2 D2 - D2 J2|
  double hermitian_deviation = 0.0;   // |D2 - D2^H|
  double norm_deviation = 0.0;        // norm preservation on random pairs
  [[nodiscard]] bool passed(double tolerance = 1e-12) const;
};

/// Reduces (D, J) with J^2 = eps_J, J D = eps_D D J to a pair with J2^2 = 1 and
/// J2 D2 = D2 J2. eps_D = -1: D (x) diag(1, -1), J (x) C' with
/// C'(x1, x2) = (conj x2, conj x1). Then eps_J = -1: D (x) 1, J (x) C with
/// C(x1, x2) = (-conj x2, conj x1). eps_J = eps_D = +1 passes through unchanged.
/// Throws std::invalid_argument if the supplied signs do not hold for (D, J).
DoublingResult doubling_trick(const ComplexMatrix& d, const AntiUnitary& j, Sign eps_j, Sign eps_d,
                              double tolerance = 1e-12, unsigned long long seed = 1);

}  // namespace ncspec
