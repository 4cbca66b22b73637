#include "ncspec/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <span>

namespace ncspec {

namespace {

std::vector<Index> spinor_columns(const TruncatedGNS& h, int margin, Index spinor_dim) {
  std::vector<Index> cols;
  for (Index i : h.interior(margin)) {
    for (Index s = 0; s < spinor_dim; ++s) cols.push_back(i * spinor_dim + s);
  }
  return cols;
}

std::vector<Index> require_interior(const TruncatedGNS& h, int margin, Index spinor_dim,
                                    const char* what) {
  auto cols = spinor_columns(h, margin, spinor_dim);
  if (cols.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty interior (margin " +
                                std::to_string(margin) + ", truncation " +
                                std::to_string(h.radius()) + ")");
  }
  return cols;
}

// Largest column norm of [A, B] over `cols`, without forming the full product.
double commutator_column_norm(const SparseMatrix& a, const SparseMatrix& b,
                              std::span<const Index> cols) {
  const SparseMatrix ac = select_columns(a, cols);
  const SparseMatrix bc = select_columns(b, cols);
  const SparseMatrix c = a * bc - b * ac;
  double best = 0.0;
  for (Index k = 0; k < c.outerSize(); ++k) {
    double sq = 0.0;
    for (SparseMatrix::InnerIterator it(c, k); it; ++it) sq += std::norm(it.value());
    best = std::max(best, std::sqrt(sq));
  }
  return best;
}

struct SignFit {
  int sign = 0;
  double deviation = 0.0;
};

// Decides lhs = +-rhs on the given columns. When both fit (rhs ~ 0) the
// preferred sign wins.
SignFit fit_sign(const SparseMatrix& lhs, const SparseMatrix& rhs, std::span<const Index> cols,
                 Sign preferred, double tolerance) {
  const double plus = max_column_diff(lhs, rhs, cols);
  const double minus = max_column_diff(lhs, SparseMatrix(-rhs), cols);
  const bool p = plus < tolerance;
  const bool m = minus < tolerance;
  if (p && m) return {to_int(preferred), preferred == Sign::Plus ? plus : minus};
  if (p) return {1, plus};
  if (m) return {-1, minus};
  return {0, std::min(plus, minus)};
}

}  // namespace

RealStructure build_real_structure(const CliffordRep& cliff, const TruncatedGNS& h,
                                   const ThetaMatrix& theta) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(h.dim()));
  for (Index i = 0; i < h.dim(); ++i) {
    const FourierElement star = adjoint(FourierElement::monomial(h.point(i)), theta);
    if (star.terms().size() != 1) {
      throw std::logic_error("build_real_structure: adjoint of a monomial is not a monomial");
    }
    const auto& [q, c] = *star.terms().begin();
    const auto row = h.index(q);
    if (!row) throw std::logic_error("build_real_structure: box not symmetric");
    triplets.emplace_back(*row, i, c);
  }
  SparseMatrix c0(h.dim(), h.dim());
  c0.setFromTriplets(triplets.begin(), triplets.end());

  AntiUnitary j0(std::move(c0), 1e-10);
  AntiUnitary j = j0.tensor(cliff.JS);
  return RealStructure{std::move(j0), std::move(j), cliff.signs, cliff.dim};
}

int order_margin(const FourierElement& a, const FourierElement& b) {
  return a.radius() + b.radius() + 1;
}

SparseMatrix opposite_action(const FourierElement& b, const RealStructure& j,
                             const TruncatedGNS& h, const ThetaMatrix& theta) {
  const SparseMatrix pb_star = lift(gns_operator(adjoint(b, theta), h, theta), j.spinor_dim);
  return j.J.conjugate(pb_star);
}

double check_zeroth_order(const FourierElement& a, const FourierElement& b,
                          const RealStructure& j, const TruncatedGNS& h, const ThetaMatrix& theta) {
  const auto cols = require_interior(h, order_margin(a, b), j.spinor_dim, "check_zeroth_order");
  const SparseMatrix pa = lift(gns_operator(a, h, theta), j.spinor_dim);
  const SparseMatrix rb = opposite_action(b, j, h, theta);
  return commutator_column_norm(pa, rb, cols);
}

double check_first_order(const BlockDiracOperator& d, const FourierElement& a,
                         const FourierElement& b, const RealStructure& j,
                         const ThetaMatrix& theta) {
  const TruncatedGNS& h = d.gns();
  const auto cols = require_interior(h, order_margin(a, b), j.spinor_dim, "check_first_order");
  const SparseMatrix dm = d.matrix();
  const SparseMatrix pa = lift(gns_operator(a, h, theta), j.spinor_dim);
  const SparseMatrix da = dm * pa - pa * dm;
  const SparseMatrix rb = opposite_action(b, j, h, theta);
  return commutator_column_norm(da, rb, cols);
}

double opposite_action_deviation(const FourierElement& b, const RealStructure& j,
                                 const TruncatedGNS& h, const ThetaMatrix& theta) {
  const auto cols = require_interior(h, b.radius() + 1, j.spinor_dim, "opposite_action_deviation");
  const SparseMatrix right = lift(gns_right_operator(b, h, theta), j.spinor_dim);
  return max_column_diff(opposite_action(b, j, h, theta), right, cols);
}

RealitySigns check_reality_signs(const BlockDiracOperator& d, const std::optional<SparseMatrix>& gamma,
                                 const RealStructure& j, double tolerance) {
  const auto cols = require_interior(d.gns(), 1, j.spinor_dim, "check_reality_signs");
  const SignTriple& expected = j.signs;
  RealitySigns out;

  const SignFit fj = fit_sign(j.J.square(), sparse_identity(d.dim()), cols, expected.j, tolerance);
  if (fj.sign == 0) throw VerificationError("J^2 = eps_J fails with either sign");
  out.measured.j = static_cast<Sign>(fj.sign);
  out.j_square_deviation = fj.deviation;

  const SparseMatrix dm = d.matrix();
  const SignFit fd = fit_sign(j.J.conjugate(dm), dm, cols, expected.d, tolerance);
  if (fd.sign == 0) throw VerificationError("J D = eps_D D J fails with either sign");
  out.measured.d = static_cast<Sign>(fd.sign);
  out.jd_deviation = fd.deviation;

  if (gamma) {
    const Sign pref = expected.gamma.value_or(Sign::Plus);
    const SignFit fg = fit_sign(j.J.conjugate(*gamma), *gamma, cols, pref, tolerance);
    if (fg.sign == 0) throw VerificationError("J gamma = eps_gamma gamma J fails with either sign");
    out.measured.gamma = static_cast<Sign>(fg.sign);
    out.jgamma_deviation = fg.deviation;
  }

  if (out.measured.j != expected.j) {
    throw VerificationError("J^2 = eps_J: measured " + std::string(to_string(out.measured.j)) +
                            ", table says " + to_string(expected.j));
  }
  if (out.measured.d != expected.d) {
    throw VerificationError("J D = eps_D D J: measured " + std::string(to_string(out.measured.d)) +
                            ", table says " + to_string(expected.d));
  }
  if (gamma && out.measured.gamma != expected.gamma) {
    throw VerificationError("J gamma = eps_gamma gamma J: measured sign disagrees with the table");
  }
  return out;
}

double norm_preservation_deviation(const AntiUnitary& j, int samples, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto random_unit = [&] {
    ComplexVector v(j.dim());
    for (Index i = 0; i < v.size(); ++i) v(i) = Complex(normal(rng), normal(rng));
    return ComplexVector(v.normalized());
  };
  double dev = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexVector x = random_unit();
    const ComplexVector y = random_unit();
    // Eigen's dot is antilinear in its first argument, like <., .>.
    const Complex lhs = j.apply(x).dot(j.apply(y));
    const Complex rhs = y.dot(x);
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return dev;
}

bool DoublingResult::passed(double tolerance) const {
  return j2_square_deviation <= tolerance && commute_deviation <= tolerance &&
         hermitian_deviation <= tolerance && norm_deviation <= tolerance;
}

DoublingResult doubling_trick(const ComplexMatrix& d, const AntiUnitary& j, Sign eps_j, Sign eps_d,
                              double tolerance, unsigned long long seed) {
  if (d.rows() != d.cols() || d.rows() != j.dim()) {
    throw std::invalid_argument("doubling_trick: D and J act on different spaces");
  }
  const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
  const ComplexMatrix id = ComplexMatrix::Identity(d.rows(), d.cols());
  if (max_abs_diff(ComplexMatrix(j.square()), to_int(eps_j) * id) > tolerance) {
    throw std::invalid_argument("doubling_trick: J^2 != eps_J for the supplied eps_J");
  }
  if (max_abs_diff(j.conjugate(d), to_int(eps_d) * d) > tolerance * scale) {
    throw std::invalid_argument("doubling_trick: J D != eps_D D J for the supplied eps_D");
  }

  DoublingResult out;
  out.D2 = d;
  out.J2 = j;

  if (eps_d == Sign::Minus) {
    ComplexMatrix swap(2, 2);  // C'(x1, x2) = (conj x2, conj x1)
    swap << 0, 1, 1, 0;
    ComplexMatrix sz(2, 2);
    sz << 1, 0, 0, -1;
    out.stages.push_back({"D (x) diag(1,-1), J (x) C'", eps_j, eps_d});
    out.D2 = kron(out.D2, sz);
    out.J2 = out.J2.tensor(AntiUnitary(swap));
    eps_d = Sign::Plus;
  }
  if (eps_j == Sign::Minus) {
    ComplexMatrix c(2, 2);  // C(x1, x2) = (-conj x2, conj x1)
    c << 0, -1, 1, 0;
    out.stages.push_back({"D (x) 1, J (x) C", eps_j, eps_d});
    out.D2 = kron(out.D2, ComplexMatrix::Identity(2, 2));
    out.J2 = out.J2.tensor(AntiUnitary(c));
    eps_j = Sign::Plus;
  }

  const ComplexMatrix id2 = ComplexMatrix::Identity(out.D2.rows(), out.D2.cols());
  out.j2_square_deviation = max_abs_diff(ComplexMatrix(out.J2.square()), id2);
  out.commute_deviation = max_abs_diff(out.J2.conjugate(out.D2), out.D2) / scale;
  out.hermitian_deviation = max_abs_diff(out.D2.adjoint(), out.D2) / scale;
  out.norm_deviation = norm_preservation_deviation(out.J2, 20, seed);
  return out;
}

}  // namespace ncspec
