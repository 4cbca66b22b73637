#include "ncspec/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ncspec {

BlockDiracOperator::BlockDiracOperator(CliffordRep cliff, TruncatedGNS gns, std::vector<int> active)
    : cliff_(std::move(cliff)), gns_(gns), active_(std::move(active)) {
  const int n_alg = gns_.n();
  if (active_.empty()) throw std::invalid_argument("assemble_dirac: no active directions");
  std::set<int> seen;
  for (int j : active_) {
    if (j < 0 || j >= n_alg) {
      throw std::invalid_argument("assemble_dirac: active direction " + std::to_string(j) +
                                  " out of range for n = " + std::to_string(n_alg));
    }
    if (!seen.insert(j).second) throw std::invalid_argument("assemble_dirac: repeated direction");
  }
  std::sort(active_.begin(), active_.end());

  if (cliff_.n == static_cast<int>(active_.size())) {
    for (std::size_t k = 0; k < active_.size(); ++k) generator_index_.push_back(k);
  } else if (cliff_.n == n_alg) {
    for (int j : active_) generator_index_.push_back(static_cast<std::size_t>(j));
  } else {
    throw std::invalid_argument("assemble_dirac: generator-count mismatch (Clifford degree " +
                                std::to_string(cliff_.n) + ", " + std::to_string(active_.size()) +
                                " active directions, lattice dimension " + std::to_string(n_alg) + ")");
  }

  blocks_.reserve(static_cast<std::size_t>(gns_.dim()));
  for (Index i = 0; i < gns_.dim(); ++i) blocks_.push_back(block_at(gns_.point(i)));
}

ComplexMatrix BlockDiracOperator::block_at(const LatticePoint& p) const {
  ComplexMatrix b = ComplexMatrix::Zero(cliff_.dim, cliff_.dim);
  for (std::size_t k = 0; k < active_.size(); ++k) {
    const int pj = p[static_cast<std::size_t>(active_[k])];
    if (pj != 0) b += (2.0 * kPi * pj) * (kI * generator(k));
  }
  return b;
}

SparseMatrix BlockDiracOperator::matrix() const {
  const Index s = spinor_dim();
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim() * s));
  for (Index i = 0; i < gns_.dim(); ++i) {
    const ComplexMatrix& b = blocks_[static_cast<std::size_t>(i)];
    for (Index r = 0; r < s; ++r) {
      for (Index c = 0; c < s; ++c) {
        if (b(r, c) != Complex{}) triplets.emplace_back(i * s + r, i * s + c, b(r, c));
      }
    }
  }
  SparseMatrix out(dim(), dim());
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

double BlockDiracOperator::max_block_norm() const {
  double best = 0.0;
  for (const auto& b : blocks_) {
    for (double ev : hermitian_eigenvalues(b)) best = std::max(best, std::abs(ev));
  }
  return best;
}

BlockDiracOperator assemble_dirac(const CliffordRep& cliff, const TruncatedGNS& gns,
                                  std::vector<int> active) {
  return BlockDiracOperator(cliff, gns, std::move(active));
}

BlockDiracOperator assemble_dirac(const CliffordRep& cliff, const TruncatedGNS& gns) {
  std::vector<int> all(static_cast<std::size_t>(gns.n()));
  for (int j = 0; j < gns.n(); ++j) all[static_cast<std::size_t>(j)] = j;
  return BlockDiracOperator(cliff, gns, std::move(all));
}

SpectralData spectrum(const BlockDiracOperator& d) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(d.dim()));
  for (Index i = 0; i < d.gns().dim(); ++i) {
    const auto ev = hermitian_eigenvalues(d.block(i));
    values.insert(values.end(), ev.begin(), ev.end());
  }
  return SpectralData::from_values(std::move(values));
}

SparseMatrix lift(const SparseMatrix& op, Index spinor_dim) {
  return kron(op, sparse_identity(spinor_dim));
}

namespace {

struct CommutatorParts {
  SparseMatrix commutator;
  std::vector<Index> cols;
  double formula_deviation = 0.0;
};

CommutatorParts commutator_parts(const BlockDiracOperator& d, const FourierElement& a,
                                 const ThetaMatrix& theta) {
  const TruncatedGNS& h = d.gns();
  const SparseMatrix pa = lift(gns_operator(a, h, theta), d.spinor_dim());
  const SparseMatrix dm = d.matrix();

  CommutatorParts out;
  out.commutator = dm * pa - pa * dm;

  SparseMatrix formula(d.dim(), d.dim());
  for (std::size_t k = 0; k < d.active().size(); ++k) {
    const FourierElement da = derivation(d.active()[k], a);
    if (da.empty()) continue;
    formula += kron(gns_operator(da, h, theta), d.generator(k));
  }

  for (Index i : h.interior(a.radius())) {
    for (Index s = 0; s < d.spinor_dim(); ++s) out.cols.push_back(i * d.spinor_dim() + s);
  }
  out.formula_deviation = max_column_diff(out.commutator, formula, out.cols);
  return out;
}

}  // namespace

CommutatorResult commutator_with(const BlockDiracOperator& d, const FourierElement& a,
                                 const ThetaMatrix& theta, double tolerance) {
  CommutatorParts parts = commutator_parts(d, a, theta);
  if (parts.formula_deviation > tolerance) {
    throw VerificationError("commutator_with: [D, a] differs from sum d_j(a) (x) F_j by " +
                            std::to_string(parts.formula_deviation));
  }
  CommutatorResult out;
  out.formula_deviation = parts.formula_deviation;
  out.interior_norm = largest_singular_value(select_columns(parts.commutator, parts.cols));
  out.commutator = std::move(parts.commutator);
  return out;
}

double commutator_formula_deviation(const BlockDiracOperator& d, const FourierElement& a,
                                    const ThetaMatrix& theta) {
  return commutator_parts(d, a, theta).formula_deviation;
}

SparseMatrix grading(const BlockDiracOperator& d, double tolerance) {
  const CliffordRep& cliff = d.clifford();
  if (!cliff.gammaS) {
    throw std::invalid_argument("grading: no grading for odd Clifford degree n = " +
                                std::to_string(cliff.n));
  }
  const SparseMatrix gamma = kron(sparse_identity(d.gns().dim()), *cliff.gammaS);
  const SparseMatrix id = sparse_identity(d.dim());
  if (max_abs_diff(SparseMatrix(gamma * gamma), id) > tolerance) {
    throw VerificationError("grading: gamma^2 != 1");
  }
  if (max_abs_diff(SparseMatrix(gamma.adjoint()), gamma) > tolerance) {
    throw VerificationError("grading: gamma not selfadjoint");
  }
  const SparseMatrix dm = d.matrix();
  if (max_abs(SparseMatrix(gamma * dm + dm * gamma)) > tolerance * std::max(1.0, max_abs(dm))) {
    throw VerificationError("grading: gamma D != -D gamma");
  }
  return gamma;
}

double grading_commutator_deviation(const BlockDiracOperator& d, const SparseMatrix& gamma,
                                    const FourierElement& a, const ThetaMatrix& theta) {
  const SparseMatrix pa = lift(gns_operator(a, d.gns(), theta), d.spinor_dim());
  return max_abs(SparseMatrix(gamma * pa - pa * gamma));
}

std::string to_string(ResolventVerdict v) {
  switch (v) {
    case ResolventVerdict::Plausible: return "compact-resolvent plausible";
    case ResolventVerdict::Fails: return "fails compact resolvent";
    case ResolventVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

KernelProbe kernel_growth_probe(const CliffordRep& cliff, int algebra_dim,
                                const std::vector<int>& active, const std::vector<int>& radii,
                                double zero_tolerance) {
  if (radii.empty()) throw std::invalid_argument("kernel_growth_probe: no truncations given");
  std::vector<int> sorted = radii;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) throw std::invalid_argument("kernel_growth_probe: negative radius");

  KernelProbe probe;
  const double base = static_cast<double>(sorted.front());
  probe.windows = {0.0, kPi * base, 2.0 * kPi * base};

  for (int radius : sorted) {
    const BlockDiracOperator d(cliff, TruncatedGNS(algebra_dim, radius), active);
    const SpectralData spec = spectrum(d);
    KernelProbeRow row;
    row.radius = radius;
    row.kernel = spec.kernel_dimension(zero_tolerance);
    for (double w : probe.windows) {
      std::size_t count = 0;
      for (const auto& e : spec.entries()) {
        if (std::abs(e.value) <= w + zero_tolerance) count += e.multiplicity;
      }
      row.window_counts.push_back(count);
    }
    probe.rows.push_back(std::move(row));
  }

  if (probe.rows.size() < 2) return probe;
  bool kernel_grows = false;
  bool all_stable = true;
  for (std::size_t i = 1; i < probe.rows.size(); ++i) {
    if (probe.rows[i].kernel > probe.rows[i - 1].kernel) kernel_grows = true;
    if (probe.rows[i].window_counts != probe.rows[i - 1].window_counts) all_stable = false;
  }
  probe.verdict = kernel_grows ? ResolventVerdict::Fails
                  : all_stable ? ResolventVerdict::Plausible
                               : ResolventVerdict::Inconclusive;
  return probe;
}

}  // namespace ncspec
