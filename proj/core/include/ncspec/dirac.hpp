#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncspec/clifford.hpp"
#include "ncspec/nctorus.hpp"
#include "ncspec/spectral_data.hpp"

namespace ncspec {

/// D = sum_{j in active} d_j (x) F_j on the truncated GNS space tensored with
/// the spinor space. D is diagonal in the lattice basis, so it is stored as one
/// Hermitian block per lattice point: block(p) = sum_j 2 pi p_j (i F_j).
///
/// Generator pairing: if cliff.n == |active|, the k-th active direction uses
/// F_k. If cliff.n equals the lattice dimension, direction j uses F_j, i.e. the
/// ambient spinor module restricted to the active directions.
class BlockDiracOperator {
 public:
  BlockDiracOperator(CliffordRep cliff, TruncatedGNS gns, std::vector<int> active);

  [[nodiscard]] int algebra_dim() const { return gns_.n(); }
  [[nodiscard]] const std::vector<int>& active() const { return active_; }
  [[nodiscard]] bool ergodic() const { return static_cast<int>(active_.size()) == gns_.n(); }
  [[nodiscard]] const CliffordRep& clifford() const { return cliff_; }
  [[nodiscard]] const TruncatedGNS& gns() const { return gns_; }
  [[nodiscard]] Index spinor_dim() const { return cliff_.dim; }
  [[nodiscard]] Index dim() const { return gns_.dim() * cliff_.dim; }

  /// Clifford generator paired with active_[k].
  [[nodiscard]] const ComplexMatrix& generator(std::size_t k) const {
    return cliff_.F[generator_index_[k]];
  }
  [[nodiscard]] const ComplexMatrix& block(Index gns_index) const {
    return blocks_[static_cast<std::size_t>(gns_index)];
  }
  /// Block at an arbitrary lattice point (not necessarily inside the box).
  [[nodiscard]] ComplexMatrix block_at(const LatticePoint& p) const;
  /// The full operator on H_0 (x) S; index = gns_index * spinor_dim + s.
  [[nodiscard]] SparseMatrix matrix() const;
  [[nodiscard]] double max_block_norm() const;

 private:
  CliffordRep cliff_;
  TruncatedGNS gns_;
  std::vector<int> active_;
  std::vector<std::size_t> generator_index_;
  std::vector<ComplexMatrix> blocks_;
};

BlockDiracOperator assemble_dirac(const CliffordRep& cliff, const TruncatedGNS& gns,
                                  std::vector<int> active);
/// Ergodic case: every direction active.
BlockDiracOperator assemble_dirac(const CliffordRep& cliff, const TruncatedGNS& gns);

/// Union of the block spectra.
SpectralData spectrum(const BlockDiracOperator& d);

/// op (x) 1_S
SparseMatrix lift(const SparseMatrix& op, Index spinor_dim);

struct CommutatorResult {
  SparseMatrix commutator;
  /// Largest singular value of the commutator restricted to interior vectors.
  double interior_norm = 0.0;
  /// Interior deviation between [D, pi(a) (x) 1] and sum_j pi(d_j a) (x) F_j.
  double formula_deviation = 0.0;
};

/// Throws VerificationError if the two routes differ by more than tolerance.
CommutatorResult commutator_with(const BlockDiracOperator& d, const FourierElement& a,
                                 const ThetaMatrix& theta, double tolerance = 1e-10);

/// Only the formula deviation; skips the norm estimate.
double commutator_formula_deviation(const BlockDiracOperator& d, const FourierElement& a,
                                    const ThetaMatrix& theta);

/// gamma = 1 (x) gammaS. Throws std::invalid_argument for odd Clifford degree
/// and VerificationError if gamma^2 = 1, gamma^H = gamma or gamma D = -D gamma fail.
SparseMatrix grading(const BlockDiracOperator& d, double tolerance = 1e-12);

/// Max entry of [gamma, pi(a) (x) 1].
double grading_commutator_deviation(const BlockDiracOperator& d, const SparseMatrix& gamma,
                                    const FourierElement& a, const ThetaMatrix& theta);

enum class ResolventVerdict { Plausible, Fails, Inconclusive };
std::string to_string(ResolventVerdict v);

struct KernelProbeRow {
  int radius = 0;
  std::size_t kernel = 0;
  /// Eigenvalue counts in [-window, window], aligned with KernelProbe::windows.
  std::vector<std::size_t> window_counts;
};

struct KernelProbe {
  std::vector<double> windows;
  std::vector<KernelProbeRow> rows;
  /// Absent when fewer than two truncations were probed.
  std::optional<ResolventVerdict> verdict;
};

/// Tracks kernel and low-window multiplicities as the box grows. Windows are
/// {0, pi N_min, 2 pi N_min}, all fully resolved by every probed box.
KernelProbe kernel_growth_probe(const CliffordRep& cliff, int algebra_dim,
                                const std::vector<int>& active, const std::vector<int>& radii,
                                double zero_tolerance = 1e-9);

}  // namespace ncspec
