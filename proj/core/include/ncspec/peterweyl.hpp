#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncspec/clifford.hpp"
#include "ncspec/spectral_data.hpp"

namespace ncspec {

enum class Group { Torus, SU2 };
std::string to_string(Group g);

/// One isotypic block E_l (x) S of the reference operator, used with
/// multiplicity m (0 <= m <= d = dim E_l).
struct WeightBlock {
  Group group = Group::Torus;
  /// Lattice point for T^n; a single entry l (twice the spin) for SU(2).
  std::vector<int> label;
  std::size_t d = 1;
  std::size_t m = 1;
  /// Spectrum of sum_j d pi_l(X_j) (x) F_j on E_l (x) S.
  SpectralData eigenvalues;
};

/// Weight blocks of T^n for |l_j| <= cutoff, d = m = 1, eigenvalues +-2 pi |l|.
std::vector<WeightBlock> torus_weight_blocks(int n, int cutoff);

/// Spin-(two_s/2) matrices (J_x, J_y, J_z) in the basis m = s, s-1, ..., -s.
std::array<ComplexMatrix, 3> spin_matrices(int two_s);

/// Block for the irreducible of dimension l + 1, with d pi_l(X_j) = i J_j.
/// Throws std::invalid_argument unless cliff3 has three generators.
WeightBlock su2_weight_block(int l, const CliffordRep& cliff3);
std::vector<WeightBlock> su2_weight_blocks(int cutoff, const CliffordRep& cliff3);

/// Union of block spectra, block i repeated multiplicities[i] times. Throws
/// std::invalid_argument when some m_l exceeds d_l (m_l <= d_l is required).
SpectralData subrepresentation_spectrum(std::span<const WeightBlock> blocks,
                                        std::span<const std::size_t> multiplicities);
/// Reference spectrum, m_l = d_l.
SpectralData reference_spectrum(std::span<const WeightBlock> blocks);

struct MajorizationResult {
  bool holds = true;
  /// 0-based index k of the first lambda_k(ref) > mu_k(sub).
  std::optional<std::size_t> first_violation;
};

/// Sorts |eigenvalues| ascending and checks lambda_k(ref) <= mu_k(sub) for every
/// k < |sub|.
MajorizationResult majorization_check(const SpectralData& sub, const SpectralData& ref,
                                      double tolerance = 1e-9);

}  // namespace ncspec
