#include "ncspec/peterweyl.hpp"

#include <cmath>
#include <stdexcept>

namespace ncspec {

std::string to_string(Group g) { return g == Group::Torus ? "T^n" : "SU(2)"; }

std::vector<WeightBlock> torus_weight_blocks(int n, int cutoff) {
  if (n < 1) throw std::invalid_argument("torus_weight_blocks: n must be positive");
  if (cutoff < 0) throw std::invalid_argument("torus_weight_blocks: cutoff must be nonnegative");
  const CliffordRep cliff = build_clifford(n);
  std::vector<WeightBlock> blocks;

  std::vector<int> l(static_cast<std::size_t>(n), -cutoff);
  while (true) {
    ComplexMatrix b = ComplexMatrix::Zero(cliff.dim, cliff.dim);
    for (int j = 0; j < n; ++j) {
      b += (2.0 * kPi * l[static_cast<std::size_t>(j)]) * (kI * cliff.F[static_cast<std::size_t>(j)]);
    }
    blocks.push_back({Group::Torus, l, 1, 1, SpectralData::from_values(hermitian_eigenvalues(b))});

    // odometer over the box, last coordinate fastest
    int j = n - 1;
    while (j >= 0 && l[static_cast<std::size_t>(j)] == cutoff) {
      l[static_cast<std::size_t>(j)] = -cutoff;
      --j;
    }
    if (j < 0) break;
    ++l[static_cast<std::size_t>(j)];
  }
  return blocks;
}

std::array<ComplexMatrix, 3> spin_matrices(int two_s) {
  if (two_s < 0) throw std::invalid_argument("spin_matrices: negative spin");
  const Index d = two_s + 1;
  const double s = two_s / 2.0;
  ComplexMatrix jz = ComplexMatrix::Zero(d, d);
  ComplexMatrix jp = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    const double m = s - static_cast<double>(i);
    jz(i, i) = m;
    // J+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>, and |m+1> sits at index i-1
    if (i > 0) jp(i - 1, i) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
  }
  const ComplexMatrix jm = jp.adjoint();
  const ComplexMatrix jx = (jp + jm) / 2.0;
  const ComplexMatrix jy = (jp - jm) / (2.0 * kI);
  return {jx, jy, jz};
}

WeightBlock su2_weight_block(int l, const CliffordRep& cliff3) {
  if (cliff3.n != 3) {
    throw std::invalid_argument("su2_weight_block: need a Cl(3) representation, got n = " +
                                std::to_string(cliff3.n));
  }
  if (l < 0) throw std::invalid_argument("su2_weight_block: negative label");
  const auto spin = spin_matrices(l);
  ComplexMatrix b = ComplexMatrix::Zero((l + 1) * cliff3.dim, (l + 1) * cliff3.dim);
  for (std::size_t j = 0; j < 3; ++j) b += kron(kI * spin[j], cliff3.F[j]);
  const auto d = static_cast<std::size_t>(l + 1);
  return {Group::SU2, {l}, d, d, SpectralData::from_values(hermitian_eigenvalues(b))};
}

std::vector<WeightBlock> su2_weight_blocks(int cutoff, const CliffordRep& cliff3) {
  if (cutoff < 0) throw std::invalid_argument("su2_weight_blocks: cutoff must be nonnegative");
  std::vector<WeightBlock> blocks;
  for (int l = 0; l <= cutoff; ++l) blocks.push_back(su2_weight_block(l, cliff3));
  return blocks;
}

SpectralData subrepresentation_spectrum(std::span<const WeightBlock> blocks,
                                        std::span<const std::size_t> multiplicities) {
  if (blocks.size() != multiplicities.size()) {
    throw std::invalid_argument("subrepresentation_spectrum: one multiplicity per block required");
  }
  std::vector<Eigenvalue> entries;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::size_t m = multiplicities[i];
    if (m > blocks[i].d) {
      throw std::invalid_argument("subrepresentation_spectrum: multiplicity " + std::to_string(m) +
                                  " exceeds d = " + std::to_string(blocks[i].d) +
                                  " (m_l <= d_l is required)");
    }
    if (m == 0) continue;
    for (const auto& e : blocks[i].eigenvalues.entries()) {
      entries.push_back({e.value, e.multiplicity * m});
    }
  }
  return SpectralData::from_entries(std::move(entries));
}

SpectralData reference_spectrum(std::span<const WeightBlock> blocks) {
  std::vector<std::size_t> full;
  full.reserve(blocks.size());
  for (const auto& b : blocks) full.push_back(b.d);
  return subrepresentation_spectrum(blocks, full);
}

MajorizationResult majorization_check(const SpectralData& sub, const SpectralData& ref,
                                      double tolerance) {
  const std::vector<double> mu = sub.abs_sorted();
  const std::vector<double> lambda = ref.abs_sorted();
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (k >= lambda.size() || lambda[k] > mu[k] + tolerance) return {false, k};
  }
  return {true, std::nullopt};
}

}  // namespace ncspec
