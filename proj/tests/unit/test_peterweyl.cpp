#include <doctest.h>

#include <random>

#include "ncspec/dirac.hpp"
#include "ncspec/peterweyl.hpp"
#include "ncspec/summability.hpp"
#include "test_support.hpp"

using namespace ncspec;

namespace {

void check_block(const WeightBlock& b, std::vector<std::pair<double, std::size_t>> expect) {
  REQUIRE(b.eigenvalues.entries().size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(b.eigenvalues.entries()[i].value == doctest::Approx(expect[i].first).epsilon(1e-9));
    CHECK(b.eigenvalues.entries()[i].multiplicity == expect[i].second);
  }
}

}  // namespace

TEST_CASE("torus weight blocks reproduce the Dirac spectrum") {
  for (auto [n, cutoff] : {std::pair{1, 5}, std::pair{2, 4}, std::pair{3, 2}}) {
    const auto blocks = torus_weight_blocks(n, cutoff);
    CHECK(blocks.size() == static_cast<std::size_t>(std::pow(2 * cutoff + 1, n)));
    CHECK(blocks.front().label == std::vector<int>(static_cast<std::size_t>(n), -cutoff));
    const SpectralData ref = reference_spectrum(blocks);
    const SpectralData dirac = spectrum(assemble_dirac(build_clifford(n), TruncatedGNS(n, cutoff)));
    CHECK(ref.approx_equal(dirac));
  }
}

TEST_CASE("spin matrices satisfy the su(2) relations") {
  for (int two_s = 0; two_s <= 6; ++two_s) {
    const auto [jx, jy, jz] = spin_matrices(two_s);
    const double s = two_s / 2.0;
    const Index d = two_s + 1;
    CHECK(max_abs_diff(ComplexMatrix(jx * jy - jy * jx), ComplexMatrix(kI * jz)) < 1e-12);
    CHECK(max_abs_diff(ComplexMatrix(jy * jz - jz * jy), ComplexMatrix(kI * jx)) < 1e-12);
    CHECK(max_abs_diff(ComplexMatrix(jz * jx - jx * jz), ComplexMatrix(kI * jy)) < 1e-12);
    const ComplexMatrix casimir = jx * jx + jy * jy + jz * jz;
    CHECK(max_abs_diff(casimir, s * (s + 1.0) * ComplexMatrix::Identity(d, d)) < 1e-12);
    CHECK(std::abs(jz(0, 0) - s) < 1e-15);
  }
}

TEST_CASE("SU(2) blocks, frozen values") {
  const CliffordRep c3 = build_clifford(3);
  check_block(su2_weight_block(0, c3), {{0.0, 2}});
  check_block(su2_weight_block(1, c3), {{-0.5, 3}, {1.5, 1}});
  check_block(su2_weight_block(2, c3), {{-1.0, 4}, {2.0, 2}});
  check_block(su2_weight_block(3, c3), {{-1.5, 5}, {2.5, 3}});
  check_block(su2_weight_block(4, c3), {{-2.0, 6}, {3.0, 4}});
}

TEST_CASE("l = 1 block against a direct 4 x 4 diagonalization") {
  const CliffordRep c3 = build_clifford(3);
  // Pauli-matrix spin-1/2 written out independently of spin_matrices
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0.0, 0.5, 0.5, 0.0;
  sy << 0.0, Complex(0.0, -0.5), Complex(0.0, 0.5), 0.0;
  sz << 0.5, 0.0, 0.0, -0.5;
  const ComplexMatrix b = kron(ComplexMatrix(kI * sx), c3.F[0]) +
                          kron(ComplexMatrix(kI * sy), c3.F[1]) +
                          kron(ComplexMatrix(kI * sz), c3.F[2]);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(b);
  const auto& ev = es.eigenvalues();
  const SpectralData got = su2_weight_block(1, c3).eigenvalues;
  const auto flat = got.expanded();
  REQUIRE(flat.size() == 4);
  for (Index i = 0; i < 4; ++i) CHECK(std::abs(flat[static_cast<std::size_t>(i)] - ev(i)) < 1e-9);
}

TEST_CASE("SU(2) blocks obey B^2 - B = s(s+1) on the spinor product") {
  const CliffordRep c3 = build_clifford(3);
  for (int l = 0; l <= 8; ++l) {
    const WeightBlock b = su2_weight_block(l, c3);
    const double s = l / 2.0;
    CHECK(b.d == static_cast<std::size_t>(l + 1));
    CHECK(b.eigenvalues.total_multiplicity() == 2 * b.d);
    for (const auto& e : b.eigenvalues.entries()) {
      CHECK(e.value * e.value - e.value == doctest::Approx(s * (s + 1.0)));
    }
  }
  CHECK_THROWS_AS(su2_weight_block(1, build_clifford(2)), std::invalid_argument);
}

TEST_CASE("reference multiplicities sum to sum d_l^2") {
  const auto blocks = su2_weight_blocks(8, build_clifford(3));
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.d * b.d;
  CHECK(total == 285);
  CHECK(reference_spectrum(blocks).total_multiplicity() == 2 * 285);
}

TEST_CASE("subrepresentations") {
  const auto blocks = su2_weight_blocks(3, build_clifford(3));
  const std::vector<std::size_t> none(blocks.size(), 0);
  CHECK(subrepresentation_spectrum(blocks, none).empty());
  const std::vector<std::size_t> too_many = {1, 3, 0, 0};
  CHECK_THROWS_WITH_AS(subrepresentation_spectrum(blocks, too_many), doctest::Contains("m_l <= d_l"),
                       std::invalid_argument);
  const std::vector<std::size_t> short_list = {1};
  CHECK_THROWS_AS(subrepresentation_spectrum(blocks, short_list), std::invalid_argument);

  const std::vector<std::size_t> some = {1, 0, 2, 1};
  const SpectralData s = subrepresentation_spectrum(blocks, some);
  CHECK(s.total_multiplicity() == 2 * (1 + 2 * 3 + 4));
}

TEST_CASE("majorization and monotone comparison on random subrepresentations") {
  const auto blocks = su2_weight_blocks(8, build_clifford(3));
  const SpectralData ref = reference_spectrum(blocks);
  const SummabilityReport ref_report = sigma_sequence(ref, 3.0);
  std::mt19937_64 rng(103);
  int checked = 0;
  for (int c = 0; c < 200; ++c) {
    std::vector<std::size_t> m;
    for (const auto& b : blocks) m.push_back(std::uniform_int_distribution<std::size_t>(0, b.d)(rng));
    const SpectralData sub = subrepresentation_spectrum(blocks, m);
    if (sub.empty()) continue;
    CHECK(majorization_check(sub, ref).holds);
    CHECK(monotone_comparison(sigma_sequence(sub, 3.0), ref_report));
    ++checked;
  }
  CHECK(checked > 190);
}

TEST_CASE("majorization reports the first violation") {
  const auto blocks = su2_weight_blocks(1, build_clifford(3));
  const SpectralData ref = reference_spectrum(blocks);  // |.| = 0 x2, 0.5 x6, 1.5 x2
  const SpectralData fake = SpectralData::from_entries({{0.0, 3}});
  const MajorizationResult r = majorization_check(fake, ref);
  CHECK_FALSE(r.holds);
  REQUIRE(r.first_violation);
  CHECK(*r.first_violation == 2);

  // more eigenvalues than the reference has
  const SpectralData longer = SpectralData::from_entries({{5.0, 11}});
  const MajorizationResult l = majorization_check(longer, ref);
  CHECK_FALSE(l.holds);
  REQUIRE(l.first_violation);
  CHECK(*l.first_violation == 10);
}
