#include <doctest.h>

#include <random>

#include "ncspec/axioms.hpp"
#include "test_support.hpp"

using namespace ncspec;
using ncspec::testing::random_hermitian;
using ncspec::testing::random_monomial;
using ncspec::testing::random_theta;

namespace {

constexpr double kTol = 1e-10;

// Synthetic (D, J) pair with J^2 = eps_j and J D = eps_d D J.
std::pair<ComplexMatrix, AntiUnitary> synthetic_pair(Sign eps_j, Sign eps_d, Index half,
                                                     std::mt19937_64& rng) {
  const Index dim = 2 * half;
  ComplexMatrix c = ComplexMatrix::Identity(dim, dim);
  if (eps_j == Sign::Minus) {
    ComplexMatrix w(2, 2);
    w << 0.0, 1.0, -1.0, 0.0;
    c = kron(ComplexMatrix::Identity(half, half), w);
  }
  const ComplexMatrix h = random_hermitian(dim, rng);
  const ComplexMatrix d = (h + Complex(to_int(eps_d)) * c * h.conjugate() * c.adjoint()) / 2.0;
  return {d, AntiUnitary(c)};
}

}  // namespace

TEST_CASE("real structure at theta = 0 is plain reflection") {
  const TruncatedGNS h(2, 3);
  const RealStructure j = build_real_structure(build_clifford(2), h, ThetaMatrix::zero(2));
  const SparseMatrix& c0 = j.J0.matrix();
  for (Index i = 0; i < h.dim(); ++i) {
    LatticePoint p = h.point(i);
    for (int& x : p) x = -x;
    CHECK(std::abs(c0.coeff(*h.index(p), i) - 1.0) < 1e-14);
  }
}

TEST_CASE("real structure is antiunitary with the table square") {
  std::mt19937_64 rng(71);
  for (int n : {1, 2, 3, 4}) {
    CAPTURE(n);
    const CliffordRep cliff = build_clifford(n);
    const TruncatedGNS h(n, n <= 2 ? 4 : 2);
    const RealStructure j = build_real_structure(cliff, h, random_theta(n, rng));
    CHECK(norm_preservation_deviation(j.J, 50, 5) < kTol);
    const Index dim = h.dim() * cliff.dim;
    const SparseMatrix expect = Complex(to_int(expected_signs(n).j)) * sparse_identity(dim);
    CHECK(max_abs_diff(j.J.square(), expect) < kTol);
    CHECK(j.signs == expected_signs(n));
  }
}

TEST_CASE("opposite action is right multiplication") {
  std::mt19937_64 rng(73);
  for (int n : {2, 3}) {
    const ThetaMatrix theta = random_theta(n, rng);
    const TruncatedGNS h(n, 5);
    const RealStructure j = build_real_structure(build_clifford(n), h, theta);
    for (int s = 0; s < 20; ++s) {
      CHECK(opposite_action_deviation(random_monomial(n, 2, rng), j, h, theta) < kTol);
    }
  }
}

TEST_CASE("order conditions on random monomial pairs") {
  std::mt19937_64 rng(79);
  for (int n : {2, 3}) {
    CAPTURE(n);
    const ThetaMatrix theta = random_theta(n, rng);
    const CliffordRep cliff = build_clifford(n);
    const TruncatedGNS h(n, 6);
    const auto d = assemble_dirac(cliff, h);
    const RealStructure j = build_real_structure(cliff, h, theta);
    for (int s = 0; s < 20; ++s) {
      const auto a = random_monomial(n, 2, rng);
      const auto b = random_monomial(n, 2, rng);
      CHECK(check_zeroth_order(a, b, j, h, theta) < kTol);
      CHECK(check_first_order(d, a, b, j, theta) < kTol);
    }
  }
}

TEST_CASE("order conditions fail for a broken opposite action") {
  // pi(b) itself does not commute with pi(a) when theta is irrational
  const ThetaMatrix theta = ThetaMatrix::uniform(2, 0.37);
  const TruncatedGNS h(2, 4);
  const auto u = gns_operator(FourierElement::generator(2, 0), h, theta);
  const auto v = gns_operator(FourierElement::generator(2, 1), h, theta);
  CHECK(max_column_norm(SparseMatrix(u * v - v * u), h.interior(1)) > 0.1);
}

TEST_CASE("order conditions need a nonempty interior") {
  const ThetaMatrix theta = ThetaMatrix::zero(2);
  const TruncatedGNS h(2, 2);
  const RealStructure j = build_real_structure(build_clifford(2), h, theta);
  const auto a = FourierElement::monomial({2, 0});
  CHECK_THROWS_AS(check_zeroth_order(a, a, j, h, theta), std::invalid_argument);
  CHECK(order_margin(a, FourierElement::monomial({0, 1})) == 4);
}

TEST_CASE("reality signs follow the table for n = 1..6") {
  std::mt19937_64 rng(83);
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const CliffordRep cliff = build_clifford(n);
    const TruncatedGNS h(n, n <= 3 ? 3 : 2);
    const auto d = assemble_dirac(cliff, h);
    const RealStructure j = build_real_structure(cliff, h, random_theta(n, rng));
    std::optional<SparseMatrix> gamma;
    if (cliff.even()) gamma = grading(d);
    const RealitySigns s = check_reality_signs(d, gamma, j);
    CHECK(s.measured == expected_signs(n));
    CHECK(s.j_square_deviation < kTol);
    CHECK(s.jd_deviation < kTol);
    CHECK(s.jgamma_deviation.has_value() == cliff.even());
  }
}

TEST_CASE("doubling on the 2-torus data") {
  const CliffordRep cliff = build_clifford(2);
  const TruncatedGNS h(2, 2);
  const auto d = assemble_dirac(cliff, h);
  const RealStructure j = build_real_structure(cliff, h, ThetaMatrix::uniform(2, 0.3));
  const DoublingResult r = doubling_trick(ComplexMatrix(d.matrix()), j.J, Sign::Minus, Sign::Plus);
  CHECK(r.passed());
  CHECK(r.stages.size() == 1);
  CHECK(r.D2.rows() == 2 * d.dim());
  CHECK(max_abs_diff(r.J2.square(), sparse_identity(r.J2.dim())) < 1e-12);
}

TEST_CASE("doubling: passthrough and the diag(1, -1) case") {
  std::mt19937_64 rng(89);
  auto [d, j] = synthetic_pair(Sign::Plus, Sign::Plus, 2, rng);
  const DoublingResult same = doubling_trick(d, j, Sign::Plus, Sign::Plus);
  CHECK(same.stages.empty());
  CHECK(max_abs_diff(same.D2, d) == 0.0);

  ComplexMatrix d2(2, 2);
  d2 << 1.0, 0.0, 0.0, -1.0;
  ComplexMatrix swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  const DoublingResult r = doubling_trick(d2, AntiUnitary(swap), Sign::Plus, Sign::Minus);
  CHECK(r.passed());
  REQUIRE(r.stages.size() == 1);
  CHECK(r.D2.rows() == 4);
}

TEST_CASE("doubling on random inputs, all four sign pairs") {
  std::mt19937_64 rng(97);
  int count = 0;
  for (Sign ej : {Sign::Plus, Sign::Minus}) {
    for (Sign ed : {Sign::Plus, Sign::Minus}) {
      for (int s = 0; s < 5; ++s) {
        auto [d, j] = synthetic_pair(ej, ed, 3, rng);
        const DoublingResult r = doubling_trick(d, j, ej, ed);
        CAPTURE(to_int(ej));
        CAPTURE(to_int(ed));
        CHECK(r.passed());
        const std::size_t stages = (ej == Sign::Minus ? 1 : 0) + (ed == Sign::Minus ? 1 : 0);
        CHECK(r.stages.size() == stages);
        CHECK(r.D2.rows() == d.rows() << stages);
        ++count;
      }
    }
  }
  CHECK(count == 20);
}

TEST_CASE("doubling rejects wrong signs") {
  std::mt19937_64 rng(101);
  auto [d, j] = synthetic_pair(Sign::Minus, Sign::Plus, 2, rng);
  CHECK_THROWS_AS(doubling_trick(d, j, Sign::Plus, Sign::Plus), std::invalid_argument);
  CHECK_THROWS_AS(doubling_trick(d, j, Sign::Minus, Sign::Minus), std::invalid_argument);
  CHECK_THROWS_AS(doubling_trick(ComplexMatrix::Identity(3, 3), j, Sign::Minus, Sign::Plus),
                  std::invalid_argument);
}
