#include <doctest.h>

#include <random>

#include "ncspec/nctorus.hpp"
#include "ncspec/serialize.hpp"
#include "test_support.hpp"

using namespace ncspec;
using ncspec::testing::random_element;
using ncspec::testing::random_monomial;
using ncspec::testing::random_theta;

namespace {

constexpr double kTol = 1e-10;

std::vector<Complex> unit_point(const std::vector<double>& turns) {
  std::vector<Complex> z;
  for (double t : turns) z.push_back(std::polar(1.0, 2.0 * kPi * t));
  return z;
}

std::vector<Index> interior_columns(const TruncatedGNS& h, int margin) { return h.interior(margin); }

}  // namespace

TEST_CASE("commutation relation of the generators") {
  for (double th : {0.0, 0.3, 0.37, -0.8}) {
    const ThetaMatrix theta = ThetaMatrix::uniform(2, th);
    const auto u = FourierElement::generator(2, 0);
    const auto v = FourierElement::generator(2, 1);
    const auto vu = multiply(v, u, theta);
    const auto uv = multiply(u, v, theta);
    CHECK(std::abs(vu.coefficient({1, 1}) - std::polar(1.0, 2.0 * kPi * theta(1, 0))) < kTol);
    CHECK(uv.distance(std::polar(1.0, 2.0 * kPi * th) * vu) < kTol);
  }
}

TEST_CASE("product phase is bilinear in the lower triangle") {
  std::mt19937_64 rng(3);
  const ThetaMatrix theta = random_theta(4, rng);
  const LatticePoint p{1, -2, 0, 3};
  const LatticePoint q{2, 1, -1, 0};
  double expect = 0.0;
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < j; ++k) expect += theta(j, k) * p[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k)];
  }
  CHECK(product_phase_angle(theta, p, q) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 4}) {
    const ThetaMatrix theta = random_theta(n, rng);
    const auto one = FourierElement::identity(n);
    for (int s = 0; s < 30; ++s) {
      const auto a = random_element(n, 3, 3, rng);
      const auto b = random_element(n, 3, 3, rng);
      const auto c = random_element(n, 3, 3, rng);
      CHECK(multiply(one, a, theta).distance(a) < kTol);
      CHECK(multiply(a, one, theta).distance(a) < kTol);
      CHECK(multiply(multiply(a, b, theta), c, theta).distance(multiply(a, multiply(b, c, theta), theta)) <
            kTol);
      CHECK(multiply(a, b + c, theta).distance(multiply(a, b, theta) + multiply(a, c, theta)) < kTol);
      CHECK(multiply(a + b, c, theta).distance(multiply(a, c, theta) + multiply(b, c, theta)) < kTol);
    }
  }
}

TEST_CASE("adjoint is an antimultiplicative involution") {
  std::mt19937_64 rng(7);
  for (int n : {2, 3, 4}) {
    const ThetaMatrix theta = random_theta(n, rng);
    for (int s = 0; s < 30; ++s) {
      const auto a = random_element(n, 2, 3, rng);
      const auto b = random_element(n, 2, 3, rng);
      CHECK(adjoint(adjoint(a, theta), theta).distance(a) < kTol);
      CHECK(adjoint(multiply(a, b, theta), theta)
                .distance(multiply(adjoint(b, theta), adjoint(a, theta), theta)) < kTol);
    }
  }
}

TEST_CASE("adjoint of a monomial has the closed-form phase") {
  // (U^p)* = c_p U^{-p} with c_p = exp(2 pi i phi(p, p))
  std::mt19937_64 rng(9);
  for (int n : {2, 3, 5}) {
    const ThetaMatrix theta = random_theta(n, rng);
    for (int s = 0; s < 20; ++s) {
      const auto m = random_monomial(n, 3, rng);
      const auto& [p, c] = *m.terms().begin();
      LatticePoint minus = p;
      for (int& x : minus) x = -x;
      const Complex expect = std::conj(c) * product_phase(theta, p, p);
      CHECK(std::abs(adjoint(m, theta).coefficient(minus) - expect) < kTol);
    }
  }
}

TEST_CASE("derivation") {
  const auto u = FourierElement::generator(2, 0);
  CHECK(derivation(0, u).distance(Complex(0.0, 2.0 * kPi) * u) < kTol);
  CHECK(derivation(1, u).empty());
  CHECK(derivation(0, FourierElement::identity(3)).empty());
  CHECK_THROWS_AS(derivation(2, u), std::out_of_range);

  std::mt19937_64 rng(13);
  for (int n : {2, 3}) {
    const ThetaMatrix theta = random_theta(n, rng);
    for (int s = 0; s < 20; ++s) {
      const auto a = random_element(n, 2, 3, rng);
      const auto b = random_element(n, 2, 3, rng);
      for (int j = 0; j < n; ++j) {
        const auto lhs = derivation(j, multiply(a, b, theta));
        const auto rhs = multiply(derivation(j, a), b, theta) + multiply(a, derivation(j, b), theta);
        CHECK(lhs.distance(rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("derivation matches a central difference of the torus action") {
  std::mt19937_64 rng(17);
  const int n = 3;
  const double h = 1e-5;
  for (int s = 0; s < 10; ++s) {
    const auto a = random_element(n, 2, 3, rng);
    for (int j = 0; j < n; ++j) {
      std::vector<double> plus(n, 0.0);
      std::vector<double> minus(n, 0.0);
      plus[static_cast<std::size_t>(j)] = h;
      minus[static_cast<std::size_t>(j)] = -h;
      const auto diff = Complex(1.0 / (2.0 * h)) *
                        (torus_action(a, unit_point(plus)) - torus_action(a, unit_point(minus)));
      CHECK(diff.distance(derivation(j, a)) < 1e-6);
    }
  }
}

TEST_CASE("trace") {
  std::mt19937_64 rng(19);
  const int n = 2;
  const ThetaMatrix theta = ThetaMatrix::uniform(n, 0.37);
  CHECK(std::abs(trace(FourierElement::identity(n)) - 1.0) < kTol);
  CHECK(std::abs(trace(FourierElement::monomial({1, -2}))) < kTol);

  for (int s = 0; s < 20; ++s) {
    const auto a = random_element(n, 2, 4, rng);
    // averaging alpha_z over 5th roots of unity keeps only the U^0 term
    FourierElement avg(n);
    const int m = 5;
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        avg += Complex(1.0 / (m * m)) *
               torus_action(a, unit_point({static_cast<double>(i) / m, static_cast<double>(k) / m}));
      }
    }
    CHECK(avg.distance(trace(a) * FourierElement::identity(n)) < kTol);

    const auto b = random_element(n, 2, 4, rng);
    CHECK(std::abs(trace(multiply(a, b, theta)) - trace(multiply(b, a, theta))) < kTol);

    const Complex pos = trace(multiply(adjoint(a, theta), a, theta));
    double norm2 = 0.0;
    for (const auto& [p, c] : a.terms()) norm2 += std::norm(c);
    CHECK(std::abs(pos.imag()) < kTol);
    CHECK(pos.real() == doctest::Approx(norm2).epsilon(1e-12));
  }
}

TEST_CASE("truncated GNS indexing") {
  const TruncatedGNS h(3, 2);
  CHECK(h.dim() == 125);
  CHECK(h.index({-2, -2, -2}) == Index{0});
  CHECK(h.index({-2, -2, -1}) == Index{1});
  CHECK(h.index({-1, -2, -2}) == Index{25});
  CHECK_FALSE(h.index({3, 0, 0}).has_value());
  for (Index i = 0; i < h.dim(); ++i) CHECK(h.index(h.point(i)) == i);
  CHECK(h.interior(2).size() == 1);
  CHECK(h.interior(3).empty());
}

TEST_CASE("GNS representation is a *-homomorphism on the interior") {
  std::mt19937_64 rng(23);
  for (int n : {2, 3}) {
    const ThetaMatrix theta = random_theta(n, rng);
    const TruncatedGNS h(n, 5);
    for (int s = 0; s < 10; ++s) {
      const auto a = random_element(n, 2, 3, rng);
      const auto b = random_element(n, 2, 3, rng);
      const auto cols = interior_columns(h, a.radius() + b.radius());
      const SparseMatrix lhs = gns_operator(a, h, theta) * gns_operator(b, h, theta);
      CHECK(max_column_diff(lhs, gns_operator(multiply(a, b, theta), h, theta), cols) < kTol);
      CHECK(max_abs_diff(gns_operator(adjoint(a, theta), h, theta),
                         SparseMatrix(gns_operator(a, h, theta).adjoint())) < kTol);
    }
  }
}

TEST_CASE("GNS operators of the generators") {
  const ThetaMatrix theta = ThetaMatrix::uniform(2, 0.3);
  const TruncatedGNS h(2, 4);
  const SparseMatrix u = gns_operator(FourierElement::generator(2, 0), h, theta);
  const SparseMatrix v = gns_operator(FourierElement::generator(2, 1), h, theta);
  const auto cols = h.interior(1);
  CHECK(max_column_diff(SparseMatrix(u * v), SparseMatrix(std::polar(1.0, 2.0 * kPi * 0.3) * (v * u)),
                        cols) < kTol);
  CHECK(std::abs(max_column_norm(u, cols) - 1.0) < kTol);
  CHECK(max_abs_diff(gns_operator(FourierElement::identity(2), h, theta), sparse_identity(h.dim())) <
        kTol);
  CHECK_THROWS_AS(gns_operator(FourierElement::monomial({5, 0}), h, theta), std::invalid_argument);
}

TEST_CASE("right multiplication") {
  std::mt19937_64 rng(29);
  const ThetaMatrix theta = random_theta(2, rng);
  const TruncatedGNS h(2, 5);
  const auto a = random_element(2, 2, 3, rng);
  const auto b = random_element(2, 2, 3, rng);
  const auto x = random_element(2, 1, 3, rng);
  // [x] b computed in the algebra vs on the basis
  ComplexVector vx = ComplexVector::Zero(h.dim());
  for (const auto& [p, c] : x.terms()) vx(*h.index(p)) = c;
  const ComplexVector got = gns_right_operator(b, h, theta) * vx;
  const auto xb = multiply(x, b, theta);
  for (const auto& [p, c] : xb.terms()) CHECK(std::abs(got(*h.index(p)) - c) < kTol);
  // left and right actions commute on the interior
  const auto cols = h.interior(a.radius() + b.radius());
  const SparseMatrix l = gns_operator(a, h, theta);
  const SparseMatrix r = gns_right_operator(b, h, theta);
  CHECK(max_column_norm(SparseMatrix(l * r - r * l), cols) < kTol);
}

TEST_CASE("torus action is implemented by diagonal unitaries") {
  std::mt19937_64 rng(31);
  const ThetaMatrix theta = random_theta(3, rng);
  const TruncatedGNS h(3, 3);
  std::uniform_real_distribution<double> turn(0.0, 1.0);
  for (int s = 0; s < 100; ++s) {
    const auto z = unit_point({turn(rng), turn(rng), turn(rng)});
    const SparseMatrix uz = torus_unitary(z, h);
    const auto a = random_element(3, 2, 3, rng);
    const SparseMatrix lhs = uz * gns_operator(a, h, theta) * SparseMatrix(uz.adjoint());
    CHECK(max_abs_diff(lhs, gns_operator(torus_action(a, z), h, theta)) < kTol);
    if (s == 0) {
      CHECK(max_abs_diff(SparseMatrix(uz * SparseMatrix(uz.adjoint())), sparse_identity(h.dim())) <
            kTol);
    }
  }
  CHECK(max_abs_diff(torus_unitary(unit_point({0, 0, 0}), h), sparse_identity(h.dim())) < kTol);
  CHECK_THROWS_AS(torus_unitary({1.0, 1.1, 1.0}, h), std::invalid_argument);
  for (int j = 0; j < 3; ++j) {
    const SparseMatrix g = gns_generator(j, h);
    CHECK(max_abs_diff(SparseMatrix(g.adjoint()), SparseMatrix(-g)) < kTol);
  }
}

TEST_CASE("isotypic projections") {
  const auto u = FourierElement::generator(2, 0);
  const auto v = FourierElement::generator(2, 1);
  CHECK(isotypic_projection(u + v, {1, 0}).distance(u) < kTol);

  std::mt19937_64 rng(37);
  const auto a = random_element(2, 3, 6, rng);
  FourierElement sum(2);
  for (int i = -3; i <= 3; ++i) {
    for (int k = -3; k <= 3; ++k) sum += isotypic_projection(a, {i, k});
  }
  CHECK(sum.distance(a) < kTol);

  // a_l U^l = integral of z^{-l} alpha_z(a), by a 64 x 64 quadrature
  const int q = 64;
  for (const LatticePoint& l : {LatticePoint{1, -2}, LatticePoint{0, 0}, LatticePoint{3, 3}}) {
    FourierElement integral(2);
    for (int i = 0; i < q; ++i) {
      for (int k = 0; k < q; ++k) {
        const double t1 = static_cast<double>(i) / q;
        const double t2 = static_cast<double>(k) / q;
        const Complex w = std::polar(1.0 / (q * q), -2.0 * kPi * (l[0] * t1 + l[1] * t2));
        integral += w * torus_action(a, unit_point({t1, t2}));
      }
    }
    CHECK(integral.distance(isotypic_projection(a, l)) < 1e-9);
  }
}

TEST_CASE("cyclic 2-cocycle") {
  const auto u = FourierElement::generator(2, 0);
  const auto v = FourierElement::generator(2, 1);
  const auto one = FourierElement::identity(2);
  for (double th : {0.0, 0.3, 0.37}) {
    const ThetaMatrix theta = ThetaMatrix::uniform(2, th);
    CHECK(std::abs(cyclic_cocycle_2d(one, one, one, theta)) < 1e-12);
    // oracle value: -4 pi^2
    const Complex val = cyclic_cocycle_2d(adjoint(multiply(u, v, theta), theta), u, v, theta);
    CHECK(std::abs(val - Complex(-39.47841760435743, 0.0)) < 1e-9);
  }

  std::mt19937_64 rng(41);
  const ThetaMatrix theta = random_theta(2, rng);
  const ThetaMatrix flat = ThetaMatrix::zero(2);
  for (int s = 0; s < 100; ++s) {
    const auto a0 = random_monomial(2, 2, rng);
    const auto a1 = random_monomial(2, 2, rng);
    const auto a2 = random_monomial(2, 2, rng);
    const auto a3 = random_monomial(2, 2, rng);
    const Complex f = cyclic_cocycle_2d(a0, a1, a2, theta);
    CHECK(std::abs(f - cyclic_cocycle_2d(a1, a2, a0, theta)) < 1e-9);
    CHECK(std::abs(cyclic_cocycle_2d(a0, a1, a2, flat) + cyclic_cocycle_2d(a0, a2, a1, flat)) < 1e-9);
    const Complex b = cyclic_cocycle_2d(multiply(a0, a1, theta), a2, a3, theta) -
                      cyclic_cocycle_2d(a0, multiply(a1, a2, theta), a3, theta) +
                      cyclic_cocycle_2d(a0, a1, multiply(a2, a3, theta), theta) -
                      cyclic_cocycle_2d(multiply(a3, a0, theta), a1, a2, theta);
    CHECK(std::abs(b) < 1e-9);
  }
}

TEST_CASE("swapping a1 and a2 picks up the commutation phase") {
  // For monomials a1 = U^p, a2 = U^q the swap multiplies the trace by
  // exp(2 pi i (phi(q, p) - phi(p, q))), so plain antisymmetry needs theta = 0.
  const auto u = FourierElement::generator(2, 0);
  const auto v = FourierElement::generator(2, 1);
  for (double th : {0.0, 0.25, 0.37}) {
    const ThetaMatrix theta = ThetaMatrix::uniform(2, th);
    const auto a0 = adjoint(multiply(u, v, theta), theta);
    const Complex uv = cyclic_cocycle_2d(a0, u, v, theta);
    const Complex vu = cyclic_cocycle_2d(a0, v, u, theta);
    CHECK(std::abs(vu + std::polar(1.0, -2.0 * kPi * th) * uv) < 1e-9);
  }
  CHECK_THROWS_AS(cyclic_cocycle_2d(FourierElement::identity(3), FourierElement::identity(3),
                                    FourierElement::identity(3), ThetaMatrix::zero(3)),
                  std::invalid_argument);
}

TEST_CASE("theta validation") {
  CHECK_THROWS_AS(ThetaMatrix(2, {0.0, 0.3, 0.3, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(ThetaMatrix(2, {0.1, 0.3, -0.3, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(ThetaMatrix(2, {0.0, 0.3, -0.3}), std::invalid_argument);
  const ThetaMatrix t = ThetaMatrix::uniform(3, 0.2);
  CHECK(t(0, 2) == doctest::Approx(0.2));
  CHECK(t(2, 0) == doctest::Approx(-0.2));
  CHECK(t.fingerprint() == ThetaMatrix::uniform(3, 0.2).fingerprint());
  CHECK(t.fingerprint() != ThetaMatrix::uniform(3, 0.21).fingerprint());
}

TEST_CASE("json round trips") {
  std::mt19937_64 rng(43);
  for (int s = 0; s < 20; ++s) {
    const auto a = random_element(3, 3, 4, rng);
    CHECK(fourier_from_json(Json::parse(to_json(a).dump())).distance(a) == 0.0);
    const ThetaMatrix t = random_theta(3, rng);
    CHECK(theta_from_json(Json::parse(to_json(t).dump())).entries() == t.entries());
  }
}
