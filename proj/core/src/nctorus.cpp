#include "ncspec/nctorus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>

namespace ncspec {

namespace {

void require_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

LatticePoint add_points(const LatticePoint& p, const LatticePoint& q) {
  LatticePoint r(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) r[j] = p[j] + q[j];
  return r;
}

Complex z_power(const std::vector<Complex>& z, const LatticePoint& p) {
  Complex out{1.0, 0.0};
  for (std::size_t j = 0; j < p.size(); ++j) out *= std::pow(z[j], p[j]);
  return out;
}

}  // namespace

ThetaMatrix::ThetaMatrix(int n, std::vector<double> row_major, double tolerance)
    : n_(n), entries_(std::move(row_major)) {
  if (n < 1) throw std::invalid_argument("ThetaMatrix: n must be positive");
  if (entries_.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("ThetaMatrix: expected " + std::to_string(n * n) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (std::abs((*this)(j, k) + (*this)(k, j)) > tolerance) {
        throw std::invalid_argument("ThetaMatrix: not antisymmetric at (" + std::to_string(j + 1) +
                                    ", " + std::to_string(k + 1) + ")");
      }
    }
  }
}

ThetaMatrix ThetaMatrix::zero(int n) {
  return ThetaMatrix(n, std::vector<double>(static_cast<std::size_t>(n * n), 0.0));
}

ThetaMatrix ThetaMatrix::uniform(int n, double value) {
  std::vector<double> e(static_cast<std::size_t>(n * n), 0.0);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j < k) e[static_cast<std::size_t>(j * n + k)] = value;
      if (j > k) e[static_cast<std::size_t>(j * n + k)] = -value;
    }
  }
  return ThetaMatrix(n, std::move(e));
}

std::string ThetaMatrix::fingerprint() const {
  // FNV-1a over the raw bytes of n and the entries.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  mix(&n_, sizeof n_);
  for (double v : entries_) {
    const double normalized = v == 0.0 ? 0.0 : v;  // fold -0.0
    mix(&normalized, sizeof normalized);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double product_phase_angle(const ThetaMatrix& theta, const LatticePoint& p, const LatticePoint& q) {
  const int n = theta.n();
  double s = 0.0;
  for (int j = 1; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      s += theta(j, k) * p[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k)];
    }
  }
  return s;
}

Complex product_phase(const ThetaMatrix& theta, const LatticePoint& p, const LatticePoint& q) {
  return std::polar(1.0, 2.0 * kPi * product_phase_angle(theta, p, q));
}

FourierElement::FourierElement(int n, Terms terms) : FourierElement(n) {
  for (auto& [p, c] : terms) add(p, c);
}

FourierElement FourierElement::identity(int n) {
  FourierElement e(n);
  e.add(LatticePoint(static_cast<std::size_t>(n), 0), 1.0);
  return e;
}

FourierElement FourierElement::monomial(LatticePoint p, Complex c) {
  FourierElement e(static_cast<int>(p.size()));
  e.add(p, c);
  return e;
}

FourierElement FourierElement::generator(int n, int direction) {
  if (direction < 0 || direction >= n) {
    throw std::out_of_range("FourierElement::generator: direction out of range");
  }
  LatticePoint p(static_cast<std::size_t>(n), 0);
  p[static_cast<std::size_t>(direction)] = 1;
  return monomial(std::move(p));
}

Complex FourierElement::coefficient(const LatticePoint& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Complex{} : it->second;
}

int FourierElement::radius() const {
  int r = 0;
  for (const auto& [p, c] : terms_) {
    for (int x : p) r = std::max(r, std::abs(x));
  }
  return r;
}

void FourierElement::add(const LatticePoint& p, Complex c) {
  if (static_cast<int>(p.size()) != n_) {
    throw std::invalid_argument("FourierElement::add: lattice point has wrong dimension");
  }
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

FourierElement& FourierElement::operator+=(const FourierElement& other) {
  require_same_n(n_, other.n_, "FourierElement::operator+=");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

FourierElement& FourierElement::operator-=(const FourierElement& other) {
  require_same_n(n_, other.n_, "FourierElement::operator-=");
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

FourierElement operator*(Complex s, FourierElement a) {
  FourierElement out(a.n());
  for (const auto& [p, c] : a.terms()) out.add(p, s * c);
  return out;
}

double FourierElement::distance(const FourierElement& other) const {
  require_same_n(n_, other.n_, "FourierElement::distance");
  double d = 0.0;
  for (const auto& [p, c] : terms_) d = std::max(d, std::abs(c - other.coefficient(p)));
  for (const auto& [p, c] : other.terms_) d = std::max(d, std::abs(c - coefficient(p)));
  return d;
}

FourierElement multiply(const FourierElement& a, const FourierElement& b, const ThetaMatrix& theta) {
  require_same_n(a.n(), b.n(), "multiply");
  require_same_n(a.n(), theta.n(), "multiply (theta)");
  FourierElement out(a.n());
  for (const auto& [p, x] : a.terms()) {
    for (const auto& [q, y] : b.terms()) {
      out.add(add_points(p, q), x * y * product_phase(theta, p, q));
    }
  }
  return out;
}

FourierElement adjoint(const FourierElement& a, const ThetaMatrix& theta) {
  require_same_n(a.n(), theta.n(), "adjoint");
  const int n = a.n();
  FourierElement out(n);
  for (const auto& [p, c] : a.terms()) {
    // (U_1^{p_1} ... U_n^{p_n})* = U_n^{-p_n} ... U_1^{-p_1}
    FourierElement word = FourierElement::identity(n);
    for (int j = n - 1; j >= 0; --j) {
      LatticePoint factor(static_cast<std::size_t>(n), 0);
      factor[static_cast<std::size_t>(j)] = -p[static_cast<std::size_t>(j)];
      word = multiply(word, FourierElement::monomial(std::move(factor)), theta);
    }
    out += std::conj(c) * word;
  }
  return out;
}

FourierElement derivation(int direction, const FourierElement& a) {
  if (direction < 0 || direction >= a.n()) {
    throw std::out_of_range("derivation: direction " + std::to_string(direction) +
                            " out of range for n = " + std::to_string(a.n()));
  }
  FourierElement out(a.n());
  for (const auto& [p, c] : a.terms()) {
    out.add(p, 2.0 * kPi * kI * static_cast<double>(p[static_cast<std::size_t>(direction)]) * c);
  }
  return out;
}

Complex trace(const FourierElement& a) {
  return a.coefficient(LatticePoint(static_cast<std::size_t>(a.n()), 0));
}

FourierElement torus_action(const FourierElement& a, const std::vector<Complex>& z) {
  require_same_n(a.n(), static_cast<int>(z.size()), "torus_action");
  FourierElement out(a.n());
  for (const auto& [p, c] : a.terms()) out.add(p, z_power(z, p) * c);
  return out;
}

FourierElement isotypic_projection(const FourierElement& a, const LatticePoint& l) {
  require_same_n(a.n(), static_cast<int>(l.size()), "isotypic_projection");
  FourierElement out(a.n());
  out.add(l, a.coefficient(l));
  return out;
}

Complex cyclic_cocycle_2d(const FourierElement& a0, const FourierElement& a1,
                          const FourierElement& a2, const ThetaMatrix& theta) {
  if (a0.n() != 2 || a1.n() != 2 || a2.n() != 2 || theta.n() != 2) {
    throw std::invalid_argument("cyclic_cocycle_2d: defined for the 2-torus only");
  }
  const FourierElement wedge = multiply(derivation(0, a1), derivation(1, a2), theta) -
                               multiply(derivation(1, a1), derivation(0, a2), theta);
  return trace(multiply(a0, wedge, theta));
}

TruncatedGNS::TruncatedGNS(int n, int radius) : n_(n), radius_(radius), dim_(1) {
  if (n < 1) throw std::invalid_argument("TruncatedGNS: n must be positive");
  if (radius < 0) throw std::invalid_argument("TruncatedGNS: radius must be nonnegative");
  for (int j = 0; j < n; ++j) dim_ *= 2 * radius + 1;
}

bool TruncatedGNS::contains(const LatticePoint& p) const {
  if (static_cast<int>(p.size()) != n_) return false;
  return std::all_of(p.begin(), p.end(), [this](int x) { return std::abs(x) <= radius_; });
}

std::optional<Index> TruncatedGNS::index(const LatticePoint& p) const {
  if (!contains(p)) return std::nullopt;
  Index i = 0;
  for (int x : p) i = i * (2 * radius_ + 1) + (x + radius_);
  return i;
}

LatticePoint TruncatedGNS::point(Index i) const {
  if (i < 0 || i >= dim_) throw std::out_of_range("TruncatedGNS::point: index out of range");
  LatticePoint p(static_cast<std::size_t>(n_));
  const Index side = 2 * radius_ + 1;
  for (int j = n_ - 1; j >= 0; --j) {
    p[static_cast<std::size_t>(j)] = static_cast<int>(i % side) - radius_;
    i /= side;
  }
  return p;
}

std::vector<Index> TruncatedGNS::interior(int margin) const {
  std::vector<Index> out;
  const int r = radius_ - margin;
  if (r < 0) return out;
  for (Index i = 0; i < dim_; ++i) {
    const LatticePoint p = point(i);
    if (std::all_of(p.begin(), p.end(), [r](int x) { return std::abs(x) <= r; })) out.push_back(i);
  }
  return out;
}

namespace {

template <typename PhaseFn>
SparseMatrix shift_operator(const FourierElement& a, const TruncatedGNS& h, PhaseFn phase) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(h.dim()) * a.terms().size());
  for (Index col = 0; col < h.dim(); ++col) {
    const LatticePoint p = h.point(col);
    for (const auto& [q, c] : a.terms()) {
      if (const auto row = h.index(add_points(p, q))) {
        triplets.emplace_back(*row, col, c * phase(q, p));
      }
    }
  }
  SparseMatrix out(h.dim(), h.dim());
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

void check_fits(const FourierElement& a, const TruncatedGNS& h, const ThetaMatrix& theta,
                const char* what) {
  require_same_n(a.n(), h.n(), what);
  require_same_n(a.n(), theta.n(), what);
  if (a.radius() > h.radius()) {
    throw std::invalid_argument(std::string(what) + ": element radius " + std::to_string(a.radius()) +
                                " exceeds truncation " + std::to_string(h.radius()));
  }
}

}  // namespace

SparseMatrix gns_operator(const FourierElement& a, const TruncatedGNS& h, const ThetaMatrix& theta) {
  check_fits(a, h, theta, "gns_operator");
  // U^q delta_p = e^{2 pi i phi(q, p)} delta_{q+p}
  return shift_operator(a, h, [&theta](const LatticePoint& q, const LatticePoint& p) {
    return product_phase(theta, q, p);
  });
}

SparseMatrix gns_right_operator(const FourierElement& b, const TruncatedGNS& h, const ThetaMatrix& theta) {
  check_fits(b, h, theta, "gns_right_operator");
  // delta_p U^q = e^{2 pi i phi(p, q)} delta_{p+q}
  return shift_operator(b, h, [&theta](const LatticePoint& q, const LatticePoint& p) {
    return product_phase(theta, p, q);
  });
}

SparseMatrix torus_unitary(const std::vector<Complex>& z, const TruncatedGNS& h) {
  require_same_n(static_cast<int>(z.size()), h.n(), "torus_unitary");
  for (const Complex& zj : z) {
    if (std::abs(std::abs(zj) - 1.0) > 1e-9) {
      throw std::invalid_argument("torus_unitary: z must be unimodular");
    }
  }
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (Index i = 0; i < h.dim(); ++i) triplets.emplace_back(i, i, z_power(z, h.point(i)));
  SparseMatrix out(h.dim(), h.dim());
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

SparseMatrix gns_generator(int direction, const TruncatedGNS& h) {
  if (direction < 0 || direction >= h.n()) {
    throw std::out_of_range("gns_generator: direction out of range");
  }
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (Index i = 0; i < h.dim(); ++i) {
    const double pj = h.point(i)[static_cast<std::size_t>(direction)];
    if (pj != 0.0) triplets.emplace_back(i, i, 2.0 * kPi * kI * pj);
  }
  SparseMatrix out(h.dim(), h.dim());
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

}  // namespace ncspec
