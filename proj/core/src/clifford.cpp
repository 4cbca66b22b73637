#include "ncspec/clifford.hpp"

#include <algorithm>
#include <array>

namespace ncspec {

Sign sign_from_string(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return Sign::Plus;
  if (s == "-" || s == "-1" || s == "−") return Sign::Minus;
  throw std::invalid_argument("sign must be '+' or '-', got '" + s + "'");
}

std::string to_string(const SignTriple& s) {
  std::string out = "(";
  out += to_string(s.j);
  out += ", ";
  out += to_string(s.d);
  if (s.gamma) {
    out += ", ";
    out += to_string(*s.gamma);
  }
  return out + ")";
}

SignTriple expected_signs(int n) {
  if (n < 0) throw std::invalid_argument("expected_signs: negative n");
  using enum Sign;
  // index n mod 8
  static constexpr std::array<Sign, 8> kJ{Plus, Plus, Minus, Minus, Minus, Minus, Plus, Plus};
  static constexpr std::array<Sign, 8> kD{Plus, Minus, Plus, Plus, Plus, Minus, Plus, Plus};
  static constexpr std::array<Sign, 8> kGamma{Plus, Plus, Minus, Plus, Plus, Plus, Minus, Plus};
  const auto r = static_cast<std::size_t>(n % 8);
  SignTriple t{kJ[r], kD[r], std::nullopt};
  if (n % 2 == 0) t.gamma = kGamma[r];
  return t;
}

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

ComplexMatrix pauli_y() {
  ComplexMatrix s(2, 2);
  s << 0, -kI, kI, 0;
  return s;
}

ComplexMatrix pauli_z() {
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

// Selfadjoint generators e_1..e_{2m} of Cl(2m), built by the tensor recursion
// e_j -> e_j (x) sigma_z, adjoin 1 (x) sigma_x, 1 (x) sigma_y.
std::vector<ComplexMatrix> even_generators(int m) {
  std::vector<ComplexMatrix> e;
  Index dim = 1;
  for (int step = 0; step < m; ++step) {
    for (auto& g : e) g = kron(g, pauli_z());
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    e.push_back(kron(id, pauli_x()));
    e.push_back(kron(id, pauli_y()));
    dim *= 2;
  }
  return e;
}

ComplexMatrix even_chirality(const std::vector<ComplexMatrix>& e, int m, Index dim) {
  ComplexMatrix prod = ComplexMatrix::Identity(dim, dim);
  for (const auto& g : e) prod = prod * g;
  Complex phase{1.0, 0.0};
  for (int k = 0; k < m; ++k) phase *= -kI;
  return phase * prod;
}

bool is_real(const ComplexMatrix& m) { return m.imag().cwiseAbs().maxCoeff() == 0.0; }
bool is_imaginary(const ComplexMatrix& m) { return m.real().cwiseAbs().maxCoeff() == 0.0; }

// Returns +1/-1 if lhs = +-rhs within tol, 0 otherwise.
int compare_sign(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double tol) {
  if (max_abs_diff(lhs, rhs) < tol) return 1;
  if (max_abs_diff(lhs, -rhs) < tol) return -1;
  return 0;
}

}  // namespace

CliffordRep build_clifford(int n, Sign branch, int max_n) {
  if (n < 1) throw std::invalid_argument("build_clifford: n must be at least 1");
  if (n > max_n) {
    throw std::invalid_argument("build_clifford: n = " + std::to_string(n) +
                                " exceeds the maximum " + std::to_string(max_n));
  }
  CliffordRep rep;
  rep.n = n;
  rep.m = n / 2;
  rep.dim = 1 << rep.m;
  rep.branch = rep.even() ? Sign::Plus : branch;

  std::vector<ComplexMatrix> e = even_generators(rep.m);
  const ComplexMatrix gamma_even = even_chirality(e, rep.m, rep.dim);
  if (rep.even()) {
    rep.gammaS = gamma_even;
  } else {
    e.push_back(static_cast<double>(to_int(rep.branch)) * gamma_even);
  }
  for (const auto& g : e) rep.F.push_back(kI * g);
  rep.signs = expected_signs(n);

  // Candidate conjugation matrices: product of the real generators, or of the
  // imaginary ones. Every generator is entrywise real or entrywise imaginary.
  const ComplexMatrix id = ComplexMatrix::Identity(rep.dim, rep.dim);
  ComplexMatrix c_real = id;
  ComplexMatrix c_imag = id;
  for (const auto& g : e) {
    if (is_real(g)) {
      c_real = c_real * g;
    } else if (is_imaginary(g)) {
      c_imag = c_imag * g;
    } else {
      throw std::logic_error("build_clifford: generator neither real nor imaginary");
    }
  }
  for (const ComplexMatrix* c : {&c_real, &c_imag}) {
    rep.JS = AntiUnitary(*c);
    try {
      if (measure_signs(rep) == rep.signs) return rep;
    } catch (const VerificationError&) {
    }
  }
  throw std::logic_error("build_clifford: no real structure reproduces the sign table for n = " +
                         std::to_string(n));
}

ComplexMatrix chirality(const CliffordRep& rep) {
  ComplexMatrix prod = ComplexMatrix::Identity(rep.dim, rep.dim);
  for (const auto& f : rep.F) prod = prod * (-kI * f);
  Complex phase{1.0, 0.0};
  for (int k = 0; k < rep.m; ++k) phase *= -kI;
  return phase * prod;
}

SignTriple measure_signs(const CliffordRep& rep, double tolerance) {
  const ComplexMatrix id = ComplexMatrix::Identity(rep.dim, rep.dim);
  const ComplexMatrix c = rep.JS.dense();
  SignTriple out;

  const int sj = compare_sign(c * c.conjugate(), id, tolerance);
  if (sj == 0) throw VerificationError("JS^2 is not +-1 (n = " + std::to_string(rep.n) + ")");
  out.j = static_cast<Sign>(sj);

  int sd = 0;
  for (std::size_t k = 0; k < rep.F.size(); ++k) {
    const int s = compare_sign(rep.JS.conjugate(rep.F[k]), rep.F[k], tolerance);
    if (s == 0 || (sd != 0 && s != sd)) {
      throw VerificationError("JS F_" + std::to_string(k + 1) + " JS^-1 is not +-F_" +
                              std::to_string(k + 1) + " (n = " + std::to_string(rep.n) + ")");
    }
    sd = s;
  }
  out.d = static_cast<Sign>(sd);

  if (rep.gammaS) {
    const int sg = compare_sign(rep.JS.conjugate(*rep.gammaS), *rep.gammaS, tolerance);
    if (sg == 0) {
      throw VerificationError("JS gammaS JS^-1 is not +-gammaS (n = " + std::to_string(rep.n) + ")");
    }
    out.gamma = static_cast<Sign>(sg);
  }
  return out;
}

SignTriple verify_signs(const CliffordRep& rep, double tolerance) {
  const SignTriple measured = measure_signs(rep, tolerance);
  const std::string where = " for n = " + std::to_string(rep.n);
  if (measured.j != rep.signs.j) {
    throw VerificationError("JS^2 = eps_J mismatch" + where + ": measured " +
                            to_string(measured.j) + ", expected " + to_string(rep.signs.j));
  }
  if (measured.d != rep.signs.d) {
    throw VerificationError("JS F_j = eps_D F_j JS mismatch" + where + ": measured " +
                            to_string(measured.d) + ", expected " + to_string(rep.signs.d));
  }
  if (measured.gamma != rep.signs.gamma) {
    throw VerificationError("JS gammaS = eps_gamma gammaS JS mismatch" + where);
  }
  return measured;
}

double clifford_relation_deviation(const CliffordRep& rep) {
  const ComplexMatrix id = ComplexMatrix::Identity(rep.dim, rep.dim);
  double dev = 0.0;
  for (std::size_t j = 0; j < rep.F.size(); ++j) {
    dev = std::max(dev, max_abs_diff(rep.F[j].adjoint(), -rep.F[j]));
    for (std::size_t k = 0; k < rep.F.size(); ++k) {
      const ComplexMatrix anti = rep.F[j] * rep.F[k] + rep.F[k] * rep.F[j];
      const ComplexMatrix target = j == k ? ComplexMatrix(-2.0 * id) : ComplexMatrix::Zero(rep.dim, rep.dim);
      dev = std::max(dev, max_abs_diff(anti, target));
    }
    if (rep.gammaS) {
      dev = std::max(dev, max_abs_diff(*rep.gammaS * rep.F[j], -rep.F[j] * *rep.gammaS));
    }
  }
  if (rep.gammaS) {
    dev = std::max(dev, max_abs_diff(rep.gammaS->adjoint(), *rep.gammaS));
    dev = std::max(dev, max_abs_diff(*rep.gammaS * *rep.gammaS, id));
  }
  return dev;
}

}  // namespace ncspec
