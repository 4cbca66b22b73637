#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncspec/linalg.hpp"

namespace ncspec {

enum class Sign : int { Minus = -1, Plus = 1 };

inline constexpr int to_int(Sign s) { return static_cast<int>(s); }
inline constexpr Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline const char* to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }
Sign sign_from_string(const std::string& s);

/// (eps_J, eps_D, eps_gamma); eps_gamma only exists for even n.
struct SignTriple {
  Sign j = Sign::Plus;
  Sign d = Sign::Plus;
  std::optional<Sign> gamma;

  friend bool operator==(const SignTriple&, const SignTriple&) = default;
};

std::string to_string(const SignTriple& s);

/// KO-dimension sign table, periodic in n mod 8.
SignTriple expected_signs(int n);

inline constexpr int kMaxCliffordGenerators = 12;

/// Irreducible representation of the complex Clifford algebra Cl(n).
///
/// Generators satisfy F_j^H = -F_j and F_j F_k + F_k F_j = -2 delta_jk. For
/// odd n the two inequivalent irreducibles are told apart by `branch`, the
/// scalar value of the chirality element. `signs` holds the table values;
/// JS was selected so that the measured relations agree with them.
struct CliffordRep {
  int n = 0;
  int m = 0;
  int dim = 1;
  Sign branch = Sign::Plus;
  std::vector<ComplexMatrix> F;
  std::optional<ComplexMatrix> gammaS;
  AntiUnitary JS{ComplexMatrix::Identity(1, 1)};
  SignTriple signs;

  [[nodiscard]] bool even() const { return n % 2 == 0; }
};

/// Throws std::invalid_argument for n < 1 or n > max_n.
CliffordRep build_clifford(int n, Sign branch = Sign::Plus,
                           int max_n = kMaxCliffordGenerators);

/// (-i)^m e_1 ... e_n with e_j = -i F_j.
ComplexMatrix chirality(const CliffordRep& rep);

/// Reads the three signs off JS^2, JS F_j JS^{-1} and JS gammaS JS^{-1}.
/// Throws VerificationError if a relation holds with neither sign.
SignTriple measure_signs(const CliffordRep& rep, double tolerance = 1e-12);

/// measure_signs, then throws VerificationError naming the first relation
/// whose measured sign disagrees with rep.signs.
SignTriple verify_signs(const CliffordRep& rep, double tolerance = 1e-12);

/// Max deviation over the defining relations (skew-adjointness, anticommutation,
/// and for even n the grading relations).
double clifford_relation_deviation(const CliffordRep& rep);

}  // namespace ncspec
