#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ncspec/clifford.hpp"
#include "ncspec/nctorus.hpp"
#include "ncspec/peterweyl.hpp"
#include "ncspec/spectral_data.hpp"
#include "ncspec/summability.hpp"

namespace ncspec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Dense matrix as rows of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// { n, branch, dim, F, gammaS?, JS, signs: { eps_J, eps_D, eps_gamma? } }
Json to_json(const CliffordRep& rep);
Json to_json(const SignTriple& s);

/// { "n": int, "terms": [ { "p": [...], "re": x, "im": y } ] }
Json to_json(const FourierElement& a);
FourierElement fourier_from_json(const Json& j);

/// Row-major array; antisymmetry validated.
Json to_json(const ThetaMatrix& theta);
ThetaMatrix theta_from_json(const Json& j);

/// [[value, multiplicity], ...]
Json to_json(const SpectralData& s);
/// "value,multiplicity" rows, ascending.
std::string to_csv(const SpectralData& s);

/// { group, label, d, m, eigenvalues }
Json to_json(const WeightBlock& b);

/// Scalars plus the full r_k series.
Json to_json(const SummabilityReport& r);
/// "k,mu_prime,sigma,ratio" rows.
std::string to_csv(const SummabilityReport& r);

/// { check, n, theta, max_deviation, verdict }
Json verification_record(const std::string& check, int n, const std::string& theta_fingerprint,
                         double max_deviation, bool pass);

}  // namespace ncspec
