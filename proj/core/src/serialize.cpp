#include "ncspec/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ncspec {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix_from_json: expected rows");
  const auto rows = static_cast<Index>(j.size());
  const auto cols = static_cast<Index>(j.front().size());
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix_from_json: ragged rows");
    }
    for (Index c = 0; c < cols; ++c) {
      const Json& e = row.at(static_cast<std::size_t>(c));
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

Json to_json(const SignTriple& s) {
  Json j;
  j["eps_J"] = to_string(s.j);
  j["eps_D"] = to_string(s.d);
  if (s.gamma) j["eps_gamma"] = to_string(*s.gamma);
  return j;
}

Json to_json(const CliffordRep& rep) {
  Json j;
  j["n"] = rep.n;
  j["branch"] = to_string(rep.branch);
  j["dim"] = rep.dim;
  Json f = Json::array();
  for (const auto& m : rep.F) f.push_back(matrix_to_json(m));
  j["F"] = std::move(f);
  if (rep.gammaS) j["gammaS"] = matrix_to_json(*rep.gammaS);
  j["JS"] = matrix_to_json(rep.JS.dense());
  j["signs"] = to_json(rep.signs);
  return j;
}

Json to_json(const FourierElement& a) {
  Json terms = Json::array();
  for (const auto& [p, c] : a.terms()) {
    Json t;
    t["p"] = p;
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(std::move(t));
  }
  Json j;
  j["n"] = a.n();
  j["terms"] = std::move(terms);
  return j;
}

FourierElement fourier_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  FourierElement a(n);
  for (const Json& t : j.at("terms")) {
    const auto p = t.at("p").get<LatticePoint>();
    if (static_cast<int>(p.size()) != n) {
      throw std::invalid_argument("fourier_from_json: lattice point of wrong dimension");
    }
    a.add(p, Complex(t.value("re", 0.0), t.value("im", 0.0)));
  }
  return a;
}

Json to_json(const ThetaMatrix& theta) { return theta.entries(); }

ThetaMatrix theta_from_json(const Json& j) {
  std::vector<double> entries;
  if (j.is_array() && !j.empty() && j.front().is_array()) {
    for (const Json& row : j) {
      for (const Json& v : row) entries.push_back(v.get<double>());
    }
  } else {
    entries = j.get<std::vector<double>>();
  }
  const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(entries.size()))));
  if (n < 1 || static_cast<std::size_t>(n * n) != entries.size()) {
    throw std::invalid_argument("theta_from_json: expected n*n entries");
  }
  return ThetaMatrix(n, std::move(entries));
}

Json to_json(const SpectralData& s) {
  Json out = Json::array();
  for (const auto& e : s.entries()) out.push_back({e.value, e.multiplicity});
  return out;
}

std::string to_csv(const SpectralData& s) {
  std::ostringstream os;
  os << "value,multiplicity\n";
  for (const auto& e : s.entries()) os << format_double(e.value) << ',' << e.multiplicity << '\n';
  return os.str();
}

Json to_json(const WeightBlock& b) {
  Json j;
  j["group"] = to_string(b.group);
  if (b.group == Group::SU2) {
    j["label"] = b.label.front();
  } else {
    j["label"] = b.label;
  }
  j["d"] = b.d;
  j["m"] = b.m;
  j["eigenvalues"] = to_json(b.eigenvalues);
  return j;
}

Json to_json(const SummabilityReport& r) {
  Json j;
  j["exponent"] = r.exponent;
  j["K"] = r.K;
  j["tail_spread"] = r.tail_spread;
  j["tail_slope"] = r.tail_slope;
  j["verdict"] = to_string(r.verdict);
  j["sup_ratio"] = r.ratios.empty() ? 0.0 : *std::max_element(r.ratios.begin(), r.ratios.end());
  j["ratios"] = r.ratios;
  return j;
}

std::string to_csv(const SummabilityReport& r) {
  std::ostringstream os;
  os << "k,mu_prime,sigma,ratio\n";
  for (std::size_t k = 0; k < r.K; ++k) {
    os << (k + 1) << ',' << format_double(r.mu_prime[k]) << ',' << format_double(r.sigma[k]) << ','
       << format_double(r.ratios[k]) << '\n';
  }
  return os.str();
}

Json verification_record(const std::string& check, int n, const std::string& theta_fingerprint,
                         double max_deviation, bool pass) {
  Json j;
  j["check"] = check;
  j["n"] = n;
  j["theta"] = theta_fingerprint;
  j["max_deviation"] = max_deviation;
  j["verdict"] = pass ? "pass" : "fail";
  return j;
}

}  // namespace ncspec
