#pragma once

#include <cstddef>
#include <vector>

namespace ncspec {

struct Eigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Real spectrum with multiplicities, sorted ascending by value.
class SpectralData {
 public:
  SpectralData() = default;

  /// Groups values that agree within tolerance * max(1, |value|); each group
  /// is represented by its mean.
  static SpectralData from_values(std::vector<double> values, double tolerance = 1e-9);
  /// Takes already-grouped entries; merges and sorts them. Throws on zero multiplicity.
  static SpectralData from_entries(std::vector<Eigenvalue> entries, double tolerance = 1e-9);

  [[nodiscard]] const std::vector<Eigenvalue>& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t total_multiplicity() const;
  /// Values repeated by multiplicity, ascending.
  [[nodiscard]] std::vector<double> expanded() const;
  /// |values| repeated by multiplicity, ascending.
  [[nodiscard]] std::vector<double> abs_sorted() const;
  /// Multiplicity of values within tolerance of zero.
  [[nodiscard]] std::size_t kernel_dimension(double tolerance = 1e-9) const;
  /// True iff the spectrum equals its own negation.
  [[nodiscard]] bool symmetric(double tolerance = 1e-9) const;

  /// Same multiplicities and values within tolerance.
  [[nodiscard]] bool approx_equal(const SpectralData& other, double tolerance = 1e-9) const;

 private:
  std::vector<Eigenvalue> entries_;
};

}  // namespace ncspec
