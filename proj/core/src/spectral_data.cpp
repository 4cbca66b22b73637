#include "ncspec/spectral_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncspec {

namespace {

bool close(double a, double b, double tolerance) {
  return std::abs(a - b) <= tolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

SpectralData SpectralData::from_values(std::vector<double> values, double tolerance) {
  std::vector<Eigenvalue> entries;
  entries.reserve(values.size());
  for (double v : values) entries.push_back({v, 1});
  return from_entries(std::move(entries), tolerance);
}

SpectralData SpectralData::from_entries(std::vector<Eigenvalue> entries, double tolerance) {
  for (const auto& e : entries) {
    if (e.multiplicity == 0) throw std::invalid_argument("SpectralData: zero multiplicity");
    if (!std::isfinite(e.value)) throw std::invalid_argument("SpectralData: non-finite eigenvalue");
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
  SpectralData out;
  std::size_t i = 0;
  while (i < entries.size()) {
    const double anchor = entries[i].value;
    double weighted = 0.0;
    std::size_t mult = 0;
    std::size_t j = i;
    while (j < entries.size() && close(entries[j].value, anchor, tolerance)) {
      weighted += entries[j].value * static_cast<double>(entries[j].multiplicity);
      mult += entries[j].multiplicity;
      ++j;
    }
    double mean = weighted / static_cast<double>(mult);
    if (std::abs(mean) <= tolerance) mean = 0.0;
    out.entries_.push_back({mean, mult});
    i = j;
  }
  return out;
}

std::size_t SpectralData::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<double> SpectralData::expanded() const {
  std::vector<double> out;
  out.reserve(total_multiplicity());
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

std::vector<double> SpectralData::abs_sorted() const {
  std::vector<double> out = expanded();
  for (double& v : out) v = std::abs(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SpectralData::kernel_dimension(double tolerance) const {
  std::size_t k = 0;
  for (const auto& e : entries_) {
    if (std::abs(e.value) < tolerance) k += e.multiplicity;
  }
  return k;
}

bool SpectralData::symmetric(double tolerance) const {
  const std::size_t n = entries_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& lo = entries_[i];
    const auto& hi = entries_[n - 1 - i];
    if (lo.multiplicity != hi.multiplicity || !close(lo.value, -hi.value, tolerance)) return false;
  }
  return true;
}

bool SpectralData::approx_equal(const SpectralData& other, double tolerance) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].multiplicity != other.entries_[i].multiplicity) return false;
    if (!close(entries_[i].value, other.entries_[i].value, tolerance)) return false;
  }
  return true;
}

}  // namespace ncspec
