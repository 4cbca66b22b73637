#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ncspec_cli/cli.hpp"

namespace ncspec::cli {

void RunConfig::validate() const {
  if (format != "json" && format != "csv") throw ConfigError("--format must be json or csv");
  if (n < 1 || n > kMaxCliffordGenerators) {
    throw ConfigError("--n must be in 1.." + std::to_string(kMaxCliffordGenerators));
  }
  if (N < 0) throw ConfigError("--N must be nonnegative");
  if (cutoff < 0) throw ConfigError("--cutoff must be nonnegative");
  if (!(tolerance > 0.0)) throw ConfigError("--tolerance must be positive");
  if (!(tail_spread > 0.0)) throw ConfigError("--tail-spread must be positive");
  if (exponent && !(*exponent >= 1.0)) throw ConfigError("--exponent must be >= 1");
  if (pairs < 1) throw ConfigError("--pairs must be positive");
  if (choices < 1) throw ConfigError("--choices must be positive");
  std::set<int> seen;
  for (int j : active) {
    if (j < 1 || j > n) throw ConfigError("--active directions must lie in 1.." + std::to_string(n));
    if (!seen.insert(j).second) throw ConfigError("--active has a repeated direction");
  }
  for (int r : probe_radii) {
    if (r < 0) throw ConfigError("--probe-N entries must be nonnegative");
  }
}

ThetaMatrix RunConfig::load_theta() const {
  try {
    if (std::filesystem::is_regular_file(theta)) {
      std::ifstream in(theta);
      const Json j = Json::parse(in);
      ThetaMatrix t = theta_from_json(j);
      if (t.n() != n) {
        throw ConfigError("theta file has dimension " + std::to_string(t.n()) + ", expected " +
                          std::to_string(n));
      }
      return t;
    }
    std::vector<double> values;
    std::stringstream ss(theta);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw ConfigError("malformed --theta entry '" + item + "'");
      }
    }
    if (values.size() == 1) return ThetaMatrix::uniform(n, values.front());
    if (values.size() == static_cast<std::size_t>(n * n)) return ThetaMatrix(n, values);
    throw ConfigError("--theta needs 1 or n*n = " + std::to_string(n * n) + " values");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("cannot load theta: ") + e.what());
  }
}

std::vector<int> RunConfig::active_directions() const {
  std::vector<int> out;
  if (active.empty()) {
    for (int j = 0; j < n; ++j) out.push_back(j);
  } else {
    for (int j : active) out.push_back(j - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncspec::cli
