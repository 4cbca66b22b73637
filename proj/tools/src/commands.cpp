#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ncspec/ncspec.hpp"
#include "ncspec_cli/cli.hpp"

namespace ncspec::cli {

namespace {

Json base_report(const std::string& command) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

FourierElement random_monomial(int n, int radius, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-radius, radius);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  LatticePoint p(static_cast<std::size_t>(n));
  for (int& x : p) x = coord(rng);
  return FourierElement::monomial(std::move(p), std::polar(1.0, angle(rng)));
}

FourierElement random_element(int n, int radius, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 3);
  FourierElement a(n);
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) a += random_monomial(n, radius, rng);
  return a;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Runs one check, converting thrown verification failures into a failed record.
template <typename Fn>
Json run_check(const std::string& name, int n, const std::string& fp, double tolerance, Fn&& fn) {
  try {
    const double dev = fn();
    return verification_record(name, n, fp, dev, dev < tolerance);
  } catch (const VerificationError& e) {
    Json rec = verification_record(name, n, fp, std::numeric_limits<double>::infinity(), false);
    rec["max_deviation"] = nullptr;
    rec["error"] = e.what();
    return rec;
  }
}

// "+-" / "-+-" style, safe inside CSV.
std::string compact(const SignTriple& s) {
  std::string out = std::string(to_string(s.j)) + to_string(s.d);
  if (s.gamma) out += to_string(*s.gamma);
  return out;
}

std::string checks_csv(const Json& checks) {
  std::ostringstream os;
  os << "check,n,theta,max_deviation,verdict\n";
  for (const Json& c : checks) {
    os << c.at("check").get<std::string>() << ',' << c.at("n").get<int>() << ','
       << c.at("theta").get<std::string>() << ',';
    if (c.contains("max_deviation") && c.at("max_deviation").is_number()) {
      os << fmt(c.at("max_deviation").get<double>());
    }
    os << ',' << c.at("verdict").get<std::string>() << '\n';
  }
  return os.str();
}

}  // namespace

CommandResult cmd_clifford_table(const RunConfig& config) {
  if (config.max_n < 1 || config.max_n > kMaxCliffordGenerators) {
    throw ConfigError("--max-n must be in 1.." + std::to_string(kMaxCliffordGenerators));
  }
  CommandResult result;
  result.report = base_report("clifford-table");
  result.report["branch"] = to_string(config.branch);
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "n,eps_J,eps_D,eps_gamma,expected,match\n";
  bool all_match = true;
  for (int n = 1; n <= config.max_n; ++n) {
    const SignTriple expected = expected_signs(n);
    Json row;
    row["n"] = n;
    row["expected"] = to_json(expected);
    bool match = false;
    try {
      const CliffordRep rep = build_clifford(n, config.branch);
      const SignTriple measured = measure_signs(rep);
      match = measured == expected;
      row["measured"] = to_json(measured);
      row["relation_deviation"] = clifford_relation_deviation(rep);
      csv << n << ',' << to_string(measured.j) << ',' << to_string(measured.d) << ','
          << (measured.gamma ? to_string(*measured.gamma) : "") << ',' << compact(expected) << ','
          << (match ? "match" : "mismatch") << '\n';
    } catch (const std::exception& e) {
      row["error"] = e.what();
      csv << n << ",,,," << compact(expected) << ",mismatch\n";
    }
    row["match"] = match;
    if (!match && all_match) result.report["first_mismatch"] = n;
    all_match = all_match && match;
    rows.push_back(std::move(row));
  }
  result.report["rows"] = std::move(rows);
  result.report["verdict"] = all_match ? "pass" : "fail";
  result.csv = csv.str();
  result.exit_code = all_match ? kExitPass : kExitFail;
  return result;
}

CommandResult cmd_nct_verify(const RunConfig& config) {
  if (config.N < 1) throw ConfigError("nct-verify needs --N >= 1");
  const ThetaMatrix theta = config.load_theta();
  const int n = config.n;
  const std::string fp = theta.fingerprint();
  const double tol = config.tolerance;
  std::mt19937_64 rng(config.seed);

  const CliffordRep cliff = build_clifford(n, config.branch);
  const TruncatedGNS h(n, config.N);
  const BlockDiracOperator d = assemble_dirac(cliff, h);
  const SparseMatrix dm = d.matrix();
  const RealStructure j = build_real_structure(cliff, h, theta);

  const int commutator_radius = std::min(2, config.N);
  const int pair_radius = std::clamp((config.N - 1) / 2, 0, 2);
  std::vector<std::pair<FourierElement, FourierElement>> pairs;
  for (int k = 0; k < config.pairs; ++k) {
    FourierElement a = random_monomial(n, pair_radius, rng);
    FourierElement b = random_monomial(n, pair_radius, rng);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::vector<FourierElement> elements;
  for (int k = 0; k < std::min(config.pairs, 10); ++k) {
    elements.push_back(random_element(n, commutator_radius, rng));
  }

  Json checks = Json::array();
  checks.push_back(run_check("clifford_signs", n, fp, 0.5, [&] {
    verify_signs(cliff);
    return clifford_relation_deviation(cliff);
  }));
  checks.push_back(run_check("symmetry", n, fp, tol, [&] {
    return max_abs_diff(dm, SparseMatrix(dm.adjoint()));
  }));
  checks.push_back(run_check("bounded_commutator_generators", n, fp, 1e-9, [&] {
    double dev = 0.0;
    for (int k = 0; k < n; ++k) {
      const auto c = commutator_with(d, FourierElement::generator(n, k), theta, tol);
      dev = std::max(dev, std::abs(c.interior_norm - 2.0 * kPi));
    }
    return dev;
  }));
  checks.push_back(run_check("commutator_formula", n, fp, tol, [&] {
    double dev = 0.0;
    for (const auto& a : elements) dev = std::max(dev, commutator_formula_deviation(d, a, theta));
    return dev;
  }));

  if (cliff.even()) {
    checks.push_back(run_check("grading", n, fp, tol, [&] {
      const SparseMatrix gamma = grading(d);
      double dev = 0.0;
      for (const auto& a : elements) dev = std::max(dev, grading_commutator_deviation(d, gamma, a, theta));
      return dev;
    }));
  } else {
    Json rec;
    rec["check"] = "grading";
    rec["n"] = n;
    rec["theta"] = fp;
    rec["verdict"] = "skipped";
    rec["reason"] = "n odd — skipped";
    checks.push_back(std::move(rec));
  }

  {
    Json rec;
    try {
      std::optional<SparseMatrix> gamma;
      if (cliff.even()) gamma = grading(d);
      const RealitySigns signs = check_reality_signs(d, gamma, j, tol);
      const double dev = std::max({signs.j_square_deviation, signs.jd_deviation,
                                   signs.jgamma_deviation.value_or(0.0)});
      rec = verification_record("reality_signs", n, fp, dev, dev < tol);
      rec["measured"] = to_json(signs.measured);
    } catch (const VerificationError& e) {
      rec = verification_record("reality_signs", n, fp, 0.0, false);
      rec["max_deviation"] = nullptr;
      rec["error"] = e.what();
    }
    rec["expected"] = to_json(j.signs);
    checks.push_back(std::move(rec));
  }

  checks.push_back(run_check("norm_preservation", n, fp, tol, [&] {
    return norm_preservation_deviation(j.J, 100, config.seed);
  }));
  checks.push_back(run_check("opposite_action", n, fp, tol, [&] {
    double dev = 0.0;
    for (const auto& [a, b] : pairs) dev = std::max(dev, opposite_action_deviation(b, j, h, theta));
    return dev;
  }));
  checks.push_back(run_check("zeroth_order", n, fp, tol, [&] {
    double dev = 0.0;
    for (const auto& [a, b] : pairs) dev = std::max(dev, check_zeroth_order(a, b, j, h, theta));
    return dev;
  }));
  checks.push_back(run_check("first_order", n, fp, tol, [&] {
    double dev = 0.0;
    for (const auto& [a, b] : pairs) dev = std::max(dev, check_first_order(d, a, b, j, theta));
    return dev;
  }));

  bool pass = true;
  for (const Json& c : checks) pass = pass && c.at("verdict") != "fail";

  CommandResult result;
  result.report = base_report("nct-verify");
  Json cfg;
  cfg["n"] = n;
  cfg["N"] = config.N;
  cfg["theta"] = to_json(theta);
  cfg["theta_fingerprint"] = fp;
  cfg["branch"] = to_string(config.branch);
  cfg["seed"] = config.seed;
  cfg["pairs"] = config.pairs;
  cfg["tolerance"] = tol;
  result.report["config"] = std::move(cfg);
  result.report["checks"] = checks;
  result.report["verdict"] = pass ? "pass" : "fail";
  result.csv = checks_csv(checks);
  result.exit_code = pass ? kExitPass : kExitFail;
  return result;
}

CommandResult cmd_summability(const RunConfig& config) {
  const int n = config.n;
  const std::vector<int> active = config.active_directions();
  const CliffordRep cliff = build_clifford(n, config.branch);
  CommandResult result;
  result.report = base_report("summability");
  Json cfg;
  cfg["n"] = n;
  cfg["N"] = config.N;
  Json active_json = Json::array();
  for (int a : active) active_json.push_back(a + 1);
  cfg["active"] = active_json;
  cfg["tail_spread_threshold"] = config.tail_spread;
  cfg["growth_slope"] = config.growth_slope;

  if (static_cast<int>(active.size()) < n) {
    std::vector<int> radii = config.probe_radii.empty() ? std::vector<int>{config.N} : config.probe_radii;
    cfg["probe_N"] = radii;
    result.report["config"] = std::move(cfg);
    const KernelProbe probe = kernel_growth_probe(cliff, n, active, radii);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "N,kernel";
    for (std::size_t w = 0; w < probe.windows.size(); ++w) csv << ",window_" << w;
    csv << '\n';
    for (const auto& row : probe.rows) {
      Json r;
      r["N"] = row.radius;
      r["kernel_multiplicity"] = row.kernel;
      r["window_counts"] = row.window_counts;
      rows.push_back(std::move(r));
      csv << row.radius << ',' << row.kernel;
      for (std::size_t c : row.window_counts) csv << ',' << c;
      csv << '\n';
    }
    result.report["ergodic"] = false;
    result.report["windows"] = probe.windows;
    result.report["kernel_probe"] = std::move(rows);
    result.report["resolvent_verdict"] =
        probe.verdict ? Json(to_string(*probe.verdict)) : Json(nullptr);
    result.csv = csv.str();
    return result;
  }

  const double exponent = config.exponent.value_or(static_cast<double>(n));
  cfg["exponent"] = exponent;
  result.report["config"] = std::move(cfg);
  result.report["ergodic"] = true;

  const SpectralData spec = spectrum(assemble_dirac(cliff, TruncatedGNS(n, config.N), active));
  SummabilityConfig scfg;
  scfg.tail_spread_threshold = config.tail_spread;
  scfg.growth_slope = config.growth_slope;
  const SummabilityReport report = sigma_sequence(spec, exponent, scfg);
  result.report["summability"] = to_json(report);
  result.csv = to_csv(report);

  bool ok = !(report.verdict == SummabilityVerdict::Growing && exponent == static_cast<double>(n));
  if (config.compare_reference) {
    const auto blocks = torus_weight_blocks(n, config.N);
    const SpectralData ref = reference_spectrum(blocks);
    const MajorizationResult maj = majorization_check(spec, ref);
    const bool mono = monotone_comparison(report, sigma_sequence(ref, exponent, scfg));
    Json cmp;
    cmp["reference_equal"] = spec.approx_equal(ref);
    cmp["majorization"] = maj.holds;
    cmp["monotone"] = mono;
    result.report["reference_comparison"] = std::move(cmp);
    ok = ok && maj.holds && mono;
  }
  result.report["verdict"] = ok ? "pass" : "fail";
  result.exit_code = ok ? kExitPass : kExitFail;
  return result;
}

CommandResult cmd_su2(const RunConfig& config) {
  if (config.cutoff < 0) throw ConfigError("--cutoff must be nonnegative");
  const CliffordRep cliff3 = build_clifford(3, Sign::Plus);
  const auto blocks = su2_weight_blocks(config.cutoff, cliff3);
  const SpectralData ref = reference_spectrum(blocks);
  constexpr double kExponent = 3.0;  // dim SU(2)
  const SummabilityReport ref_report = sigma_sequence(ref, kExponent);

  std::mt19937_64 rng(config.seed);
  std::size_t maj_fail = 0;
  std::size_t mono_fail = 0;
  Json samples = Json::array();
  for (int c = 0; c < config.choices; ++c) {
    std::vector<std::size_t> mult;
    for (const auto& b : blocks) {
      std::uniform_int_distribution<std::size_t> pick(0, b.d);
      mult.push_back(pick(rng));
    }
    const SpectralData sub = subrepresentation_spectrum(blocks, mult);
    const bool maj = majorization_check(sub, ref).holds;
    const bool mono = sub.empty() || monotone_comparison(sigma_sequence(sub, kExponent), ref_report);
    maj_fail += maj ? 0 : 1;
    mono_fail += mono ? 0 : 1;
    Json s;
    s["multiplicities"] = mult;
    s["majorization"] = maj;
    s["monotone"] = mono;
    samples.push_back(std::move(s));
  }

  CommandResult result;
  result.report = base_report("su2");
  Json cfg;
  cfg["cutoff"] = config.cutoff;
  cfg["seed"] = config.seed;
  cfg["choices"] = config.choices;
  result.report["config"] = std::move(cfg);
  Json bj = Json::array();
  std::ostringstream csv;
  csv << "label,d,value,multiplicity\n";
  for (const auto& b : blocks) {
    bj.push_back(to_json(b));
    for (const auto& e : b.eigenvalues.entries()) {
      csv << b.label.front() << ',' << b.d << ',' << fmt(e.value) << ',' << e.multiplicity << '\n';
    }
  }
  result.report["blocks"] = std::move(bj);
  result.report["reference_sup_ratio"] =
      *std::max_element(ref_report.ratios.begin(), ref_report.ratios.end());
  result.report["samples"] = std::move(samples);
  result.report["majorization_failures"] = maj_fail;
  result.report["monotone_failures"] = mono_fail;
  const bool ok = maj_fail == 0 && mono_fail == 0;
  result.report["verdict"] = ok ? "pass" : "fail";
  result.csv = csv.str();
  result.exit_code = ok ? kExitPass : kExitFail;
  return result;
}

namespace {

void add_common(CLI::App* sub, RunConfig& c, std::string& branch) {
  sub->add_option("--n", c.n, "Lattice / Clifford dimension")->capture_default_str();
  sub->add_option("--N", c.N, "Truncation radius of the lattice box")->capture_default_str();
  sub->add_option("--theta", c.theta,
                  "Scalar, comma-separated row-major n*n list, or JSON file path")
      ->capture_default_str();
  sub->add_option("--branch", branch, "Odd-n Clifford branch, + or -")->capture_default_str();
  sub->add_option("--active", c.active, "Active directions, 1-based (default: all)")->delimiter(',');
  sub->add_option("--seed", c.seed, "Seed for randomized batches")->capture_default_str();
  sub->add_option("--out", c.out, "Write the report to this file instead of stdout");
  sub->add_option("--format", c.format, "json or csv")->capture_default_str();
  sub->add_option("--tolerance", c.tolerance, "Deviation tolerance")->capture_default_str();
  sub->add_option("--tail-spread", c.tail_spread, "Plateau threshold on the r_k tail spread")
      ->capture_default_str();
  sub->add_option("--growth-slope", c.growth_slope, "Log-log slope above which r_k is growing")
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ncspec: finite-truncation checks for Dirac operators from ergodic torus actions"};
  app.require_subcommand(1);
  RunConfig config;
  std::string branch = "+";
  std::string exponent;

  auto* table = app.add_subcommand("clifford-table", "Constructed vs tabulated Clifford sign triples");
  add_common(table, config, branch);
  table->add_option("--max-n", config.max_n, "Largest n to tabulate (1..12)")->capture_default_str();

  auto* verify = app.add_subcommand("nct-verify", "Spectral-triple checks on the noncommutative torus");
  add_common(verify, config, branch);
  verify->add_option("--pairs", config.pairs, "Seeded monomial pairs for order conditions")
      ->capture_default_str();

  auto* summ = app.add_subcommand("summability", "sigma_k / k^((n-1)/n) plateau estimate");
  add_common(summ, config, branch);
  summ->add_option("--exponent", exponent, "Summability exponent (default: n)");
  summ->add_option("--probe-N", config.probe_radii, "Truncations for the kernel probe")->delimiter(',');
  summ->add_flag("--compare-reference", config.compare_reference,
                 "Compare against the reference weight-block spectrum");

  auto* su2 = app.add_subcommand("su2", "SU(2) weight blocks, majorization and sigma comparison");
  add_common(su2, config, branch);
  su2->add_option("--cutoff", config.cutoff, "Largest label l")->capture_default_str();
  su2->add_option("--choices", config.choices, "Seeded random multiplicity choices")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  CommandResult result;
  try {
    config.branch = sign_from_string(branch);
    if (!exponent.empty()) config.exponent = std::stod(exponent);
    config.validate();
    if (table->parsed()) {
      config.command = "clifford-table";
      result = cmd_clifford_table(config);
    } else if (verify->parsed()) {
      config.command = "nct-verify";
      result = cmd_nct_verify(config);
    } else if (summ->parsed()) {
      config.command = "summability";
      result = cmd_summability(config);
    } else {
      config.command = "su2";
      result = cmd_su2(config);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "verification error: " << e.what() << '\n';
    return kExitFail;
  }

  const std::string text = config.format == "csv" ? result.csv : result.report.dump(2) + "\n";
  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << config.out << '\n';
      return kExitUsage;
    }
    file << text;
  }
  if (result.exit_code != kExitPass) {
    err << config.command << ": verification failed\n";
  }
  return result.exit_code;
}

}  // namespace ncspec::cli
