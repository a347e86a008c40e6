#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "volterra/errors.hpp"
#include "volterra/io.hpp"
#include "volterra/lemma_sweep.hpp"
#include "volterra/numeric.hpp"
#include "volterra/reconstruct.hpp"
#include "volterra/svg.hpp"
#include "volterra/verify.hpp"

namespace {

using volterra::ChainState;

// Exit contract: 0 pass, 1 check failure, 2 input error, 3 invariant
// violation, 4 integration failure.
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitIntegration = 4;

int cmd_spectrum(const std::string& input, const std::string& output) {
  const ChainState chain = volterra::load_chain(input);
  const volterra::HillCoefficients coeffs(volterra::a_from_u(chain.u));
  const volterra::HillSpectrum spectrum = volterra::periodic_spectrum(coeffs);
  std::vector<volterra::AuxSpectrum> aux(chain.period());
  for (int k = 0; k < chain.period(); ++k) {
    aux[k] = volterra::dirichlet_spectrum(coeffs, k);
    volterra::sigma_signs(coeffs, aux[k]);
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw volterra::input_error("cannot open output file: " + output);
  out << volterra::spectrum_to_json(spectrum, aux).dump(2) << '\n';
  return 0;
}

int cmd_evolve(const std::string& input, const std::string& method, double t_end, double dt,
               long sample_every, const std::string& output) {
  const ChainState chain = volterra::load_chain(input);
  if (method == "direct") {
    const volterra::ChainTrajectory traj =
        volterra::integrate_direct(chain, t_end, dt, sample_every);
    volterra::write_direct_csv(traj, output);
    return 0;
  }
  if (method == "spectral") {
    const volterra::SpectralTrajectory traj =
        volterra::evolve_spectral(chain, t_end, dt, sample_every);
    std::vector<std::vector<double>> u(traj.times.size());
    for (std::size_t s = 0; s < traj.times.size(); ++s)
      u[s] = volterra::reconstruct_general(traj.spectrum, traj.samples[s]).u;
    volterra::write_spectral_csv(traj, u, output);
    return 0;
  }
  throw volterra::input_error("unknown method: " + method);
}

volterra::SigmaFlip parse_flip(const std::string& text) {
  volterra::SigmaFlip flip;
  if (text.empty()) return flip;
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw volterra::input_error("--flip-sigma expects \"j,k\"");
  try {
    flip.gap_j = std::stoi(text.substr(0, comma));
    flip.shift_k = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw volterra::input_error("--flip-sigma expects integers \"j,k\"");
  }
  if (flip.gap_j < 1) throw volterra::input_error("--flip-sigma gap index must be >= 1");
  return flip;
}

int cmd_verify(const std::string& input, double t_end, double dt, long sample_every,
               const std::string& output, const std::string& flip_text) {
  const ChainState chain = volterra::load_chain(input);
  const volterra::SigmaFlip flip = parse_flip(flip_text);

  volterra::VerifyReport report;
  try {
    report = volterra::end_to_end(chain, t_end, dt, sample_every, flip);
  } catch (const volterra::inconsistency_error& e) {
    // Reconstruction refused the spectral data outright; report that as the
    // single failed check so the JSON is still written.
    volterra::CheckResult bad;
    bad.name = "reconstruction";
    bad.max_residual = std::numeric_limits<double>::infinity();
    bad.pass = false;
    bad.worst_index = e.what();
    report.checks.push_back(bad);
    report.all_pass = false;
  }

  nlohmann::json config{{"input", input},    {"t_end", t_end},
                        {"dt", dt},          {"sample_every", sample_every},
                        {"n", chain.period()}};
  if (!flip_text.empty()) config["flip_sigma"] = flip_text;
  std::ofstream out(output, std::ios::binary);
  if (!out) throw volterra::input_error("cannot open output file: " + output);
  out << volterra::report_to_json(report, config).dump(2) << '\n';

  for (const volterra::CheckResult& c : report.checks)
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
              << " max_residual=" << volterra::format_double(c.max_residual)
              << " tolerance=" << volterra::format_double(c.tolerance) << '\n';
  return report.all_pass ? 0 : kExitCheckFailed;
}

int cmd_lemma(long n, long s_min, long s_max, long trials, std::uint64_t seed,
              const std::string& mode) {
  volterra::LemmaMode m;
  if (mode == "exact")
    m = volterra::LemmaMode::exact;
  else if (mode == "float")
    m = volterra::LemmaMode::floating;
  else
    throw volterra::input_error("mode must be exact or float");
  if (n < 1) throw volterra::input_error("n must be >= 1");
  if (trials < 1) throw volterra::input_error("trials must be >= 1");

  const volterra::LemmaSweepResult result = volterra::run_lemma_sweep(n, s_min, s_max, trials, seed, m);
  std::printf("%4s %4s %14s %14s %14s\n", "n", "s", "max_residual", "max_recursion", "max_term");
  for (const volterra::LemmaRow& row : result.rows)
    std::printf("%4ld %4ld %14.6g %14.6g %14.6g\n", row.n, row.s, row.max_residual,
                row.max_recursion, row.max_term);
  std::cout << (result.pass ? "all identities hold\n" : "IDENTITY VIOLATION\n");
  return result.pass ? 0 : kExitCheckFailed;
}

int cmd_plot(const std::string& input, const std::string& output, const std::string& what) {
  const volterra::CsvTable table = volterra::read_csv(input);
  const long tcol = table.column("t");
  if (tcol < 0) throw volterra::input_error("CSV has no t column");
  std::vector<double> t;
  for (const auto& row : table.rows) t.push_back(row[tcol]);

  std::vector<volterra::PlotSeries> series;
  std::vector<volterra::PlotBand> bands;

  if (what == "u") {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (table.columns[c].rfind("u_", 0) != 0) continue;
      volterra::PlotSeries s;
      s.label = table.columns[c];
      s.x = t;
      for (const auto& row : table.rows) s.y.push_back(row[c]);
      series.push_back(std::move(s));
    }
    if (series.empty()) throw volterra::input_error("CSV has no u_* columns");
  } else if (what == "mu") {
    for (int j = 1;; ++j) {
      const long c = table.column("mu_" + std::to_string(j) + "_0");
      if (c < 0) break;
      volterra::PlotSeries s;
      s.label = table.columns[c];
      s.x = t;
      for (const auto& row : table.rows) s.y.push_back(row[c]);
      series.push_back(std::move(s));
    }
    if (series.empty()) throw volterra::input_error("CSV has no mu_*_0 columns");
    for (std::size_t j = 1; j <= series.size(); ++j) {
      const long lo = table.column("lambda_" + std::to_string(2 * j));
      const long hi = table.column("lambda_" + std::to_string(2 * j + 1));
      if (lo < 0 || hi < 0) throw volterra::input_error("CSV has no lambda_* columns");
      bands.push_back({table.rows[0][lo], table.rows[0][hi]});
      // Gap containment, asserted before rendering anything.
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const double mu = series[j - 1].y[r];
        const double slack = 1e-9 * (1.0 + std::abs(table.rows[0][lo]));
        if (mu < table.rows[0][lo] - slack || mu > table.rows[0][hi] + slack)
          throw volterra::invariant_error("mu_" + std::to_string(j) +
                                          "_0 leaves its gap in the trajectory data");
      }
    }
  } else {
    throw volterra::input_error("--what must be u or mu");
  }

  volterra::write_line_chart(output, what == "u" ? "u_n(t)" : "mu_j0(t) with spectral gaps",
                             series, bands);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Periodic Volterra chain toolkit: spectra of the associated discrete\n"
      "Hill equation, direct and spectral time evolution, trace-formula\n"
      "reconstruction, and cross-validation reports."};
  app.require_subcommand(1);

  std::string input, output, method = "direct", mode = "exact", what = "u", flip;
  double t_end = 1.0, dt = 1e-3;
  long sample_every = 1, trials = 20, n = 3, s_min = -6, s_max = 9;
  std::uint64_t seed = 1;

  auto* spectrum = app.add_subcommand("spectrum", "Chain JSON in, spectrum JSON out");
  spectrum->add_option("--input", input)->required();
  spectrum->add_option("--output", output)->required();

  auto* evolve = app.add_subcommand(
      "evolve",
      "Integrate the chain and write a trajectory CSV.\n"
      "direct columns:   t,u_1..u_N,res_sum,res_prod\n"
      "spectral columns: t,u_1..u_N,lambda_1..lambda_2N,\n"
      "                  mu_j_k (k = 0..N-1 outer, j = 1..N-1 inner),\n"
      "                  sigma_j_k (same order), res_zero_sum");
  evolve->add_option("--input", input)->required();
  evolve->add_option("--output", output)->required();
  evolve->add_option("--method", method)->check(CLI::IsMember({"direct", "spectral"}));
  evolve->add_option("--t-end", t_end);
  evolve->add_option("--dt", dt);
  evolve->add_option("--sample-every", sample_every);

  auto* verify = app.add_subcommand("verify",
                                    "Run the full cross-validation harness; write a JSON "
                                    "report; exit 0 iff every check passes");
  verify->add_option("--input", input)->required();
  verify->add_option("--output", output)->required();
  verify->add_option("--t-end", t_end);
  verify->add_option("--dt", dt);
  verify->add_option("--sample-every", sample_every)->default_val(10);
  verify->add_option("--flip-sigma", flip, "test hook: flip sigma of gap j, shift k (\"j,k\")");

  auto* lemma = app.add_subcommand("lemma",
                                   "Sweep the interpolation-sum identities over s for random "
                                   "node sets");
  lemma->add_option("--n", n, "number of nodes minus one");
  lemma->add_option("--s-min", s_min);
  lemma->add_option("--s-max", s_max);
  lemma->add_option("--trials", trials);
  lemma->add_option("--seed", seed);
  lemma->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));

  auto* plot = app.add_subcommand("plot", "Render a trajectory CSV as a static SVG chart");
  plot->add_option("--input", input)->required();
  plot->add_option("--output", output)->required();
  plot->add_option("--what", what)->check(CLI::IsMember({"u", "mu"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (!(dt > 0.0)) throw volterra::input_error("dt must be positive");
    if (sample_every < 1) throw volterra::input_error("sample-every must be >= 1");
    if (spectrum->parsed()) return cmd_spectrum(input, output);
    if (evolve->parsed()) return cmd_evolve(input, method, t_end, dt, sample_every, output);
    if (verify->parsed()) return cmd_verify(input, t_end, dt, sample_every, output, flip);
    if (lemma->parsed()) return cmd_lemma(n, s_min, s_max, trials, seed, mode);
    if (plot->parsed()) return cmd_plot(input, output, what);
  } catch (const volterra::input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const volterra::invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const volterra::integration_error& e) {
    std::cerr << "integration failure: " << e.what() << '\n';
    return kExitIntegration;
  } catch (const volterra::degeneracy_error& e) {
    std::cerr << "degeneracy: " << e.what() << '\n';
    return kExitIntegration;
  } catch (const volterra::inconsistency_error& e) {
    std::cerr << "inconsistency: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
