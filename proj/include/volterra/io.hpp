#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "volterra/flow.hpp"
#include "volterra/lattice.hpp"
#include "volterra/verify.hpp"

namespace volterra {

// Chain JSON: { "n": int >= 2, "u": [n positives] } or { "n", "a": [...] },
// exactly one of "u"/"a"; canonicalized to u. Structural problems raise
// input_error, domain violations raise invariant_error.
ChainState parse_chain_json(const nlohmann::json& j);
ChainState load_chain(const std::string& path);

nlohmann::json spectrum_to_json(const HillSpectrum& spectrum,
                                const std::vector<AuxSpectrum>& aux_by_shift);

nlohmann::json report_to_json(const VerifyReport& report, const nlohmann::json& config);

// Trajectory CSV. Direct:   t,u_1..u_N,res_sum,res_prod
// Spectral: t,u_1..u_N,lambda_1..lambda_2N,mu_j_k...,sigma_j_k...,res_zero_sum
// with mu/sigma columns ordered shift-major (k = 0..N-1, j = 1..N-1 inside).
// Floats are shortest-round-trip, LF line endings.
void write_direct_csv(const ChainTrajectory& traj, const std::string& path);
void write_spectral_csv(const SpectralTrajectory& traj,
                        const std::vector<std::vector<double>>& u_per_sample,
                        const std::string& path);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  long column(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(const std::string& path);

}  // namespace volterra
