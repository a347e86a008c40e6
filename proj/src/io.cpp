#include "volterra/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "volterra/errors.hpp"
#include "volterra/numeric.hpp"

namespace volterra {

using nlohmann::json;

ChainState parse_chain_json(const json& j) {
  if (!j.is_object()) throw input_error("chain JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw input_error("chain JSON needs an integer field \"n\"");
  const long n = j["n"].get<long>();
  const bool has_u = j.contains("u");
  const bool has_a = j.contains("a");
  if (has_u == has_a) throw input_error("chain JSON needs exactly one of \"u\" or \"a\"");

  const json& arr = has_u ? j["u"] : j["a"];
  if (!arr.is_array()) throw input_error("chain values must be an array");
  if (static_cast<long>(arr.size()) != n)
    throw input_error("chain value count " + std::to_string(arr.size()) +
                      " does not match n = " + std::to_string(n));

  std::vector<double> vals;
  vals.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number()) throw input_error("chain values must be numbers");
    vals.push_back(v.get<double>());
  }

  ChainState s;
  if (has_u) {
    s.u = std::move(vals);
  } else {
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (!(vals[i] > 0.0))
        throw invariant_error("a_" + std::to_string(i + 1) + " must be positive");
    s.u = u_from_a(vals);
  }
  validate_chain(s);
  return s;
}

ChainState load_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open chain file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw input_error(std::string("chain JSON parse failure: ") + e.what());
  }
  return parse_chain_json(j);
}

json spectrum_to_json(const HillSpectrum& spectrum,
                      const std::vector<AuxSpectrum>& aux_by_shift) {
  json j;
  j["n"] = spectrum.period();
  j["lambda"] = spectrum.lambda;
  json gaps = json::array();
  for (const GapInterval& g : spectrum.gaps)
    gaps.push_back({{"lo", g.lo}, {"hi", g.hi}, {"closed", g.closed}});
  j["gaps"] = std::move(gaps);
  json mu = json::array(), sigma = json::array();
  for (const AuxSpectrum& aux : aux_by_shift) {
    mu.push_back(aux.mu);
    sigma.push_back(aux.sigma);
  }
  j["mu"] = std::move(mu);
  j["sigma"] = std::move(sigma);
  return j;
}

json report_to_json(const VerifyReport& report, const json& config) {
  json checks = json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"worst_t", c.worst_t},
                      {"worst_index", c.worst_index}});
  return json{{"checks", std::move(checks)}, {"all_pass", report.all_pass}, {"config", config}};
}

namespace {

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);  // LF endings everywhere
  if (!out) throw input_error("cannot open output file: " + path);
  for (const std::string& l : lines) out << l << '\n';
}

}  // namespace

void write_direct_csv(const ChainTrajectory& traj, const std::string& path) {
  const int n = static_cast<int>(traj.states.front().size());
  std::vector<std::string> lines;
  std::string header = "t";
  for (int i = 1; i <= n; ++i) header += ",u_" + std::to_string(i);
  header += ",res_sum,res_prod";
  lines.push_back(header);
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    std::string row = format_double(traj.times[s]);
    for (double v : traj.states[s]) row += "," + format_double(v);
    row += "," + format_double(traj.invariants[s].sum_drift);
    row += "," + format_double(traj.invariants[s].prod_drift);
    lines.push_back(std::move(row));
  }
  write_lines(path, lines);
}

void write_spectral_csv(const SpectralTrajectory& traj,
                        const std::vector<std::vector<double>>& u_per_sample,
                        const std::string& path) {
  const int n = traj.spectrum.period();
  std::vector<std::string> lines;
  std::string header = "t";
  for (int i = 1; i <= n; ++i) header += ",u_" + std::to_string(i);
  for (int i = 1; i <= 2 * n; ++i) header += ",lambda_" + std::to_string(i);
  for (int k = 0; k < n; ++k)
    for (int j = 1; j < n; ++j)
      header += ",mu_" + std::to_string(j) + "_" + std::to_string(k);
  for (int k = 0; k < n; ++k)
    for (int j = 1; j < n; ++j)
      header += ",sigma_" + std::to_string(j) + "_" + std::to_string(k);
  header += ",res_zero_sum";
  lines.push_back(header);

  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    std::string row = format_double(traj.times[s]);
    for (double v : u_per_sample[s]) row += "," + format_double(v);
    for (double v : traj.spectrum.lambda) row += "," + format_double(v);
    for (int k = 0; k < n; ++k)
      for (double v : traj.samples[s][k].mu) row += "," + format_double(v);
    for (int k = 0; k < n; ++k)
      for (int v : traj.samples[s][k].sigma) row += "," + std::to_string(v);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      double sum = 0.0;
      for (double mu : traj.samples[s][k].mu) sum += mu;
      worst = std::max(worst, std::abs(sum));
    }
    row += "," + format_double(worst);
    lines.push_back(std::move(row));
  }
  write_lines(path, lines);
}

long CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<long>(i);
  return -1;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open CSV file: " + path);
  CsvTable table;
  std::string line;
  if (!std::getline(in, line) || line.empty()) throw input_error("CSV has no header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) table.columns.push_back(cell);

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream rs(line);
    while (std::getline(rs, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str()) throw input_error("non-numeric CSV cell: " + cell);
      row.push_back(v);
    }
    if (row.size() != table.columns.size())
      throw input_error("CSV row width does not match the header");
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) throw input_error("CSV has no data rows");
  return table;
}

}  // namespace volterra
