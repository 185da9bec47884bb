#pragma once

// Verification suites and their machine-readable reports.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qimm {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Suites in report order. "rmatrix" and "basis" run with the others by default.
const std::vector<std::string>& suite_names();

struct RunConfig {
  int n = 2;
  std::vector<int> N_list{0, 1, 2};
  int m_max = 2;
  std::string q = "3/2";
  std::vector<std::string> z_samples{"0", "1", "2", "3"};
  /// Newton truncation order; default max(6, n + 2).
  std::optional<int> newton_order;
  int capelli_m_max = 2;
  /// Exponent offset in a_k = z q^{offset - 2k} for the eigenvalue oracle.
  int a_offset = 1;
  /// Largest |λ| in the basis suite's eigenvalue matrix; default max(N_list) + 2.
  std::optional<int> basis_N_max;
  std::vector<std::string> suites;  // empty selects every suite
  int jobs = 1;
  /// Record wall-clock time per check. Off by default so reports are reproducible.
  bool timing = false;

  int effective_newton_order() const { return newton_order.value_or(std::max(6, n + 2)); }
  bool selected(const std::string& suite) const;
  /// Throws ConfigError.
  void validate() const;
};

nlohmann::ordered_json to_json(const RunConfig& cfg);

/// Overlays keys of a JSON config object (same names as the CLI flags) onto
/// `base`. Throws ConfigError on unknown keys or wrong types.
RunConfig apply_json(RunConfig base, const nlohmann::json& j);

struct CheckRecord {
  std::string suite;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool pass = true;
  std::vector<std::string> witness;
  std::optional<double> time_ms;
  nlohmann::ordered_json values;  // null when absent
};

struct Report {
  std::optional<RunConfig> config;
  std::vector<CheckRecord> checks;
  bool all_pass() const;
};

/// Runs the selected suites. Checks are independent jobs spread over
/// `jobs` workers; the report keeps the fixed job order.
Report run_suite(const RunConfig& cfg);

enum class Format { json, text };

std::string emit(const Report& report, Format format);

}  // namespace qimm
