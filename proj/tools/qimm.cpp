// qimm verify: runs verification suites and writes a JSON or text report.
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qimm/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-immanant identities for U_q(gl_n)"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");

  qimm::RunConfig defaults;
  int n = defaults.n;
  std::vector<int> N_list;
  int m_max = defaults.m_max;
  std::string q = defaults.q;
  std::vector<std::string> z;
  int newton_order = 0;
  int capelli_m_max = defaults.capelli_m_max;
  int a_offset = defaults.a_offset;
  int basis_N_max = 0;
  std::vector<std::string> suites;
  int jobs = defaults.jobs;
  std::string out;
  std::string format = "json";
  std::string config_file;

  auto* o_n = verify->add_option("--n", n, "Rank n of gl_n (>= 2)");
  auto* o_N = verify->add_option("--N", N_list, "Module size N (repeatable)");
  auto* o_m = verify->add_option("--m-max,--m", m_max, "Largest immanant size m");
  auto* o_q = verify->add_option("--q", q, "Deformation parameter p/r");
  auto* o_z = verify->add_option("--z", z, "Sample point z = p/r (repeatable)");
  auto* o_newton = verify->add_option("--newton-order", newton_order, "Newton truncation order M");
  auto* o_cap = verify->add_option("--capelli-m-max", capelli_m_max, "Largest m for the Capelli suite");
  auto* o_off = verify->add_option("--a-offset", a_offset, "Eigenvalue oracle uses a_k = z q^(offset-2k) (1 or 2)");
  auto* o_basis = verify->add_option("--basis-N-max", basis_N_max, "Largest |lambda| in the basis suite");
  auto* o_suite = verify->add_option("--suite", suites, "Suite to run (repeatable; default all)")
                      ->check(CLI::IsMember(qimm::suite_names()));
  auto* o_jobs = verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_option("--out", out, "Write the report here instead of stdout");
  auto* o_format = verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--config", config_file, "JSON config file; flags take precedence");
  auto* o_timing = verify->add_flag("--timing", "Record wall-clock time per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  qimm::RunConfig cfg;
  try {
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw qimm::ConfigError("cannot read config file " + config_file);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw qimm::ConfigError(std::string("config file: ") + e.what());
      }
      cfg = qimm::apply_json(cfg, j);
      if (o_format->count() == 0 && j.contains("format")) format = j["format"].get<std::string>();
      if (out.empty() && j.contains("out")) out = j["out"].get<std::string>();
    }
    if (o_n->count()) cfg.n = n;
    if (o_N->count()) cfg.N_list = N_list;
    if (o_m->count()) cfg.m_max = m_max;
    if (o_q->count()) cfg.q = q;
    if (o_z->count()) cfg.z_samples = z;
    if (o_newton->count()) cfg.newton_order = newton_order;
    if (o_cap->count()) cfg.capelli_m_max = capelli_m_max;
    if (o_off->count()) cfg.a_offset = a_offset;
    if (o_basis->count()) cfg.basis_N_max = basis_N_max;
    if (o_suite->count()) cfg.suites = suites;
    if (o_jobs->count()) cfg.jobs = jobs;
    if (o_timing->count()) cfg.timing = true;
    if (format != "json" && format != "text") throw qimm::ConfigError("format must be json or text");
    cfg.validate();
  } catch (const qimm::ConfigError& e) {
    std::cerr << "qimm: " << e.what() << "\n";
    return 2;
  }

  const qimm::Report report = qimm::run_suite(cfg);
  const std::string text = qimm::emit(report, format == "json" ? qimm::Format::json : qimm::Format::text);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!(f << text)) {
      std::cerr << "qimm: cannot write " << out << "\n";
      return 2;
    }
  }
  return report.all_pass() ? 0 : 1;
}
