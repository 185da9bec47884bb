#include "qimm/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "qimm/hecke.hpp"
#include "qimm/immanants.hpp"
#include "qimm/linalg.hpp"
#include "qimm/uqgln_rep.hpp"
#include "qimm/weyl.hpp"

namespace qimm {

using ojson = nlohmann::ordered_json;

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rmatrix",   "hecke",       "rtt",    "centrality", "tableau-independence",
                                              "eigenvalues", "newton", "capelli", "basis"};
  return names;
}

bool RunConfig::selected(const std::string& suite) const {
  return suites.empty() || std::find(suites.begin(), suites.end(), suite) != suites.end();
}

void RunConfig::validate() const {
  if (n < 2) throw ConfigError("n must be at least 2");
  if (n > 4) throw ConfigError("n above 4 is beyond desk scale");
  try {
    QConfig check(parse_scalar(q));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("q: ") + e.what());
  }
  if (N_list.empty()) throw ConfigError("at least one N is required");
  for (int N : N_list)
    if (N < 0 || N > 4) throw ConfigError("N must lie in 0..4");
  if (m_max < 1 || m_max > 4) throw ConfigError("m-max must lie in 1..4");
  if (capelli_m_max < 1 || capelli_m_max > 3) throw ConfigError("capelli-m-max must lie in 1..3");
  if (jobs < 1) throw ConfigError("jobs must be positive");
  if (newton_order && *newton_order < n) throw ConfigError("newton-order must be at least n");
  if (basis_N_max && *basis_N_max < 0) throw ConfigError("basis-N-max must be non-negative");
  if (a_offset != 1 && a_offset != 2) throw ConfigError("a-offset must be 1 or 2");
  std::set<Scalar> zs;
  for (const auto& z : z_samples) {
    try {
      zs.insert(parse_scalar(z));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("z: ") + e.what());
    }
  }
  if (selected("eigenvalues") && static_cast<int>(zs.size()) < m_max + 1)
    throw ConfigError("eigenvalues needs at least m-max + 1 distinct z samples");
  for (const auto& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw ConfigError("unknown suite '" + s + "'");
}

ojson to_json(const RunConfig& cfg) {
  ojson j;
  j["n"] = cfg.n;
  j["N"] = cfg.N_list;
  j["m-max"] = cfg.m_max;
  j["q"] = to_string(parse_scalar(cfg.q));
  j["z"] = cfg.z_samples;
  j["newton-order"] = cfg.effective_newton_order();
  j["capelli-m-max"] = cfg.capelli_m_max;
  j["a-offset"] = cfg.a_offset;
  j["suite"] = cfg.suites.empty() ? suite_names() : cfg.suites;
  return j;
}

RunConfig apply_json(RunConfig base, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  auto as_string = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "n") base.n = v.get<int>();
      else if (key == "N") base.N_list = v.is_array() ? v.get<std::vector<int>>() : std::vector<int>{v.get<int>()};
      else if (key == "m-max") base.m_max = v.get<int>();
      else if (key == "q") base.q = as_string(v);
      else if (key == "z") {
        base.z_samples.clear();
        for (const auto& z : v) base.z_samples.push_back(as_string(z));
      } else if (key == "newton-order") base.newton_order = v.get<int>();
      else if (key == "capelli-m-max") base.capelli_m_max = v.get<int>();
      else if (key == "a-offset") base.a_offset = v.get<int>();
      else if (key == "basis-N-max") base.basis_N_max = v.get<int>();
      else if (key == "suite") base.suites = v.is_array() ? v.get<std::vector<std::string>>() : std::vector<std::string>{v.get<std::string>()};
      else if (key == "jobs") base.jobs = v.get<int>();
      else if (key == "timing") base.timing = v.get<bool>();
      else if (key == "out" || key == "format") continue;  // handled by the front end
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
  return base;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

namespace {

constexpr std::size_t kMaxWitness = 8;

void absorb(CheckRecord& rec, const Verdict& v) {
  if (v.ok()) return;
  rec.pass = false;
  for (const auto& f : v.failures) {
    if (rec.witness.size() == kMaxWitness) {
      rec.witness.push_back("... " + std::to_string(v.failures.size()) + " failures in total");
      break;
    }
    rec.witness.push_back(f);
  }
}

ojson shape_json(const YoungDiagram& d) { return d.rows(); }

using Job = std::function<std::vector<CheckRecord>()>;

// Wraps a job body: timing, and exceptions turned into failing records.
Job make_job(std::string suite, ojson params, bool timing, std::function<void(CheckRecord&)> body) {
  return [suite = std::move(suite), params = std::move(params), timing, body = std::move(body)] {
    CheckRecord rec;
    rec.suite = suite;
    rec.params = params;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(rec);
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.witness.push_back(std::string("error: ") + e.what());
    }
    if (timing)
      rec.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return std::vector<CheckRecord>{std::move(rec)};
  };
}

std::vector<YoungDiagram> shapes_up_to(int m_max, int rows) {
  std::vector<YoungDiagram> out;
  for (int m = 1; m <= m_max; ++m)
    for (auto& mu : partitions(m, rows)) out.push_back(std::move(mu));
  return out;
}

std::vector<Job> plan(const RunConfig& cfg, const QConfig& qc) {
  std::vector<Job> jobs;
  const int n = cfg.n;
  const bool t = cfg.timing;
  std::vector<Scalar> zs;
  for (const auto& z : cfg.z_samples) zs.push_back(parse_scalar(z));

  if (cfg.selected("rmatrix"))
    jobs.push_back(make_job("rmatrix", {{"n", n}}, t, [=](CheckRecord& r) { absorb(r, verify_rmatrix(n, qc)); }));

  if (cfg.selected("hecke"))
    for (int m = 1; m <= cfg.m_max; ++m)
      jobs.push_back(make_job("hecke", {{"n", n}, {"m", m}}, t, [=](CheckRecord& r) {
        absorb(r, verify_hecke(HeckeAction(n, m, qc)));
      }));

  for (int N : cfg.N_list) {
    if (cfg.selected("rtt"))
      jobs.push_back(make_job("rtt", {{"n", n}, {"N", N}}, t, [=](CheckRecord& r) {
        const EvaluatedRep rep = build_rep(n, N, qc);
        absorb(r, verify_rtt(rep));
        ojson vectors = ojson::array();
        for (const auto& lambda : partitions(N, n)) {
          ojson entries = ojson::array();
          for (const auto& x : highest_weight_vector(rep, lambda)) entries.push_back(to_string(x));
          vectors.push_back({{"lambda", shape_json(lambda)}, {"vector", entries}});
        }
        r.values = {{"highest_weight_vectors", vectors}};
      }));

    for (const auto& mu : shapes_up_to(cfg.m_max, n)) {
      const ojson params{{"n", n}, {"N", N}, {"mu", shape_json(mu)}};
      if (cfg.selected("centrality"))
        jobs.push_back(make_job("centrality", params, t, [=](CheckRecord& r) {
          const EvaluatedRep rep = build_rep(n, N, qc);
          const ImmanantPoly poly = build_immanant_poly(rep, standard_tableaux(mu).front());
          absorb(r, verify_centrality(poly, rep));
          r.values = {{"z_degree", poly.coefficients.is_zero_poly() ? -1 : poly.coefficients.max_exponent()}};
        }));
      if (cfg.selected("tableau-independence"))
        jobs.push_back(make_job("tableau-independence", params, t, [=](CheckRecord& r) {
          absorb(r, verify_tableau_independence(mu, build_rep(n, N, qc)));
          r.values = {{"tableaux", standard_tableaux(mu).size()}};
        }));
      if (cfg.selected("eigenvalues")) {
        ojson p = params;
        p["a_k"] = cfg.a_offset == 1 ? "z q^(1-2k)" : "z q^(2-2k)";
        jobs.push_back(make_job("eigenvalues", p, t, [=](CheckRecord& r) {
          const EvaluatedRep rep = build_rep(n, N, qc);
          const EigenvalueReport er = verify_eigenvalues(mu, rep, zs, partitions(N, n), cfg.a_offset);
          absorb(r, er.verdict);
          ojson rows = ojson::array();
          for (const auto& row : er.rows)
            rows.push_back({{"lambda", shape_json(row.lambda)},
                            {"z", to_string(row.z)},
                            {"operator", to_string(row.from_operator)},
                            {"oracle", to_string(row.from_oracle)}});
          r.values = {{"table", rows}};
        }));
      }
    }

    if (cfg.selected("newton")) {
      const int order = cfg.effective_newton_order();
      jobs.push_back(make_job("newton", {{"n", n}, {"N", N}, {"order", order}}, t, [=](CheckRecord& r) {
        absorb(r, verify_newton(build_rep(n, N, qc), order));
        ojson lambdas = ojson::array();
        for (const auto& lambda : partitions(N, n)) {
          absorb(r, verify_eigenvalue_genfn(lambda, n, order, qc));
          lambdas.push_back(shape_json(lambda));
        }
        r.values = {{"eigenvalue_form_lambdas", lambdas}};
      }));
    }
  }

  if (cfg.selected("capelli")) {
    const int cap = cfg.capelli_m_max;
    jobs.push_back([=] {
      std::vector<CheckRecord> out;
      IdealEngine engine(relation_generators(n, qc));
      for (const auto& mu : shapes_up_to(cap, n)) {
        for (const auto& u : standard_tableaux(mu)) {
          auto job = make_job("capelli", {{"n", n}, {"mu", shape_json(mu)}, {"tableau", u.str()}}, t,
                              [&](CheckRecord& r) {
                                const CapelliReport rep = verify_capelli(u, n, qc, engine);
                                absorb(r, rep.verdict);
                                r.values = {{"entries", rep.entries},
                                            {"literal_zero", rep.literal_zero},
                                            {"certified", rep.certified},
                                            {"notes", rep.notes}};
                              });
          for (auto& rec : job()) out.push_back(std::move(rec));
        }
        auto job = make_job("capelli", {{"n", n}, {"mu", shape_json(mu)}, {"identity", "traced"}}, t,
                            [&](CheckRecord& r) {
                              const CapelliReport rep = verify_traced_capelli(mu, n, qc, engine);
                              absorb(r, rep.verdict);
                              r.values = {{"literal_zero", rep.literal_zero},
                                          {"certified", rep.certified},
                                          {"notes", rep.notes}};
                            });
        for (auto& rec : job()) out.push_back(std::move(rec));
      }
      return out;
    });
  }

  if (cfg.selected("basis")) {
    const int max_N = cfg.basis_N_max.value_or(*std::max_element(cfg.N_list.begin(), cfg.N_list.end()) + 2);
    jobs.push_back(make_job("basis", {{"n", n}, {"m_max", cfg.m_max}, {"N_max", max_N}}, t, [=](CheckRecord& r) {
      const EigenvalueMatrix em = eigenvalue_matrix(n, cfg.m_max, max_N, qc);
      const std::size_t rk = rank(em.values);
      if (rk != em.shapes.size()) {
        r.pass = false;
        r.witness.push_back("rank " + std::to_string(rk) + " < " + std::to_string(em.shapes.size()) + " rows");
      }
      ojson shapes = ojson::array(), weights = ojson::array(), matrix = ojson::array();
      for (const auto& s : em.shapes) shapes.push_back(shape_json(s));
      for (const auto& w : em.weights) weights.push_back(shape_json(w));
      for (const auto& row : em.values) {
        ojson jr = ojson::array();
        for (const auto& x : row) jr.push_back(to_string(x));
        matrix.push_back(jr);
      }
      r.values = {{"rank", rk}, {"shapes", shapes}, {"weights", weights}, {"matrix", matrix}};
    }));
  }
  return jobs;
}

}  // namespace

Report run_suite(const RunConfig& cfg) {
  cfg.validate();
  const QConfig qc(parse_scalar(cfg.q));
  const std::vector<Job> jobs = plan(cfg, qc);
  std::vector<std::vector<CheckRecord>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = jobs[i]();
  };
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), jobs.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  Report report{cfg, {}};
  for (auto& batch : results)
    for (auto& rec : batch) report.checks.push_back(std::move(rec));
  return report;
}

namespace {

ojson record_json(const CheckRecord& c) {
  ojson j;
  j["suite"] = c.suite;
  j["params"] = c.params;
  j["status"] = c.pass ? "pass" : "fail";
  if (!c.witness.empty()) j["witness"] = c.witness;
  j["time_ms"] = c.time_ms ? ojson(*c.time_ms) : ojson(nullptr);
  if (!c.values.is_null()) j["values"] = c.values;
  return j;
}

}  // namespace

std::string emit(const Report& report, Format format) {
  if (format == Format::json) {
    ojson j;
    j["version"] = 1;
    if (report.config) j["config"] = to_json(*report.config);
    j["checks"] = ojson::array();
    for (const auto& c : report.checks) j["checks"].push_back(record_json(c));
    return j.dump(report.config ? 2 : -1) + (report.config ? "\n" : "");
  }
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    passed += c.pass ? 1 : 0;
    os << (c.pass ? "PASS " : "FAIL ") << c.suite << " " << c.params.dump();
    if (c.time_ms) os << " (" << static_cast<long long>(*c.time_ms) << " ms)";
    os << "\n";
    for (const auto& w : c.witness) os << "    " << w << "\n";
    if (c.values.is_object() && c.values.contains("notes"))
      for (const auto& note : c.values["notes"]) os << "    " << note.get<std::string>() << "\n";
    if (c.suite == "eigenvalues" && c.values.contains("table"))
      for (const auto& row : c.values["table"])
        os << "    lambda=" << row["lambda"].dump() << " z=" << row["z"].get<std::string>()
           << " operator=" << row["operator"].get<std::string>() << " oracle=" << row["oracle"].get<std::string>()
           << "\n";
  }
  os << passed << "/" << report.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace qimm
