#ifndef EPTCTR_BENCH_HPP
#define EPTCTR_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eptctr/baselines.hpp"
#include "eptctr/errors.hpp"
#include "eptctr/problems.hpp"
#include "eptctr/solver.hpp"

namespace eptctr {

/// One benchmark row: a (problem, method) run, mirroring the report table
/// columns (iterations, wall seconds, final gradient infinity norm, status).
struct BenchmarkRecord {
  std::string problem;
  std::size_t n = 0;
  std::string method;
  long iterations = 0;
  double wall_time_s = 0.0;
  double final_g_inf = 0.0;
  double f_final = 0.0;
  std::string status;
  std::vector<TraceRecord> trace;  // populated on request, never serialized
};

struct SuiteOptions {
  std::vector<std::string> methods{"eptctr"};
  std::vector<std::string> problems{"all"};
  std::optional<std::size_t> n;
  double tol = 1e-6;
  long max_iter = 0;
  double dt0 = 1e-2;
  std::optional<double> x0_scalar;
  double time_limit_s = 300.0;
  int parallel = 1;
  bool record_trace = false;
};

struct SuiteReport {
  std::vector<BenchmarkRecord> records;
  std::string config_note;
  std::string environment_note;
};

enum class ReportFormat { csv, json, markdown };

inline std::vector<std::string> known_methods() {
  return {"bfgs", "eptctr", "trust-region"};
}

/// Per-run time limit: explicit value first, then the EPTCTR_TIME_LIMIT_S
/// environment variable, then 300 seconds.
inline double resolve_time_limit(std::optional<double> cli_value = std::nullopt) {
  if (cli_value) return *cli_value;
  if (const char* env = std::getenv("EPTCTR_TIME_LIMIT_S")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 300.0;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string cpu_model() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto pos = line.find(':');
      if (pos != std::string::npos) return line.substr(pos + 2);
    }
  }
  return "unknown CPU";
}

inline std::string compiler_note() {
#if defined(__VERSION__)
  return std::string("g++ ") + __VERSION__;
#else
  return "unknown compiler";
#endif
}

inline BenchmarkRecord run_single(const std::string& problem_name, const std::string& method,
                                  const SuiteOptions& opts) {
  const Problem problem = problem_by_name(problem_name, opts.n);
  const DenseVector x0 = opts.x0_scalar
                             ? DenseVector::constant(problem.dim, *opts.x0_scalar)
                             : problem.default_x0;
  const Deadline deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(opts.time_limit_s));

  SolveReport report;
  if (method == "eptctr") {
    SolverConfig cfg;
    cfg.grad_tol = opts.tol;
    cfg.max_iter = opts.max_iter;
    cfg.dt0 = opts.dt0;
    cfg.record_trace = opts.record_trace;
    report = eptctr_solve(problem, x0, cfg, deadline);
  } else {
    BaselineConfig cfg;
    cfg.grad_tol = opts.tol;
    cfg.max_iter = opts.max_iter;
    cfg.record_trace = opts.record_trace;
    report = method == "trust-region" ? trust_region_newton(problem, x0, cfg, deadline)
                                      : bfgs_linesearch(problem, x0, cfg, deadline);
  }

  BenchmarkRecord rec;
  rec.problem = problem.name;
  rec.n = problem.dim;
  rec.method = method;
  rec.iterations = report.iterations;
  rec.wall_time_s = report.wall_time_s;
  rec.final_g_inf = report.g_inf_norm;
  rec.f_final = report.f_final;
  rec.status = to_string(report.status);
  rec.trace = std::move(report.trace);
  return rec;
}

}  // namespace detail

/// Runs every requested (problem, method) pair. Method and problem names
/// accept "all" (and "mandatory" for problems). Records come back sorted by
/// (problem, method) regardless of execution order; each run gets its own
/// wall-clock deadline of time_limit_s seconds and is marked Timeout past it.
inline SuiteReport run_suite(const SuiteOptions& opts) {
  const std::vector<std::string> known = known_methods();
  std::vector<std::string> methods;
  for (const std::string& raw : opts.methods) {
    const std::string m = eptctr::detail::normalize_name(raw);
    if (m == "all") {
      methods = known;
      break;
    }
    if (std::find(known.begin(), known.end(), m) == known.end())
      throw UsageError("unknown method '" + raw + "'", eptctr::detail::suggest(m, known));
    methods.push_back(m);
  }

  std::vector<std::string> problems;
  for (const std::string& raw : opts.problems) {
    const std::string p = eptctr::detail::normalize_name(raw);
    if (p == "all") {
      problems = problem_names();
      break;
    }
    if (p == "mandatory") {
      problems = mandatory_problem_names();
      break;
    }
    problem_by_name(p, opts.n);  // validates the name and the dimension
    problems.push_back(p);
  }

  std::vector<std::pair<std::string, std::string>> jobs;
  for (const std::string& p : problems)
    for (const std::string& m : methods) jobs.emplace_back(p, m);
  std::sort(jobs.begin(), jobs.end());
  jobs.erase(std::unique(jobs.begin(), jobs.end()), jobs.end());

  SuiteReport suite;
  suite.records.resize(jobs.size());
  const int workers = std::max(1, std::min<int>(opts.parallel, int(jobs.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        suite.records[i] = detail::run_single(jobs[i].first, jobs[i].second, opts);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::ostringstream cfg;
  cfg << "tol=" << opts.tol << " dt0=" << opts.dt0 << " max_iter=" << opts.max_iter
      << " time_limit_s=" << opts.time_limit_s
      << " x0=" << (opts.x0_scalar ? detail::format_double(*opts.x0_scalar) : "default");
  suite.config_note = cfg.str();
  suite.environment_note = detail::compiler_note() + ", " + detail::cpu_model();
  return suite;
}

/// Serializes the records. CSV columns are exactly
/// problem,n,method,iterations,wall_time_s,final_g_inf,f_final,status;
/// JSON is an array of objects with the same field names; markdown renders
/// one row per problem with per-method iteration/time and gradient columns.
inline void emit_report(const SuiteReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::csv) {
    out << "problem,n,method,iterations,wall_time_s,final_g_inf,f_final,status\n";
    for (const BenchmarkRecord& r : report.records) {
      out << r.problem << ',' << r.n << ',' << r.method << ',' << r.iterations << ','
          << detail::format_double(r.wall_time_s) << ','
          << detail::format_double(r.final_g_inf) << ','
          << detail::format_double(r.f_final) << ',' << r.status << '\n';
    }
    return;
  }
  if (format == ReportFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BenchmarkRecord& r : report.records) {
      arr.push_back({{"problem", r.problem},
                     {"n", r.n},
                     {"method", r.method},
                     {"iterations", r.iterations},
                     {"wall_time_s", r.wall_time_s},
                     {"final_g_inf", r.final_g_inf},
                     {"f_final", r.f_final},
                     {"status", r.status}});
    }
    out << arr.dump(2) << '\n';
    return;
  }

  // markdown, grouped by problem with one column pair per method
  std::vector<std::string> methods;
  for (const BenchmarkRecord& r : report.records)
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
      methods.push_back(r.method);
  std::sort(methods.begin(), methods.end());

  out << "| Problem | n |";
  for (const std::string& m : methods) out << ' ' << m << " iter (time s) | " << m << " final g_inf |";
  out << "\n|---|---|";
  for (std::size_t i = 0; i < methods.size(); ++i) out << "---|---|";
  out << '\n';

  std::map<std::string, std::map<std::string, const BenchmarkRecord*>> grouped;
  std::vector<std::string> order;
  for (const BenchmarkRecord& r : report.records) {
    if (!grouped.count(r.problem)) order.push_back(r.problem);
    grouped[r.problem][r.method] = &r;
  }
  for (const std::string& p : order) {
    std::size_t n = 0;
    for (const auto& [m, rec] : grouped[p]) n = rec->n;
    out << "| " << p << " | " << n << " |";
    for (const std::string& m : methods) {
      const auto it = grouped[p].find(m);
      if (it == grouped[p].end()) {
        out << " - | - |";
        continue;
      }
      const BenchmarkRecord& r = *it->second;
      char iter_cell[96];
      std::snprintf(iter_cell, sizeof(iter_cell), "%ld (%.4f)", r.iterations, r.wall_time_s);
      char g_cell[96];
      std::snprintf(g_cell, sizeof(g_cell), "%.4e", r.final_g_inf);
      out << ' ' << iter_cell << " | " << g_cell;
      if (r.status != "Converged") out << " (" << r.status << ")";
      out << " |";
    }
    out << '\n';
  }
}

/// Writes a recorded per-iteration trace as CSV.
inline void write_trace_csv(const std::vector<TraceRecord>& trace, std::ostream& out) {
  out << "k,f,g_inf,dt,rho,accepted,mode\n";
  for (const TraceRecord& t : trace) {
    out << t.k << ',' << detail::format_double(t.f) << ',' << detail::format_double(t.g_inf)
        << ',' << detail::format_double(t.dt) << ',' << detail::format_double(t.rho) << ','
        << (t.accepted ? 1 : 0) << ',' << to_string(t.mode) << '\n';
  }
}

}  // namespace eptctr

#endif  // EPTCTR_BENCH_HPP
