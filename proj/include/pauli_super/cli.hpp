#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "pauli_super/codimension.hpp"
#include "pauli_super/errors.hpp"
#include "pauli_super/exponent.hpp"
#include "pauli_super/serialize.hpp"
#include "pauli_super/super_p.hpp"
#include "pauli_super/verify.hpp"

namespace pauli_super::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResource = 3 };

enum class Command { verify, structure_table, codim, exponent, estimate };
enum class Format { json, csv };

struct RunConfig {
  Command command = Command::verify;
  std::optional<unsigned> q;
  std::optional<long> t;
  unsigned max_n = 10;
  std::string out;  // empty: write to the caller's stream
  Format format = Format::json;
  unsigned threads = 1;
  bool timing = false;
  std::uint64_t seed = 12345;
};

/// Resolves q and t against each other. t = 2^q; both given must agree.
/// Commands on P(t) default to q = 1; exponent accepts any power of two.
inline void resolve_rank(RunConfig& c) {
  if (c.t) require_power_of_two(*c.t);
  if (c.q && c.t && (*c.q >= 63 || (1L << *c.q) != *c.t))
    throw ConfigurationError("--q and --t disagree: t must equal 2^q");
  if (!c.q && !c.t) c.q = 1;
  if (!c.t) {
    if (*c.q < 1 || *c.q > 30) throw ConfigurationError("--q out of range");
    c.t = 1L << *c.q;
  }
  if (!c.q) {
    unsigned q = 0;
    while ((1L << q) < *c.t) ++q;
    c.q = q;
  }
  if (c.threads < 1) throw ConfigurationError("--threads must be >= 1");
}

namespace detail {

inline int run_verify(const RunConfig& c, std::ostream& os) {
  const GradedSuperalgebra alg = build_p_algebra(*c.q);
  std::vector<Report> reports;
  reports.push_back(verify_prop1(*c.q));
  reports.push_back(verify_prop2(alg));
  reports.push_back(*c.q == 1 ? verify_super_axioms(alg) : verify_super_axioms_sampled(alg, 10000, c.seed));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();

  if (c.format == Format::csv) {
    os << "report,item,passed,checked,detail\n";
    for (const auto& r : reports)
      for (const auto& it : r.items) os << r.title << ',' << it.name << ',' << (it.passed ? "true" : "false") << ',' << it.checked << ',' << it.detail << '\n';
  } else {
    Json j = {{"q", *c.q}, {"passed", ok}, {"reports", Json::array()}};
    for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
    os << j.dump(2) << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

inline int run_structure_table(const RunConfig& c, std::ostream& os) {
  const GradedSuperalgebra alg = build_p_algebra(*c.q);
  const StructureTable table = build_structure_table(alg);
  if (c.format == Format::csv) os << structure_table_to_csv(alg, table);
  else os << structure_table_to_json(alg, table).dump(2) << '\n';
  return kOk;
}

struct TimedRow {
  CodimensionRow row;
  long long elapsed_ms = 0;
};

inline void require_codim_caps(const RunConfig& c) {
  if (*c.t > 4) throw ResourceError("codim: only t = 2 and t = 4 are supported");
  if (*c.t == 4 && c.max_n > FeasibilityTable::kMaxTotalLarge) throw ResourceError("codim: t = 4 requires --max-n <= 6");
  if (*c.t == 2 && c.max_n > FeasibilityTable::kMaxTotalSmall) throw ResourceError("codim: t = 2 requires --max-n <= 40");
  if (c.max_n < 1) throw ConfigurationError("--max-n must be >= 1");
}

inline std::vector<TimedRow> compute_rows(const RunConfig& c, FeasibilityTable& table) {
  std::vector<TimedRow> rows;
  const auto start = std::chrono::steady_clock::now();
  for (unsigned n = 1; n <= c.max_n; ++n) {
    TimedRow r{graded_codimension(n, table, c.threads), 0};
    if (c.timing)
      r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(r));
  }
  return rows;
}

inline int run_codim(const RunConfig& c, std::ostream& os) {
  require_codim_caps(c);
  const GradedSuperalgebra alg = build_p_algebra(*c.q);
  FeasibilityTable table(alg, build_structure_table(alg));
  const auto rows = compute_rows(c, table);

  if (c.format == Format::csv) {
    os << "n,c_n,feasible_count,elapsed_ms\n";
    for (const auto& r : rows) os << r.row.n << ',' << to_decimal(r.row.codimension) << ',' << r.row.feasible_count << ',' << r.elapsed_ms << '\n';
    return kOk;
  }
  Json j = {{"t", *c.t}, {"d", alg.dim()}, {"rows", Json::array()}};
  for (const auto& r : rows) {
    Json row = {{"n", r.row.n}, {"c_n", to_decimal(r.row.codimension)}, {"feasible_count", r.row.feasible_count}, {"elapsed_ms", r.elapsed_ms}};
    if (r.row.n <= 8) {
      Json list = Json::array();
      for (const auto& v : table.feasible_at(r.row.n)) list.push_back(v.counts);
      row["feasible"] = std::move(list);
    }
    j["rows"].push_back(std::move(row));
  }
  os << j.dump(2) << '\n';
  return kOk;
}

inline Json exponent_report_to_json(const ExponentReport& r, const std::vector<CodimensionRow>& rows) {
  Json j = {{"t", r.t},
            {"z_star", format_real(r.z_star)},
            {"g_at_z_star", format_real(r.g_at_z_star)},
            {"g_prime_residual", format_real(r.g_prime_residual)},
            {"g_second", format_real(r.g_second)},
            {"theoretical", format_real(r.theoretical)},
            {"estimates", Json::array()}};
  for (std::size_t i = 0; i < r.estimates.size(); ++i) {
    const auto& e = r.estimates[i];
    j["estimates"].push_back({{"n", e.n},
                              {"c_n", to_decimal(rows.at(i).codimension)},
                              {"lower_est", format_real(e.lower)},
                              {"root", format_real(e.root)},
                              {"upper_est", format_real(e.upper)},
                              {"upper_bound_ok", e.upper_bound_ok}});
  }
  return j;
}

inline int run_exponent(const RunConfig& c, std::ostream& os) {
  const ExponentReport r = estimate_exponent(*c.t, {});
  if (c.format == Format::csv) {
    os << "key,value\n"
       << "t," << r.t << '\n'
       << "z_star," << format_real(r.z_star) << '\n'
       << "g_at_z_star," << format_real(r.g_at_z_star) << '\n'
       << "g_prime_residual," << format_real(r.g_prime_residual) << '\n'
       << "g_second," << format_real(r.g_second) << '\n'
       << "theoretical," << format_real(r.theoretical) << '\n';
  } else {
    os << exponent_report_to_json(r, {}).dump(2) << '\n';
  }
  return kOk;
}

inline int run_estimate(const RunConfig& c, std::ostream& os) {
  require_codim_caps(c);
  const GradedSuperalgebra alg = build_p_algebra(*c.q);
  FeasibilityTable table(alg, build_structure_table(alg));
  std::vector<CodimensionRow> rows;
  for (auto& r : compute_rows(c, table)) rows.push_back(std::move(r.row));
  const ExponentReport rep = estimate_exponent(*c.t, rows);

  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i)
    ok = ok && rep.estimates[i].upper_bound_ok && dimension_bound_check(rows[i].n, rows[i].codimension, *c.t);

  if (c.format == Format::csv) {
    os << "n,c_n,lower_est,root,upper_est,upper_bound_ok\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& e = rep.estimates[i];
      os << e.n << ',' << to_decimal(rows[i].codimension) << ',' << format_real(e.lower) << ',' << format_real(e.root) << ','
         << format_real(e.upper) << ',' << (e.upper_bound_ok ? "true" : "false") << '\n';
    }
  } else {
    os << exponent_report_to_json(rep, rows).dump(2) << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

inline int dispatch(const RunConfig& c, std::ostream& os) {
  switch (c.command) {
    case Command::verify: return run_verify(c, os);
    case Command::structure_table: return run_structure_table(c, os);
    case Command::codim: return run_codim(c, os);
    case Command::exponent: return run_exponent(c, os);
    case Command::estimate: return run_estimate(c, os);
  }
  return kUsage;
}

}  // namespace detail

/// Executes one command. Output goes to c.out when set, otherwise to `os`.
/// Errors are reported on `err` and mapped to exit codes.
inline int run(RunConfig c, std::ostream& os, std::ostream& err = std::cerr) {
  try {
    resolve_rank(c);
    if (c.out.empty()) return detail::dispatch(c, os);
    std::ostringstream buf;
    const int code = detail::dispatch(c, buf);
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << c.out << " for writing\n";
      return kUsage;
    }
    file << buf.str();
    return code;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  }
}

/// Thread count from the environment, used only when --threads is absent.
inline constexpr const char* kThreadsEnv = "PAULI_SUPER_THREADS";

/// Parses argv into a RunConfig. Returns an exit code instead when parsing
/// ends the run (help, usage error).
inline std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out = std::cout,
                                                       std::ostream& err = std::cerr) {
  CLI::App app{"Pauli-graded P(t): verification, structure tables, graded codimensions, PI-exponent"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");

  RunConfig c;
  unsigned q = 0;
  long t = 0;
  std::string format = "json";
  auto* q_opt = app.add_option("--q", q, "Rank q; P(t) is built for t = 2^q (1..4)");
  auto* t_opt = app.add_option("--t", t, "Block size t, a power of two");
  app.add_option("--max-n", c.max_n, "Largest n for codim/estimate")->capture_default_str();
  app.add_option("--out", c.out, "Write the result to this file instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--threads", c.threads, "Worker threads for the codimension DP")->envname(kThreadsEnv)->check(CLI::PositiveNumber);
  app.add_flag("--timing", c.timing, "Fill elapsed_ms in codim output (breaks byte-for-byte reproducibility)");
  app.add_option("--seed", c.seed, "Seed for sampled axiom checks")->capture_default_str();

  struct Sub {
    const char* name;
    Command cmd;
    const char* help;
  };
  const Sub subs[] = {{"verify", Command::verify, "Check the gradings and the superalgebra axioms"},
                      {"structure-table", Command::structure_table, "Export structure constants"},
                      {"codim", Command::codim, "Exact graded codimensions c_n for n = 1..max-n"},
                      {"exponent", Command::exponent, "Closed-form exponent and critical-point report"},
                      {"estimate", Command::estimate, "Codimensions joined with exponent brackets"}};
  std::vector<CLI::App*> handles;
  for (const auto& s : subs) handles.push_back(app.add_subcommand(s.name, s.help));

  c.threads = std::max(1u, std::thread::hardware_concurrency());
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (std::size_t i = 0; i < handles.size(); ++i)
    if (handles[i]->parsed()) c.command = subs[i].cmd;
  if (*q_opt) c.q = q;
  if (*t_opt) c.t = t;
  c.format = format == "csv" ? Format::csv : Format::json;
  return c;
}

}  // namespace pauli_super::cli
