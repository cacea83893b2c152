#include "ratgf/cli.hpp"

#include "ratgf/errors.hpp"
#include "ratgf/evaluate.hpp"
#include "ratgf/io.hpp"
#include "ratgf/optimize.hpp"
#include "ratgf/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>

namespace ratgf {

namespace {

struct RunConfig {
  std::string command;
  std::string polytope_path;
  std::string polynomial_path;
  std::string epsilon_text;
  std::optional<unsigned> k;
  bool find_point = false;
  bool oracle = false;
  bool json = false;
  unsigned degree_cap = 64;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  unsigned threads = 1;
};

struct OracleMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_point(const IntVector& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + to_string(x[i]);
  return s;
}

EvalOptions eval_options(const RunConfig& cfg) {
  EvalOptions o;
  o.threads = cfg.threads;
  o.degree_cap = cfg.degree_cap;
  return o;
}

void cmd_count(const RunConfig& cfg, std::ostream& out) {
  Polytope p = read_polytope_file(cfg.polytope_path);
  Integer n = count(p, eval_options(cfg));
  if (cfg.oracle) {
    auto pts = enumerate_points(p, cfg.oracle_cap);
    if (Integer(std::to_string(pts.size())) != n) {
      throw OracleMismatch("count " + to_string(n) + " but the oracle found " + std::to_string(pts.size()));
    }
  }
  if (cfg.json) {
    out << nlohmann::json{{"count", to_string(n)}}.dump() << "\n";
  } else {
    out << to_string(n) << "\n";
  }
}

void cmd_sum(const RunConfig& cfg, std::ostream& out) {
  Polytope p = read_polytope_file(cfg.polytope_path);
  SparsePolynomial h = read_polynomial_file(cfg.polynomial_path, p.dim(), cfg.degree_cap);
  Rational s = weighted_sum(p, h, eval_options(cfg));
  if (cfg.oracle) {
    Rational b = brute_sum(p, h, cfg.oracle_cap);
    if (b != s) throw OracleMismatch("sum " + to_string(s) + " but the oracle found " + to_string(b));
  }
  if (cfg.json) {
    out << nlohmann::json{{"sum", to_string(s)}}.dump() << "\n";
  } else {
    out << to_string(s) << "\n";
  }
}

void cmd_maximize(const RunConfig& cfg, std::ostream& out) {
  Rational eps = parse_rational(cfg.epsilon_text);
  if (eps <= 0) throw ParseError("--epsilon must be positive");
  Polytope p = read_polytope_file(cfg.polytope_path);
  SparsePolynomial f = read_polynomial_file(cfg.polynomial_path, p.dim(), cfg.degree_cap);
  FptasResult r = maximize(p, f, eps, cfg.find_point, eval_options(cfg), cfg.k);
  if (cfg.oracle) {
    BruteReport b = brute_max(p, f, cfg.oracle_cap);
    if (Rational(r.bounds.lower) > b.max || Rational(r.bounds.upper) < b.max) {
      throw OracleMismatch("bounds [" + to_string(r.bounds.lower) + ", " + to_string(r.bounds.upper) +
                           "] miss the oracle maximum " + to_string(b.max));
    }
    if (r.point && (!contains_lattice_point(p, *r.point) || *r.value < (1 - eps) * b.max)) {
      throw OracleMismatch("point " + join_point(*r.point) + " misses the (1-eps) guarantee against " +
                           to_string(b.max));
    }
  }
  if (cfg.json) {
    nlohmann::ordered_json j;
    j["k"] = std::to_string(r.k);
    j["count"] = to_string(r.bounds.count);
    j["lower"] = to_string(r.bounds.lower);
    j["upper"] = to_string(r.bounds.upper);
    if (r.point) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& x : *r.point) arr.push_back(to_string(x));
      j["point"] = arr;
      j["value"] = to_string(*r.value);
    }
    out << j.dump() << "\n";
  } else {
    out << "k=" << r.k << "\n";
    out << "count=" << to_string(r.bounds.count) << "\n";
    out << "lower=" << to_string(r.bounds.lower) << "\n";
    out << "upper=" << to_string(r.bounds.upper) << "\n";
    if (r.point) {
      out << "point=" << join_point(*r.point) << "\n";
      out << "value=" << to_string(*r.value) << "\n";
    }
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Unbounded: return kExitUnbounded;
    case ErrorKind::DegreeBudgetExceeded: return kExitDegreeBudget;
    case ErrorKind::EmptyPolytope: return kExitEmpty;
    default: return kExitUsage;
  }
}

std::string one_line(std::string s) {
  for (auto& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact lattice-point counting, weighted sums and polynomial maximization over rational polytopes",
               "ratgf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub, bool needs_polynomial) {
    sub->add_option("polytope", cfg.polytope_path, "Polytope file (\"d m\" header, rows \"a_1 .. a_d b\")")
        ->required();
    if (needs_polynomial) {
      sub->add_option("polynomial", cfg.polynomial_path, "Polynomial file (rows \"c e_1 .. e_d\")")->required();
    }
    sub->add_flag("--oracle", cfg.oracle, "Cross-check against brute-force enumeration");
    sub->add_flag("--json", cfg.json, "Emit JSON");
    sub->add_option("--degree-cap", cfg.degree_cap, "Cap on total polynomial degree, including powers f^k")
        ->check(CLI::PositiveNumber);
    sub->add_option("--oracle-cap", cfg.oracle_cap, "Largest bounding box the oracle will scan")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto* count_cmd = app.add_subcommand("count", "Number of lattice points in P");
  common(count_cmd, false);
  auto* sum_cmd = app.add_subcommand("sum", "Sum of a polynomial over the lattice points of P");
  common(sum_cmd, true);
  auto* max_cmd = app.add_subcommand("maximize", "Bounds on the maximum of a non-negative polynomial over P");
  common(max_cmd, true);
  max_cmd->add_option("--epsilon", cfg.epsilon_text, "Relative accuracy, as p/q")->required();
  max_cmd->add_option("--k", cfg.k, "Use this power instead of the one chosen from epsilon")
      ->check(CLI::PositiveNumber);
  max_cmd->add_flag("--point", cfg.find_point, "Also recover a near-optimal lattice point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ratgf: " << one_line(e.what()) << "\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  try {
    if (count_cmd->parsed()) {
      cmd_count(cfg, buffer);
    } else if (sum_cmd->parsed()) {
      cmd_sum(cfg, buffer);
    } else {
      cmd_maximize(cfg, buffer);
    }
  } catch (const OracleMismatch& e) {
    err << "ratgf: oracle mismatch: " << one_line(e.what()) << "\n";
    return kExitOracleMismatch;
  } catch (const Error& e) {
    err << "ratgf: " << one_line(e.what()) << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "ratgf: internal error: " << one_line(e.what()) << "\n";
    return kExitUsage;
  }
  out << buffer.str();
  return kExitOk;
}

}  // namespace ratgf
