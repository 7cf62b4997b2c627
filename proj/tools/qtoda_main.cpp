// Command-line driver: solve / spectrum / verify / flow / q1 / dump-matrix.
//
// Flags override values taken from an optional JSON config file (--config);
// JSON reports are emitted deterministically (fixed field order, 17
// significant digits).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qtoda/bethe.hpp"
#include "qtoda/hamiltonian.hpp"
#include "qtoda/q1_limit.hpp"
#include "qtoda/report.hpp"
#include "qtoda/spectrum.hpp"
#include "qtoda/verify.hpp"

namespace {

struct RunConfig {
  int n = 1;
  int m = 1;
  double q = 0.0;
  double pp = 0.0;
  double qp = 0.0;
  double pm = 0.0;
  double qm = 0.0;
  double tol = 1e-12;
  std::string kappa;      // comma-separated parts, empty = all
  std::string out;        // empty = stdout
  std::string format = "csv";
  std::string config_path;
  double t_end = 0.0;     // 0 = auto
  int samples = 400;
  bool q1_matrix = false;
};

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadConfig = 2;

void add_common_options(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--n", rc.n, "particle count n");
  cmd->add_option("--m", rc.m, "lattice extent m");
  cmd->add_option("--q", rc.q, "bulk parameter q");
  cmd->add_option("--pp", rc.pp, "boundary root p_plus");
  cmd->add_option("--qp", rc.qp, "boundary root q_plus");
  cmd->add_option("--pm", rc.pm, "boundary root p_minus");
  cmd->add_option("--qm", rc.qm, "boundary root q_minus");
  cmd->add_option("--kappa", rc.kappa, "comma-separated kappa parts");
  cmd->add_option("--tol", rc.tol, "solver tolerance");
  cmd->add_option("--out", rc.out, "output path (default: stdout)");
  cmd->add_option("--format", rc.format, "csv|json (solve command)");
  cmd->add_option("--config", rc.config_path, "JSON config file");
}

int apply_config_file(const CLI::App& cmd, RunConfig& rc) {
  if (rc.config_path.empty()) return 0;
  std::ifstream in(rc.config_path);
  if (!in) {
    std::cerr << "cannot open config file: " << rc.config_path << "\n";
    return kExitBadConfig;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "config parse error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  // file values apply only where no flag was given
  const auto set_int = [&](const char* flag, const char* key, int& dst) {
    if (cmd.count(flag) == 0 && j.contains(key)) dst = j.at(key).get<int>();
  };
  const auto set_double = [&](const char* flag, const char* key, double& dst) {
    if (cmd.count(flag) == 0 && j.contains(key)) dst = j.at(key).get<double>();
  };
  const auto set_string = [&](const char* flag, const char* key, std::string& dst) {
    if (cmd.count(flag) == 0 && j.contains(key)) dst = j.at(key).get<std::string>();
  };
  try {
    set_int("--n", "n", rc.n);
    set_int("--m", "m", rc.m);
    set_double("--q", "q", rc.q);
    set_double("--pp", "p_plus", rc.pp);
    set_double("--qp", "q_plus", rc.qp);
    set_double("--pm", "p_minus", rc.pm);
    set_double("--qm", "q_minus", rc.qm);
    set_double("--tol", "tol", rc.tol);
    set_string("--kappa", "kappa", rc.kappa);
    set_string("--out", "output_path", rc.out);
    set_string("--format", "format", rc.format);
  } catch (const std::exception& e) {
    std::cerr << "config field error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  return 0;
}

int validate_config(const RunConfig& rc) {
  const auto bad = [](const std::string& msg) {
    std::cerr << msg << "\n";
    return kExitBadConfig;
  };
  if (rc.n < 1) return bad("n must be >= 1");
  if (rc.m < 1 || rc.m > 8) return bad("m must be in 1..8");
  const auto check_unit = [&](double x, const char* name) {
    return x > -1.0 && x < 1.0 ? 0 : bad(std::string(name) + " outside (-1,1)");
  };
  if (int r = check_unit(rc.q, "q")) return r;
  if (int r = check_unit(rc.pp, "pp")) return r;
  if (int r = check_unit(rc.qp, "qp")) return r;
  if (int r = check_unit(rc.pm, "pm")) return r;
  if (int r = check_unit(rc.qm, "qm")) return r;
  if (!(rc.tol > 0.0)) return bad("tol must be positive");
  if (rc.format != "csv" && rc.format != "json") return bad("format must be csv or json");
  return 0;
}

std::optional<std::vector<int>> parse_kappa(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (parts.empty()) return std::nullopt;
  return parts;
}

int emit(const RunConfig& rc, const std::string& text) {
  if (rc.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(rc.out, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output path: " << rc.out << "\n";
    return kExitBadConfig;
  }
  out << text;
  return 0;
}

std::string solutions_to_json(const std::vector<qtoda::BetheSolution>& sols) {
  std::string out = "[";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& sol = sols[i];
    if (i) out += ',';
    out += "{\"kappa\":[";
    for (std::size_t j = 0; j < sol.kappa.parts().size(); ++j) {
      if (j) out += ',';
      out += std::to_string(sol.kappa.parts()[j]);
    }
    out += "],\"xi\":[";
    for (std::size_t j = 0; j < sol.xi.xi.size(); ++j) {
      if (j) out += ',';
      out += qtoda::format_double(sol.xi.xi[j]);
    }
    out += "],\"energy\":" + qtoda::format_double(sol.energy);
    out += ",\"grad_norm\":" + qtoda::format_double(sol.grad_norm);
    out += ",\"bae_residual\":" + qtoda::format_double(sol.bae_residual);
    out += ",\"hessian_min_eig\":" + qtoda::format_double(sol.hessian_min_eig);
    out += "}";
  }
  out += "]\n";
  return out;
}

int run_solve(const RunConfig& rc) {
  using namespace qtoda;
  const LatticeConfig cfg{rc.n, rc.m};
  const ModelParams params(rc.q, rc.pp, rc.qp, rc.pm, rc.qm);
  std::vector<Partition> kappas;
  if (rc.kappa.empty()) {
    kappas = enumerate_partitions(conjugate_box(cfg));
  } else {
    const auto parts = parse_kappa(rc.kappa);
    if (!parts) {
      std::cerr << "invalid --kappa\n";
      return kExitBadConfig;
    }
    try {
      kappas.emplace_back(*parts, conjugate_box(cfg));
    } catch (const std::exception& e) {
      std::cerr << "invalid --kappa: " << e.what() << "\n";
      return kExitBadConfig;
    }
  }
  std::vector<BetheSolution> sols;
  sols.reserve(kappas.size());
  for (const auto& kappa : kappas) {
    sols.push_back(solve_bethe(MorseProblem(cfg, params, kappa), rc.tol));
  }
  if (rc.format == "json") return emit(rc, solutions_to_json(sols));
  std::ostringstream os;
  write_solutions_csv(os, sols);
  return emit(rc, os.str());
}

int run_spectrum(const RunConfig& rc, bool gate) {
  using namespace qtoda;
  const LatticeConfig cfg{rc.n, rc.m};
  const ModelParams params(rc.q, rc.pp, rc.qp, rc.pm, rc.qm);
  const VerificationReport report = run_verification(cfg, params, rc.tol);
  if (int r = emit(rc, verification_to_json(report))) return r;
  if (gate && !report.passed) {
    std::cerr << "verification failed\n";
    return kExitVerifyFailed;
  }
  return 0;
}

int run_flow(const RunConfig& rc) {
  using namespace qtoda;
  const LatticeConfig cfg{rc.n, rc.m};
  const ModelParams params(rc.q, rc.pp, rc.qp, rc.pm, rc.qm);
  std::vector<int> parts(static_cast<std::size_t>(rc.m), 0);
  if (!rc.kappa.empty()) {
    const auto parsed = parse_kappa(rc.kappa);
    if (!parsed) {
      std::cerr << "invalid --kappa\n";
      return kExitBadConfig;
    }
    parts = *parsed;
  }
  try {
    const MorseProblem prob(cfg, params, Partition(parts, conjugate_box(cfg)));
    const KBounds kb = k_bounds(params, cfg);
    const double t_end =
        rc.t_end > 0.0 ? rc.t_end
                       : std::log(1e12) / (0.9 * 2.0 * (cfg.n + kb.k_minus));
    const auto samples = gradient_flow(prob, schur_limit_point(prob), t_end, rc.samples);
    std::ostringstream os;
    write_flow_csv(os, samples);
    return emit(rc, os.str());
  } catch (const std::exception& e) {
    std::cerr << "invalid --kappa: " << e.what() << "\n";
    return kExitBadConfig;
  }
}

int run_q1(const RunConfig& rc) {
  using namespace qtoda;
  const LatticeConfig cfg{rc.n, rc.m};
  const ModelParams params(rc.q, rc.pp, rc.qp, rc.pm, rc.qm);
  const Q1Report report = verify_q1_eigensystem(cfg, params, 1e-9);
  if (int r = emit(rc, q1_report_to_json(report))) return r;
  if (!report.passed) {
    std::cerr << "q1 verification failed\n";
    return kExitVerifyFailed;
  }
  return 0;
}

int run_dump_matrix(const RunConfig& rc) {
  using namespace qtoda;
  const LatticeConfig cfg{rc.n, rc.m};
  const ModelParams params(rc.q, rc.pp, rc.qp, rc.pm, rc.qm);
  const LatticeOperator op = rc.q1_matrix ? build_toda_q1(cfg, params) : build_toda(cfg, params);
  std::ostringstream os;
  write_matrix_csv(os, op);
  return emit(rc, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"open q-deformed Toda chain: Bethe Ansatz spectra and certification"};
  app.require_subcommand(1);

  RunConfig rc;
  CLI::App* solve = app.add_subcommand("solve", "solve the Bethe equations");
  CLI::App* spectrum = app.add_subcommand("spectrum", "full eigensystem report");
  CLI::App* verify = app.add_subcommand("verify", "run all certification checks");
  CLI::App* flow = app.add_subcommand("flow", "gradient-flow trajectory CSV");
  CLI::App* q1 = app.add_subcommand("q1", "q -> 1 pipeline report");
  CLI::App* dump = app.add_subcommand("dump-matrix", "dense hamiltonian CSV");
  for (CLI::App* cmd : {solve, spectrum, verify, flow, q1, dump}) {
    add_common_options(cmd, rc);
  }
  flow->add_option("--t-end", rc.t_end, "integration time (default: auto)");
  flow->add_option("--samples", rc.samples, "number of snapshots");
  dump->add_flag("--q1", rc.q1_matrix, "dump the q -> 1 operator instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  CLI::App* cmd = app.get_subcommands().front();
  if (int r = apply_config_file(*cmd, rc)) return r;
  if (int r = validate_config(rc)) return r;

  try {
    if (cmd == solve) return run_solve(rc);
    if (cmd == spectrum) return run_spectrum(rc, /*gate=*/false);
    if (cmd == verify) return run_spectrum(rc, /*gate=*/true);
    if (cmd == flow) return run_flow(rc);
    if (cmd == q1) return run_q1(rc);
    if (cmd == dump) return run_dump_matrix(rc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitBadConfig;
}
