#include "hecke_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "hecke/counting.hpp"
#include "hecke/crystal.hpp"
#include "hecke/cyclotomic.hpp"
#include "hecke/error.hpp"
#include "hecke/flotw.hpp"
#include "hecke/sigma.hpp"

namespace hecke::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

int code(ExitCode c) { return static_cast<int>(c); }

int require_n(const Command& cmd) {
  if (!cmd.n) throw UsageError(cmd.subcommand + " needs --n");
  if (*cmd.n < 0) throw UsageError("--n must be nonnegative");
  return *cmd.n;
}

NodeOrder parse_order(const std::string& text) {
  if (text == "kleshchev") return NodeOrder::Kleshchev;
  if (text == "flotw") return NodeOrder::Flotw;
  throw UsageError("unknown order " + text);
}

int emit_lattice(const Command& cmd, std::ostream& out) {
  const auto cfg = parse_config(cmd.config_path);
  const NodeOrder order = parse_order(cmd.order);
  require_order_usable(order, cfg);
  const auto graph = generate_lattice(cfg, order, cmd.n_max);
  const std::string format = cmd.format.empty() ? "dot" : cmd.format;
  if (format == "dot") {
    out << to_dot(graph);
    return code(ExitCode::Ok);
  }
  if (format != "json") throw UsageError("lattice supports --format dot|json");
  json doc;
  doc["config"] = cfg.describe();
  doc["order"] = to_string(order);
  doc["n_max"] = cmd.n_max;
  json levels = json::array();
  for (const auto& level : graph.levels) {
    json names = json::array();
    for (const auto& mu : level) names.push_back(mu.to_string());
    levels.push_back(std::move(names));
  }
  doc["levels"] = std::move(levels);
  json edges = json::array();
  for (const auto& layer : graph.edges) {
    json arrows = json::array();
    for (const auto& e : layer) arrows.push_back({{"source", e.source}, {"label", to_string(e.label)}, {"target", e.target}});
    edges.push_back(std::move(arrows));
  }
  doc["edges"] = std::move(edges);
  out << kHeader << '\n' << doc.dump(2) << '\n';
  return code(ExitCode::Ok);
}

int emit_kappa(const Command& cmd, std::ostream& out) {
  const auto cfg = parse_config(cmd.config_path);
  const int n = require_n(cmd);
  require_order_usable(NodeOrder::Flotw, cfg);
  CrystalLattice lattice(cfg, NodeOrder::Kleshchev);
  const std::string format = cmd.format.empty() ? "tsv" : cmd.format;
  out << kHeader << '\n';
  if (format == "tsv") {
    out << "lambda\tkappa\n";
    for (const auto& lambda : lattice.level(n)) {
      out << lambda.to_string() << '\t' << kappa_map(lambda, KappaDirection::Forward, cfg).to_string() << '\n';
    }
    return code(ExitCode::Ok);
  }
  if (format != "json") throw UsageError("kappa supports --format tsv|json");
  for (const auto& lambda : lattice.level(n)) {
    const auto mu = kappa_map(lambda, KappaDirection::Forward, cfg);
    const auto report = is_flotw(mu, cfg);
    json line;
    line["lambda"] = lambda.to_string();
    line["kappa"] = mu.to_string();
    line["flotw"] = report.member;
    line["report"] = describe(report);
    out << line.dump() << '\n';
  }
  return code(ExitCode::Ok);
}

int emit_sigma(const Command& cmd, std::ostream& out) {
  const auto cfg = parse_config(cmd.config_path);
  const int n = require_n(cmd);
  CrystalLattice lattice(cfg, NodeOrder::Kleshchev);
  const auto& level = lattice.level(n);
  const auto perm = h_permutation(level, cfg);
  const auto lengths = h_cycle_lengths(level, cfg);
  out << kHeader << '\n' << "lambda\th_lambda\torbit_size\tstabilizer\n";
  for (std::size_t i = 0; i < level.size(); ++i) {
    out << level[i].to_string() << '\t' << level[perm[i]].to_string() << '\t' << lengths[i] << '\t'
        << cfg.p() / lengths[i] << '\n';
  }
  return code(ExitCode::Ok);
}

void write_count_row(std::ostream& out, const CountReport& rep) {
  out << rep.n << '\t' << rep.irr_big;
  for (const auto& [m, v] : rep.n_tilde) out << '\t' << v;
  for (const auto& [m, v] : rep.n_of) out << '\t' << v;
  out << '\t' << rep.irr_grpn_formula << '\t' << rep.irr_grpn_direct << '\n';
}

int emit_count(const Command& cmd, std::ostream& out, std::ostream& err) {
  const auto cfg = parse_config(cmd.config_path);
  if (cmd.method != "formula" && cmd.method != "brute" && cmd.method != "both") {
    throw UsageError("--method must be formula, brute or both");
  }
  std::vector<int> sizes;
  if (cmd.n) {
    if (*cmd.n < 1) throw UsageError("count needs --n >= 1");
    sizes.push_back(*cmd.n);
  } else {
    for (int n = 1; n <= cmd.n_max; ++n) sizes.push_back(n);
  }
  out << kHeader << '\n' << "n\tirr_big";
  const auto divs = divisors(cfg.p());
  for (int m : divs) out << "\tNtilde(" << m << ")";
  for (int m : divs) out << "\tN(" << m << ")";
  out << "\tirr_grpn_formula\tirr_grpn_direct\n";

  int status = code(ExitCode::Ok);
  for (int n : sizes) {
    const CountMethod primary = cmd.method == "formula" ? CountMethod::Formula : CountMethod::Brute;
    const auto rep = count_report(cfg, n, primary);
    write_count_row(out, rep);
    if (rep.irr_grpn_formula != rep.irr_grpn_direct) {
      err << "n = " << n << ": formula count " << rep.irr_grpn_formula << " != direct count " << rep.irr_grpn_direct
          << '\n';
      status = code(ExitCode::Mismatch);
    }
    if (cmd.method == "both") {
      const auto other = count_report(cfg, n, CountMethod::Formula);
      if (other.n_tilde != rep.n_tilde) {
        err << "n = " << n << ": Ntilde brute and formula disagree\n";
        status = code(ExitCode::Mismatch);
      }
    }
  }
  return status;
}

int emit_verify(const Command& cmd, std::ostream& out) {
  const auto cfg = parse_config(cmd.config_path);
  const int n_max = cmd.n ? require_n(cmd) : cmd.n_max;
  out << kHeader << '\n' << "# config " << cfg.describe() << ", n_max " << n_max << '\n';
  return write_checks(verify_suite(cfg, n_max), out);
}

std::string render_matrix(const CycMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j == 0 ? "" : ", ") + m.at(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

int emit_appendix(const Command& cmd, std::ostream& out) {
  if (cmd.r < 2 || cmd.s < 1) throw UsageError("appendix-verify needs --r >= 2 and --s >= 1");
  std::mt19937_64 rng(cmd.seed);
  const CycMatrix c = random_nonsingular_integer_matrix(cmd.r, cmd.s, rng);
  const auto rep = verify_bimodule_iso(c, cmd.r, cmd.s);
  const auto ids = verify_identities(cmd.r, cmd.s);
  auto flag = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  out << kHeader << '\n';
  out << "r\t" << cmd.r << "\ns\t" << cmd.s << "\nseed\t" << cmd.seed << '\n';
  out << "C\t" << render_matrix(c) << '\n';
  out << "det_M\t" << rep.det_m.to_string() << '\n';
  out << "det_Vr_times_det_M01_pow\t" << rep.predicted_det_m.to_string() << '\n';
  out << "det_Vr\t" << rep.det_vr.to_string() << '\n';
  out << "det_Vr_closed_form\t" << ids.det_vr_closed.to_string() << '\n';
  out << "det_M01\t" << rep.det_m01.to_string() << '\n';
  out << "det_C\t" << rep.det_c.to_string() << '\n';
  out << flag(rep.det_identity) << "\tdet M = det Vr * det(M01)^(r(r-1)/2)\n";
  out << flag(rep.det_nonzero) << "\tdet M != 0\n";
  out << flag(rep.constructions_agree) << "\tblock formula agrees with basis images\n";
  out << flag(rep.factorization) << "\tM = Vr * D\n";
  out << flag(rep.companion_det) << "\tdet M01 = (-1)^((r-1)s^2) det C\n";
  out << flag(ids.vandermonde) << "\tdet Vr closed form\n";
  out << flag(ids.unit_identity) << "\tprod (1 - eps^j) = r\n";
  if (!rep.witness.empty()) out << "witness\t" << rep.witness << '\n';
  return code(rep.pass && ids.pass ? ExitCode::Ok : ExitCode::Mismatch);
}

int dispatch(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.subcommand == "lattice") return emit_lattice(cmd, out);
  if (cmd.subcommand == "kappa") return emit_kappa(cmd, out);
  if (cmd.subcommand == "sigma") return emit_sigma(cmd, out);
  if (cmd.subcommand == "count") return emit_count(cmd, out, err);
  if (cmd.subcommand == "verify") return emit_verify(cmd, out);
  if (cmd.subcommand == "appendix-verify") return emit_appendix(cmd, out);
  throw UsageError("unknown subcommand " + cmd.subcommand);
}

}  // namespace

int write_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  bool all = true;
  for (const auto& check : checks) {
    out << (check.pass ? "PASS" : "FAIL") << '\t' << check.name;
    if (!check.pass) out << '\t' << check.witness;
    out << '\n';
    all = all && check.pass;
  }
  return code(all ? ExitCode::Ok : ExitCode::Mismatch);
}

ParamConfig parse_config(const std::string& path) {
  if (path.empty()) throw ConfigError("--config is required");
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return config_from_json(text.str());
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystal and counting tools for Ariki-Koike and G(r,p,n) Hecke algebras", "crystal-hecke"};
  app.require_subcommand(1);
  Command cmd;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", cmd.config_path, "JSON parameter file")->required();
    sub->add_option("--out", cmd.out_path, "write output here instead of stdout");
  };
  auto* lattice = app.add_subcommand("lattice", "good lattice as DOT or JSON");
  add_config(lattice);
  lattice->add_option("--n-max", cmd.n_max, "deepest level")->check(CLI::NonNegativeNumber);
  lattice->add_option("--format", cmd.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  lattice->add_option("--order", cmd.order, "kleshchev or flotw")->check(CLI::IsMember({"kleshchev", "flotw"}));

  auto* kappa = app.add_subcommand("kappa", "Kleshchev to FLOTW labels for level n");
  add_config(kappa);
  kappa->add_option("--n", cmd.n, "level")->required();
  kappa->add_option("--format", cmd.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  auto* sigma = app.add_subcommand("sigma", "h, orbit sizes and stabilizers for level n");
  add_config(sigma);
  sigma->add_option("--n", cmd.n, "level")->required();
  sigma->add_option("--format", cmd.format, "tsv")->check(CLI::IsMember({"tsv"}));

  auto* count = app.add_subcommand("count", "simple module counts");
  add_config(count);
  count->add_option("--n", cmd.n, "single size (default: 1..n-max)");
  count->add_option("--n-max", cmd.n_max, "largest size")->check(CLI::NonNegativeNumber);
  count->add_option("--method", cmd.method, "formula, brute or both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));
  count->add_option("--format", cmd.format, "tsv")->check(CLI::IsMember({"tsv"}));

  auto* verify = app.add_subcommand("verify", "run every cross-check up to n-max");
  add_config(verify);
  verify->add_option("--n-max", cmd.n_max, "deepest level")->check(CLI::NonNegativeNumber);

  auto* appendix = app.add_subcommand("appendix-verify", "exact determinant identities in Q(eps_r)");
  appendix->add_option("--r", cmd.r, "order of eps")->check(CLI::Range(2, 64));
  appendix->add_option("--s", cmd.s, "size of C")->check(CLI::Range(1, 16));
  appendix->add_option("--seed", cmd.seed, "seed for the random matrix C");
  appendix->add_option("--out", cmd.out_path, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return {std::nullopt, rc == 0 ? 0 : code(ExitCode::Usage)};
  }
  cmd.subcommand = app.get_subcommands().front()->get_name();
  return {cmd, 0};
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int status = 0;
  try {
    status = dispatch(cmd, buffer, err);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return code(ExitCode::Mismatch);
  } catch (const ArithmeticInconsistency& e) {
    err << "inconsistency: " << e.what() << '\n';
    return code(ExitCode::Mismatch);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return code(ExitCode::Usage);
  }
  if (cmd.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cmd.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cmd.out_path << '\n';
      return code(ExitCode::Usage);
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace hecke::cli
