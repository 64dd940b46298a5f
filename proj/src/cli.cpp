#include "nagell/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "nagell/formsolver.hpp"
#include "nagell/gpell.hpp"
#include "nagell/harness.hpp"
#include "nagell/pell.hpp"
#include "nagell/report.hpp"

namespace nagell::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr unsigned kMaxGridN = 24;

std::string pair_text(const Int& a, const Int& b) {
  return "(" + to_string(a) + ", " + to_string(b) + ")";
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw UsageError("unsupported --format '" + format + "' for this command");
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + output_path + "'");
  file << text;
}

struct PellArgs {
  std::string d;
  std::size_t count = 1;
  std::string format = "text";
};

int cmd_pell(const PellArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json"});
  const Int d = parse_int(a.d);
  if (a.count == 0) throw UsageError("--count must be positive");
  PellFundamental fund;
  try {
    fund = pell_fundamental(d);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto sols = pell_solutions(fund, a.count);
  for (const auto& [x, y] : sols) {
    if (x * x - d * y * y != 1) throw std::logic_error("pell: solution failed to verify");
  }
  if (a.format == "json") {
    Json j;
    j["d"] = to_string(d);
    j["fundamental"] = {{"x", to_string(fund.x1)}, {"y", to_string(fund.y1)}};
    Json list = Json::array();
    for (const auto& [x, y] : sols) list.push_back({{"x", to_string(x)}, {"y", to_string(y)}});
    j["solutions"] = std::move(list);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "x^2 - " << d << "y^2 = 1\n";
  out << "fundamental: " << pair_text(fund.x1, fund.y1) << "\n";
  out << "solutions:\n";
  for (const auto& [x, y] : sols) out << "  " << pair_text(x, y) << "\n";
  return kExitOk;
}

struct GpellArgs {
  std::string d;
  std::string N;
  std::string v_limit = "100";
  std::string format = "text";
};

int cmd_gpell(const GpellArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json"});
  const Int d = parse_int(a.d);
  const Int N = parse_int(a.N);
  const Int v_limit = parse_int(a.v_limit);
  if (v_limit < 0) throw UsageError("--v-limit must be non-negative");
  ClassSet classes;
  try {
    classes = class_reps(d, N);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto sols = solve_gpell(classes, v_limit);
  for (const GpellPoint& p : sols) {
    if (p.u * p.u - d * p.v * p.v != N) throw std::logic_error("gpell: solution failed to verify");
  }
  if (a.format == "json") {
    Json j;
    j["d"] = to_string(d);
    j["N"] = to_string(N);
    j["v_limit"] = to_string(v_limit);
    j["unit"] = {{"x", to_string(classes.unit.x1)}, {"y", to_string(classes.unit.y1)}};
    Json reps = Json::array();
    for (const ClassRep& r : classes.reps) {
      reps.push_back({{"u", to_string(r.u)}, {"v", to_string(r.v)}, {"ambiguous", r.ambiguous}});
    }
    j["classes"] = std::move(reps);
    Json list = Json::array();
    for (const GpellPoint& p : sols) list.push_back({{"u", to_string(p.u)}, {"v", to_string(p.v)}});
    j["solutions"] = std::move(list);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "u^2 - " << d << "v^2 = " << N << "\n";
  if (classes.reps.empty()) {
    out << "no solutions\n";
    return kExitOk;
  }
  out << "unit: " << pair_text(classes.unit.x1, classes.unit.y1) << "\n";
  out << "classes:\n";
  for (const ClassRep& r : classes.reps) {
    out << "  " << pair_text(r.u, r.v) << (r.ambiguous ? " ambiguous" : "") << "\n";
  }
  out << "solutions (v <= " << v_limit << "):\n";
  for (const GpellPoint& p : sols) out << "  " << pair_text(p.u, p.v) << "\n";
  return kExitOk;
}

struct SolveArgs {
  std::string k;
  unsigned n = 0;
  std::string sign;
  std::string bound = "1000";
  std::string format = "text";
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json"});
  const Int k = parse_int(a.k);
  if (k < 0) throw UsageError("--k must be non-negative");
  const Int bound = parse_int(a.bound);
  if (bound < 0) throw UsageError("--bound must be non-negative");
  Sign sign;
  try {
    sign = parse_sign(a.sign);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const FormInstance inst{k, a.n, sign};
  const SolveOutcome outcome = solve_all(inst, bound);
  for (const SolutionPair& s : outcome.solutions) {
    if (!inst.solved_by(s.x, s.y)) throw std::logic_error("solve: solution failed to verify");
  }

  if (a.format == "json") {
    Json j;
    j["k"] = to_string(k);
    j["n"] = a.n;
    j["sign"] = to_string(sign);
    j["bound"] = to_string(bound);
    j["status"] = to_string(outcome.status);
    Json list = Json::array();
    for (const SolutionPair& s : outcome.solutions) {
      list.push_back({{"x", to_string(s.x)}, {"y", to_string(s.y)}, {"parity", to_string(s.parity)}});
    }
    j["solutions"] = std::move(list);
    if (outcome.generators) {
      Json g;
      const Generators& gens = *outcome.generators;
      if (gens.shift) g["shift"] = to_string(*gens.shift);
      Json bases = Json::array();
      for (const SolutionPair& b : gens.vieta_bases) {
        bases.push_back({{"x", to_string(b.x)}, {"y", to_string(b.y)}});
      }
      g["vieta_bases"] = std::move(bases);
      Json levels = Json::array();
      for (const DescentLevel& l : gens.pell_levels) {
        Json reps = Json::array();
        for (const ClassRep& r : l.classes.reps) {
          reps.push_back({{"u", to_string(r.u)}, {"v", to_string(r.v)}, {"ambiguous", r.ambiguous}});
        }
        levels.push_back({{"scale_exponent", l.scale_exponent},
                          {"d", to_string(l.classes.d)},
                          {"N", to_string(l.classes.N)},
                          {"unit", {{"x", to_string(l.classes.unit.x1)}, {"y", to_string(l.classes.unit.y1)}}},
                          {"classes", std::move(reps)}});
      }
      g["pell_levels"] = std::move(levels);
      j["generators"] = std::move(g);
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "x^2 - " << k << "xy + y^2 = " << (sign == Sign::plus ? "" : "-") << "2^" << a.n << "\n";
  out << "status: " << to_string(outcome.status) << "\n";
  out << "solutions (max(x, y) <= " << bound << "): " << outcome.solutions.size() << "\n";
  for (const SolutionPair& s : outcome.solutions) {
    out << "  " << pair_text(s.x, s.y) << " " << to_string(s.parity) << "\n";
  }
  return kExitOk;
}

struct TablesArgs {
  unsigned n_max = 6;
  std::string sign = "+";
  unsigned k_margin = kDefaultKMargin;
  std::string format = "text";
  std::string output;
};

int cmd_tables(const TablesArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json", "csv"});
  if (a.n_max > kMaxGridN) throw UsageError("--n-max must be at most " + std::to_string(kMaxGridN));
  Sign sign;
  try {
    sign = parse_sign(a.sign);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SolvabilityGrid grid;
  const SolvabilityTable table = build_tables(a.n_max, sign, a.k_margin, grid);
  std::string text;
  if (a.format == "json") text = to_json(table).dump(2) + "\n";
  else if (a.format == "csv") text = render_table_csv(table);
  else text = render_table_text(table);
  emit(text, a.output, out);
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  unsigned n_max = 9;
  unsigned k_margin = kDefaultKMargin;
  std::uint64_t p_max = 100;
  std::string format = "json";
  std::string output;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json", "csv"});
  const bool all = a.theorem == "all";
  if (!all && a.theorem != "3.1" && a.theorem != "3.2" && a.theorem != "3.3" &&
      a.theorem != "sharpness") {
    throw UsageError("--theorem must be one of 3.1, 3.2, 3.3, sharpness, all");
  }
  if (a.n_max < 1) throw UsageError("--n-max must be at least 1");
  const bool grid_needed = all || a.theorem != "sharpness";
  if (grid_needed && a.n_max > kMaxGridN) {
    throw UsageError("--n-max must be at most " + std::to_string(kMaxGridN));
  }
  if (a.p_max < 3 && (all || a.theorem == "3.3")) throw UsageError("--p-max must be at least 3");

  std::vector<unsigned> n_values;
  for (unsigned n = 1; n <= a.n_max; ++n) n_values.push_back(n);

  SolvabilityGrid grid;
  std::vector<TheoremCheck> checks;
  auto append = [&](std::vector<TheoremCheck> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  if (all || a.theorem == "3.1") append(check_thm31(n_values, a.k_margin, grid));
  if (all || a.theorem == "3.2") append(check_thm32(n_values, a.k_margin, grid));
  if (all || a.theorem == "3.3") append(check_thm33(n_values, a.p_max, a.k_margin, grid));
  if (all || a.theorem == "sharpness") checks.push_back(check_sharpness(n_values));

  for (const TheoremCheck& c : checks) {
    if (auto problem = reverify(c); !problem.empty()) throw std::logic_error(problem);
  }

  std::string text;
  if (a.format == "json") {
    text = render_reports_json(checks);
  } else if (a.format == "csv") {
    text = std::string(kCsvHeader) + "\n";
    for (const auto& [key, rows] : grid.snapshot()) text += csv_rows(key.second, key.first, rows);
  } else {
    text = render_reports_text(checks);
  }
  emit(text, a.output, out);
  if (!a.output.empty()) out << render_reports_text(checks);

  for (const TheoremCheck& c : checks) {
    if (c.verdict == Verdict::fail) return kExitCounterexample;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for x^2 - kxy + y^2 = +-2^n and generalized Pell equations",
               "nagell"};
  app.require_subcommand(1);

  PellArgs pell;
  auto* pell_cmd = app.add_subcommand("pell", "Fundamental and first solutions of x^2 - dy^2 = 1");
  pell_cmd->add_option("d", pell.d, "Nonsquare d >= 2")->required();
  pell_cmd->add_option("--count", pell.count, "Number of solutions to list");
  pell_cmd->add_option("--format", pell.format, "text or json");

  GpellArgs gpell;
  auto* gpell_cmd = app.add_subcommand("gpell", "Classes and solutions of u^2 - dv^2 = N");
  gpell_cmd->add_option("d", gpell.d, "Nonsquare d >= 2")->required();
  gpell_cmd->add_option("N", gpell.N, "Nonzero right-hand side")->required();
  gpell_cmd->add_option("--v-limit", gpell.v_limit, "Largest v listed");
  gpell_cmd->add_option("--format", gpell.format, "text or json");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Positive solutions of x^2 - kxy + y^2 = sign 2^n");
  solve_cmd->add_option("--k", solve.k, "k >= 0")->required();
  solve_cmd->add_option("--n", solve.n, "Exponent n >= 0")->required();
  solve_cmd->add_option("--sign", solve.sign, "+, -, plus or minus")->required();
  solve_cmd->add_option("--bound", solve.bound, "Largest coordinate listed");
  solve_cmd->add_option("--format", solve.format, "text or json");

  TablesArgs tables;
  auto* tables_cmd = app.add_subcommand("tables", "Solvable k for n = 0..n-max");
  tables_cmd->add_option("--n-max", tables.n_max, "Largest n");
  tables_cmd->add_option("--sign", tables.sign, "+, -, plus or minus");
  tables_cmd->add_option("--k-margin", tables.k_margin, "k scanned up to 2^n + 2 + margin");
  tables_cmd->add_option("--format", tables.format, "text, json or csv");
  tables_cmd->add_option("--output", tables.output, "Write to this file instead of stdout");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the theorems over a grid");
  verify_cmd->add_option("--theorem", verify.theorem, "3.1, 3.2, 3.3, sharpness or all")->required();
  verify_cmd->add_option("--n-max", verify.n_max, "Check n = 1..n-max");
  verify_cmd->add_option("--k-margin", verify.k_margin, "k scanned this far past each bound");
  verify_cmd->add_option("--p-max", verify.p_max, "Largest prime for 3.3");
  verify_cmd->add_option("--format", verify.format, "json, csv or text");
  verify_cmd->add_option("--output", verify.output, "Write the report to this file");

  std::vector<std::string> argv_storage{"nagell"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*pell_cmd) return cmd_pell(pell, out);
    if (*gpell_cmd) return cmd_gpell(gpell, out);
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*tables_cmd) return cmd_tables(tables, out);
    if (*verify_cmd) return cmd_verify(verify, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace nagell::cli
