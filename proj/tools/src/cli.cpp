#include "ymheat/cli.hpp"

#include "table.hpp"
#include "ymheat/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <utility>

namespace ymheat::cli {

namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::wilson_exp, "wilson-exp"}, {Command::wilson_var, "wilson-var"},
    {Command::sphere, "sphere"},         {Command::plane, "plane"},
    {Command::zfun, "zfun"},             {Command::limits, "limits"},
    {Command::sweep, "sweep"},           {Command::verify, "verify"},
};

// Keys shared by flags (with a leading --) and config files.
const std::vector<std::string> kKeys = {"group", "genus",    "area",   "loop-area", "N",
                                        "kmax",  "nmax",     "gamma",  "tail-tol",  "format",
                                        "out",   "workers",  "timing"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& text, const std::string& where) {
  const std::string s = trim(text);
  T value{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw UsageError(where + ": invalid number '" + text + "'");
  }
  return value;
}

void apply(RunConfig& c, const std::string& key, const std::string& value,
           const std::string& where) {
  const auto fail = [&](const std::string& why) { throw UsageError(where + ": " + why); };
  if (key == "group") {
    if (value == "u") c.group = GroupKind::unitary;
    else if (value == "su") c.group = GroupKind::special_unitary;
    else fail("expected 'u' or 'su', got '" + value + "'");
  } else if (key == "genus") {
    c.surface.genus = parse_number<int>(value, where);
    if (c.surface.genus < 1) fail("genus must be at least 1");
  } else if (key == "area") {
    c.surface.total_area = parse_number<double>(value, where);
    if (!(c.surface.total_area > 0.0)) fail("area must be positive");
  } else if (key == "loop-area") {
    c.surface.loop_area = parse_number<double>(value, where);
    if (!(c.surface.loop_area > 0.0)) fail("loop area must be positive");
  } else if (key == "N") {
    std::stringstream ss(value);
    std::string item;
    std::vector<int> ranks;
    while (std::getline(ss, item, ',')) {
      const int n = parse_number<int>(item, where);
      if (n < 1) fail("rank must be positive, got " + std::to_string(n));
      ranks.push_back(n);
    }
    if (ranks.empty()) fail("empty rank list");
    c.ranks = std::move(ranks);
  } else if (key == "kmax") {
    c.policy.k_max = parse_number<int>(value, where);
    if (c.policy.k_max < 0 || c.policy.k_max > kMaxPartitionSize) {
      fail("k_max must lie in [0, " + std::to_string(kMaxPartitionSize) + "]");
    }
  } else if (key == "nmax") {
    c.policy.n_max = parse_number<int>(value, where);
    if (c.policy.n_max < 0) fail("n_max must be nonnegative");
  } else if (key == "gamma") {
    c.policy.gamma = parse_number<double>(value, where);
    if (!(c.policy.gamma > 0.0 && c.policy.gamma < 1.0 / 3.0)) fail("gamma must lie in (0, 1/3)");
  } else if (key == "tail-tol") {
    c.policy.tail_tol = parse_number<double>(value, where);
    if (!(c.policy.tail_tol > 0.0)) fail("tail tolerance must be positive");
  } else if (key == "format") {
    if (value == "csv") c.format = Format::csv;
    else if (value == "json") c.format = Format::json;
    else fail("expected 'csv' or 'json', got '" + value + "'");
  } else if (key == "out") {
    if (value.empty()) fail("empty output path");
    c.output_path = value;
  } else if (key == "workers") {
    const int w = parse_number<int>(value, where);
    if (w < 0) fail("workers must be nonnegative");
    c.workers = static_cast<unsigned>(w);
  } else if (key == "timing") {
    if (value == "true" || value == "1") c.timing = true;
    else if (value == "false" || value == "0") c.timing = false;
    else fail("expected true or false, got '" + value + "'");
  } else {
    fail("unknown key '" + key + "'");
  }
}

void load_config(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot read '" + path + "': " + std::strerror(errno));
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "--config " + path + ":" + std::to_string(number);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(where + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw UsageError(where + ": unknown key '" + key + "'");
    }
    apply(c, key, trim(line.substr(eq + 1)), where);
  }
}

bool needs_ranks(Command c) {
  return c == Command::wilson_exp || c == Command::wilson_var || c == Command::sphere ||
         c == Command::zfun || c == Command::sweep;
}

bool needs_loop_inside(Command c) {
  return c == Command::wilson_exp || c == Command::wilson_var || c == Command::sphere ||
         c == Command::sweep;
}

void check_command(const RunConfig& c) {
  const std::string name = command_name(c.command);
  if (needs_ranks(c.command) && c.ranks.empty()) {
    throw UsageError("--N: required for '" + name + "'");
  }
  if (needs_loop_inside(c.command) && !(c.surface.loop_area < c.surface.total_area)) {
    throw UsageError("--loop-area: must be smaller than --area for '" + name + "'");
  }
}

const char* group_name(GroupKind g) { return g == GroupKind::unitary ? "u" : "su"; }

nlohmann::ordered_json meta_of(const RunConfig& c) {
  nlohmann::ordered_json m;
  m["command"] = command_name(c.command);
  m["group"] = group_name(c.group);
  m["genus"] = c.surface.genus;
  m["area"] = c.surface.total_area;
  m["loop_area"] = c.surface.loop_area;
  m["ranks"] = c.ranks;
  m["k_max"] = c.policy.k_max;
  m["n_max"] = c.policy.n_max;
  m["gamma"] = c.policy.gamma;
  m["tail_tol"] = c.policy.tail_tol;
  m["timing"] = c.timing;
  return m;
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::string> report_columns(bool with_quantity, bool timing) {
  std::vector<std::string> cols = {"N"};
  if (with_quantity) cols.emplace_back("quantity");
  for (const char* c : {"value", "tail_bound", "term_count", "class1", "class2", "class3",
                        "class4"}) {
    cols.emplace_back(c);
  }
  if (timing) cols.emplace_back("wall_ms");
  return cols;
}

std::vector<Cell> report_row(int rank, const char* quantity, const SumReport& r, bool timing,
                             double ms) {
  std::vector<Cell> row = {static_cast<std::int64_t>(rank)};
  if (quantity) row.emplace_back(std::string(quantity));
  row.emplace_back(r.value);
  row.emplace_back(r.tail_bound);
  row.emplace_back(static_cast<std::int64_t>(r.term_count));
  for (double s : r.class_subtotals) row.emplace_back(s);
  if (timing) row.emplace_back(ms);
  return row;
}

void warn_tail(std::ostream& err, int rank, const char* what, const SumReport& r,
               const TruncationPolicy& p) {
  if (!r.within_tolerance(p)) {
    err << "warning: N=" << rank << " " << what << ": tail bound " << r.tail_bound
        << " exceeds tolerance " << p.tail_tol << "\n";
  }
}

}  // namespace

const char* command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Character-sum evaluation of Wilson loops in two-dimensional Yang-Mills theory",
               "ymheat"};
  std::vector<std::string> names;
  for (const auto& entry : kCommands) names.emplace_back(entry.second);
  std::string command;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(names));

  std::map<std::string, std::string> values;
  std::vector<std::string> ranks;
  std::string config_path;
  bool timing = false;
  app.add_option("--group", values["group"], "Structure group: u or su");
  app.add_option("--genus", values["genus"], "Surface genus (>= 1)");
  app.add_option("--area", values["area"], "Total surface area T");
  app.add_option("--loop-area", values["loop-area"], "Area t enclosed by the loop");
  app.add_option("--N", ranks, "Rank(s); repeatable or comma separated")->delimiter(',');
  app.add_option("--kmax", values["kmax"], "Largest |alpha|, |beta| summed");
  app.add_option("--nmax", values["nmax"], "Largest |n| summed for U(N)");
  app.add_option("--gamma", values["gamma"], "Class threshold exponent in (0, 1/3)");
  app.add_option("--tail-tol", values["tail-tol"], "Tail bound tolerance for warnings");
  app.add_option("--format", values["format"], "Output format: csv or json");
  app.add_option("--out", values["out"], "Output file (default stdout)");
  app.add_option("--workers", values["workers"], "Worker threads, 0 for all cores");
  app.add_option("--config", config_path, "key=value file; flags override it");
  app.add_flag("--timing", timing, "Add a wall_ms column");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig c;
  for (const auto& [cmd, name] : kCommands) {
    if (command == name) c.command = cmd;
  }
  if (!config_path.empty()) load_config(c, config_path);
  for (const auto& [key, value] : values) {
    if (app.count("--" + key) > 0) apply(c, key, value, "--" + key);
  }
  if (app.count("--N") > 0) {
    std::string joined;
    for (const auto& r : ranks) joined += (joined.empty() ? "" : ",") + r;
    apply(c, "N", joined, "--N");
  }
  if (app.count("--timing") > 0) c.timing = timing;
  check_command(c);
  return c;
}

RunConfig parse_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_args(args);
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Execution exec{c.workers};
  Table table;
  int status = 0;
  switch (c.command) {
    case Command::wilson_exp:
    case Command::wilson_var:
    case Command::sphere:
    case Command::zfun: {
      table.columns = report_columns(false, c.timing);
      for (int n : c.ranks) {
        const auto start = Clock::now();
        SumReport r;
        if (c.command == Command::wilson_exp) {
          r = wilson_expectation(c.group, c.surface, n, c.policy, exec);
        } else if (c.command == Command::wilson_var) {
          r = wilson_variance(c.group, c.surface, n, c.policy, exec);
        } else if (c.command == Command::sphere) {
          r = sphere_wilson(c.surface.total_area, c.surface.loop_area, n, c.policy, c.group, exec);
        } else {
          r = partition_function(c.group, c.surface.genus, c.surface.total_area, n, c.policy, exec);
        }
        table.rows.push_back(report_row(n, nullptr, r, c.timing, elapsed_ms(start)));
        warn_tail(err, n, command_name(c.command), r, c.policy);
      }
      break;
    }
    case Command::sweep: {
      table.columns = report_columns(true, c.timing);
      for (int n : c.ranks) {
        const auto start = Clock::now();
        const int one[] = {n};
        const SweepRow row = convergence_sweep(c.group, c.surface, one, c.policy, exec).front();
        const double ms = elapsed_ms(start);
        table.rows.push_back(report_row(n, "expectation", row.expectation, c.timing, ms));
        table.rows.push_back(report_row(n, "second_moment", row.second_moment, c.timing, ms));
        table.rows.push_back(report_row(n, "variance", row.variance, c.timing, ms));
        warn_tail(err, n, "expectation", row.expectation, c.policy);
        warn_tail(err, n, "variance", row.variance, c.policy);
      }
      break;
    }
    case Command::plane: {
      const double t = c.surface.loop_area;
      if (c.ranks.empty()) {
        table.columns = {"loop_area", "value"};
        table.rows.push_back({t, plane_wilson(t)});
      } else {
        table.columns = {"N", "loop_area", "value", "character_value"};
        for (int n : c.ranks) {
          table.rows.push_back(
              {static_cast<std::int64_t>(n), t, plane_wilson(t), plane_wilson_character(t, n)});
        }
      }
      break;
    }
    case Command::limits: {
      const LimitTargets l = limit_targets(c.surface.total_area, c.surface.loop_area);
      table.columns = {"area",  "loop_area", "expectation", "second_moment",
                       "theta", "phi",       "inv_phi_sq",  "theta_over_phi_sq"};
      table.rows.push_back({c.surface.total_area, c.surface.loop_area, l.expectation,
                            l.second_moment, l.theta, l.phi, l.inv_phi_sq, l.theta_over_phi_sq});
      break;
    }
    case Command::verify: {
      table.columns = {"suite", "check", "cases", "failures", "status", "first_failure"};
      std::uint64_t failed = 0;
      const auto results = verify_all();
      for (const CheckResult& r : results) {
        if (!r.passed()) ++failed;
        table.rows.push_back({r.suite, r.name, static_cast<std::int64_t>(r.cases),
                              static_cast<std::int64_t>(r.failures),
                              std::string(r.passed() ? "pass" : "fail"), r.first_failure});
      }
      err << "verify: " << results.size() << " checks, " << failed << " failed\n";
      status = failed == 0 ? 0 : 1;
      break;
    }
  }
  if (c.format == Format::csv) {
    write_csv(table, out);
  } else {
    write_json(table, meta_of(c), out);
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "ymheat: " << e.what() << "\nRun 'ymheat --help' for usage.\n";
    return 2;
  }
  try {
    if (!config.output_path) return run(config, out, err);
    std::ostringstream buffer;
    const int status = run(config, buffer, err);
    std::ofstream file(*config.output_path, std::ios::binary);
    if (file) file << buffer.str();
    if (!file) {
      err << "ymheat: cannot write '" << *config.output_path << "': " << std::strerror(errno)
          << "\n";
      return 1;
    }
    return status;
  } catch (const std::exception& e) {
    err << "ymheat: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ymheat::cli
