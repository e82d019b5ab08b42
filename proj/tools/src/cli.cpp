#include "linelim/app/cli.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include "linelim/app/report.hpp"
#include "linelim/app/service.hpp"
#include "linelim/error.hpp"
#include "linelim/event_log.hpp"
#include "linelim/rerank.hpp"
#include "linelim/schedule.hpp"
#include "linelim/simulate.hpp"

namespace linelim::app {
namespace {

// Input problems that are not engine errors but still exit with kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_seeds(std::ostream& out, std::span<const int> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  out << '\n';
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// --- schedule -------------------------------------------------------------

struct ScheduleArgs {
  int players = 0;
  int rounds = 0;
  std::string format = "json";
};

int cmd_schedule(const ScheduleArgs& a, std::ostream& out) {
  const auto s = build_schedule(validate_config(a.players, a.rounds));
  if (a.format == "csv") {
    out << "round,remaining,eliminated\n";
    for (int t = 0; t < s.rounds(); ++t) {
      out << t << ',' << s.counts[static_cast<std::size_t>(t)] << ',' << s.eliminated_after(t) << '\n';
    }
  } else {
    out << nlohmann::json(s.counts).dump() << '\n';
  }
  return kExitOk;
}

// --- rerank ---------------------------------------------------------------

struct RerankArgs {
  std::string results;
  int passes = 1;
  bool json = false;
};

int cmd_rerank(const RerankArgs& a, std::ostream& out) {
  const auto b = ResultVector::parse(a.results);
  const auto order = rerank(b, a.passes);
  const int before = path_change(b);
  const int after = path_change(b.permuted(order));
  if (a.json) {
    out << nlohmann::json{{"order", order},
                          {"assignment", order_to_assignment(order)},
                          {"displacement", displacement(order)},
                          {"path_change_before", before},
                          {"path_change_after", after}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  print_seeds(out, order);
  if (before == 1) {
    out << "path change already 1\n";
  } else {
    out << "path change: " << before << " -> " << after << '\n';
  }
  return kExitOk;
}

// --- simulate -------------------------------------------------------------

struct SimulateArgs {
  std::string format = "linear-elimination";
  int players = 0;
  int rounds = 0;
  int passes = 1;
  std::string model = "bradley-terry";
  std::vector<double> strengths;
  int trials = 1000;
  std::uint64_t seed = 0;
  std::string seeding = "true-order";
  double sigma = 0.0;
  int threads = 1;
  std::string csv;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  FormatDescriptor format{parse_format_kind(a.format), a.players, a.rounds, a.passes};
  if (format.kind != FormatKind::kLinearElimination) format.round_count = 0;
  const WinRule rule = parse_win_rule(a.model);
  StrengthModel model = a.strengths.empty() ? harmonic_model(a.players, rule) : StrengthModel{a.strengths, rule};
  SimulationOptions options;
  options.trials = a.trials;
  options.seed = a.seed;
  options.seeding = parse_seeding(a.seeding, a.sigma);
  options.threads = a.threads;
  const auto report = simulate(format, model, options);
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw std::runtime_error("cannot write " + a.csv);
    csv << champion_csv(report);
  }
  out << report_to_json(report).dump(2) << '\n';
  return kExitOk;
}

// --- run / replay ---------------------------------------------------------

struct RunArgs {
  int players = 0;
  int rounds = 0;
  int passes = 1;
  std::string input;
  bool interactive = false;
  std::string log;
  bool json = false;
};

TournamentState run_from_lines(const Config& cfg, std::istream& lines) {
  auto st = TournamentState::start(cfg);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ", round " + std::to_string(st.round());
    if (st.completed()) {
      throw UsageError("line " + std::to_string(line_no) + ": tournament already finished after " +
                       std::to_string(st.round()) + " rounds");
    }
    if (static_cast<int>(text.size()) != st.active_count()) {
      throw UsageError(where + ": expected " + std::to_string(st.active_count()) + " results, got " +
                       std::to_string(text.size()));
    }
    try {
      st = apply_results(st, ResultVector::parse(text));
    } catch (const Error& e) {
      throw UsageError(where + ": " + e.what());
    }
  }
  if (!st.completed()) {
    throw UsageError("results end after " + std::to_string(st.round()) + " of " + std::to_string(cfg.round_count) +
                     " rounds");
  }
  return st;
}

TournamentState run_interactive(const Config& cfg, std::istream& in, std::ostream& out) {
  auto st = TournamentState::start(cfg);
  while (!st.completed()) {
    const auto pairs = pair_round(st);
    const int n = st.active_count();
    out << "round " << st.round() << " (" << n << " players)\n";
    std::vector<Outcome> b(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const int hi = pairs[i].high.seed;
      const int lo = pairs[i].low.seed;
      for (;;) {
        out << "  match " << i + 1 << ": seed " << hi << " vs seed " << lo << ", winner? " << std::flush;
        std::string line;
        if (!std::getline(in, line)) throw UsageError("input ended during round " + std::to_string(st.round()));
        const std::string answer = trim(line);
        if (answer == std::to_string(hi) || answer == std::to_string(lo)) {
          b[i] = answer == std::to_string(hi) ? Outcome::kWin : Outcome::kLoss;
          b[static_cast<std::size_t>(n) - 1 - i] = opposite(b[i]);
          break;
        }
        out << "  enter " << hi << " or " << lo << '\n';
      }
    }
    st = apply_results(st, ResultVector(std::move(b)));
    const auto& rec = st.history().back();
    out << "  standings: ";
    print_seeds(out, rec.standings.seeds());
    if (!rec.eliminated.empty()) {
      out << "  eliminated:";
      for (auto p : rec.eliminated) out << ' ' << p.seed;
      out << '\n';
    }
  }
  return st;
}

void print_report(const TournamentState& st, bool json, std::ostream& out) {
  if (json) {
    out << report_json(st).dump(2) << '\n';
  } else {
    out << render_report(st);
  }
}

int cmd_run(const RunArgs& a, std::istream& in, std::ostream& out) {
  const Config cfg = validate_config(a.players, a.rounds, a.passes);
  TournamentState st = TournamentState::start(cfg);
  if (a.interactive) {
    st = run_interactive(cfg, in, out);
  } else if (a.input == "-") {
    st = run_from_lines(cfg, in);
  } else {
    std::ifstream file(a.input);
    if (!file) throw UsageError("cannot open " + a.input);
    st = run_from_lines(cfg, file);
  }
  if (!a.log.empty()) write_json_file(a.log, to_event_log(st));
  print_report(st, a.json, out);
  return kExitOk;
}

int cmd_replay(const std::string& path, bool json, std::ostream& out) {
  print_report(replay_event_log(read_json_file(path)), json, out);
  return kExitOk;
}

// --- serve ----------------------------------------------------------------

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data_dir = "linelim-data";
};

std::atomic<httplib::Server*> g_server{nullptr};

extern "C" void stop_server(int) {
  if (auto* s = g_server.load()) s->stop();
}

int cmd_serve(const ServeArgs& a, std::ostream& out, std::ostream& err) {
  TournamentService service(a.data_dir);
  httplib::Server server;
  mount_routes(server, service);
  if (!server.bind_to_port(a.host, a.port)) {
    err << "error: cannot listen on " << a.host << ':' << a.port << '\n';
    return kExitFailure;
  }
  out << "listening on http://" << a.host << ':' << a.port << " (" << service.size() << " tournaments in "
      << a.data_dir << ")" << std::endl;
  g_server = &server;
  std::signal(SIGINT, stop_server);
  std::signal(SIGTERM, stop_server);
  const bool ok = server.listen_after_bind();
  g_server = nullptr;
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear elimination tournaments: schedules, re-ranking, simulation and a local service", "linelim"};
  app.require_subcommand(1);

  ScheduleArgs sched;
  auto* schedule_cmd = app.add_subcommand("schedule", "Print the elimination schedule for N players and M rounds");
  schedule_cmd->add_option("N", sched.players, "Player count")->required();
  schedule_cmd->add_option("M", sched.rounds, "Round count")->required();
  schedule_cmd->add_option("--format", sched.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  RerankArgs rr;
  auto* rerank_cmd = app.add_subcommand("rerank", "Re-rank one round of results given as a W/L string");
  rerank_cmd->add_option("RESULTS", rr.results, "Outcomes by rank, e.g. WLLWWL")->required();
  rerank_cmd->add_option("--passes", rr.passes, "Re-ranking passes")->capture_default_str();
  rerank_cmd->add_flag("--json", rr.json, "Print JSON");

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo comparison of tournament formats");
  simulate_cmd->add_option("--format", sim.format, "linear-elimination, single-elimination or round-robin")
      ->capture_default_str();
  simulate_cmd->add_option("-n,--players", sim.players, "Player count")->required();
  simulate_cmd->add_option("-m,--rounds", sim.rounds, "Round count (linear elimination)");
  simulate_cmd->add_option("--passes", sim.passes, "Re-ranking passes (linear elimination)")->capture_default_str();
  simulate_cmd->add_option("--model", sim.model, "bradley-terry or deterministic")->capture_default_str();
  simulate_cmd->add_option("--strengths", sim.strengths, "Comma-separated strengths, strongest identity first")
      ->delimiter(',');
  simulate_cmd->add_option("--trials", sim.trials, "Number of trials")->capture_default_str();
  simulate_cmd->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
  simulate_cmd->add_option("--seeding", sim.seeding, "true-order, random or noisy")->capture_default_str();
  simulate_cmd->add_option("--sigma", sim.sigma, "Noise for --seeding noisy")->capture_default_str();
  simulate_cmd->add_option("--threads", sim.threads, "Worker threads")->capture_default_str();
  simulate_cmd->add_option("--csv", sim.csv, "Also write the champion distribution as CSV");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Play a tournament from a results file or interactively");
  run_cmd->add_option("N", run.players, "Player count")->required();
  run_cmd->add_option("M", run.rounds, "Round count")->required();
  run_cmd->add_option("--passes", run.passes, "Re-ranking passes")->capture_default_str();
  auto* input_opt = run_cmd->add_option("--input", run.input, "One W/L line per round; - reads stdin");
  auto* interactive_flag = run_cmd->add_flag("--interactive", run.interactive, "Prompt for every match winner");
  input_opt->excludes(interactive_flag);
  run_cmd->add_option("--log", run.log, "Write the event log here");
  run_cmd->add_flag("--json", run.json, "Print the report as JSON");

  std::string replay_path;
  bool replay_json = false;
  auto* replay_cmd = app.add_subcommand("replay", "Replay an event log and print its report");
  replay_cmd->add_option("LOG", replay_path, "Event log file")->required();
  replay_cmd->add_flag("--json", replay_json, "Print the report as JSON");

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--host", serve.host, "Bind address")->envname("LINELIM_HOST")->capture_default_str();
  serve_cmd->add_option("--port", serve.port, "Port")->envname("LINELIM_PORT")->capture_default_str();
  serve_cmd->add_option("--data-dir", serve.data_dir, "Tournament files")
      ->envname("LINELIM_DATA_DIR")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (schedule_cmd->parsed()) return cmd_schedule(sched, out);
    if (rerank_cmd->parsed()) return cmd_rerank(rr, out);
    if (simulate_cmd->parsed()) return cmd_simulate(sim, out);
    if (run_cmd->parsed()) {
      if (!run.interactive && run.input.empty()) throw UsageError("run needs --input FILE or --interactive");
      return cmd_run(run, in, out);
    }
    if (replay_cmd->parsed()) return cmd_replay(replay_path, replay_json, out);
    if (serve_cmd->parsed()) return cmd_serve(serve, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace linelim::app
