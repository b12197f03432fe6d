// Copyright 2026 The gamecap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gamecap/capacity.h"
#include "gamecap/channels.h"
#include "gamecap/correlations.h"
#include "gamecap/games.h"
#include "gamecap/quantum.h"
#include "gamecap/rng.h"
#include "gamecap/serialize.h"
#include "gamecap/simulate.h"

namespace gamecap::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string plain(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

// Options shared by every subcommand that names a game.
struct GameArgs {
  std::string game;
  int k = 0;

  void add(CLI::App* app) {
    app->add_option("game", game,
                    "chsh | magic-square | parity | path to a game spec JSON")
        ->required();
    app->add_option("--k", k, "number of parties for the parity game");
  }

  Game resolve() const {
    if (game.ends_with(".json") || std::filesystem::exists(game)) {
      return game_from_spec(read_json_file(game));
    }
    if (game == "parity" || game == "pp") {
      if (k == 0) throw UsageError("the parity game needs --k K (K >= 3)");
      if (k < 3) throw UsageError("the parity game needs K >= 3");
      return make_parity(k);
    }
    if (game != "chsh" && game != "magic-square" && game != "ms") {
      throw UsageError("unknown game '" + game + "'");
    }
    return make_builtin(game, k);
  }
};

struct EtaArgs {
  std::optional<double> eta;
  std::optional<double> eta_w;
  std::optional<double> eta_l;
  std::string mode = "per-receiver";

  void add(CLI::App* app) {
    app->add_option("--eta", eta, "noise level: eta_w = 1 - eta, eta_l = eta");
    app->add_option("--eta-w", eta_w, "winning-input relay weight");
    app->add_option("--eta-l", eta_l, "losing-input relay weight");
    app->add_option("--mode", mode, "per-receiver | global")
        ->check(CLI::IsMember({"per-receiver", "global"}));
  }

  ChannelParams resolve() const {
    ChannelParams p;
    if (eta) {
      if (eta_w || eta_l) {
        throw UsageError("use either --eta or --eta-w/--eta-l, not both");
      }
      p = ChannelParams::from_eta(*eta);
    } else if (eta_w && eta_l) {
      p.eta_w = *eta_w;
      p.eta_l = *eta_l;
    } else {
      throw UsageError("channel noise needs --eta or both --eta-w and --eta-l");
    }
    p.mode = channel_mode_from_string(mode);
    try {
      p.validate();
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    return p;
  }

  Json to_json() const {
    Json j{{"mode", mode}};
    if (eta) j["eta"] = *eta;
    if (eta_w) j["eta_w"] = *eta_w;
    if (eta_l) j["eta_l"] = *eta_l;
    return j;
  }
};

struct SeedArgs {
  std::optional<std::uint64_t> seed;

  void add(CLI::App* app) {
    app->add_option("--seed", seed, "RNG seed (recorded in the manifest)");
  }

  std::uint64_t resolve(std::ostream& err) const {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t s =
        (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
    err << "no --seed given; using seed " << s << "\n";
    return s;
  }
};

struct GbaArgs {
  int starts = 50;
  double tol = 1e-9;
  int max_iter = 20000;
  int workers = 0;

  void add(CLI::App* app) {
    app->add_option("--starts", starts, "random initial points")
        ->check(CLI::PositiveNumber);
    app->add_option("--tol", tol, "objective improvement tolerance (bits)")
        ->check(CLI::PositiveNumber);
    app->add_option("--max-iter", max_iter, "iteration cap per start")
        ->check(CLI::PositiveNumber);
    app->add_option("--workers", workers,
                    "worker threads (default: GAMECAP_WORKERS or all cores)");
  }

  GbaConfig config(std::uint64_t seed) const {
    GbaConfig cfg;
    cfg.num_starts = starts;
    cfg.tolerance = tol;
    cfg.max_iterations = max_iter;
    cfg.rng_seed = seed;
    cfg.workers = workers;
    return cfg;
  }

  Json to_json() const {
    return Json{{"starts", starts}, {"tol", tol}, {"max_iter", max_iter}};
  }
};

class Manifest {
 public:
  explicit Manifest(std::string subcommand)
      : subcommand_(std::move(subcommand)),
        start_(std::chrono::steady_clock::now()) {}

  Json& parameters() { return parameters_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void add_output(const std::string& path) { outputs_.push_back(path); }

  Json to_json() const {
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start_)
                               .count();
    Json j{{"tool", "gamecap"},
           {"version", GAMECAP_VERSION_STRING},
           {"subcommand", subcommand_},
           {"parameters", parameters_},
           {"outputs", outputs_},
           {"wall_clock_seconds", elapsed}};
    j["rng_seed"] = seed_ ? Json(*seed_) : Json(nullptr);
    return j;
  }

 private:
  std::string subcommand_;
  std::chrono::steady_clock::time_point start_;
  Json parameters_ = Json::object();
  std::optional<std::uint64_t> seed_;
  std::vector<std::string> outputs_;
};

void write_json(const std::string& path, const Json& doc) {
  write_text_file(path, doc.dump(2) + "\n");
}

CorrelationTable resolve_box(const std::string& name, const Game& game) {
  auto need = [&](bool ok) {
    if (!ok) {
      throw UsageError("box '" + name + "' does not apply to game '" +
                       game.name() + "'");
    }
  };
  const bool is_chsh = game == make_chsh();
  if (name == "pr") {
    need(is_chsh);
    return make_pr_box();
  }
  if (name == "tsirelson") {
    need(is_chsh);
    return born_table(make_tsirelson_chsh());
  }
  if (name == "mermin-peres") {
    need(game == make_magic_square());
    return born_table(make_mermin_peres());
  }
  if (name == "ghz") {
    const int k = game.num_parties();
    need(k >= 3 && k <= 10 && game == make_parity(k));
    return born_table(make_ghz_parity(k));
  }
  if (name == "classical") {
    return table_from_deterministic(classical_max_win(game).strategy);
  }
  if (name == "uniform") {
    return make_uniform_box(game.question_sizes(), game.answer_sizes());
  }
  throw UsageError("unknown box '" + name + "'");
}

void print_report(std::ostream& out, const GameChannelReport& report) {
  out << "identification: " << to_string(report.identification) << "\n";
  for (std::size_t i = 0; i < report.receivers.size(); ++i) {
    const auto& r = report.receivers[i];
    out << "receiver " << i + 1 << ": |Q|=" << r.num_questions
        << " |Y|=" << r.num_outputs << " h_w=" << fixed6(r.h_w)
        << " bits weakly_symmetric=" << (r.weakly_symmetric ? "yes" : "no")
        << "\n";
  }
  out << "factorization residual: " << plain(report.factorization_residual)
      << "\n";
  out << "max winning H(Y|x): " << fixed6(report.max_winning_entropy)
      << " bits, min losing H(Y|x): " << fixed6(report.min_losing_entropy)
      << " bits\n";
  if (report.passed()) {
    out << "status: pass\n";
    out << "closed-form sum capacity: "
        << fixed6(closed_form_sum_capacity(report)) << " bits\n";
  } else {
    out << "status: FAIL (" << to_string(report.failure->clause)
        << "): " << report.failure->detail << "\n";
  }
}

struct ChannelSource {
  std::string channel_file;

  void add(CLI::App* app) {
    app->add_option("--channel", channel_file,
                    "use a channel JSON file instead of building one");
  }

  Channel resolve(const Game& game, const EtaArgs& eta) const {
    if (!channel_file.empty()) {
      return channel_from_json(read_json_file(channel_file));
    }
    return build_game_channel(game, eta.resolve());
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"gamecap: sum-capacity toolkit for non-local game channels",
               "gamecap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GAMECAP_VERSION_STRING);

  // game
  auto* game_cmd = app.add_subcommand("game", "inspect games");
  game_cmd->require_subcommand(1);
  GameArgs show_game;
  auto* game_show = game_cmd->add_subcommand("show", "alphabets and |W|");
  show_game.add(game_show);
  GameArgs winprob_game;
  std::string win_class;
  auto* game_winprob =
      game_cmd->add_subcommand("winprob", "winning probability of a strategy");
  winprob_game.add(game_winprob);
  game_winprob
      ->add_option("--class", win_class,
                   "classical | pr | tsirelson | mermin-peres | ghz")
      ->required();

  // channel
  auto* channel_cmd = app.add_subcommand("channel", "build / validate");
  channel_cmd->require_subcommand(1);
  GameArgs build_game;
  EtaArgs build_eta;
  std::string build_out = "channel.json";
  auto* channel_build =
      channel_cmd->add_subcommand("build", "write a game channel JSON");
  build_game.add(channel_build);
  build_eta.add(channel_build);
  channel_build->add_option("--out", build_out, "output path");

  std::string validate_file;
  std::optional<std::string> validate_game_name;
  int validate_k = 0;
  std::string validate_csv;
  std::string validate_json;
  std::optional<std::string> validate_identify;
  auto* channel_validate = channel_cmd->add_subcommand(
      "validate", "check the game-channel conditions of a channel file");
  channel_validate->add_option("file", validate_file, "channel JSON")
      ->required();
  channel_validate->add_option("--game", validate_game_name,
                               "game name or spec (default: embedded game)");
  channel_validate->add_option("--k", validate_k, "parity game parties");
  channel_validate->add_option("--csv", validate_csv, "report CSV path");
  channel_validate->add_option("--json", validate_json, "report JSON path");
  channel_validate
      ->add_option("--identify", validate_identify,
                   "per-receiver | global (default: channel mode)")
      ->check(CLI::IsMember({"per-receiver", "global"}));

  // capacity
  auto* capacity_cmd = app.add_subcommand("capacity", "capacity computations");
  capacity_cmd->require_subcommand(1);
  GameArgs cap_game;
  EtaArgs cap_eta;
  ChannelSource cap_source;
  SeedArgs cap_seed;
  GbaArgs cap_gba;
  std::string cap_out;
  auto* cap_closed = capacity_cmd->add_subcommand(
      "closed-form", "cooperative sum capacity sum_i(log|Y_i| - h_i^w)");
  auto* cap_run = capacity_cmd->add_subcommand(
      "gba", "product-input sum-rate bound via generalized Blahut-Arimoto");
  auto* cap_gap = capacity_cmd->add_subcommand(
      "gap", "closed form minus generalized Blahut-Arimoto bound");
  for (auto* sub : {cap_closed, cap_run, cap_gap}) {
    cap_game.add(sub);
    cap_eta.add(sub);
    cap_source.add(sub);
    sub->add_option("--out", cap_out, "result JSON path");
  }
  for (auto* sub : {cap_run, cap_gap}) {
    cap_seed.add(sub);
    cap_gba.add(sub);
  }

  // sweep
  GameArgs sweep_game;
  SeedArgs sweep_seed;
  GbaArgs sweep_gba;
  std::string sweep_grid = "0:0.5:0.02";
  std::string sweep_out = "sweep.csv";
  auto* sweep_cmd =
      app.add_subcommand("sweep", "gap table over an eta grid (CSV)");
  sweep_game.add(sweep_cmd);
  sweep_seed.add(sweep_cmd);
  sweep_gba.add(sweep_cmd);
  sweep_cmd->add_option("--eta-grid", sweep_grid,
                        "start:stop:step (stop exclusive) or a list");
  sweep_cmd->add_option("--out", sweep_out, "CSV path");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo experiments");
  sim_cmd->require_subcommand(1);
  GameArgs sim_game;
  EtaArgs sim_eta;
  SeedArgs sim_seed;
  std::string sim_box;
  std::string sim_out;
  Index sim_samples = 100000;
  int sim_n = 8;
  Index sim_trials = 10000;
  std::string sim_code = "enumerative";
  int sim_messages = 0;
  double sim_rate = 1.0;
  std::vector<std::string> sim_codebook_files;
  int sim_workers = 0;
  auto* sim_decompose = sim_cmd->add_subcommand(
      "decompose", "empirical per-receiver sub-channels under a winning box");
  auto* sim_e2e = sim_cmd->add_subcommand(
      "e2e", "message error rates of the cooperative coding scheme");
  for (auto* sub : {sim_decompose, sim_e2e}) {
    sim_game.add(sub);
    sim_eta.add(sub);
    sim_seed.add(sub);
    sub->add_option("--box", sim_box,
                    "pr | tsirelson | mermin-peres | ghz | classical | uniform")
        ->required();
    sub->add_option("--out", sim_out, "report JSON path");
  }
  sim_decompose->add_option("--samples", sim_samples, "channel uses")
      ->check(CLI::PositiveNumber);
  sim_e2e->add_option("--n", sim_n, "block length")->check(CLI::PositiveNumber);
  sim_e2e->add_option("--trials", sim_trials, "message tuples")
      ->check(CLI::PositiveNumber);
  sim_e2e->add_option("--code", sim_code, "enumerative | repetition | random")
      ->check(CLI::IsMember({"enumerative", "repetition", "random"}));
  sim_e2e->add_option("--messages", sim_messages,
                      "messages per transmitter (default |Q_i|)");
  sim_e2e->add_option("--rate", sim_rate, "bits/use for --code random");
  sim_e2e->add_option("--codebook", sim_codebook_files,
                      "codebook JSON per transmitter (overrides --code)");
  sim_e2e->add_option("--workers", sim_workers, "worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*game_show) {
      const Game g = show_game.resolve();
      out << "game: " << g.name() << "\n"
          << "parties: " << g.num_parties() << "\n"
          << "question sizes: " << format_sizes(g.question_sizes()) << "\n"
          << "answer sizes: " << format_sizes(g.answer_sizes()) << "\n"
          << "winning tuples: " << g.num_winning() << " of "
          << g.num_question_tuples() * g.num_answer_tuples() << "\n";
      return kExitOk;
    }

    if (*game_winprob) {
      const Game g = winprob_game.resolve();
      double p;
      if (win_class == "classical") {
        p = classical_max_win(g).value;
      } else if (win_class == "pr" || win_class == "tsirelson" ||
                 win_class == "mermin-peres" || win_class == "ghz") {
        p = winning_probability(g, resolve_box(win_class, g));
      } else {
        throw UsageError("unknown strategy class '" + win_class + "'");
      }
      out << plain(p) << "\n";
      return kExitOk;
    }

    if (*channel_build) {
      const Game g = build_game.resolve();
      const ChannelParams params = build_eta.resolve();
      const Channel ch = build_game_channel(g, params);
      const GameChannelReport report = validate_game_channel(ch, g);
      Manifest manifest("channel build");
      manifest.parameters() = build_eta.to_json();
      manifest.parameters()["game"] = build_game.game;
      manifest.add_output(build_out);
      Json doc = channel_to_json(ch);
      doc["game"] = game_to_spec(g);
      doc["report"] = report_to_json(report);
      doc["manifest"] = manifest.to_json();
      write_json(build_out, doc);
      out << "wrote " << build_out << "\n";
      print_report(out, report);
      return report.passed() ? kExitOk : kExitFailure;
    }

    if (*channel_validate) {
      const Json doc = read_json_file(validate_file);
      const Channel ch = channel_from_json(doc);
      Game g = [&] {
        if (validate_game_name) {
          GameArgs ga{*validate_game_name, validate_k};
          return ga.resolve();
        }
        if (!doc.contains("game")) {
          throw UsageError("channel file has no embedded game; pass --game");
        }
        return game_from_spec(doc.at("game"));
      }();
      const ChannelMode ident =
          validate_identify ? channel_mode_from_string(*validate_identify)
                            : ch.mode();
      const GameChannelReport report =
          validate_game_channel(ch, g, 1e-9, ident);
      print_report(out, report);
      if (!validate_csv.empty()) write_text_file(validate_csv, report_to_csv(report));
      if (!validate_json.empty()) {
        Manifest manifest("channel validate");
        manifest.parameters() = {{"file", validate_file}};
        manifest.add_output(validate_json);
        Json j = report_to_json(report);
        j["manifest"] = manifest.to_json();
        write_json(validate_json, j);
      }
      return report.passed() ? kExitOk : kExitFailure;
    }

    if (*cap_closed || *cap_run || *cap_gap) {
      const Game g = cap_game.resolve();
      const Channel ch = cap_source.resolve(g, cap_eta);
      std::string name = *cap_closed ? "capacity closed-form"
                         : *cap_run  ? "capacity gba"
                                     : "capacity gap";
      Manifest manifest(name);
      manifest.parameters() = cap_eta.to_json();
      manifest.parameters()["game"] = cap_game.game;
      if (!cap_source.channel_file.empty()) {
        manifest.parameters()["channel"] = cap_source.channel_file;
      }
      Json result;
      if (*cap_closed) {
        const GameChannelReport report = validate_game_channel(ch, g);
        const double c = closed_form_sum_capacity(report);
        out << fixed6(c) << "\n";
        result = {{"closed_form_bits", c}, {"report", report_to_json(report)}};
      } else {
        const std::uint64_t seed = cap_seed.resolve(err);
        manifest.set_seed(seed);
        manifest.parameters().update(cap_gba.to_json());
        const GbaConfig cfg = cap_gba.config(seed);
        if (*cap_run) {
          const CapacityResult r = gba_sum_capacity(ch, cfg);
          out << fixed6(r.value) << "\n";
          result = capacity_to_json(r);
        } else {
          const GapResult r = cooperation_gap(ch, g, cfg);
          if (r.clamped) {
            err << "warning: raw gap " << r.raw_gap << " clamped to 0\n";
          }
          out << "closed_form " << fixed6(r.closed_form) << "\n"
              << "gba " << fixed6(r.gba_value) << "\n"
              << "gap " << fixed6(r.gap) << "\n";
          result = {{"closed_form_bits", r.closed_form},
                    {"gba_bits", r.gba_value},
                    {"gap_bits", r.gap},
                    {"raw_gap_bits", r.raw_gap},
                    {"clamped", r.clamped},
                    {"gba", capacity_to_json(r.gba)}};
        }
      }
      if (!cap_out.empty()) {
        manifest.add_output(cap_out);
        result["manifest"] = manifest.to_json();
        write_json(cap_out, result);
      }
      return kExitOk;
    }

    if (*sweep_cmd) {
      const Game g = sweep_game.resolve();
      std::vector<double> grid;
      try {
        grid = parse_eta_grid(sweep_grid);
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
      for (double eta : grid) {
        if (!(eta >= 0.0 && eta < 0.5)) {
          throw UsageError("eta grid value " + plain(eta) +
                           " outside [0, 0.5)");
        }
      }
      const std::uint64_t seed = sweep_seed.resolve(err);
      const auto rows = eta_sweep(g, grid, sweep_gba.config(seed));
      const std::string csv = sweep_to_csv(rows);
      write_text_file(sweep_out, csv);
      Manifest manifest("sweep");
      manifest.set_seed(seed);
      manifest.parameters() = sweep_gba.to_json();
      manifest.parameters()["game"] = sweep_game.game;
      manifest.parameters()["eta_grid"] = sweep_grid;
      manifest.add_output(sweep_out);
      write_json(sweep_out + ".manifest.json", manifest.to_json());
      out << csv;
      return kExitOk;
    }

    if (*sim_decompose || *sim_e2e) {
      const Game g = sim_game.resolve();
      const ChannelParams params = sim_eta.resolve();
      const Channel ch = build_game_channel(g, params);
      const CorrelationTable box = resolve_box(sim_box, g);
      const std::uint64_t seed = sim_seed.resolve(err);
      Manifest manifest(*sim_decompose ? "simulate decompose"
                                       : "simulate e2e");
      manifest.set_seed(seed);
      manifest.parameters() = sim_eta.to_json();
      manifest.parameters()["game"] = sim_game.game;
      manifest.parameters()["box"] = sim_box;
      Json report;
      if (*sim_decompose) {
        manifest.parameters()["samples"] = sim_samples;
        const DecompositionReport r =
            empirical_decomposition_test(ch, g, box, sim_samples, seed);
        out << "winning fraction: " << plain(r.winning_fraction) << "\n";
        for (std::size_t i = 0; i < r.tv_distances.size(); ++i) {
          out << "receiver " << i + 1 << " TV: " << plain(r.tv_distances[i])
              << "\n";
        }
        out << "conditional dependence: "
            << plain(r.conditional_dependence_bits) << " bits\n";
        report = {{"samples", r.samples},
                  {"winning_fraction", r.winning_fraction},
                  {"tv_distances", r.tv_distances},
                  {"relay_accuracy", r.relay_accuracy},
                  {"conditional_dependence_bits",
                   r.conditional_dependence_bits}};
      } else {
        std::vector<Codebook> books;
        const Sizes& qs = g.question_sizes();
        if (!sim_codebook_files.empty()) {
          for (const auto& f : sim_codebook_files) {
            books.push_back(codebook_from_json(read_json_file(f)));
          }
          if (!books.empty()) sim_n = books.front().block_length;
        } else {
          for (int i = 0; i < g.num_parties(); ++i) {
            const int m = sim_messages > 0 ? sim_messages : qs[i];
            if (sim_code == "repetition") {
              books.push_back(repetition_codebook(qs[i], m, sim_n));
            } else if (sim_code == "random") {
              const std::uint64_t book_seed =
                  Xoshiro256::for_stream(seed, StreamDomain::kCodebook,
                                         static_cast<std::uint64_t>(i))();
              books.push_back(random_codebook(qs[i], sim_rate, sim_n,
                                              book_seed));
            } else {
              books.push_back(enumerative_codebook(qs[i], m, sim_n));
            }
          }
        }
        manifest.parameters()["n"] = sim_n;
        manifest.parameters()["trials"] = sim_trials;
        manifest.parameters()["code"] = sim_code;
        manifest.parameters()["rate"] = sim_rate;
        SimConfig cfg;
        cfg.block_length = sim_n;
        cfg.trials = sim_trials;
        cfg.rng_seed = seed;
        cfg.workers = sim_workers;
        const EndToEndReport r = end_to_end(ch, g, box, books, cfg);
        out << "winning fraction: " << plain(r.winning_fraction) << "\n";
        for (std::size_t i = 0; i < r.receiver_error_rates.size(); ++i) {
          out << "receiver " << i + 1
              << " error rate: " << plain(r.receiver_error_rates[i]) << "\n";
        }
        out << "message error rate: " << plain(r.message_error_rate) << "\n";
        Json messages = Json::array();
        for (const auto& b : books) messages.push_back(b.num_messages());
        report = {{"trials", r.trials},
                  {"block_length", sim_n},
                  {"messages", messages},
                  {"winning_fraction", r.winning_fraction},
                  {"receiver_error_rates", r.receiver_error_rates},
                  {"message_error_rate", r.message_error_rate}};
      }
      if (!sim_out.empty()) {
        manifest.add_output(sim_out);
        report["config"] = manifest.parameters();
        report["manifest"] = manifest.to_json();
        write_json(sim_out, report);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace gamecap::cli
