#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "coopx/error.hpp"

namespace {

enum Exit { kComputed = 0, kUsage = 1, kCapExceeded = 2, kMalformed = 3 };

coopx::BalanceMode parse_mode(const std::string& s) {
  return s == "convex" ? coopx::BalanceMode::Convex : coopx::BalanceMode::Cone;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace coopx;
  using namespace coopx::cli;

  CLI::App app{"Exact solvers for cooperative games with generalized firms, balanced sets and cover degrees."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Limits limits;
  bool no_timing = false;
  bool compact = false;
  app.add_option("--node-cap", limits.node_cap, "Search node and certificate cap")->capture_default_str();
  app.add_option("--firm-cap", limits.firm_cap, "Largest firm count for balanced-set enumeration")->capture_default_str();
  app.add_option("--max-depth", limits.max_depth, "Largest subdivision depth")->capture_default_str()->check(CLI::Range(0, 6));
  app.add_flag("--no-timing", no_timing, "Omit elapsed time from the report");
  app.add_flag("--compact", compact, "Single-line JSON");

  std::string input;
  std::string mode = "cone";
  const auto mode_check = CLI::IsMember({"cone", "convex"});
  std::function<Json()> action;

  auto* validate = app.add_subcommand("validate", "Validate a game, NTU game, firm system or complex");
  validate->add_option("input", input, "JSON document")->required();
  validate->callback([&] { action = [&] { return run_validate(read_json_file(input)); }; });

  BalanceArgs bal;
  std::string other_path;
  auto* balance = app.add_subcommand("balance", "Balanced firm sets, minimal families, equivalence, convexification");
  balance->add_option("input", input, "Firm system or game")->required();
  balance->add_option("--mode", mode, "cone or convex")->check(mode_check);
  balance->add_option("--check", bal.check, "0-based firm list to test, e.g. 0,2");
  balance->add_flag("--minimal", bal.minimal, "List minimal balanced sets (default)");
  balance->add_flag("--all", bal.all, "List every balanced set");
  balance->add_option("--families", bal.families, "Minimal balanced families of n players")->check(CLI::Range(1, 5));
  balance->add_option("--equivalent", other_path, "Compare balanced sets with another firm system");
  balance->add_flag("--convexify", bal.convexify, "Rescale firms onto <x, r> = |r|^2");
  balance->callback([&] {
    action = [&] {
      bal.mode = parse_mode(mode);
      Json other;
      if (!other_path.empty()) {
        other = read_json_file(other_path);
        bal.other = &other;
      }
      return run_balance(read_json_file(input), bal, limits);
    };
  });

  std::string check_point;
  auto* tu_core = app.add_subcommand("tu-core", "Core of a TU game");
  tu_core->add_option("input", input, "TU game")->required();
  tu_core->add_option("--check", check_point, "Also test this payoff vector, e.g. -8,-12,-15");
  tu_core->callback([&] { action = [&] { return run_tu_core(read_json_file(input), check_point); }; });

  std::string method = "auto";
  auto* tu_bal = app.add_subcommand("tu-balanced", "Balancedness of a TU game");
  tu_bal->add_option("input", input, "TU game")->required();
  tu_bal->add_option("--method", method, "auto, enumerate or dual")->check(CLI::IsMember({"auto", "enumerate", "dual"}));
  tu_bal->callback([&] { action = [&] { return run_tu_balanced(read_json_file(input), method); }; });

  FracArgs frac;
  auto* frac_core = app.add_subcommand("frac-core", "Fractional core (TU and NTU games are embedded first)");
  frac_core->add_option("input", input, "Game, TU game or NTU game")->required();
  frac_core->add_option("--mode", mode, "cone or convex")->check(mode_check);
  frac_core->add_option("--verify", frac.verify_point, "Check this point as a witness");
  frac_core->add_option("--verify-firms", frac.verify_firms, "0-based firm list for --verify");
  frac_core->add_option("--probe-region", frac.probe_region, "Seed the search from rainbow cells: simplex, cube, ball or hopf")
      ->check(CLI::IsMember({"simplex", "cube", "ball", "hopf"}));
  frac_core->add_option("--probe-scale", frac.probe_scale, "Size of the probe region, a rational");
  frac_core->add_option("--probe-depth", frac.probe_depth, "Subdivision depth of the probe region");
  frac_core->callback([&] {
    action = [&] {
      frac.mode = parse_mode(mode);
      return run_frac_core(read_json_file(input), frac, limits);
    };
  });

  auto* core = app.add_subcommand("core", "Core relative to the distinguished firm");
  core->add_option("input", input, "Game with a distinguished firm")->required();
  core->callback([&] { action = [&] { return run_core(read_json_file(input), limits); }; });

  auto* game_bal = app.add_subcommand("game-balanced", "Balancedness of a game with a distinguished firm");
  game_bal->add_option("input", input, "Game")->required();
  game_bal->callback([&] { action = [&] { return run_game_balanced(read_json_file(input), limits); }; });

  auto* embed = app.add_subcommand("embed", "Coalitional game as a generalized game");
  embed->add_option("input", input, "TU or NTU game")->required();
  embed->callback([&] { action = [&] { return run_embed(read_json_file(input)); }; });

  CoverArgs cover;
  auto* induce = app.add_subcommand("induce-cover", "Labeled triangulation of the induced cover");
  induce->add_option("input", input, "Game")->required();
  induce->add_option("--region", cover.region, "simplex, cube, ball or hopf")
      ->check(CLI::IsMember({"simplex", "cube", "ball", "hopf"}));
  induce->add_option("--scale", cover.scale, "Region size, a rational");
  induce->add_option("--depth", cover.depth, "Barycentric subdivision depth");
  induce->callback([&] { action = [&] { return run_induce_cover(read_json_file(input), cover, limits); }; });

  std::string rule = "lowest";
  auto* degree = app.add_subcommand("degree", "PL degree of a labeled closed manifold");
  degree->add_option("input", input, "Complex with labels and firms")->required();
  degree->add_option("--rule", rule, "lowest or highest label")->check(CLI::IsMember({"lowest", "highest"}));
  degree->callback([&] { action = [&] { return run_degree(read_json_file(input), rule); }; });

  auto* index_sum = app.add_subcommand("index-sum", "Component indices against the boundary degree");
  index_sum->add_option("input", input, "Region complex with labels and firms")->required();
  index_sum->callback([&] { action = [&] { return run_index_sum(read_json_file(input)); }; });

  auto* rainbow = app.add_subcommand("rainbow", "Facets whose labels form a balanced set");
  rainbow->add_option("input", input, "Complex with labels and firms")->required();
  rainbow->add_option("--mode", mode, "cone or convex")->check(mode_check);
  rainbow->callback([&] { action = [&] { return run_rainbow(read_json_file(input), parse_mode(mode)); }; });

  HopfArgs hopf;
  bool skip_core = false;
  auto* hopf_cmd = app.add_subcommand("hopf", "Bundled 3-sphere asset, Hopf invariant and fractional core");
  hopf_cmd->add_option("--depth", hopf.depth, "Subdivision depth of the cover used for probes");
  hopf_cmd->add_flag("--skip-core", skip_core, "Do not solve the fractional core");
  hopf_cmd->callback([&] {
    action = [&] {
      hopf.solve = !skip_core;
      return run_hopf(hopf, limits);
    };
  });

  std::string example;
  bool example_doc = false;
  auto* examples = app.add_subcommand("examples", "Reproduce a bundled example");
  examples->add_option("name", example, "Example name")->required()->check(CLI::IsMember(example_names()));
  examples->add_flag("--input", example_doc, "Print the example's input document instead");
  examples->callback([&] {
    action = [&] { return example_doc ? example_input(example) : run_example(example, limits); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kComputed : kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Json out;
  int status = kComputed;
  try {
    out = action();
    if (!no_timing && !example_doc) {
      out["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  } catch (const Error& e) {
    status = e.code() == ErrorCode::CapExceeded ? kCapExceeded : kMalformed;
    out = Json{{"schema", kSchema},
               {"command", app.get_subcommands().front()->get_name()},
               {"verdict", "Error"},
               {"error", Json{{"code", to_string(e.code())}, {"message", e.what()}}}};
    std::cerr << e.what() << '\n';
  }
  std::cout << (compact ? out.dump() : dump(out));
  if (compact) std::cout << '\n';
  return status;
}
