#pragma once

#include <cstdint>
#include <string>

#include "coopx/balance.hpp"
#include "coopx/frac_core.hpp"
#include "coopx/io.hpp"

namespace coopx::cli {

inline constexpr const char* kSchema = "coopx.report/1";

struct Limits {
  std::size_t firm_cap = kDefaultFirmCap;
  std::uint64_t node_cap = kDefaultNodeCap;
  int max_depth = 6;
};

Json report(const std::string& command);

Json run_validate(const Json& input);

struct BalanceArgs {
  BalanceMode mode = BalanceMode::Cone;
  std::string check;  // 0-based firm list, empty for none
  bool minimal = false;
  bool all = false;
  int families = 0;  // players for minimal balanced families, 0 for none
  const Json* other = nullptr;
  bool convexify = false;
};
Json run_balance(const Json& input, const BalanceArgs& args, const Limits& limits);

Json run_tu_core(const Json& input, const std::string& check_point);
Json run_tu_balanced(const Json& input, const std::string& method);

struct FracArgs {
  BalanceMode mode = BalanceMode::Cone;
  std::string verify_point;
  std::string verify_firms;
  /// Region whose induced cover seeds probes; empty for none.
  std::string probe_region;
  std::string probe_scale = "1";
  int probe_depth = 0;
};
Json run_frac_core(const Json& input, const FracArgs& args, const Limits& limits);
Json run_core(const Json& input, const Limits& limits);
Json run_game_balanced(const Json& input, const Limits& limits);
Json run_embed(const Json& input);

struct CoverArgs {
  std::string region = "simplex";
  std::string scale = "100";
  int depth = 0;
};
Json run_induce_cover(const Json& input, const CoverArgs& args, const Limits& limits);

Json run_degree(const Json& input, const std::string& rule);
Json run_index_sum(const Json& input);
Json run_rainbow(const Json& input, BalanceMode mode);

struct HopfArgs {
  int depth = 0;
  bool solve = true;
};
Json run_hopf(const HopfArgs& args, const Limits& limits);

/// Names accepted by run_example.
const std::vector<std::string>& example_names();
Json run_example(const std::string& name, const Limits& limits);
/// The input document of an example.
Json example_input(const std::string& name);

}  // namespace coopx::cli
