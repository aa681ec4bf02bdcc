#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace goswf::cli {

enum class Command {
  eigenvalues,
  pswf_check,
  eigenfunctions,
  approx_compare,
  kernel_check,
  derivative_check,
};

enum class Format { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitTolerance = 3;
inline constexpr int kExitPrecision = 4;

struct RunConfig {
  Command command = Command::eigenvalues;
  double alpha = 0.0;
  double beta = 0.0;
  double c = 1.0;
  std::size_t n_max = 0;        // 0: command default
  std::size_t quad_order = 0;   // 0: max(40, ceil(2ec)+1)
  std::size_t trunc_order = 0;  // 0: n_max + max(20, ceil(2c))
  std::size_t grid_points = 201;
  double precision_floor = 1e-14;
  Format format = Format::csv;
  std::string out_path;  // empty: stdout
  std::uint64_t seed = 1;

  // Command-specific.
  std::optional<int> preset;     // approx-compare: 1..3
  std::string g = "one";         // approx-compare: one | y | exp | y2
  std::string samples_path;      // approx-compare: CSV of grid samples
  bool with_method2 = false;     // eigenfunctions
  std::size_t index = 0;         // derivative-check: n
};

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

struct Outcome {
  Table table;
  std::optional<Table> samples;
  bool within_tolerance = true;
  std::vector<std::string> messages;
};

Command parse_command(const std::string& name);
std::string command_name(Command c);

/// Runs one command. Throws goswf errors on invalid configuration or
/// precision aborts; tolerance violations are reported in the outcome.
Outcome run(const RunConfig& cfg);

std::string render(const Table& table, Format format);

/// Full entry point: parse argv, run, write output, map errors to exit codes.
int main_entry(int argc, char** argv);

}  // namespace goswf::cli
