#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "argbound/quadrature.hpp"
#include "argbound/zeros.hpp"

namespace argbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;

enum class Command { constants, eval, sweep, verify, envelope };
enum class XPolicy { log_t, fixed };

struct RunConfig {
  Command command = Command::constants;
  int m = 1;
  double t = 0.0;
  double t_start = 0.0;
  double t_stop = 0.0;
  double t_step = 0.0;
  XPolicy x_policy = XPolicy::log_t;
  double x_value = 0.0;
  std::string zeros_path;
  std::string out_path;
  int max_m = 4;
  QuadratureConfig tolerances;
};

struct XChoice {
  double x = 4.0;
  bool clamped = false;  // log t fell below the legal floor 4
};

/// Applies the policy at ordinate t; throws domain unless 4 <= X <= t^2.
XChoice resolve_x(const RunConfig& cfg, double t);

/// --zeros, then $ZETA_ARGBOUND_ZEROS, then the bundled table.
std::filesystem::path resolve_zero_table(const std::string& flag);

/// "%.15g"
std::string format_number(double v);

/// start, start + step, ... up to stop (inclusive within 1e-9 step).
std::vector<double> sweep_grid(double start, double stop, double step);

void cmd_constants(int max_m, std::ostream& out);
void cmd_envelope(const RunConfig& cfg, std::ostream& out);
void cmd_eval(const RunConfig& cfg, const ZeroTable& z, std::ostream& out, std::ostream& err);
void cmd_sweep(const RunConfig& cfg, const ZeroTable& z, std::ostream& out);

struct VerifyReport {
  int passed = 0;
  int failed = 0;
  int warned = 0;
};

/// Runs every check; prints PASS/FAIL/WARN lines and a one-line JSON summary.
VerifyReport cmd_verify(const RunConfig& cfg, const ZeroTable& z, std::ostream& out);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace argbound::cli
