#include "argbound_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "argbound/arithmetic.hpp"
#include "argbound/envelope.hpp"
#include "argbound/error.hpp"
#include "argbound/s_functions.hpp"

#ifndef ARGBOUND_DEFAULT_ZEROS
#define ARGBOUND_DEFAULT_ZEROS "zeros2600.txt"
#endif

namespace argbound::cli {

XChoice resolve_x(const RunConfig& cfg, double t) {
  XChoice out;
  if (cfg.x_policy == XPolicy::log_t) {
    const double lt = t > 1.0 ? std::log(t) : 0.0;
    out.clamped = lt < 4.0;
    out.x = out.clamped ? 4.0 : lt;
  } else {
    out.x = cfg.x_value;
  }
  if (!(out.x >= 4.0) || !(out.x <= t * t)) {
    throw Error(ErrorKind::domain, "X = " + format_number(out.x) + " outside [4, t^2] at t = " + format_number(t));
  }
  return out;
}

std::filesystem::path resolve_zero_table(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ZETA_ARGBOUND_ZEROS"); env != nullptr && *env != '\0') return env;
  return ARGBOUND_DEFAULT_ZEROS;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::vector<double> sweep_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::domain, "t-step must be positive");
  if (!(stop >= start)) throw Error(ErrorKind::domain, "t-stop must not precede t-start");
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return grid;
}

void cmd_constants(int max_m, std::ostream& out) {
  if (max_m < 1 || max_m > kMaxOrder) throw Error(ErrorKind::domain, "--max-m must lie in [1, 8]");
  out << "m,parity,a_sum,j2_term,j3_term,k_total,C_m\n";
  for (int m = 1; m <= max_m; ++m) {
    const EnvelopeConstants c = theorem_constant(m);
    out << m << ',' << (m % 2 == 1 ? "odd" : "even") << ',' << format_number(c.a_sum) << ','
        << format_number(c.j2_term) << ',' << format_number(c.j3_term) << ',' << format_number(c.k_total) << ','
        << format_number(constant_Cm(m).value) << '\n';
  }
}

void cmd_envelope(const RunConfig& cfg, std::ostream& out) {
  const EnvelopeConstants c = theorem_constant(cfg.m);
  out << "m,t,k_total,envelope\n";
  out << cfg.m << ',' << format_number(cfg.t) << ',' << format_number(c.k_total) << ','
      << format_number(envelope_bound(cfg.m, cfg.t)) << '\n';
}

void cmd_eval(const RunConfig& cfg, const ZeroTable& z, std::ostream& out, std::ostream& err) {
  const QuadratureConfig& q = cfg.tolerances;
  const double t = cfg.t;
  const XChoice xc = resolve_x(cfg, t);
  if (xc.clamped) err << "note: X = log t is below 4 at t = " << format_number(t) << "; clamped to 4\n";

  nlohmann::ordered_json j;
  j["t"] = t;
  j["m"] = cfg.m;
  j["x"] = xc.x;
  j["x_clamped"] = xc.clamped;
  const ArgumentValue s = s_of_t(t, q, z);
  j["s0"] = s.value;
  j["at_ordinate"] = s.at_ordinate;
  if (!s.at_ordinate) j["s_counting"] = s_via_counting(z, t, q.zero_exclusion_eps);
  if (cfg.m >= 1) {
    const SmEvaluation e = sm_crosscheck(cfg.m, t, q, z);
    j["sm_iterated"] = e.value_iterated;
    j["im_single"] = e.value_single;
    j["discrepancy"] = e.discrepancy;
    j["c_m"] = constant_Cm(cfg.m, q).value;
    j["k_total"] = theorem_constant(cfg.m).k_total;
    if (t > std::exp(std::exp(1.0))) j["envelope"] = envelope_bound(cfg.m, t);
  }
  if (t >= 10.0 && z.last() >= 2.0 * t) {
    const MollifierParams p = MollifierParams::for_ordinate(xc.x, t);
    const MangoldtTable tbl = build_mangoldt(std::max<std::int64_t>(p.sum_bound(), 4));
    const LorentzBracket r = lorentz_bracket_check(t, p, z, tbl);
    j["lorentz_sum"] = r.lhs;
    j["lorentz_lower"] = r.lower;
    j["lorentz_upper"] = r.upper;
    j["lorentz_ok"] = r.margin_ok;
  }
  out << j.dump(2) << '\n';
}

void cmd_sweep(const RunConfig& cfg, const ZeroTable& z, std::ostream& out) {
  if (cfg.m < 1 || cfg.m > kMaxOrder) throw Error(ErrorKind::domain, "--m must lie in [1, 8] for sweep");
  const std::vector<double> grid = sweep_grid(cfg.t_start, cfg.t_stop, cfg.t_step);
  if (grid.front() < 2.0) throw Error(ErrorKind::domain, "sweep starts below t = 2");
  if (grid.back() > z.last()) throw Error(ErrorKind::coverage, "sweep range exceeds zero-table coverage");
  for (double t : grid) resolve_x(cfg, t);

  const QuadratureConfig& q = cfg.tolerances;
  const double env_floor = std::exp(std::exp(1.0));
  std::optional<IteratedIntegrals> ii;

  out << "t,s0,sm_iterated,im_single,discrepancy,envelope,margin_ratio,error\n";
  for (double t : grid) {
    std::string s0, sm, im, disc, env, ratio, note;
    auto add_note = [&note](const std::string& s) { note += note.empty() ? s : ";" + s; };
    std::optional<double> sm_v, im_v;
    try {
      const ArgumentValue s = s_of_t(t, q, z);
      s0 = format_number(s.value);
      if (s.at_ordinate) add_note("midpoint");
    } catch (const Error& e) {
      add_note(std::string("s0:") + std::string(to_string(e.kind())));
    }
    try {
      if (!ii) ii.emplace(cfg.m, q, z);
      sm_v = ii->advance_to(t)[cfg.m - 1];
      sm = format_number(*sm_v);
    } catch (const Error& e) {
      ii.reset();
      add_note(std::string("sm:") + std::string(to_string(e.kind())));
    }
    try {
      im_v = i_m_single(cfg.m, t, q, z);
      im = format_number(*im_v);
    } catch (const Error& e) {
      add_note(std::string("im:") + std::string(to_string(e.kind())));
    }
    if (sm_v && im_v) disc = format_number(std::abs(*sm_v - *im_v));
    if (t > env_floor) {
      const double e = envelope_bound(cfg.m, t);
      env = format_number(e);
      if (sm_v) ratio = format_number(std::abs(*sm_v) / e);
    }
    out << format_number(t) << ',' << s0 << ',' << sm << ',' << im << ',' << disc << ',' << env << ',' << ratio
        << ',' << note << '\n';
  }
}

namespace {

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
    case ErrorKind::order_violation:
    case ErrorKind::empty_file:
    case ErrorKind::domain:
    case ErrorKind::coverage:
    case ErrorKind::table_exhausted:
    case ErrorKind::table_too_small:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for the iterated argument functions S_m(t) of zeta"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string x_policy = "logt";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--zeros", cfg.zeros_path, "Zero-ordinate table");
    sub->add_option("--out", cfg.out_path, "Output file (default stdout)");
    sub->add_option("--abs-tol", cfg.tolerances.abs_tol, "Absolute quadrature tolerance");
    sub->add_option("--rel-tol", cfg.tolerances.rel_tol, "Relative tolerance");
    sub->add_option("--x-policy", x_policy, "Mollifier scale policy")->check(CLI::IsMember({"logt", "fixed"}));
    sub->add_option("--x-value", cfg.x_value, "X for --x-policy fixed");
  };

  auto* constants = app.add_subcommand("constants", "Table of envelope constants and C_m");
  constants->add_option("--max-m", cfg.max_m, "Largest m")->default_val(4);
  add_common(constants);

  auto* eval = app.add_subcommand("eval", "All quantities at one t");
  eval->add_option("--m", cfg.m, "Order m")->default_val(1);
  eval->add_option("--t", cfg.t, "Ordinate")->required();
  add_common(eval);

  auto* sweep = app.add_subcommand("sweep", "CSV over a t range");
  sweep->add_option("--m", cfg.m, "Order m")->default_val(1);
  sweep->add_option("--t-start", cfg.t_start)->required();
  sweep->add_option("--t-stop", cfg.t_stop)->required();
  sweep->add_option("--t-step", cfg.t_step)->required();
  add_common(sweep);

  auto* verify = app.add_subcommand("verify", "Run the full check suite");
  add_common(verify);

  auto* envelope = app.add_subcommand("envelope", "Envelope bound at one t");
  envelope->add_option("--m", cfg.m, "Order m")->default_val(1);
  envelope->add_option("--t", cfg.t, "Ordinate")->required();
  add_common(envelope);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  cfg.x_policy = x_policy == "fixed" ? XPolicy::fixed : XPolicy::log_t;
  if (cfg.x_policy == XPolicy::fixed && !(cfg.x_value >= 4.0)) {
    err << "error: --x-policy fixed needs --x-value >= 4\n";
    return kExitConfig;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << '\n';
      return kExitConfig;
    }
    sink = &file;
  }

  try {
    cfg.tolerances.validate();
    if (*constants) {
      cfg.command = Command::constants;
      cmd_constants(cfg.max_m, *sink);
      return kExitOk;
    }
    if (*envelope) {
      cfg.command = Command::envelope;
      cmd_envelope(cfg, *sink);
      return kExitOk;
    }

    const auto path = resolve_zero_table(cfg.zeros_path);
    std::optional<ZeroTable> zeros;
    try {
      zeros.emplace(load_zero_table(path));
    } catch (const Error& e) {
      err << "error: zero table " << path.string() << ": " << e.what() << '\n';
      return kExitConfig;
    }

    if (*eval) {
      cfg.command = Command::eval;
      cmd_eval(cfg, *zeros, *sink, err);
      return kExitOk;
    }
    if (*sweep) {
      cfg.command = Command::sweep;
      cmd_sweep(cfg, *zeros, *sink);
      return kExitOk;
    }
    cfg.command = Command::verify;
    const VerifyReport rep = cmd_verify(cfg, *zeros, *sink);
    return rep.failed == 0 ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.kind()) ? kExitConfig : kExitCheckFailed;
  }
}

}  // namespace argbound::cli
