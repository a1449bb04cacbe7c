// kitebeam: batch front-end for the triangle-billiard toolkit.
//
// Subcommands:
//   numtheory  circle minima N(k), convergents, log-space bound reports
//   nets       net-function estimation and the commensurate net construction
//   billiard   kite unfolding dumps, splitting experiments, splitting-time bounds
//
// Exit codes: 0 success, 1 invalid input, 2 budget/feasibility failure
// (partial results are still flushed).

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "kitebeam/beam.hpp"
#include "kitebeam/bounds.hpp"
#include "kitebeam/diophantine.hpp"
#include "kitebeam/errors.hpp"
#include "kitebeam/experiments.hpp"
#include "kitebeam/geometry.hpp"
#include "kitebeam/io.hpp"
#include "kitebeam/net_construction.hpp"
#include "kitebeam/unfolding.hpp"
#include "kitebeam/walks.hpp"

namespace kb = kitebeam;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;

struct AngleOption {
  std::optional<double> turns;
  std::optional<double> radians;

  void attach(CLI::App* cmd, const std::string& name) {
    auto* t = cmd->add_option("--" + name + "-turns", turns,
                              name + " as a fraction of a full circle");
    auto* r = cmd->add_option("--" + name + "-rad", radians, name + " in radians");
    t->excludes(r);
  }

  bool given() const { return turns.has_value() || radians.has_value(); }

  kb::CircleAngle value() const {
    if (turns) return kb::CircleAngle::from_turns(*turns);
    if (radians) return kb::CircleAngle::from_radians(*radians);
    throw CLI::ValidationError("angle value missing");
  }
};

struct OutputSink {
  std::string path;  // empty: stdout

  void emit(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
      kb::write_text_file(path, content);
    }
  }
};

int run_numtheory(const AngleOption& alpha_opt, const AngleOption& beta_opt,
                  std::int64_t k_max, bool bounds_mode, int p, int q, double eps,
                  std::optional<double> conv_x, int conv_depth, bool approx_mode,
                  int t1_n, std::optional<double> l_override, std::uint64_t budget,
                  const OutputSink& out, const std::string& format) {
  if (budget == 0) throw CLI::ValidationError("--budget must be positive");
  const kb::ScanBudget scan{budget};

  const int modes = int(bounds_mode) + int(conv_x.has_value()) + int(approx_mode) +
                    int(k_max > 0);
  if (modes != 1) {
    throw CLI::ValidationError(
        "choose exactly one of --k-max, --bounds, --convergents, --approx-check");
  }

  if (bounds_mode) {
    const kb::BoundReport report = kb::m_of_eps(p, q, eps);
    out.emit(kb::bound_report_to_json(report).dump(2));
    return kExitOk;
  }

  if (conv_x) {
    const auto cs = kb::convergents(*conv_x, conv_depth);
    kb::CsvTable table;
    table.header = {"p", "q"};
    for (const auto& c : cs) {
      table.rows.push_back({std::to_string(c.p), std::to_string(c.q)});
    }
    out.emit(table.to_string());
    return kExitOk;
  }

  if (approx_mode) {
    if (!alpha_opt.given() || !beta_opt.given()) {
      throw CLI::ValidationError("--approx-check requires alpha and beta");
    }
    kb::ApproximationOptions options;
    options.budget = scan;
    options.L_override = l_override;
    const auto report = kb::approximation_inequality_check(alpha_opt.value(), beta_opt.value(),
                                                      p, q, t1_n, options);
    out.emit(kb::approximation_to_json(report).dump(2));
    return report.status == kb::ApproximationStatus::indeterminate ? kExitBudget : kExitOk;
  }

  // N(k) table
  if (!alpha_opt.given()) throw CLI::ValidationError("alpha is required for the N table");
  kb::ProfileResult profile;
  std::string value_column;
  if (beta_opt.given()) {
    profile = kb::n_pair_profile(alpha_opt.value(), beta_opt.value(), k_max, scan);
    value_column = "N_pair";
  } else {
    profile = kb::n_single_profile(alpha_opt.value(), k_max, scan);
    value_column = "N_single";
  }
  if (format == "json") {
    kb::Json j;
    j["k_max"] = k_max;
    j["k_computed"] = profile.k_computed;
    j["budget_exceeded"] = profile.budget_exceeded;
    kb::Json values = kb::Json::array();
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
      values.push_back(kb::Json{{"k", i + 1}, {"value", profile.values[i]}});
    }
    j[value_column] = std::move(values);
    out.emit(j.dump(2));
  } else {
    kb::CsvTable table;
    table.header = {"k", value_column};
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
      table.rows.push_back({std::to_string(i + 1), kb::format_double(profile.values[i])});
    }
    out.emit(table.to_string());
  }
  return profile.budget_exceeded ? kExitBudget : kExitOk;
}

int run_nets(bool estimate_mode, bool commensurate_mode, const AngleOption& alpha_opt,
             const AngleOption& beta_opt, const AngleOption& gamma_opt, double eps,
             double min_width, int samples, int max_len, std::uint64_t seed, int p, int q,
             std::uint64_t walk_seed, std::int64_t walk_len, double walk_bias,
             std::uint64_t budget, const OutputSink& out) {
  if (estimate_mode == commensurate_mode) {
    throw CLI::ValidationError("choose exactly one of --estimate-F, --commensurate");
  }

  if (estimate_mode) {
    if (!alpha_opt.given() || !beta_opt.given()) {
      throw CLI::ValidationError("--estimate-F requires alpha and beta");
    }
    if (!(eps > 0.0 && eps < 1.0)) throw CLI::ValidationError("eps must lie in (0, 1)");
    const auto estimate =
        kb::estimate_net_function(alpha_opt.value(), beta_opt.value(), eps, min_width,
                                  samples, max_len, seed);
    kb::Json j = kb::histogram_to_json(estimate);
    j["eps"] = eps;
    j["min_width"] = min_width;
    j["seed"] = seed;
    out.emit(j.dump(2));
    return kExitOk;
  }

  // Commensurate net construction over a seeded biased walk.
  if (!gamma_opt.given()) throw CLI::ValidationError("--commensurate requires gamma");
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw CLI::ValidationError("the commensurate construction needs eps in (0, 1/2]");
  }
  if (walk_len < 2) throw CLI::ValidationError("--walk-len must be >= 2");
  const kb::CircleAngle gamma = gamma_opt.value();
  const kb::CircleAngle alpha = gamma.times(p);
  const kb::CircleAngle beta = gamma.times(q);
  const kb::ConnectedSequence walk =
      kb::biased_walk(alpha, beta, kb::CircleAngle::from_turns(0.0),
                      static_cast<std::size_t>(walk_len - 1), walk_seed, walk_bias);
  try {
    const auto result =
        kb::commensurate_net_construction(p, q, gamma, walk, eps, kb::ScanBudget{budget});
    kb::Json j;
    j["witness"] = kb::witness_to_json(result.witness);
    j["color_offset"] = result.color_offset;
    j["n0"] = result.n0;
    j["delta"] = result.delta;
    j["k_intervals"] = result.k_intervals;
    j["mirrored"] = result.mirrored;
    j["walk_len"] = walk_len;
    out.emit(j.dump(2));
    return kExitOk;
  } catch (const kb::InsufficientLengthError& e) {
    kb::Json j;
    j["error"] = "insufficient_length";
    j["first_uncovered_k"] = e.first_uncovered_k();
    j["message"] = e.what();
    out.emit(j.dump(2));
    std::cerr << "commensurate: " << e.what() << "\n";
    return kExitBudget;
  }
}

int run_billiard(const std::vector<double>& triangle_rad,
                 const std::vector<double>& triangle_turns, int reflect_side,
                 bool unfold_mode, bool fold_mode, int side, double frac,
                 const AngleOption& dir_opt, std::int64_t steps, double max_len,
                 bool split_mode, const std::string& eps_csv, int dirs, double max_T,
                 std::uint64_t seed, bool bound_mode_flag, const std::string& f_model,
                 double f_log10, int p, int q, double split_bound_eps, std::uint64_t budget,
                 const OutputSink& out, const std::string& format) {
  std::vector<double> tri;
  if (!triangle_rad.empty() && !triangle_turns.empty()) {
    throw CLI::ValidationError("give the triangle in radians or turns, not both");
  }
  for (double a : triangle_rad) tri.push_back(a);
  for (double a : triangle_turns) tri.push_back(a * kb::two_pi_v<double>);
  if (tri.size() != 2) {
    throw CLI::ValidationError("--triangle needs exactly two angles");
  }
  const kb::Triangle triangle(tri[0], tri[1]);
  const int side_id =
      reflect_side >= 0 ? reflect_side : kb::default_reflecting_side(triangle);
  const kb::Kite kite = kb::kite_from_triangle(triangle, side_id);

  const int modes = int(unfold_mode) + int(fold_mode) + int(split_mode) + int(bound_mode_flag);
  if (modes != 1) {
    throw CLI::ValidationError(
        "choose exactly one of --unfold, --fold, --split-experiment, --splitting-bound");
  }

  if (unfold_mode || fold_mode) {
    if (!dir_opt.given()) throw CLI::ValidationError("--dir-turns/--dir-rad is required");
    if (steps < 1) throw CLI::ValidationError("--steps must be >= 1");
    if (unfold_mode) {
      const auto result = kb::unfold_ray(kite, side, frac, dir_opt.value(),
                                         static_cast<std::size_t>(steps), max_len);
      if (format == "json") {
        out.emit(kb::unfold_to_json(kite, result).dump(2));
        return kExitOk;
      }
      kb::CsvTable table;
      table.header = {"k", "t", "side", "theta_turns", "x", "y"};
      for (std::size_t i = 0; i < result.crossings.size(); ++i) {
        const auto& c = result.crossings[i];
        const auto& f = result.frames[i + 1];
        table.rows.push_back({std::to_string(i + 1), kb::format_double(c.t),
                              std::to_string(c.side),
                              kb::format_double(f.theta.turns()),
                              kb::format_double(c.point.x()),
                              kb::format_double(c.point.y())});
      }
      out.emit(table.to_string());
    } else {
      const auto result =
          kb::fold_trajectory(kite, side, frac, dir_opt.value(),
                              static_cast<std::size_t>(steps));
      if (format == "json") {
        out.emit(kb::fold_to_json(kite, result).dump(2));
        return kExitOk;
      }
      kb::CsvTable table;
      table.header = {"k", "segment_length", "side", "x", "y"};
      for (std::size_t i = 0; i < result.reflections.size(); ++i) {
        const auto& r = result.reflections[i];
        table.rows.push_back({std::to_string(i + 1), kb::format_double(r.segment_length),
                              std::to_string(r.side), kb::format_double(r.point.x()),
                              kb::format_double(r.point.y())});
      }
      out.emit(table.to_string());
    }
    return kExitOk;
  }

  if (split_mode) {
    kb::SplittingConfig config;
    std::size_t pos = 0;
    while (pos < eps_csv.size()) {
      const std::size_t comma = eps_csv.find(',', pos);
      const std::string item = eps_csv.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!item.empty()) config.eps_list.push_back(std::stod(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (config.eps_list.empty()) throw CLI::ValidationError("--eps list is empty");
    config.directions = dirs;
    config.seed = seed;
    config.max_T = max_T;
    const auto rows = kb::splitting_experiment(kite, config);
    if (format == "json") {
      kb::Json j = kb::Json::array();
      for (const auto& row : rows) {
        j.push_back(kb::Json{{"eps", row.eps},
                             {"direction_turns", row.direction_turns},
                             {"outcome", row.outcome},
                             {"T", row.T},
                             {"period", row.period},
                             {"kite_count", row.kite_count},
                             {"C_used", row.c_used}});
      }
      out.emit(j.dump(2));
    } else {
      out.emit(kb::rows_to_csv(rows).to_string());
    }
    return kExitOk;
  }

  // splitting-time bound
  kb::NetFunctionHandle handle;
  if (f_model == "stub") {
    handle = kb::constant_net_function(f_log10);
  } else if (f_model == "bound") {
    handle = kb::bound_net_function(p, q);
  } else {
    throw CLI::ValidationError("--F must be 'stub' or 'bound'");
  }
  const double c_used = kb::estimate_C(kite, 256, 1);
  const auto report =
      kb::splitting_time_bound(kite.alpha_turns(), kite.beta_turns(), split_bound_eps, handle,
                         c_used, kb::ScanBudget{budget});
  out.emit(kb::splitting_bound_to_json(report).dump(2));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangle-billiard toolkit: circle minima, relative nets, kite beams"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000'000ULL;
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", seed, "master seed");
  app.add_option("--budget", budget, "scan budget in candidates");

  // numtheory
  auto* numtheory = app.add_subcommand("numtheory", "Diophantine minima and bounds");
  numtheory->fallthrough();
  AngleOption nt_alpha, nt_beta;
  nt_alpha.attach(numtheory, "alpha");
  nt_beta.attach(numtheory, "beta");
  std::int64_t k_max = 0;
  bool bounds_mode = false, approx_mode = false;
  int nt_p = 1, nt_q = 1, t1_n = 1, conv_depth = 10;
  double nt_eps = 0.1;
  std::optional<double> conv_x, l_override;
  numtheory->add_option("--k-max", k_max, "emit N(k) for k = 1..k_max");
  numtheory->add_flag("--bounds", bounds_mode, "emit the log-space bound report");
  numtheory->add_flag("--approx-check", approx_mode, "approximation inequality check");
  numtheory->add_option("--p", nt_p, "numerator of the rational direction");
  numtheory->add_option("--q", nt_q, "denominator of the rational direction");
  numtheory->add_option("--n", t1_n, "index n of the inequality check");
  numtheory->add_option("--eps", nt_eps, "eps for --bounds");
  numtheory->add_option("--convergents", conv_x, "emit convergents of this number");
  numtheory->add_option("--depth", conv_depth, "number of convergents");
  numtheory->add_option("--L-override", l_override,
                        "testing hook: force the inner L value");

  // nets
  auto* nets = app.add_subcommand("nets", "relative nets on the circle");
  nets->fallthrough();
  AngleOption n_alpha, n_beta, n_gamma;
  n_alpha.attach(nets, "alpha");
  n_beta.attach(nets, "beta");
  n_gamma.attach(nets, "gamma");
  bool estimate_mode = false, commensurate_mode = false;
  double n_eps = 0.2, n_min_width = 0.05, walk_bias = 0.9;
  int n_samples = 100, n_max_len = 10000, n_p = 1, n_q = 1;
  std::uint64_t walk_seed = 1;
  std::int64_t walk_len = 100000;
  nets->add_flag("--estimate-F", estimate_mode, "sampled net-function lower bound");
  nets->add_flag("--commensurate", commensurate_mode, "commensurate net construction on a walk");
  nets->add_option("--eps", n_eps, "net resolution");
  nets->add_option("--min-width", n_min_width, "minimal witness arc width (turns)");
  nets->add_option("--samples", n_samples, "number of sampled walks");
  nets->add_option("--max-len", n_max_len, "walk length cap");
  nets->add_option("--p", n_p, "alpha = p * gamma");
  nets->add_option("--q", n_q, "beta = q * gamma");
  nets->add_option("--walk-seed", walk_seed, "seed of the generated walk");
  nets->add_option("--walk-len", walk_len, "length of the generated walk");
  nets->add_option("--walk-bias", walk_bias, "probability of a positive step");

  // billiard
  auto* billiard = app.add_subcommand("billiard", "kites, unfolding and beams");
  billiard->fallthrough();
  std::vector<double> triangle_rad, triangle_turns;
  billiard->add_option("--triangle", triangle_rad,
                       "two triangle angles in radians, comma separated")
      ->delimiter(',');
  billiard->add_option("--triangle-turns", triangle_turns,
                       "two triangle angles in turns, comma separated")
      ->delimiter(',');
  int reflect_side = -1, b_side = 0, b_dirs = 0, b_p = 1, b_q = 1;
  bool unfold_mode = false, fold_mode = false, split_mode = false, bound_mode_flag = false;
  double b_frac = 0.5, b_max_len = 1e9, b_max_T = 1e4, split_bound_eps = 0.9,
         f_log10 = 0.0;
  std::int64_t b_steps = 1000;
  std::string eps_csv;
  std::string f_model = "stub";
  AngleOption b_dir;
  b_dir.attach(billiard, "dir");
  billiard->add_option("--reflect-side", reflect_side,
                       "triangle side to reflect across (default: opposite the largest angle)");
  billiard->add_flag("--unfold", unfold_mode, "straight-line unfolding dump");
  billiard->add_flag("--fold", fold_mode, "mirror-law reflection dump");
  billiard->add_option("--side", b_side, "kite side the ray starts on");
  billiard->add_option("--frac", b_frac, "start position along that side");
  billiard->add_option("--steps", b_steps, "reflection count");
  billiard->add_option("--max-len", b_max_len, "ray length cap");
  billiard->add_flag("--split-experiment", split_mode, "seeded beam sweep");
  billiard->add_option("--eps", eps_csv, "beam widths, comma separated");
  billiard->add_option("--dirs", b_dirs, "directions per eps");
  billiard->add_option("--max-T", b_max_T, "beam length budget");
  billiard->add_flag("--splitting-bound", bound_mode_flag, "splitting-time bound report");
  billiard->add_option("--F", f_model, "net-function model: stub | bound");
  billiard->add_option("--F-log10", f_log10, "log10 value of the stub model");
  billiard->add_option("--p", b_p, "pair index p of the bound model");
  billiard->add_option("--q", b_q, "pair index q of the bound model");
  billiard->add_option("--bound-eps", split_bound_eps, "eps of the splitting-time bound");

  CLI11_PARSE(app, argc, argv);

  const OutputSink out{out_path};
  try {
    if (numtheory->parsed()) {
      return run_numtheory(nt_alpha, nt_beta, k_max, bounds_mode, nt_p, nt_q, nt_eps,
                           conv_x, conv_depth, approx_mode, t1_n, l_override, budget,
                           out, format);
    }
    if (nets->parsed()) {
      return run_nets(estimate_mode, commensurate_mode, n_alpha, n_beta, n_gamma, n_eps,
                      n_min_width, n_samples, n_max_len, seed, n_p, n_q, walk_seed,
                      walk_len, walk_bias, budget, out);
    }
    if (billiard->parsed()) {
      return run_billiard(triangle_rad, triangle_turns, reflect_side, unfold_mode,
                          fold_mode, b_side, b_frac, b_dir, b_steps, b_max_len,
                          split_mode, eps_csv, b_dirs, b_max_T, seed, bound_mode_flag,
                          f_model, f_log10, b_p, b_q, split_bound_eps, budget, out, format);
    }
  } catch (const kb::InsufficientLengthError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const kb::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
