#pragma once

// Command line front end. Every subcommand parses options, calls one library
// operation and writes its result as a table; no numerics live here.
//
// Exit codes: 0 success, 1 validation or runtime failure, 2 usage error.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ldyn/bifurcation.hpp"
#include "ldyn/errors.hpp"
#include "ldyn/io.hpp"
#include "ldyn/lyapunov.hpp"
#include "ldyn/maps.hpp"
#include "ldyn/numbertheory.hpp"
#include "ldyn/orbit.hpp"
#include "ldyn/roots.hpp"
#include "ldyn/stats.hpp"
#include "ldyn/svg.hpp"

namespace ldyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct MapArgs {
  std::string family = "odd";
  long h = 1;
  long w = 2;
  double epsilon = MapSpec{}.epsilon;
  double c = 0.0;
  double alpha = 0.0;
  double r = 4.0;
  std::optional<double> beta;
  double escape_bound = 1e100;

  MapSpec to_spec() const {
    MapSpec s;
    s.family = parse_family(family);
    s.h = h;
    s.w = w;
    s.epsilon = epsilon;
    s.c = c;
    s.alpha = alpha;
    s.r = r;
    s.beta_override = beta;
    s.escape_bound = escape_bound;
    s.validate();
    return s;
  }
};

struct OutputArgs {
  std::string out;
  std::string format = "csv";
  std::string plot;
  unsigned workers = 0;
};

inline void add_map_options(CLI::App* sub, MapArgs& m, bool with_c_alpha) {
  sub->add_option("--family", m.family, "map family: odd | even | logistic")->capture_default_str();
  sub->add_option("--h", m.h, "class number h (beta = 2 pi h / w)")->capture_default_str();
  sub->add_option("--w", m.w, "roots of unity w")->capture_default_str();
  sub->add_option("--epsilon", m.epsilon, "fundamental unit (even family)")->capture_default_str();
  if (with_c_alpha) {
    sub->add_option("--c", m.c, "constant c")->capture_default_str();
    sub->add_option("--alpha", m.alpha, "exponent alpha >= 0")->capture_default_str();
  }
  sub->add_option("--r", m.r, "logistic parameter r in (0, 4]")->capture_default_str();
  sub->add_option("--beta", m.beta, "override beta directly");
  sub->add_option("--escape-bound", m.escape_bound, "orbits beyond this magnitude escape")->capture_default_str();
}

inline void add_output_options(CLI::App* sub, OutputArgs& o, bool plot, bool workers) {
  sub->add_option("--out", o.out, "data output path (default: stdout)");
  sub->add_option("--format", o.format, "csv | json")->capture_default_str();
  if (plot) sub->add_option("--plot", o.plot, "also write an SVG plot to this path");
  if (workers) sub->add_option("--workers", o.workers, "worker threads (0 = machine parallelism)");
  sub->add_option("--config", "key = value file; command line flags take precedence");
}

inline void emit(const io::Table& t, const OutputArgs& o, std::ostream& out) {
  const io::Format f = io::parse_format(o.format);
  if (o.out.empty()) {
    io::write_table(out, t, f);
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ArgumentError("cannot write '" + o.out + "'");
  io::write_table(file, t, f);
  if (!file) throw std::runtime_error("write to '" + o.out + "' failed");
}

template <typename Fn>
inline void emit_plot(const std::string& path, Fn&& draw) {
  if (path.empty()) return;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ArgumentError("cannot write '" + path + "'");
  draw(file);
}

inline io::Cell opt_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

inline std::string status_text(const LyapunovEstimate& e) {
  switch (e.status) {
    case LyapunovStatus::Converged: return "converged";
    case LyapunovStatus::ClampedFloorHit: return "clamped";
    case LyapunovStatus::Escaped:
      return "escaped:" + std::string(to_string(*e.escape_reason)) + "@" + std::to_string(*e.escape_step);
  }
  return "?";
}

// Reads --config from args, drops it, and splices the file's key = value
// pairs in as --key value unless the same flag is already on the command
// line. Unknown keys are a validation error.
inline std::vector<std::string> apply_config(CLI::App& app, std::vector<std::string> args) {
  if (args.empty()) return args;
  CLI::App* sub = app.get_subcommand_no_throw(args[0]);
  if (sub == nullptr) return args;

  std::optional<std::string> path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config requires a path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;

  std::ifstream in(*path);
  if (!in) throw ArgumentError("cannot open config '" + *path + "'");
  std::vector<std::string> injected;
  for (const auto& [key, value] : io::read_key_values(in, *path)) {
    const std::string flag = "--" + key;
    if (key == "config" || key == "help" || sub->get_option_no_throw(flag) == nullptr)
      throw ArgumentError(*path + ": unknown key '" + key + "' for '" + args[0] + "'");
    const bool on_cli = std::any_of(rest.begin() + 1, rest.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (on_cli) continue;
    injected.push_back(flag + "=" + value);
  }
  rest.insert(rest.begin() + 1, injected.begin(), injected.end());
  return rest;
}

}  // namespace detail

/// Runs one subcommand. args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace detail;

  CLI::App app{"Discrete maps from Dirichlet L(1, chi) closed forms: orbits, Lyapunov sweeps, "
               "bifurcations, fixed points and entropy"};
  app.name("ldyn");
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.allow_extras(false);

  std::function<void()> action;

  // lfunction
  LFunctionInputs lin;
  int parity = -1;
  std::optional<double> lf_epsilon;
  std::optional<double> modulus;
  BoundInputs bound{std::numbers::e, 1.0, 2022.0};
  OutputArgs lf_out;
  auto* lf = app.add_subcommand("lfunction", "closed-form L(1, chi) and log-space bounds");
  lf->add_option("--parity", parity, "chi(-1): -1 or 1")->capture_default_str();
  lf->add_option("--h", lin.h, "class number")->capture_default_str();
  lf->add_option("--w", lin.w, "roots of unity")->capture_default_str();
  lf->add_option("--m", lin.m, "modulus >= 3")->capture_default_str();
  lf->add_option("--epsilon", lf_epsilon, "fundamental unit (parity 1)");
  lf->add_option("--modulus", modulus, "D or q; when given, also print the log lower / zero-free bounds");
  lf->add_option("--constant", bound.constant, "bound constant")->capture_default_str();
  lf->add_option("--exponent", bound.exponent, "bound exponent A")->capture_default_str();
  add_output_options(lf, lf_out, false, false);
  lf->footer("columns: quantity,value (l_at_1, log_lower_bound, log_zero_free_bound)");
  lf->callback([&] {
    action = [&] {
      if (parity != -1 && parity != 1) throw ArgumentError("--parity must be -1 or 1");
      lin.parity = parity == 1 ? Parity::Even : Parity::Odd;
      lin.epsilon = lf_epsilon;
      io::Table t{{"quantity", "value"}, {}};
      t.add({std::string("l_at_1"), dirichlet_l_at_1(lin)});
      if (modulus) {
        bound.modulus = *modulus;
        t.add({std::string("log_lower_bound"), log_lower_bound(bound)});
        t.add({std::string("log_zero_free_bound"), log_zero_free_bound(bound)});
      }
      emit(t, lf_out, out);
    };
  });

  // orbit
  MapArgs orb_map;
  double orb_x0 = 0.4;
  long orb_n = 50'000, orb_transient = 5'000;
  OutputArgs orb_out;
  auto* orb = app.add_subcommand("orbit", "iterate a map and record the post-transient trajectory");
  add_map_options(orb, orb_map, true);
  orb->add_option("--x0", orb_x0, "initial point")->capture_default_str();
  orb->add_option("--n", orb_n, "iterations")->capture_default_str();
  orb->add_option("--transient", orb_transient, "discarded leading iterates")->capture_default_str();
  add_output_options(orb, orb_out, false, false);
  orb->footer("columns: n,x (n is the iterate index, x_0 is the initial point)");
  orb->callback([&] {
    action = [&] {
      const OrbitRecord rec = iterate_orbit(orb_map.to_spec(), orb_x0, orb_n, orb_transient);
      io::Table t{{"n", "x"}, {}};
      for (std::size_t i = 0; i < rec.samples.size(); ++i) t.add({rec.index_of(i), rec.samples[i]});
      emit(t, orb_out, out);
      if (rec.escape)
        err << "orbit escaped at step " << rec.escape->step << " (" << to_string(rec.escape->reason) << ")\n";
    };
  });

  // lyapunov
  MapArgs ly_map;
  double ly_x0 = 0.4;
  long ly_n = 50'000, ly_transient = 5'000;
  OutputArgs ly_out;
  auto* ly = app.add_subcommand("lyapunov", "largest Lyapunov exponent of one orbit");
  add_map_options(ly, ly_map, true);
  ly->add_option("--x0", ly_x0, "initial point")->capture_default_str();
  ly->add_option("--n", ly_n, "iterations")->capture_default_str();
  ly->add_option("--transient", ly_transient, "discarded leading iterates")->capture_default_str();
  add_output_options(ly, ly_out, false, false);
  ly->footer("columns: lambda,n_used,status");
  ly->callback([&] {
    action = [&] {
      const LyapunovEstimate e = lyapunov_exponent(ly_map.to_spec(), ly_x0, ly_n, ly_transient);
      io::Table t{{"lambda", "n_used", "status"}, {}};
      t.add({e.lambda, e.n_used, status_text(e)});
      emit(t, ly_out, out);
    };
  });

  // sweep
  MapArgs sw_map;
  std::string sw_c = "0.0005:0.007:20", sw_alpha = "0:10:20";
  double sw_x0 = 0.4;
  long sw_n = 50'000, sw_transient = 5'000;
  OutputArgs sw_out;
  auto* sw = app.add_subcommand("sweep", "Lyapunov exponent over a (c, alpha) grid");
  add_map_options(sw, sw_map, false);
  sw->add_option("--c", sw_c, "c range lo:hi:count")->capture_default_str();
  sw->add_option("--alpha", sw_alpha, "alpha range lo:hi:count")->capture_default_str();
  sw->add_option("--x0", sw_x0, "initial point")->capture_default_str();
  sw->add_option("--n", sw_n, "iterations per cell")->capture_default_str();
  sw->add_option("--transient", sw_transient, "discarded leading iterates")->capture_default_str();
  add_output_options(sw, sw_out, true, true);
  sw->footer("columns: c,alpha,lambda,status (row-major, c outer)");
  sw->callback([&] {
    action = [&] {
      const SweepGrid g = sweep_grid(sw_map.to_spec(), io::parse_range(sw_c), io::parse_range(sw_alpha), sw_x0,
                                     sw_n, sw_transient, sw_out.workers);
      io::Table t{{"c", "alpha", "lambda", "status"}, {}};
      for (std::size_t i = 0; i < g.c_axis.size(); ++i)
        for (std::size_t j = 0; j < g.alpha_axis.size(); ++j) {
          const auto& e = g.at(i, j);
          t.add({g.c_axis[i], g.alpha_axis[j], e.lambda, status_text(e)});
        }
      emit(t, sw_out, out);
      err << "escaped_fraction=" << io::format_double(g.escaped_fraction()) << "\n";
      emit_plot(sw_out.plot, [&](std::ostream& os) {
        std::vector<double> vals;
        for (const auto& e : g.cells) vals.push_back(e.escaped() ? std::nan("") : e.lambda);
        svg::heatmap(os, g.c_axis, g.alpha_axis, vals, "Lyapunov exponent", "c", "alpha");
      });
    };
  });

  // roots
  MapArgs rt_map;
  std::string rt_guesses = "2:30:15";
  NewtonOptions rt_opt;
  OutputArgs rt_out;
  auto* rt = app.add_subcommand("roots", "Newton-Raphson fixed points from a range of initial guesses");
  add_map_options(rt, rt_map, true);
  rt->add_option("--guesses", rt_guesses, "initial guesses lo:hi:count")->capture_default_str();
  rt->add_option("--tol", rt_opt.tol, "residual tolerance |f(x) - x|")->capture_default_str();
  rt->add_option("--max-iter", rt_opt.max_iter, "Newton iteration cap")->capture_default_str();
  rt->add_option("--band", rt_opt.marginal_band, "marginal band around |f'| = 1")->capture_default_str();
  add_output_options(rt, rt_out, false, true);
  rt->footer("columns: guess,root,derivative,stability,status");
  rt->callback([&] {
    action = [&] {
      const auto guesses = io::parse_range(rt_guesses).values();
      const auto reports = guess_sweep(rt_map.to_spec(), guesses, rt_opt, rt_out.workers);
      io::Table t{{"guess", "root", "derivative", "stability", "status"}, {}};
      for (const auto& r : reports) {
        io::Cell stab = std::monostate{};
        if (r.stability) stab = std::string(to_string(*r.stability));
        std::string status = r.failure ? std::string(to_string(*r.failure)) : "converged";
        if (r.used_fd_fallback) status += "+fd";
        t.add({r.guess, opt_cell(r.root), opt_cell(r.derivative_at_root), stab, status});
      }
      emit(t, rt_out, out);
    };
  });

  // bifurcate
  MapArgs bf_map;
  std::string bf_param = "r", bf_range = "2.8:3.4:61", bf_branches;
  BifurcationOptions bf_opt;
  OutputArgs bf_out;
  auto* bf = app.add_subcommand("bifurcate", "bifurcation diagram data over one parameter");
  add_map_options(bf, bf_map, true);
  bf->add_option("--param", bf_param, "swept parameter: c | alpha | r")->capture_default_str();
  bf->add_option("--range", bf_range, "parameter range lo:hi:count")->capture_default_str();
  bf->add_option("--x0", bf_opt.x0, "initial point")->capture_default_str();
  bf->add_option("--n", bf_opt.n_iter, "iterations per parameter")->capture_default_str();
  bf->add_option("--transient", bf_opt.transient, "minimum discarded leading iterates")->capture_default_str();
  bf->add_option("--samples", bf_opt.samples_per_param, "kept iterates per parameter")->capture_default_str();
  bf->add_option("--cluster-tol", bf_opt.cluster_tol, "branch clustering tolerance")->capture_default_str();
  bf->add_option("--branches", bf_branches, "also write param,branches CSV here");
  add_output_options(bf, bf_out, true, true);
  bf->footer("columns: param,x");
  bf->callback([&] {
    action = [&] {
      bf_opt.workers = bf_out.workers;
      const BifurcationData d =
          bifurcation_diagram(bf_map.to_spec(), parse_bifurcation_param(bf_param), io::parse_range(bf_range), bf_opt);
      io::Table t{{"param", "x"}, {}};
      std::vector<double> px, py;
      for (std::size_t i = 0; i < d.param_values.size(); ++i)
        for (double x : d.attractor_samples[i]) {
          t.add({d.param_values[i], x});
          px.push_back(d.param_values[i]);
          py.push_back(x);
        }
      emit(t, bf_out, out);
      if (!bf_branches.empty()) {
        io::Table b{{"param", "branches"}, {}};
        for (std::size_t i = 0; i < d.param_values.size(); ++i) b.add({d.param_values[i], d.branch_counts[i]});
        OutputArgs bo = bf_out;
        bo.out = bf_branches;
        bo.format = "csv";
        emit(b, bo, out);
      }
      emit_plot(bf_out.plot, [&](std::ostream& os) {
        svg::scatter(os, px, py, "Bifurcation diagram", std::string(to_string(d.param)), "x");
      });
    };
  });

  // entropy
  std::string en_lyap, en_values, en_range;
  long en_bins = 10;
  OutputArgs en_out;
  auto* en = app.add_subcommand("entropy", "Pesin entropy of Lyapunov values and/or Shannon entropy of a sample");
  en->add_option("--lyapunov-file", en_lyap, "one Lyapunov exponent per line");
  en->add_option("--values-file", en_values, "one value per line, histogrammed for Shannon entropy");
  en->add_option("--bins", en_bins, "histogram bins")->capture_default_str();
  en->add_option("--range", en_range, "histogram range lo:hi (default: data range)");
  add_output_options(en, en_out, false, false);
  en->footer("columns: quantity,value (pesin, shannon_raw, shannon_normalized)");
  en->callback([&] {
    action = [&] {
      if (en_lyap.empty() && en_values.empty())
        throw ArgumentError("entropy needs --lyapunov-file and/or --values-file");
      io::Table t{{"quantity", "value"}, {}};
      if (!en_lyap.empty()) t.add({std::string("pesin"), pesin_entropy(io::read_values_file(en_lyap))});
      if (!en_values.empty()) {
        std::optional<std::pair<double, double>> range;
        if (!en_range.empty()) range = io::parse_interval(en_range);
        const auto h = histogram(io::read_values_file(en_values), en_bins, range);
        const auto s = shannon_entropy(h);
        t.add({std::string("shannon_raw"), s.raw});
        t.add({std::string("shannon_normalized"), s.normalized});
      }
      emit(t, en_out, out);
    };
  });

  // histogram
  std::string hi_values, hi_range;
  long hi_bins = 10, hi_smooth = 1;
  OutputArgs hi_out;
  auto* hi = app.add_subcommand("histogram", "equal-width histogram with a unimodality check");
  hi->add_option("--values-file", hi_values, "one value per line")->required();
  hi->add_option("--bins", hi_bins, "number of bins")->capture_default_str();
  hi->add_option("--range", hi_range, "histogram range lo:hi (default: data range)");
  hi->add_option("--smoothing", hi_smooth, "odd moving-average window for the unimodality check")
      ->capture_default_str();
  add_output_options(hi, hi_out, true, false);
  hi->footer("columns: bin_lo,bin_hi,count; the unimodality verdict goes to stderr");
  hi->callback([&] {
    action = [&] {
      std::optional<std::pair<double, double>> range;
      if (!hi_range.empty()) range = io::parse_interval(hi_range);
      const auto h = histogram(io::read_values_file(hi_values), hi_bins, range);
      const auto u = unimodality_check(h, hi_smooth);
      io::Table t{{"bin_lo", "bin_hi", "count"}, {}};
      for (std::size_t i = 0; i < h.bins(); ++i) t.add({h.edges[i], h.edges[i + 1], h.counts[i]});
      emit(t, hi_out, out);
      err << "unimodal=" << (u.is_unimodal ? "true" : "false");
      if (u.mode_center) err << " mode_center=" << io::format_double(*u.mode_center);
      err << "\n";
      emit_plot(hi_out.plot, [&](std::ostream& os) { svg::bars(os, h.edges, h.counts, "Histogram", "value"); });
    };
  });

  try {
    args = apply_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'ldyn --help' for usage\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), out, err);
}

}  // namespace ldyn::cli
