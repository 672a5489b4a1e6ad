#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hedgehog/curve_spec.hpp"
#include "hedgehog/dynamics.hpp"
#include "hedgehog/geometry.hpp"
#include "hedgehog/gutkin.hpp"
#include "hedgehog/parametric.hpp"
#include "hedgehog/svg.hpp"
#include "hedgehog/transforms.hpp"

namespace hedgehog {

namespace {

FourierSupport require_support(const ExpandedCurve& ec, const char* command) {
  if (!ec.support)
    throw std::domain_error(std::string(command) +
                            ": input curve has no closed Fourier support");
  return *ec.support;
}

std::vector<Point> sample_positions(const ParametricCurve& curve, int n) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    double t = curve.closed()
                   ? curve.t0() + (curve.t1() - curve.t0()) * i / n
                   : curve.t0() + (curve.t1() - curve.t0()) * i / (n - 1);
    pts.push_back(curve.position(t));
  }
  return pts;
}

SvgCurve svg_curve_of_support(const FourierSupport& p, int samples) {
  PlaneCurveSamples s = sample_curve(p, samples);
  return {s.points, true, ""};
}

std::vector<Point> cusp_markers_of_support(const FourierSupport& p) {
  std::vector<Point> markers;
  if (p.degree() <= 1 && p.a0() == 0.0) return markers;
  for (double phi : cusp_locations(p)) markers.push_back(curve_point(p, phi));
  return markers;
}

void add_curve_to_figure(const ExpandedCurve& ec, int samples,
                         std::vector<SvgCurve>& curves,
                         std::vector<Point>& markers) {
  if (ec.support) {
    curves.push_back(svg_curve_of_support(*ec.support, samples));
    auto m = cusp_markers_of_support(*ec.support);
    markers.insert(markers.end(), m.begin(), m.end());
    return;
  }
  const ParametricCurve& curve = *ec.curve;
  curves.push_back({sample_positions(curve, samples), curve.closed(), ""});
  for (double t : curve_cusp_parameters(curve))
    markers.push_back(curve.position(t));
}

struct CsvWriter {
  std::ostringstream out;

  void header(const std::vector<std::string>& cols) {
    for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
  }
  void row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  }
};

std::vector<int> spectrum_of(const FourierSupport& p) {
  std::vector<int> ks{0};
  for (const Harmonic& h : p.harmonics()) ks.push_back(h.k);
  return ks;
}

void run_evolute(const std::string& input, double alpha_rad,
                 const std::string& output, const std::string& svg_path,
                 int samples) {
  Angle alpha(alpha_rad);
  ExpandedCurve ec = expand(load_curve_spec(input));

  if (ec.support) {
    FourierSupport q = skew_evolute(*ec.support, alpha);
    if (!output.empty()) write_file_atomic(output, fourier_spec_json(q));
    if (!svg_path.empty()) {
      std::vector<SvgCurve> curves{svg_curve_of_support(*ec.support, samples),
                                   svg_curve_of_support(q, samples)};
      std::vector<Point> markers = cusp_markers_of_support(q);
      write_file_atomic(svg_path, svg_document(curves, markers));
    }
    return;
  }

  // Open curve: the image is produced by the envelope construction.
  const ParametricCurve& curve = *ec.curve;
  PlaneCurveSamples env = skew_evolute_numeric(curve, alpha, samples);
  if (!output.empty()) write_file_atomic(output, samples_json(env));
  if (!svg_path.empty()) {
    std::vector<SvgCurve> curves{{sample_positions(curve, samples), false, ""},
                                 {env.points, env.closed, ""}};
    std::vector<Point> markers;
    for (double t : image_cusp_parameters(curve, alpha)) {
      try {
        markers.push_back(envelope_point(curve, t, alpha));
      } catch (const std::domain_error&) {
      }
    }
    write_file_atomic(svg_path, svg_document(curves, markers));
  }
}

void run_involute(const std::string& input, double alpha_rad,
                  const std::string& output, const std::string& svg_path,
                  int samples) {
  Angle alpha(alpha_rad);
  FourierSupport q = require_support(expand(load_curve_spec(input)), "involute");
  InvoluteResult res = skew_involute(q, alpha);
  if (!output.empty())
    write_file_atomic(output,
                      fourier_spec_json(res.support, res.one_parameter_family));
  if (!svg_path.empty()) {
    std::vector<SvgCurve> curves{svg_curve_of_support(q, samples),
                                 svg_curve_of_support(res.support, samples)};
    write_file_atomic(svg_path,
                      svg_document(curves, cusp_markers_of_support(res.support)));
  }
}

void run_map(const std::string& input, double alpha_rad, int steps,
             const std::string& csv_path, const std::string& output) {
  Angle alpha(alpha_rad);
  FourierSupport p = require_support(expand(load_curve_spec(input)), "map");

  std::vector<int> ks = spectrum_of(p);
  CsvWriter csv;
  std::vector<std::string> cols{"step", "L", "A", "R", "steiner_x", "steiner_y"};
  for (int k : ks) cols.push_back("amplitude_" + std::to_string(k));
  csv.header(cols);

  FourierSupport cur = p;
  for (int step = 0; step <= steps; ++step) {
    if (step > 0) cur = m_map(cur, alpha);
    Point st = steiner_point(cur);
    std::vector<std::string> cells{
        std::to_string(step),          format_double(signed_length(cur)),
        format_double(signed_area(cur)), format_double(radius_energy(cur)),
        format_double(st.x),           format_double(st.y)};
    for (int k : ks) cells.push_back(format_double(cur.amplitude(k)));
    csv.row(cells);
  }
  write_file_atomic(csv_path, csv.out.str());
  if (!output.empty()) write_file_atomic(output, fourier_spec_json(cur));
}

void run_iterate(const std::string& input, double alpha_rad,
                 const std::string& mode_name, int steps,
                 const std::string& csv_path) {
  Angle alpha(alpha_rad);
  FourierSupport p = require_support(expand(load_curve_spec(input)), "iterate");
  IterMode mode;
  if (mode_name == "evolute")
    mode = IterMode::evolute;
  else if (mode_name == "involute")
    mode = IterMode::involute;
  else
    throw std::invalid_argument("iterate: mode must be evolute or involute");

  IterationTrace trace = iterate(p, alpha, steps, mode);

  int d;
  if (mode == IterMode::evolute) {
    d = p.degree();
  } else {
    d = p.a0() != 0.0 ? 0
                      : (p.harmonics().empty() ? 0 : p.harmonics().front().k);
  }

  std::vector<int> ks = spectrum_of(p);
  CsvWriter csv;
  std::vector<std::string> cols{"step"};
  for (int k : ks) cols.push_back("amplitude_" + std::to_string(k));
  cols.push_back("cusp_count");
  cols.push_back("shape_distance");
  csv.header(cols);

  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const IterationStep& st = trace.steps[i];
    std::vector<std::string> cells{std::to_string(i)};
    for (int k : ks) cells.push_back(format_double(st.support.amplitude(k)));
    cells.push_back(st.cusps ? std::to_string(*st.cusps) : "");
    std::string sd;
    try {
      sd = format_double(shape_distance(st.support, d));
    } catch (const std::domain_error&) {
    }
    cells.push_back(sd);
    csv.row(cells);
  }
  write_file_atomic(csv_path, csv.out.str());
}

void run_cusps(const std::string& input) {
  ExpandedCurve ec = expand(load_curve_spec(input));
  if (ec.support) {
    std::vector<double> locs = cusp_locations(*ec.support);
    std::cout << "count=" << locs.size() << "\n";
    for (double phi : locs) std::cout << "phi=" << format_double(phi) << "\n";
    return;
  }
  std::vector<double> locs = curve_cusp_parameters(*ec.curve);
  std::cout << "count=" << locs.size() << "\n";
  for (double t : locs) std::cout << "t=" << format_double(t) << "\n";
}

void run_gutkin(int k, bool verify, double c) {
  std::vector<GutkinRoot> roots = gutkin_roots(k);
  if (roots.empty()) {
    std::cout << "no nontrivial roots for k=" << k << "\n";
    return;
  }
  for (const GutkinRoot& r : roots) {
    std::cout << "k=" << k << " alpha=" << format_double(r.alpha.radians())
              << " residual=" << format_double(r.residual)
              << " degenerate=" << (r.degenerate ? 1 : 0);
    if (verify && !r.degenerate) {
      FourierSupport p = fattened_hypocycloid(k, c);
      std::cout << " invariant_residual="
                << format_double(verify_invariant(p, r.alpha));
    }
    std::cout << "\n";
  }
}

void run_orbit(const std::string& spec_path, double alpha_rad, int steps) {
  Angle alpha(alpha_rad);
  FourierSupport p = require_support(expand(load_curve_spec(spec_path)), "orbit");
  TorusState state = torus_state(p);
  if (state.phases.empty())
    throw std::domain_error("orbit: support has no harmonics, torus is trivial");

  std::vector<TorusState> orbit = torus_orbit(state, alpha, steps);

  std::ostringstream head;
  head << "step";
  for (const TorusPhase& ph : state.phases) head << ",theta_" << ph.k;
  std::cout << head.str() << "\n";
  for (size_t i = 0; i < orbit.size(); ++i) {
    std::cout << i;
    for (const TorusPhase& ph : orbit[i].phases)
      std::cout << "," << format_double(ph.theta);
    std::cout << "\n";
  }
  if (state.phases.size() <= 6 && orbit.size() >= 16)
    std::cout << "equidistribution_stat="
              << format_double(equidistribution_stat(orbit)) << "\n";
  else
    std::cout << "equidistribution_stat=unavailable\n";
}

void run_render(const std::string& input, const std::vector<std::string>& overlays,
                const std::string& svg_path, int samples) {
  std::vector<SvgCurve> curves;
  std::vector<Point> markers;
  add_curve_to_figure(expand(load_curve_spec(input)), samples, curves, markers);
  for (const std::string& path : overlays)
    add_curve_to_figure(expand(load_curve_spec(path)), samples, curves, markers);
  write_file_atomic(svg_path, svg_document(curves, markers));
}

void run_oracle(const std::string& input, double alpha_rad, int samples) {
  Angle alpha(alpha_rad);
  FourierSupport p = require_support(expand(load_curve_spec(input)), "oracle");
  std::cout << "oracle_deviation=" << format_double(oracle_deviation(p, alpha, samples))
            << "\n";
  std::cout << "samples=" << samples << "\n";
}

}  // namespace

int cli_run(std::vector<std::string> args) {
  CLI::App app{"Spectral toolkit for skew evolutes and involutes of hedgehog curves"};
  app.require_subcommand(1);

  double alpha = 0.0;
  int steps = 1;
  int samples = 512;
  int gutkin_k = 2;
  double gutkin_c = 0.0;
  bool gutkin_verify = false;
  std::string input, output, svg_path, csv_path, mode;
  std::vector<std::string> overlays;

  CLI::App* evolute = app.add_subcommand("evolute", "Skew evolute of a curve");
  evolute->add_option("--alpha", alpha, "Angle in radians")->required();
  evolute->add_option("--input", input)->required();
  evolute->add_option("--output", output);
  evolute->add_option("--svg", svg_path);
  evolute->add_option("--samples", samples);
  evolute->callback([&] { run_evolute(input, alpha, output, svg_path, samples); });

  CLI::App* involute = app.add_subcommand("involute", "Closed skew involute");
  involute->add_option("--alpha", alpha)->required();
  involute->add_option("--input", input)->required();
  involute->add_option("--output", output);
  involute->add_option("--svg", svg_path);
  involute->add_option("--samples", samples);
  involute->callback([&] { run_involute(input, alpha, output, svg_path, samples); });

  CLI::App* map_cmd = app.add_subcommand("map", "Iterate the integrable map, log invariants");
  map_cmd->add_option("--alpha", alpha)->required();
  map_cmd->add_option("--steps", steps);
  map_cmd->add_option("--input", input)->required();
  map_cmd->add_option("--csv", csv_path)->required();
  map_cmd->add_option("--output", output);
  map_cmd->callback([&] { run_map(input, alpha, steps, csv_path, output); });

  CLI::App* iterate_cmd = app.add_subcommand("iterate", "Iterate evolute or involute, trace shape");
  iterate_cmd->add_option("--alpha", alpha)->required();
  iterate_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember({"evolute", "involute"}));
  iterate_cmd->add_option("--steps", steps)->required();
  iterate_cmd->add_option("--input", input)->required();
  iterate_cmd->add_option("--csv", csv_path)->required();
  iterate_cmd->callback([&] { run_iterate(input, alpha, mode, steps, csv_path); });

  CLI::App* cusps_cmd = app.add_subcommand("cusps", "Cusp count and locations");
  cusps_cmd->add_option("--input", input)->required();
  cusps_cmd->callback([&] { run_cusps(input); });

  CLI::App* gutkin_cmd = app.add_subcommand("gutkin", "Roots of tan(k a) = k tan(a)");
  gutkin_cmd->add_option("--k", gutkin_k)->required();
  gutkin_cmd->add_flag("--verify", gutkin_verify, "Check the fattened hypocycloid invariance");
  gutkin_cmd->add_option("--c", gutkin_c, "Fattening constant for --verify");
  gutkin_cmd->callback([&] { run_gutkin(gutkin_k, gutkin_verify, gutkin_c); });

  CLI::App* orbit_cmd = app.add_subcommand("orbit", "Torus rotation orbit of the integrable map");
  orbit_cmd->add_option("--alpha", alpha)->required();
  orbit_cmd->add_option("--steps", steps)->required();
  orbit_cmd->add_option("--spec", input)->required();
  orbit_cmd->callback([&] { run_orbit(input, alpha, steps); });

  CLI::App* render_cmd = app.add_subcommand("render", "Render curves to SVG");
  render_cmd->add_option("--input", input)->required();
  render_cmd->add_option("--svg", svg_path)->required();
  render_cmd->add_option("--samples", samples);
  render_cmd->add_option("--overlay", overlays);
  render_cmd->callback([&] { run_render(input, overlays, svg_path, samples); });

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Envelope oracle deviation");
  oracle_cmd->add_option("--alpha", alpha)->required();
  oracle_cmd->add_option("--input", input)->required();
  oracle_cmd->add_option("--samples", samples);
  oracle_cmd->callback([&] { run_oracle(input, alpha, samples); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: domain: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace hedgehog
