// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgobeam/cgobeam.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace cgo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

json default_config() {
  return json{
      {"seed", 20260808},
      {"beam",
       {{"type", "cyl"},
        {"tau", 10.0},
        {"lambda", 0.5},
        {"rho", 1.0},
        {"k", 1.0},
        {"mu0", 1.0},
        {"eps0", 1.0},
        {"sigma0", 0.0},
        {"omega", 1.0},
        {"a", {-0.7071067811865475, -0.7071067811865475, 0.0}},
        {"b", {-0.7071067811865475, -0.7071067811865475, 0.0}},
        {"R", 5.0},
        {"L", 22.5}}},
      {"grid",
       {{"kind", "plane"},
        {"axis", "x1"},
        {"offset", 0.0},
        {"urange", {-2.2, 2.2}},
        {"vrange", {-2.2, 2.2}},
        {"nu", 128},
        {"nv", 128},
        {"mask_r_in", 0.0},
        {"mask_r_out", 1e300}}},
      {"output",
       {{"csv", ""},
        {"ppm", ""},
        {"field", "E"},
        {"quantity", "abs"},
        {"component", "c0"},
        {"normalization", "linear"}}}};
}

void merge_into(json& base, const json& overlay) {
  for (auto it = overlay.begin(); it != overlay.end(); ++it) {
    if (it->is_object() && base.contains(it.key()) &&
        base[it.key()].is_object()) {
      merge_into(base[it.key()], *it);
    } else {
      base[it.key()] = *it;
    }
  }
}

Vec3 vec_of(const json& a) {
  return {a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>()};
}

Quantity quantity_of(const std::string& s) {
  if (s == "re") return Quantity::Re;
  if (s == "im") return Quantity::Im;
  if (s == "abs") return Quantity::Abs;
  if (s == "abs2") return Quantity::Abs2;
  throw ParamError("unknown quantity '" + s + "'; valid: re, im, abs, abs2");
}

Component component_of(const std::string& s) {
  if (s == "c0") return Component::C0;
  if (s == "c1") return Component::C1;
  if (s == "c2") return Component::C2;
  if (s == "norm") return Component::Norm;
  throw ParamError("unknown component '" + s + "'; valid: c0, c1, c2, norm");
}

Normalization normalization_of(const std::string& s) {
  if (s == "linear") return Normalization::Linear;
  if (s == "log") return Normalization::Log;
  throw ParamError("unknown normalization '" + s + "'; valid: linear, log");
}

GridSpec grid_of(const json& g) {
  const std::string kind = g.at("kind").get<std::string>();
  if (kind == "plane" || kind == "annulus") {
    PlaneSpec p;
    const std::string axis = g.value("axis", std::string("x1"));
    if (axis == "x1")
      p.axis = 0;
    else if (axis == "x2")
      p.axis = 1;
    else if (axis == "x3")
      p.axis = 2;
    else
      throw ParamError("unknown plane axis '" + axis + "'");
    p.offset = g.value("offset", 0.0);
    p.u0 = g.at("urange").at(0).get<double>();
    p.u1 = g.at("urange").at(1).get<double>();
    p.v0 = g.at("vrange").at(0).get<double>();
    p.v1 = g.at("vrange").at(1).get<double>();
    p.nu = g.value("nu", 128);
    p.nv = g.value("nv", 128);
    p.mask_r_in = g.value("mask_r_in", 0.0);
    p.mask_r_out = g.value("mask_r_out", 1e300);
    return p;
  }
  if (kind == "sphere") {
    SphereSpec s;
    s.center = vec_of(g.at("center"));
    s.radius = g.at("radius").get<double>();
    if (g.contains("pole")) s.pole = vec_of(g.at("pole"));
    s.nu = g.value("nu", 128);
    s.nv = g.value("nv", 128);
    return s;
  }
  if (kind == "circle") {
    CircleSpec c;
    c.x1 = g.value("x1", 0.0);
    c.r = g.at("r").get<double>();
    c.ntheta = g.value("ntheta", 360);
    return c;
  }
  throw ParamError("unknown grid kind '" + kind +
                   "'; valid: plane, sphere, circle");
}

/// Field callable from the beam block; E or H selected by `field`.
MaskedField field_of(const json& beam, const std::string& field) {
  const bool wantE = field == "E";
  if (!wantE && field != "H")
    throw ParamError("unknown field '" + field + "'; valid: E, H");
  const std::string type = beam.at("type").get<std::string>();
  const double mu0 = beam.value("mu0", 1.0);
  const double eps0 = beam.value("eps0", 1.0);
  const double sigma0 = beam.value("sigma0", 0.0);
  const double omega = beam.value("omega", 1.0);

  if (type == "cyl") {
    const CylBeamParams bp = CylBeamParams::make(
        beam.value("tau", 10.0), beam.value("lambda", 0.5),
        beam.value("rho", 1.0), beam.value("k", 1.0),
        MediumProfile::constant(mu0, eps0, sigma0, omega));
    return [bp, wantE](const Vec3& x) -> std::optional<Complex3> {
      const EHPair eh = cylindrical_beam(bp, cart_cyl(x));
      return wantE ? eh.E : eh.H;
    };
  }
  if (type == "sph") {
    const SphBeamParams bp = SphBeamParams::make(
        beam.value("tau", 9.0), beam.value("lambda", 0.5),
        beam.value("rho", 1.0), MediumProfile::constant(mu0, eps0, sigma0, omega));
    return [bp, wantE](const Vec3& x) -> std::optional<Complex3> {
      const EHPair eh = spherical_beam(bp, cart_cyl(x));
      return wantE ? eh.E : eh.H;
    };
  }
  if (type == "kelvin" || type == "virtual") {
    VirtualBeamParams vp = VirtualBeamParams::make(
        beam.value("tau", 4.0), beam.value("rho", std::sqrt(7.0)),
        vec_of(beam.at("a")), vec_of(beam.at("b")), beam.value("R", 5.0));
    vp.mu0 = mu0;
    vp.eps0 = eps0;
    vp.sigma0 = sigma0;
    vp.omega = omega;
    if (beam.contains("L")) vp.L = beam.at("L").get<double>();
    const KelvinMap km{vp.R};
    if (type == "virtual") {
      return [vp, wantE](const Vec3& xt) -> std::optional<Complex3> {
        if (!vp.in_annulus(xt)) return std::nullopt;  // cutoff region
        const VirtualFields vf = virtual_beam(vp, xt);
        return wantE ? vf.e : vf.h;
      };
    }
    return [vp, km, wantE](const Vec3& x) -> std::optional<Complex3> {
      if (!vp.in_annulus(km.apply(x))) return std::nullopt;
      const EHPair eh = physical_beam(vp, km, x);
      return wantE ? eh.E : eh.H;
    };
  }
  throw ParamError("unknown beam type '" + type +
                   "'; valid: cyl, sph, kelvin, virtual");
}

void print_resolved(const json& cfg) {
  std::cout << "resolved config:\n" << cfg.dump(2) << "\n";
  std::cout << "seed: " << cfg.value("seed", 0) << "\n";
}

int cmd_eval(const json& cfg) {
  print_resolved(cfg);
  const json& out = cfg.at("output");
  const MaskedField field =
      field_of(cfg.at("beam"), out.value("field", std::string("E")));
  FieldRaster raster = sample_grid(grid_of(cfg.at("grid")), field);

  raster.meta["seed"] = std::to_string(cfg.value("seed", 0));
  raster.meta["config"] = cfg.dump();

  const std::string csv = out.value("csv", std::string{});
  const std::string ppm = out.value("ppm", std::string{});
  if (csv.empty() && ppm.empty())
    throw ParamError("output.csv and output.ppm are both empty");
  for (const std::string& p : {csv, ppm}) {
    if (p.empty()) continue;
    const auto parent = std::filesystem::path(p).parent_path();
    if (!parent.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(parent, ec);
    }
  }
  if (!csv.empty()) {
    export_csv(raster, csv);
    std::cout << "wrote " << csv << "\n";
  }
  if (!ppm.empty()) {
    render_pixmap(raster, quantity_of(out.value("quantity", std::string("abs"))),
                  component_of(out.value("component", std::string("c0"))),
                  normalization_of(out.value("normalization", std::string("linear"))),
                  ppm);
    std::cout << "wrote " << ppm << " (+sidecar)\n";
  }
  std::cout << "points: ok=" << raster.count(PointStatus::Ok)
            << " masked=" << raster.count(PointStatus::Masked)
            << " missing=" << raster.count(PointStatus::Missing) << "\n";
  return kExitOk;
}

int run_suites(const std::vector<std::string>& names, const std::string& outdir,
               std::uint64_t seed) {
  bool all_pass = true;
  for (const std::string& name : names) {
    std::vector<CheckResult> results;
    if (name == "eikonal")
      results = eikonal_suite(seed);
    else if (name == "transport")
      results = transport_suite(seed);
    else if (name == "lcw")
      results = lcw_suite(seed);
    else if (name == "dirac")
      results = dirac_suite(seed);
    else if (name == "kelvin")
      results = kelvin_suite(seed);
    else if (name == "residual")
      results = residual_suite(seed);
    else if (name == "nondiffraction")
      results = nondiffraction_suite(seed);
    else if (name == "figures")
      results = figures_suite(outdir, seed);
    else if (name == "determinism")
      results = determinism_suite(outdir, seed);
    else
      throw ParamError("unknown suite '" + name +
                       "'; valid: eikonal, transport, lcw, dirac, kelvin, "
                       "residual, nondiffraction, figures, determinism, all");

    std::printf("suite %s\n", name.c_str());
    for (const CheckResult& r : results) {
      all_pass = all_pass && r.pass();
      std::printf("  [%s] %-55s  value %.6g %s threshold %.6g\n",
                  r.pass() ? "PASS" : "FAIL", r.name.c_str(), r.value,
                  r.want_less ? "<" : ">", r.threshold);
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const std::string& beam, const std::vector<double>& taus,
              int samples, std::uint64_t seed, const std::string& out_csv) {
  using namespace checks_detail;
  std::function<BeamFields(double)> family;
  std::vector<Vec3> pts;
  if (beam == "cyl") {
    family = [](double tau) { return cyl_beam_fields(tau, 1.0); };
    pts = cyl_points(samples, seed);
  } else if (beam == "kelvin") {
    family = [](double tau) { return physical_beam_fields(tau); };
    pts = annulus_points(samples, seed, KelvinMap{5.0});
  } else if (beam == "planewave") {
    family = [](double) { return plane_wave_fields(2.0); };
    pts = cyl_points(samples, seed);
  } else {
    throw ParamError("unknown beam '" + beam +
                     "'; valid: cyl, kelvin, planewave");
  }
  const ScalingResult res = scaling_study(family, taus, pts);
  std::printf("%10s %16s %16s %9s\n", "tau", "median_rel", "p90_rel", "fail");
  for (const ScalingRow& row : res.rows)
    std::printf("%10.4g %16.6e %16.6e %9d\n", row.tau, row.median_relative,
                row.p90_relative, row.failures);
  std::printf("fitted log-log slope: %.4f\n", res.slope);
  if (!out_csv.empty()) {
    std::ofstream f(out_csv);
    f << "tau,median_relative,p90_relative,failures\n";
    for (const ScalingRow& row : res.rows)
      f << row.tau << ',' << row.median_relative << ',' << row.p90_relative
        << ',' << row.failures << '\n';
    std::cout << "wrote " << out_csv << "\n";
  }
  return kExitOk;
}

int cmd_render(const std::string& in, const std::string& out,
               const std::string& quantity, const std::string& component,
               const std::string& normalization) {
  print_resolved(json{{"in", in},
                      {"out", out},
                      {"quantity", quantity},
                      {"component", component},
                      {"normalization", normalization},
                      {"seed", 0}});
  const CsvTable table = parse_csv(in);
  if (table.rows.empty()) throw IoError("no data rows in '" + in + "'");
  // infer the grid shape from the row-major ordering: u is constant along
  // each row block
  std::vector<double> us;
  for (const auto& row : table.rows)
    if (us.empty() || row[0] != us.back()) us.push_back(row[0]);
  const int nu = static_cast<int>(us.size());
  const int nv = static_cast<int>(table.rows.size()) / std::max(1, nu);
  if (nu * nv != static_cast<int>(table.rows.size()))
    throw IoError("'" + in + "' rows do not form a rectangular grid");

  FieldRaster raster;
  PlaneSpec dummy;
  dummy.nu = nu;
  dummy.nv = nv;
  raster.grid = dummy;
  raster.nu = nu;
  raster.nv = nv;
  raster.us = us;
  for (int j = 0; j < nv; ++j) raster.vs.push_back(table.rows[j][1]);
  raster.values.resize(table.rows.size());
  raster.status.resize(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    bool ok = true;
    for (int c = 5; c < 11; ++c) ok = ok && std::isfinite(row[c]);
    raster.status[i] = ok ? PointStatus::Ok : PointStatus::Missing;
    if (ok)
      raster.values[i] = Complex3{complexd(row[5], row[6]),
                                  complexd(row[7], row[8]),
                                  complexd(row[9], row[10])};
  }
  for (const std::string& c : table.comments)
    raster.meta["source_comment_" + std::to_string(raster.meta.size())] = c;
  raster.meta["source_csv"] = in;

  render_pixmap(raster, quantity_of(quantity), component_of(component),
                normalization_of(normalization), out);
  std::cout << "wrote " << out << " (+sidecar)\n";
  return kExitOk;
}

int cmd_figures(const std::string& which, const std::string& outdir,
                std::uint64_t seed, double rho, int resolution) {
  FigureOptions opt;
  opt.seed = seed;
  opt.fig1_rho = rho;
  opt.resolution = resolution;
  json cfg{{"which", which}, {"outdir", outdir},     {"seed", seed},
           {"rho", rho},     {"resolution", resolution}};
  print_resolved(cfg);
  const auto all = run_figures(which, outdir, opt);
  for (const auto& [name, res] : all) {
    std::printf("%s:\n", name.c_str());
    for (const auto& f : res.files) std::printf("  wrote %s\n", f.c_str());
    for (const auto& [k, v] : res.metrics)
      std::printf("  metric %-22s %.9g\n", k.c_str(), v);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction and numerical verification of accelerating "
               "electromagnetic beams"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "sample a beam on a grid");
  std::string eval_config;
  double ov_tau = -1, ov_lambda = -1e300, ov_rho = -1e300, ov_k = -1e300;
  std::int64_t ov_seed = -1;
  std::string ov_csv, ov_ppm, ov_quantity, ov_component;
  eval->add_option("--config", eval_config, "JSON config file");
  eval->add_option("--tau", ov_tau, "override beam.tau");
  eval->add_option("--lambda", ov_lambda, "override beam.lambda");
  eval->add_option("--rho", ov_rho, "override beam.rho");
  eval->add_option("--k", ov_k, "override beam.k");
  eval->add_option("--seed", ov_seed, "override seed");
  eval->add_option("--csv", ov_csv, "override output.csv");
  eval->add_option("--ppm", ov_ppm, "override output.ppm");
  eval->add_option("--quantity", ov_quantity, "override output.quantity");
  eval->add_option("--component", ov_component, "override output.component");

  // verify
  auto* verify = app.add_subcommand("verify", "run a named check suite");
  std::string suite = "all";
  std::string verify_outdir = "cgobeam-out";
  std::uint64_t verify_seed = kDefaultSeed;
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--outdir", verify_outdir, "directory for figure suites");
  verify->add_option("--seed", verify_seed, "sample seed");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "residual scaling over tau");
  std::string sweep_beam = "cyl";
  std::vector<double> sweep_taus;
  int sweep_samples = 40;
  std::uint64_t sweep_seed = kDefaultSeed;
  std::string sweep_out;
  sweep->add_option("--beam", sweep_beam, "cyl, kelvin, or planewave");
  sweep->add_option("--taus", sweep_taus, "tau values (comma separated)")
      ->delimiter(',');
  sweep->add_option("--samples", sweep_samples, "sample points per tau");
  sweep->add_option("--seed", sweep_seed, "sample seed");
  sweep->add_option("--out", sweep_out, "optional CSV destination");

  // render
  auto* render = app.add_subcommand("render", "re-render an exported CSV");
  std::string render_in, render_out;
  std::string render_q = "abs", render_c = "c0", render_n = "linear";
  render->add_option("--in", render_in, "input CSV")->required();
  render->add_option("--out", render_out, "output pixmap")->required();
  render->add_option("--quantity", render_q, "re, im, abs, abs2");
  render->add_option("--component", render_c, "c0, c1, c2, norm");
  render->add_option("--normalization", render_n, "linear or log");

  // figures
  auto* figures = app.add_subcommand("figures", "reproduce the figure presets");
  std::string fig_which = "all";
  std::string fig_outdir = "cgobeam-out";
  std::uint64_t fig_seed = kDefaultSeed;
  double fig_rho = 1.0;
  int fig_resolution = 128;
  figures->add_option("--which", fig_which, "fig1, fig2, fig4, or all");
  figures->add_option("--outdir", fig_outdir, "output directory");
  figures->add_option("--seed", fig_seed, "seed recorded in provenance");
  figures->add_option("--rho", fig_rho, "angular frequency of the profile");
  figures->add_option("--resolution", fig_resolution, "grid resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      json cfg = default_config();
      if (!eval_config.empty()) {
        std::ifstream f(eval_config);
        if (!f) throw IoError("cannot open config '" + eval_config + "'");
        json user;
        f >> user;
        merge_into(cfg, user);
      }
      if (ov_tau > 0) cfg["beam"]["tau"] = ov_tau;
      if (ov_lambda != -1e300) cfg["beam"]["lambda"] = ov_lambda;
      if (ov_rho != -1e300) cfg["beam"]["rho"] = ov_rho;
      if (ov_k != -1e300) cfg["beam"]["k"] = ov_k;
      if (ov_seed >= 0) cfg["seed"] = ov_seed;
      if (!ov_csv.empty()) cfg["output"]["csv"] = ov_csv;
      if (!ov_ppm.empty()) cfg["output"]["ppm"] = ov_ppm;
      if (!ov_quantity.empty()) cfg["output"]["quantity"] = ov_quantity;
      if (!ov_component.empty()) cfg["output"]["component"] = ov_component;
      return cmd_eval(cfg);
    }
    if (verify->parsed()) {
      std::vector<std::string> names;
      if (suite == "all")
        names = {"eikonal", "transport",      "lcw",     "dirac",      "kelvin",
                 "residual", "nondiffraction", "figures", "determinism"};
      else
        names = {suite};
      std::printf("seed: %llu\n", static_cast<unsigned long long>(verify_seed));
      return run_suites(names, verify_outdir, verify_seed);
    }
    if (sweep->parsed()) {
      if (sweep_taus.empty()) sweep_taus = {10.0, 20.0, 40.0, 80.0};
      std::printf("seed: %llu\n", static_cast<unsigned long long>(sweep_seed));
      return cmd_sweep(sweep_beam, sweep_taus, sweep_samples, sweep_seed,
                       sweep_out);
    }
    if (render->parsed())
      return cmd_render(render_in, render_out, render_q, render_c, render_n);
    if (figures->parsed())
      return cmd_figures(fig_which, fig_outdir, fig_seed, fig_rho,
                         fig_resolution);
  } catch (const ParamError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
