// phaseshift command-line front end. Talks to the library through the C API only.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "phaseshift/phaseshift.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

int exit_code(ps_status status) {
  switch (status) {
    case PS_OK: return kExitOk;
    case PS_ERR_USAGE:
    case PS_ERR_PARSE:
    case PS_ERR_NULL_ARGUMENT: return kExitUsage;
    default: return kExitDomain;
  }
}

int report(ps_status status) {
  std::cerr << "phaseshift: " << ps_status_name(status) << ": " << ps_last_error_message() << "\n";
  return exit_code(status);
}

struct UsageError {
  std::string message;
};

ps_format parse_format(const std::string& name) {
  if (name == "csv") return PS_FORMAT_CSV;
  if (name == "json") return PS_FORMAT_JSON;
  throw UsageError{"unknown format '" + name + "'"};
}

ps_model parse_model(const std::string& name) {
  if (name == "symmetric") return PS_MODEL_SYMMETRIC;
  if (name == "asymmetric") return PS_MODEL_ASYMMETRIC;
  if (name == "kerr") return PS_MODEL_KERR;
  throw UsageError{"unknown model '" + name + "'"};
}

// flattop | matched | doughnut:<w> | doughnut:auto
ps_profile parse_profile(const std::string& spec) {
  if (spec == "flattop") return {PS_PROFILE_FLATTOP, 0.0};
  if (spec == "matched") return {PS_PROFILE_MATCHED, 0.0};
  const std::string prefix = "doughnut:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string arg = spec.substr(prefix.size());
    if (arg == "auto") return {PS_PROFILE_DOUGHNUT_OPTIMAL, 0.0};
    std::istringstream in(arg);
    in.imbue(std::locale::classic());
    double w = 0.0;
    if (in >> w && in.peek() == EOF) return {PS_PROFILE_DOUGHNUT, w};
  }
  throw UsageError{"unknown profile '" + spec + "' (expected flattop, matched, doughnut:<w> or doughnut:auto)"};
}

int emit_table(ps_table* table, ps_format format, bool degenerate_is_error) {
  const char* text = nullptr;
  const ps_status st = ps_table_render(table, format, &text);
  if (st != PS_OK) {
    ps_table_free(table);
    return report(st);
  }
  std::cout << text;
  int code = kExitOk;
  if (degenerate_is_error) {
    ps_row row{};
    if (ps_table_row(table, 0, &row) == PS_OK && row.branch == PS_BRANCH_BOUNDARY) {
      std::cerr << "phaseshift: degenerate result: phase undefined at this point\n";
      code = kExitDomain;
    }
  }
  ps_table_free(table);
  return code;
}

void print_json(const nlohmann::ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

struct EvalArgs {
  std::string model = "symmetric";
  ps_coupling coupling{1.0, 1.0, 1.0, 1.0, 1.0};
  double delta = 0.0;
  double s0 = 0.0;
  std::string format = "csv";
};

struct SweepArgs {
  std::string config;
  std::string format = "csv";
};

struct FigureArgs {
  std::string name;
  std::string out_dir = ".";
};

struct ConeArgs {
  double alpha = 0.0;
  std::string orientation = "axial";
  std::string profile;
};

struct MirrorArgs {
  ps_mirror mirror{1.0, 1.0, 0.0};
  std::string profile = "flattop";
};

int run_eval(const EvalArgs& a, CLI::App& cmd) {
  const ps_model model = parse_model(a.model);
  const bool has_primed = cmd.count("--omega-n-prime") && cmd.count("--eta-prime") && cmd.count("--p");
  if (model == PS_MODEL_ASYMMETRIC && !has_primed) {
    throw UsageError{"asymmetric model needs --omega-n-prime, --eta-prime and --p"};
  }
  ps_table* table = nullptr;
  const ps_status st = ps_eval(model, &a.coupling, a.delta, a.s0, &table);
  if (st != PS_OK) return report(st);
  return emit_table(table, parse_format(a.format), true);
}

int run_sweep(const SweepArgs& a) {
  const ps_format format = parse_format(a.format);
  std::ifstream in(a.config, std::ios::binary);
  if (!in) throw UsageError{"cannot read config file '" + a.config + "'"};
  std::stringstream buf;
  buf << in.rdbuf();
  ps_table* table = nullptr;
  const ps_status st = ps_sweep_from_json(buf.str().c_str(), &table);
  if (st != PS_OK) return report(st);
  return emit_table(table, format, false);
}

int run_figures(const FigureArgs& a) {
  ps_figure* fig = nullptr;
  const ps_status st = ps_figure_create(a.name.c_str(), &fig);
  if (st != PS_OK) return report(st);

  std::error_code ec;
  std::filesystem::create_directories(a.out_dir, ec);
  int code = kExitOk;
  for (std::size_t i = 0; i < ps_figure_series_count(fig); ++i) {
    const std::filesystem::path path = std::filesystem::path(a.out_dir) / (std::string(ps_figure_series_name(fig, i)) + ".csv");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << ps_figure_series_csv(fig, i);
    if (!out) {
      std::cerr << "phaseshift: cannot write '" << path.string() << "'\n";
      code = kExitUsage;
      break;
    }
    std::cout << path.string() << "\n";
  }
  ps_figure_free(fig);
  return code;
}

int run_cone(const ConeArgs& a) {
  ps_dipole_orientation orientation;
  if (a.orientation == "axial") {
    orientation = PS_DIPOLE_AXIAL;
  } else if (a.orientation == "transverse") {
    orientation = PS_DIPOLE_TRANSVERSE;
  } else {
    throw UsageError{"unknown orientation '" + a.orientation + "'"};
  }
  nlohmann::ordered_json doc;
  double omega_n = 0.0;
  ps_status st = ps_cone_weighted_solid_angle(a.alpha, orientation, &omega_n);
  if (st != PS_OK) return report(st);
  doc["omega_n"] = omega_n;
  if (!a.profile.empty()) {
    const ps_profile profile = parse_profile(a.profile);
    double eta = 0.0;
    st = ps_cone_overlap(a.alpha, orientation, &profile, &eta);
    if (st != PS_OK) return report(st);
    doc["eta"] = eta;
  }
  print_json(doc);
  return kExitOk;
}

int run_mirror(const MirrorArgs& a) {
  const ps_profile profile = parse_profile(a.profile);
  ps_mirror_report r{};
  const ps_status st = ps_mirror_geometry(&a.mirror, &profile, &r);
  if (st != PS_OK) return report(st);
  nlohmann::ordered_json doc;
  doc["omega_n"] = r.omega_n;
  doc["eta"] = r.eta;
  if (r.has_recollimation) {
    doc["omega_n_prime"] = r.omega_n_prime;
    doc["eta_prime"] = r.eta_prime;
    doc["p"] = r.p;
  } else {
    doc["omega_n_prime"] = nullptr;
    doc["eta_prime"] = nullptr;
    doc["p"] = 0.0;
  }
  if (profile.kind == PS_PROFILE_DOUGHNUT || profile.kind == PS_PROFILE_DOUGHNUT_OPTIMAL) doc["waist"] = r.waist;
  print_json(doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase shift imprinted by a single two-level atom on a focused coherent beam"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate one parameter point");
  eval->add_option("--model", eval_args.model, "symmetric | asymmetric | kerr")->capture_default_str();
  eval->add_option("--omega-n", eval_args.coupling.omega_n, "dipole-weighted solid-angle fraction")->required();
  eval->add_option("--eta", eval_args.coupling.eta, "mode overlap")->required();
  eval->add_option("--omega-n-prime", eval_args.coupling.omega_n_prime, "collection solid-angle fraction");
  eval->add_option("--eta-prime", eval_args.coupling.eta_prime, "collection mode overlap");
  eval->add_option("--p", eval_args.coupling.p, "re-collimated power fraction");
  eval->add_option("--delta", eval_args.delta, "detuning in linewidths")->required();
  eval->add_option("--s0", eval_args.s0, "on-resonance saturation parameter")->required();
  eval->add_option("--format", eval_args.format, "csv | json")->capture_default_str();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "evaluate a parameter sweep described by a JSON file");
  sweep->add_option("--config", sweep_args.config, "sweep configuration file")->required();
  sweep->add_option("--format", sweep_args.format, "csv | json")->capture_default_str();

  FigureArgs figure_args;
  auto* figures = app.add_subcommand("figures", "write the data series of a figure preset as CSV files");
  figures->add_option("--name", figure_args.name, "fig2 | fig3 | fig4 | fig5")->required();
  figures->add_option("--out", figure_args.out_dir, "output directory")->capture_default_str();

  auto* geometry = app.add_subcommand("geometry", "coupling parameters of a focusing geometry");
  geometry->require_subcommand(1);
  ConeArgs cone_args;
  auto* cone = geometry->add_subcommand("cone", "lens cone of half-angle alpha");
  cone->add_option("--alpha", cone_args.alpha, "half-angle in radians")->required();
  cone->add_option("--orientation", cone_args.orientation, "axial | transverse")->capture_default_str();
  cone->add_option("--profile", cone_args.profile, "flattop | matched | doughnut:<w> (w in radians)");
  MirrorArgs mirror_args;
  auto* mirror = geometry->add_subcommand("mirror", "deep parabolic mirror");
  mirror->add_option("--f", mirror_args.mirror.focal_length, "focal length")->required();
  mirror->add_option("--R", mirror_args.mirror.aperture_radius, "aperture radius")->required();
  mirror->add_option("--hole", mirror_args.mirror.hole_radius, "radius of the central hole")->capture_default_str();
  mirror->add_option("--profile", mirror_args.profile, "flattop | matched | doughnut:<w> | doughnut:auto")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return run_eval(eval_args, *eval);
    if (*sweep) return run_sweep(sweep_args);
    if (*figures) return run_figures(figure_args);
    if (*cone) return run_cone(cone_args);
    if (*mirror) return run_mirror(mirror_args);
  } catch (const UsageError& e) {
    std::cerr << "phaseshift: usage error: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
