#include "phaseshift/figures.hpp"

#include <cmath>

#include "phaseshift/error.hpp"

namespace phaseshift {

namespace {

PresetSeries delta_series(std::string name, Model model, AsymmetricCoupling c, double s0, GridRange range,
                          std::string caption) {
  SweepSpec spec;
  spec.model = model;
  spec.coupling = c;
  spec.variable = SweepVariable::Delta;
  spec.range = range;
  spec.s0 = s0;
  return {std::move(name), {std::move(caption)}, spec};
}

PresetSeries kerr_series(std::string name, double delta) {
  SweepSpec spec;
  spec.model = Model::Kerr;
  spec.coupling = AsymmetricCoupling::collapsed({0.94, 0.98});
  spec.variable = SweepVariable::S;
  spec.range = {0.0, 0.5, 201, Spacing::Linear};
  spec.delta = delta;
  return {std::move(name),
          {"omega_n = 0.94, eta = 0.98, delta = " + format_number(delta),
           "abscissa: s, the saturation parameter at this detuning; s0 = s (1 + 4 delta^2)",
           "range: s in [0, 0.5], 201 points"},
          spec};
}

FigurePreset fig2() {
  const GridRange range{-5.0, 0.0, 501, Spacing::Linear};
  const AsymmetricCoupling mirror{0.94, 0.98, 0.88, 0.99, 0.97};
  return {"fig2",
          {delta_series("solid", Model::Symmetric, AsymmetricCoupling::collapsed({1.0, 1.0}), 0.0, range,
                        "omega_n = eta = 1, s0 = 0"),
           delta_series("dashed", Model::Symmetric, AsymmetricCoupling::collapsed({0.38, 1.0}), 0.0, range,
                        "omega_n = 0.38, eta = 1, s0 = 0"),
           delta_series("dotted", Model::Asymmetric, mirror, 0.1, range,
                        "omega_n = 0.94, eta = 0.98, omega_n' = 0.88, eta' = 0.99, p = 0.97, s0 = 0.1"),
           delta_series("dashdotted", Model::Asymmetric, mirror, 10.0, range,
                        "omega_n = 0.94, eta = 0.98, omega_n' = 0.88, eta' = 0.99, p = 0.97, s0 = 10")}};
}

FigurePreset fig3() {
  BranchGridSpec grid{{0.0, 1.0, 101, Spacing::Linear}, {0.0, 1.0, 101, Spacing::Linear}};
  return {"fig3",
          {{"grid",
            {"on-resonance branch over omega_n eta^2 in [0, 1] x s0 in [0, 1], 101 x 101 points",
             "pi iff 2 omega_n eta^2 > (1 + s0)^(3/2)"},
            grid}}};
}

FigurePreset fig4() {
  const GridRange range{-0.02, 0.0, 1001, Spacing::Linear};
  const double threshold = std::cbrt(4.0) - 1.0;
  const auto sym = [](double omega_n) { return AsymmetricCoupling::collapsed({omega_n, 1.0}); };
  return {"fig4",
          {delta_series("solid", Model::Symmetric, sym(0.5 + 1e-4), 0.0, range, "omega_n = 0.5 + 1e-4, eta = 1, s0 = 0"),
           delta_series("dashed", Model::Symmetric, sym(0.5 - 1e-4), 0.0, range, "omega_n = 0.5 - 1e-4, eta = 1, s0 = 0"),
           delta_series("dotted", Model::Symmetric, sym(1.0), threshold - 1e-5, range,
                        "omega_n = eta = 1, s0 = 4^(1/3) - 1 - 1e-5"),
           delta_series("dashdotted", Model::Symmetric, sym(1.0), threshold + 1e-5, range,
                        "omega_n = eta = 1, s0 = 4^(1/3) - 1 + 1e-5")}};
}

FigurePreset fig5() { return {"fig5", {kerr_series("left", -10.0), kerr_series("right", -50.0)}}; }

}  // namespace

std::vector<BranchGridRow> run_branch_grid(const BranchGridSpec& spec) {
  std::vector<BranchGridRow> rows;
  const auto strengths = spec.coupling_strength.values();
  const auto saturations = spec.s0.values();
  rows.reserve(strengths.size() * saturations.size());
  for (const double x : strengths) {
    for (const double s0 : saturations) {
      rows.push_back({x, s0, resonance_branch({x, 1.0}, s0)});
    }
  }
  return rows;
}

std::string to_csv(const std::vector<BranchGridRow>& rows, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "omega_eta2,s0,branch\n";
  for (const auto& r : rows) {
    out += format_number(r.omega_eta2) + ',' + format_number(r.s0) + ',' + std::string(to_string(r.branch)) + '\n';
  }
  return out;
}

std::vector<std::string> figure_names() { return {"fig2", "fig3", "fig4", "fig5"}; }

FigurePreset figure_preset(std::string_view name) {
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3();
  if (name == "fig4") return fig4();
  if (name == "fig5") return fig5();
  fail(ErrorCode::Usage, "unknown figure preset '" + std::string(name) + "'");
}

std::vector<FigureOutput> render_figure(const FigurePreset& preset) {
  std::vector<FigureOutput> out;
  for (const auto& series : preset.series) {
    std::vector<std::string> comments{"preset: " + preset.name, "series: " + series.name};
    comments.insert(comments.end(), series.comments.begin(), series.comments.end());
    std::string csv;
    if (const auto* sweep = std::get_if<SweepSpec>(&series.spec)) {
      csv = to_csv(run_sweep(*sweep), comments);
    } else {
      csv = to_csv(run_branch_grid(std::get<BranchGridSpec>(series.spec)), comments);
    }
    out.push_back({preset.name + "-" + series.name, std::move(csv)});
  }
  return out;
}

}  // namespace phaseshift
