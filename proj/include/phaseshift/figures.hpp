#pragma once

// Parameter sets behind the standard phase-shift plots, as sweep bundles.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phaseshift/sweep.hpp"

namespace phaseshift {

/// On-resonance branch over a grid of 2-D (omega_n eta^2, s0) points.
struct BranchGridSpec {
  GridRange coupling_strength;  // omega_n eta^2, evaluated with eta = 1
  GridRange s0;
};

struct BranchGridRow {
  double omega_eta2;
  double s0;
  Branch branch;
};

std::vector<BranchGridRow> run_branch_grid(const BranchGridSpec& spec);
std::string to_csv(const std::vector<BranchGridRow>& rows, const std::vector<std::string>& comments = {});

struct PresetSeries {
  std::string name;  // e.g. "solid"
  std::vector<std::string> comments;
  std::variant<SweepSpec, BranchGridSpec> spec;
};

struct FigurePreset {
  std::string name;  // fig2 .. fig5
  std::vector<PresetSeries> series;
};

std::vector<std::string> figure_names();

/// Throws ErrorCode::Usage for unknown names.
FigurePreset figure_preset(std::string_view name);

struct FigureOutput {
  std::string file_stem;  // "<preset>-<series>"
  std::string csv;
};

std::vector<FigureOutput> render_figure(const FigurePreset& preset);

}  // namespace phaseshift
