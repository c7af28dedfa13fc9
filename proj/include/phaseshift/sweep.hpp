#pragma once

// Grid evaluation of the phase models and the CSV / JSON row format.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phaseshift/phase_model.hpp"

namespace phaseshift {

enum class Model { Symmetric, Asymmetric, Kerr };
enum class SweepVariable { Delta, S0, S, OmegaN, Eta };
enum class Spacing { Linear, Log };

std::string_view to_string(Model m);
std::string_view to_string(SweepVariable v);
Model parse_model(std::string_view name);
SweepVariable parse_sweep_variable(std::string_view name);
Spacing parse_spacing(std::string_view name);

struct GridRange {
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
  Spacing spacing = Spacing::Linear;

  void validate() const;
  /// Inclusive grid in ascending order; log spacing is geometric.
  std::vector<double> values() const;
};

struct SweepSpec {
  Model model = Model::Symmetric;
  AsymmetricCoupling coupling;  // primed fields only used by the asymmetric model
  SweepVariable variable = SweepVariable::Delta;
  GridRange range;
  // Fixed values for everything not swept. Saturation is given either on
  // resonance (s0) or at the row's detuning (s); exactly one must be set
  // unless the sweep variable is itself s0 or s.
  double delta = 0.0;
  std::optional<double> s0;
  std::optional<double> s;

  void validate() const;
};

struct ResultRow {
  double swept = 0.0;
  double delta = 0.0;
  double s0 = 0.0;
  double s = 0.0;
  std::optional<double> phi_rad;  // empty on Boundary rows
  std::optional<double> phi_deg;
  Branch branch = Branch::Generic;
  double p_sc_over_p = 0.0;
  double coherent_fraction = 0.0;
  Model model = Model::Symmetric;
  std::optional<double> phi_kerr_rad;  // Kerr model only
  std::optional<double> phi_kerr_deg;
};

/// One grid point. Degenerate phases become Boundary rows instead of errors.
ResultRow evaluate_point(Model model, const AsymmetricCoupling& coupling, double delta, double s0, double swept);

/// Rows in ascending order of the swept variable.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

/// Reads {model, coupling, sweep:{var,start,stop,count,spacing}, fixed:{...}}.
/// Throws ErrorCode::Parse on malformed documents.
SweepSpec parse_sweep_config(std::string_view json_text);

/// Shortest round-trip is not used: every value is printed with 17
/// significant digits so output bytes depend only on the value.
std::string format_number(double x);

std::string csv_header();
std::string to_csv(const std::vector<ResultRow>& rows, const std::vector<std::string>& comments = {});
std::string to_json(const std::vector<ResultRow>& rows);

}  // namespace phaseshift
