#include "phaseshift/sweep.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <numbers>
#include <set>
#include <sstream>
#include <system_error>

#include "phaseshift/atom_response.hpp"
#include "phaseshift/error.hpp"

namespace phaseshift {

namespace {

using nlohmann::json;

constexpr double kDegreesPerRadian = 180.0 / std::numbers::pi;

double degrees(double rad) { return rad * kDegreesPerRadian; }

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorCode::Parse, "sweep config: " + what); }

double number_field(const json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number()) parse_error(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

std::string string_field(const json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_string()) parse_error(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const char* where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) parse_error("unknown key '" + key + "' in " + where);
  }
}

const json& object_field(const json& obj, const char* key) {
  if (!obj.contains(key)) parse_error(std::string("missing '") + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_object()) parse_error(std::string("'") + key + "' must be an object");
  return v;
}

}  // namespace

std::string_view to_string(Model m) {
  switch (m) {
    case Model::Symmetric: return "symmetric";
    case Model::Asymmetric: return "asymmetric";
    case Model::Kerr: return "kerr";
  }
  return "symmetric";
}

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::Delta: return "delta";
    case SweepVariable::S0: return "s0";
    case SweepVariable::S: return "s";
    case SweepVariable::OmegaN: return "omega_n";
    case SweepVariable::Eta: return "eta";
  }
  return "delta";
}

Model parse_model(std::string_view name) {
  if (name == "symmetric") return Model::Symmetric;
  if (name == "asymmetric") return Model::Asymmetric;
  if (name == "kerr") return Model::Kerr;
  fail(ErrorCode::Usage, "unknown model '" + std::string(name) + "'");
}

SweepVariable parse_sweep_variable(std::string_view name) {
  if (name == "delta") return SweepVariable::Delta;
  if (name == "s0") return SweepVariable::S0;
  if (name == "s") return SweepVariable::S;
  if (name == "omega_n") return SweepVariable::OmegaN;
  if (name == "eta") return SweepVariable::Eta;
  fail(ErrorCode::Usage, "unknown sweep variable '" + std::string(name) + "'");
}

Spacing parse_spacing(std::string_view name) {
  if (name == "linear") return Spacing::Linear;
  if (name == "log") return Spacing::Log;
  fail(ErrorCode::Usage, "unknown spacing '" + std::string(name) + "'");
}

void GridRange::validate() const {
  if (count < 2) fail(ErrorCode::Usage, "sweep count must be at least 2");
  if (!std::isfinite(start) || !std::isfinite(stop)) fail(ErrorCode::Usage, "sweep endpoints must be finite");
  if (start == stop) fail(ErrorCode::Usage, "sweep start and stop must differ");
  if (spacing == Spacing::Log && !(start > 0.0 && stop > 0.0)) {
    fail(ErrorCode::Usage, "log spacing requires positive endpoints");
  }
}

std::vector<double> GridRange::values() const {
  validate();
  const double lo = std::min(start, stop);
  const double hi = std::max(start, stop);
  const int last = count - 1;
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i <= last; ++i) {
    const double t = static_cast<double>(i) / last;
    out[i] = spacing == Spacing::Linear ? lo + (hi - lo) * t : lo * std::pow(hi / lo, t);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

void SweepSpec::validate() const {
  range.validate();
  const bool sweeps_saturation = variable == SweepVariable::S0 || variable == SweepVariable::S;
  if (sweeps_saturation) {
    if (s0 || s) fail(ErrorCode::Usage, "saturation is swept; do not also fix s0 or s");
  } else if (s0.has_value() == s.has_value()) {
    fail(ErrorCode::Usage, "fix exactly one of s0 or s");
  }
  if (s0 && !(*s0 >= 0.0)) fail(ErrorCode::Domain, "s0 must be non-negative");
  if (s && !(*s >= 0.0)) fail(ErrorCode::Domain, "s must be non-negative");

  // swept coupling fields are overwritten per row, so only check the rest
  AsymmetricCoupling probe = coupling;
  if (variable == SweepVariable::OmegaN) probe.omega_n = 1.0;
  if (variable == SweepVariable::Eta) probe.eta = 1.0;
  if (model == Model::Asymmetric) {
    probe.validate();
  } else {
    probe.focusing().validate();
  }
}

ResultRow evaluate_point(Model model, const AsymmetricCoupling& coupling, double delta, double s0, double swept) {
  ResultRow row;
  row.swept = swept;
  row.delta = delta;
  row.s0 = s0;
  row.s = saturation_at_detuning(s0, delta);
  row.model = model;

  const PhaseResult r = model == Model::Asymmetric ? phase_components_asymmetric(coupling, delta, s0)
                                                   : phase_components_symmetric(coupling.focusing(), delta, s0);
  row.branch = r.branch;
  if (r.branch != Branch::Boundary) {
    row.phi_rad = r.phi;
    row.phi_deg = degrees(r.phi);
  }
  row.p_sc_over_p = scattered_power_ratio(coupling.omega_n, coupling.eta, delta, s0);
  row.coherent_fraction = coherent_fraction(row.s);

  if (model == Model::Kerr) {
    try {
      const double phi = kerr_phase(kerr_linear_phase(coupling.focusing(), delta), row.s);
      row.phi_kerr_rad = phi;
      row.phi_kerr_deg = degrees(phi);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Pole) throw;
    }
  }
  return row;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> grid = spec.range.values();
  std::vector<ResultRow> rows;
  rows.reserve(grid.size());
  for (const double v : grid) {
    AsymmetricCoupling c = spec.coupling;
    double delta = spec.delta;
    double s0 = 0.0;
    switch (spec.variable) {
      case SweepVariable::Delta: delta = v; break;
      case SweepVariable::OmegaN: c.omega_n = v; break;
      case SweepVariable::Eta: c.eta = v; break;
      case SweepVariable::S0: s0 = v; break;
      case SweepVariable::S: s0 = v * (1.0 + 4.0 * delta * delta); break;
    }
    if (spec.variable != SweepVariable::S0 && spec.variable != SweepVariable::S) {
      s0 = spec.s0 ? *spec.s0 : *spec.s * (1.0 + 4.0 * delta * delta);
    }
    rows.push_back(evaluate_point(spec.model, c, delta, s0, v));
  }
  return rows;
}

SweepSpec parse_sweep_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    parse_error(e.what());
  }
  if (!doc.is_object()) parse_error("top level must be an object");

  try {
    reject_unknown_keys(doc, {"model", "coupling", "sweep", "fixed"}, "top level");
    SweepSpec spec;
    if (!doc.contains("model")) parse_error("missing 'model'");
    spec.model = parse_model(string_field(doc, "model"));

    const json& sweep = object_field(doc, "sweep");
    reject_unknown_keys(sweep, {"var", "start", "stop", "count", "spacing"}, "'sweep'");
    spec.variable = parse_sweep_variable(string_field(sweep, "var"));
    spec.range.start = number_field(sweep, "start");
    spec.range.stop = number_field(sweep, "stop");
    if (!sweep.at("count").is_number_integer()) parse_error("'count' must be an integer");
    spec.range.count = sweep.at("count").get<int>();
    if (sweep.contains("spacing")) spec.range.spacing = parse_spacing(string_field(sweep, "spacing"));

    // coupling fields may sit under "coupling" or "fixed"
    const std::set<std::string> coupling_keys{"omega_n", "eta", "omega_n_prime", "eta_prime", "p"};
    json merged = json::object();
    if (doc.contains("coupling")) {
      const json& coupling = object_field(doc, "coupling");
      reject_unknown_keys(coupling, coupling_keys, "'coupling'");
      merged.update(coupling);
    }
    if (doc.contains("fixed")) {
      const json& fixed = object_field(doc, "fixed");
      std::set<std::string> fixed_keys = coupling_keys;
      fixed_keys.insert({"delta", "s0", "s"});
      reject_unknown_keys(fixed, fixed_keys, "'fixed'");
      for (const auto& [key, value] : fixed.items()) {
        if (merged.contains(key)) parse_error("'" + key + "' given twice");
        merged[key] = value;
      }
    }
    const std::string swept(to_string(spec.variable));
    if (merged.contains(swept)) parse_error("'" + swept + "' is swept and must not be fixed");

    const auto take = [&](const char* key, double& target, bool required) {
      if (merged.contains(key)) {
        target = number_field(merged, key);
      } else if (required && swept != key) {
        parse_error(std::string("missing fixed value '") + key + "'");
      }
    };
    take("omega_n", spec.coupling.omega_n, true);
    take("eta", spec.coupling.eta, true);
    const bool asym = spec.model == Model::Asymmetric;
    take("omega_n_prime", spec.coupling.omega_n_prime, asym);
    take("eta_prime", spec.coupling.eta_prime, asym);
    take("p", spec.coupling.p, asym);
    take("delta", spec.delta, true);
    if (merged.contains("s0")) spec.s0 = number_field(merged, "s0");
    if (merged.contains("s")) spec.s = number_field(merged, "s");
    return spec;
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (res.ec != std::errc{}) fail(ErrorCode::Usage, "number formatting failed");
  return std::string(buf, res.ptr);
}

std::string csv_header() {
  return "swept,delta,s0,s,phi_rad,phi_deg,branch,p_sc_over_p,coherent_fraction,model,phi_kerr_rad,phi_kerr_deg";
}

std::string to_csv(const std::vector<ResultRow>& rows, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += csv_header() + "\n";
  const auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (const auto& r : rows) {
    out += format_number(r.swept) + ',' + format_number(r.delta) + ',' + format_number(r.s0) + ',' +
           format_number(r.s) + ',' + opt(r.phi_rad) + ',' + opt(r.phi_deg) + ',' + std::string(to_string(r.branch)) +
           ',' + format_number(r.p_sc_over_p) + ',' + format_number(r.coherent_fraction) + ',' +
           std::string(to_string(r.model)) + ',' + opt(r.phi_kerr_rad) + ',' + opt(r.phi_kerr_deg) + '\n';
  }
  return out;
}

std::string to_json(const std::vector<ResultRow>& rows) {
  using ordered = nlohmann::ordered_json;
  ordered arr = ordered::array();
  const auto opt = [](const std::optional<double>& v) { return v ? ordered(*v) : ordered(nullptr); };
  for (const auto& r : rows) {
    arr.push_back({{"swept", r.swept},
                   {"delta", r.delta},
                   {"s0", r.s0},
                   {"s", r.s},
                   {"phi_rad", opt(r.phi_rad)},
                   {"phi_deg", opt(r.phi_deg)},
                   {"branch", std::string(to_string(r.branch))},
                   {"p_sc_over_p", r.p_sc_over_p},
                   {"coherent_fraction", r.coherent_fraction},
                   {"model", std::string(to_string(r.model))},
                   {"phi_kerr_rad", opt(r.phi_kerr_rad)},
                   {"phi_kerr_deg", opt(r.phi_kerr_deg)}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace phaseshift
