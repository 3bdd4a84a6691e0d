#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hr/model.hpp"
#include "hr/witness.hpp"

namespace hr {

struct TimeGrid {
  double start = 0, stop = 2e-3;  // gt units
  int points = 401;
  std::vector<double> times() const;  // throws on points < 1 or stop < start
};

struct Scenario {
  std::string name = "custom";  // stimulated | spontaneous | partial | certification | custom
  SystemConfig config;
  InitialAmplitudes amps;
  TimeGrid grid;
  std::vector<WitnessRequest> witnesses;
  WitnessForm form = WitnessForm::derived;
};

// Swept parameter paths:
//   alpha<j>.abs  alpha<j>.phase  beta.abs  gamma.abs  delta.abs
//   omega_pump<j>          (raw: detunings move with it)
//   omega_pump<j>.fixed_sum (partner pump compensates, detunings fixed)
//   omega_b  omega_c  omega_d
struct SweepSpec {
  std::string path;
  std::vector<double> values;
};

void apply_parameter(Scenario& s, const std::string& path, double value);  // throws std::invalid_argument

// Stimulated: |beta| = 8, |gamma| = 0.01, |delta| = 1, |alpha_i| = 10.
// Spontaneous: beta = gamma = delta = 0. Partial: only the Stokes seed kept.
// Certification (k = 2 only): |alpha| = 0.6, beta = 0.4, gamma = 0.1,
// delta = 0.2 at O(10) frequencies, sized for the Fock-space oracle.
Scenario preset(const std::string& name, int k);
SystemConfig optical_config(int k);

struct FigurePreset {
  int id = 0;
  std::string title;
  Scenario scenario;
  std::optional<SweepSpec> sweep;
  std::optional<Scenario> sweep_base;  // when the sweep panel uses other amplitudes
  std::map<std::string, double> display_scale;  // witness id -> SVG-only factor
};

FigurePreset figure_preset(int id);  // 2..8, throws std::invalid_argument

// Dense result: values[(ti * W + wi) * 2 + branch].
struct DenseTable {
  std::vector<double> t;
  std::size_t width = 0;
  std::vector<double> values;
};

DenseTable run_dense(const CompiledWitnessSet& set, const std::vector<double>& times, int threads = 1);
DenseTable run_dense_printed(const Scenario& s, const std::vector<double>& times, int threads = 1);

struct TableRow {
  double t = 0;
  std::string witness_id;
  std::string modes;  // comma separated mode names
  int m = 0, n = 0;   // 0 when not applicable
  double value_primary = 0;
  std::optional<double> value_secondary;
  bool nonclassical = false;
  std::optional<double> sweep_value;
  bool operator==(const TableRow&) const = default;
};

struct WitnessTable {
  std::string title;
  std::string sweep_path;
  std::vector<TableRow> rows;
  std::map<std::string, double> display_scale;
  bool operator==(const WitnessTable& o) const { return rows == o.rows && title == o.title && sweep_path == o.sweep_path; }
};

WitnessTable run_scenario(const Scenario& s, int threads = 1);
WitnessTable run_sweep(const SweepSpec& sweep, const Scenario& s, int threads = 1);

// Per swept value: deepest (most negative) primary/secondary per witness.
struct SweepExtremum {
  double sweep_value = 0;
  std::string witness_id;
  double min_primary = 0, min_secondary = 0;
};
std::vector<SweepExtremum> sweep_extrema(const WitnessTable& t);

// Emission ---------------------------------------------------------------

std::string to_csv(const WitnessTable& t);
std::string to_json_text(const WitnessTable& t);
WitnessTable table_from_json(const std::string& text);
std::string to_svg(const WitnessTable& t);
std::string csv_escape(const std::string& field);

}  // namespace hr
