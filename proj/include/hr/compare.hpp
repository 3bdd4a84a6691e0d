#pragma once

#include <map>
#include <string>
#include <vector>

#include "hr/oracle.hpp"
#include "hr/witness.hpp"

namespace hr {

struct CompareOptions {
  std::vector<int> cutoffs;  // one per mode; empty -> 8 everywhere
  double tail_bound = 1e-10;
  bool strict_tail = true;  // throw TruncationError when the bound is exceeded
  WitnessForm form = WitnessForm::derived;
  EvolveOptions evolve;
};

// Oracle values per time: values[ti][2 * wi + branch]. Times must be sorted
// and non-negative; the state is carried from one instant to the next.
struct OracleRun {
  std::vector<std::vector<double>> values;
  double max_tail = 0;
  std::size_t dim = 0;
};

OracleRun oracle_witness_values(const SystemConfig& cfg, const InitialAmplitudes& amps,
                                const std::vector<WitnessRequest>& reqs, const std::vector<double>& times,
                                const CompareOptions& opt);

struct CompareRow {
  double t = 0;
  std::string witness_id;  // two-branch witnesses carry "/I" or "/II"
  double closed_form = 0, oracle = 0, abs_residual = 0;
  double slope_estimate = 0;  // NaN when fewer than two usable points
};

struct CompareResult {
  std::vector<CompareRow> rows;
  std::map<std::string, double> slopes;
  OracleRun oracle;
};

CompareResult compare_with_oracle(const SystemConfig& cfg, const InitialAmplitudes& amps,
                                  const std::vector<WitnessRequest>& reqs, const std::vector<double>& times,
                                  const CompareOptions& opt);

// least-squares slope of log e against log t over points with t, e > 0
double loglog_slope(const std::vector<double>& t, const std::vector<double>& e);

std::string to_csv(const CompareResult& r);

}  // namespace hr
