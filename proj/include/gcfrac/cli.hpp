#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gcfrac/fracderiv.hpp"
#include "gcfrac/quadrature.hpp"
#include "gcfrac/theorems.hpp"

namespace gcfrac::cli {

/// Process exit status, one per outcome class.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,        // expression syntax or command-line usage
  kDomainError = 3,       // domain error or kernel validation failure
  kNotConverged = 4,      // limit route did not converge
  kQuadratureFailed = 5,  // panel budget exhausted or divergent integral
  kHypothesisFailed = 6,  // Rolle / mean value hypothesis violated
};

enum class Format { Table, Json, Csv };

struct RunSpec {
  std::string command;
  std::string f;
  std::string g;
  std::string kernel = "identity";
  double kernel_start = 0.0;  // validity start of expression kernels
  double alpha = 1.0;
  std::optional<double> t;
  std::optional<double> a;    // interval start, or parameter a for `table`
  std::optional<double> b;
  std::optional<double> x;    // evaluation point for `table`
  NumericConfig numeric;
  QuadConfig quad;
  WitnessConfig witness;
  Format format = Format::Table;

  // verify
  std::vector<std::string> theorems;
  std::vector<std::string> kernels;
  std::vector<double> alpha_grid;
  QuotientOrientation orientation = QuotientOrientation::Consistent;
};

/// Applies `key = value` lines (blank lines and '#' comments ignored).
/// Keys: kernel, kernel_start, alpha, format, eps0, step_ratio, max_steps,
/// tol_rel, richardson_depth, quad_tol_abs, quad_tol_rel, max_subdivisions,
/// endpoint_singularity, match_tol. Throws ConfigError on unknown keys.
void apply_config_text(RunSpec& spec, const std::string& text);

int cmd_deriv(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_integ(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_verify(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_table(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_rolle(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_mvt(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Dispatches on spec.command.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Full command line handling (argv[0] is the program name).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcfrac::cli
