#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcfrac/theorems.hpp"

namespace gcfrac::report {

using Json = nlohmann::ordered_json;

/// %.17g: parses back to the same double.
std::string number(double v);

Json to_json(const TheoremReport& r);

struct TheoremSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  double max_residual = 0.0;
};

/// Keyed by theorem id; std::map keeps the output order stable.
std::map<std::string, TheoremSummary> summarize(const std::vector<TheoremReport>& reports);

void write_table(std::ostream& out, const std::vector<TheoremReport>& reports);
void write_csv(std::ostream& out, const std::vector<TheoremReport>& reports);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace gcfrac::report
