#include "gcfrac/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gcfrac::report {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const TheoremReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["identity"] = r.identity;
  j["f"] = r.f;
  if (!r.g.empty()) j["g"] = r.g;
  j["kernel"] = r.kernel;
  j["alpha"] = r.alpha;
  if (r.a) j["a"] = *r.a;
  if (r.b) j["b"] = *r.b;
  j["points"] = Json::array();
  for (double p : r.points) j["points"].push_back(finite_or_null(p));
  j["residuals"] = Json::array();
  for (double x : r.residuals) j["residuals"].push_back(finite_or_null(x));
  j["max_residual"] = finite_or_null(r.max_residual);
  j["tolerance"] = r.tolerance;
  if (r.witness) j["witness"] = finite_or_null(*r.witness);
  if (r.xi) j["xi"] = finite_or_null(*r.xi);
  if (r.printed_orientation_residual)
    j["printed_orientation_residual"] = finite_or_null(*r.printed_orientation_residual);
  j["verdict"] = r.passed ? "pass" : "fail";
  j["notes"] = r.notes;
  return j;
}

std::map<std::string, TheoremSummary> summarize(const std::vector<TheoremReport>& reports) {
  std::map<std::string, TheoremSummary> out;
  for (const TheoremReport& r : reports) {
    TheoremSummary& s = out[r.theorem];
    (r.passed ? s.passed : s.failed) += 1;
    if (std::isfinite(r.max_residual)) s.max_residual = std::max(s.max_residual, r.max_residual);
  }
  return out;
}

void write_table(std::ostream& out, const std::vector<TheoremReport>& reports) {
  char line[512];
  std::snprintf(line, sizeof line, "%-20s %-10s %-12s %-12s %6s %12s %10s  %s\n", "theorem",
                "kernel", "f", "g", "alpha", "max_resid", "tol", "verdict");
  out << line;
  for (const TheoremReport& r : reports) {
    std::snprintf(line, sizeof line, "%-20s %-10s %-12s %-12s %6.3g %12.3e %10.1e  %s%s\n",
                  r.theorem.c_str(), r.kernel.c_str(), r.f.c_str(), r.g.c_str(), r.alpha,
                  r.max_residual, r.tolerance, r.passed ? "pass" : "FAIL",
                  r.witness ? (" c=" + number(*r.witness)).c_str() : "");
    out << line;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(std::ostream& out, const std::vector<TheoremReport>& reports) {
  out << "theorem,kernel,f,g,alpha,a,b,max_residual,tolerance,witness,verdict\n";
  for (const TheoremReport& r : reports) {
    out << csv_field(r.theorem) << ',' << csv_field(r.kernel) << ',' << csv_field(r.f) << ','
        << csv_field(r.g) << ',' << number(r.alpha) << ',' << (r.a ? number(*r.a) : "") << ','
        << (r.b ? number(*r.b) : "") << ',' << number(r.max_residual) << ','
        << number(r.tolerance) << ',' << (r.witness ? number(*r.witness) : "") << ','
        << (r.passed ? "pass" : "fail") << '\n';
  }
}

}  // namespace gcfrac::report
