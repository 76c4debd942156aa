#include "gcfrac/errors.hpp"

#include <utility>

namespace gcfrac {

namespace {
std::string what_text(const ParseDiagnostic& d) {
  std::string s = "parse error at offset " + std::to_string(d.offset) + ": " + d.message;
  if (!d.expected.empty()) s += " (expected " + d.expected + ")";
  return s;
}
}  // namespace

ParseError::ParseError(ParseDiagnostic diag, std::string source)
    : std::runtime_error(what_text(diag)), diag_(std::move(diag)), source_(std::move(source)) {}

std::string ParseError::render() const {
  std::string out = what();
  out += "\n  " + source_ + "\n  " + std::string(diag_.offset, ' ') + "^";
  return out;
}

}  // namespace gcfrac
