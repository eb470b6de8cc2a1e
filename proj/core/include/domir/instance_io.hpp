#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "domir/graph.hpp"

namespace domir {

/// Thrown for malformed instance text; `line()` is 1-based (0 when the
/// problem is not tied to a single line, e.g. a missing header).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented DIMACS-style format, 1-based vertex ids:
//   c <comment>
//   p cds <n> <m>        (p edge <n> <m> is accepted too)
//   w <v> <capacity>     optional, default 0
//   e <u> <v>
CapacitatedInstance parse_instance(std::istream& in);
CapacitatedInstance parse_instance_string(const std::string& text);
CapacitatedInstance read_instance_file(const std::string& path);

/// Canonical text form: header, non-zero capacities in id order, edges (u < v) sorted.
std::string serialize_instance(const CapacitatedInstance& inst);

}  // namespace domir
