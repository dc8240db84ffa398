#ifndef SHIFTKIT_IO_HPP
#define SHIFTKIT_IO_HPP

// Text formats.
//
// Complex:  "n <int>", then "f <v1> <v2> ..." per generating face.
// Ideal:    "ring E" | "ring S", "n <int>", then "g <i1> <i2> ..." per
//           generator; in ring S a repeated index raises the exponent.
// Lines starting with '#' and blank lines are ignored. Errors carry the
// source name and line number and have kind Parse.

#include <istream>
#include <string>

#include "shiftkit/ideals.hpp"
#include "shiftkit/simplicial.hpp"

namespace shiftkit {

enum class InputKind { Complex, Ideal };

SimplicialComplex parse_complex(std::istream& in, const std::string& source = "<input>");
MonomialIdeal parse_ideal(std::istream& in, const std::string& source = "<input>");

/// Ideal files start with a "ring" line, complex files with "n".
InputKind detect_kind(const std::string& text, const std::string& source = "<input>");

std::string read_text_file(const std::string& path);
SimplicialComplex read_complex_file(const std::string& path);
MonomialIdeal read_ideal_file(const std::string& path);

/// Facets, one "f" line each.
std::string write_complex(const SimplicialComplex& delta);
std::string write_ideal(const MonomialIdeal& ideal);

}  // namespace shiftkit

#endif
