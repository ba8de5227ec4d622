#pragma once

#include <string>
#include <vector>

#include "einsp/multipoly.hpp"

namespace einsp {

// Canonical text form: terms in canonical order, "+"/"-" separated,
// coefficients as integers or p/q, explicit "*", "^" for powers.
// Example: 25/3*x1^2*x2 - x1 + 7
std::string poly_to_text(const MultiPoly& p);

// Parses the textual form back into a polynomial.  Accepts everything the
// printer emits plus parentheses and leading signs; round-trips printer
// output bit-exactly.  Rational constants must be integer literals or
// integer/integer.
MultiPoly poly_from_text(const std::string& text, const VarCtxPtr& ctx);

struct PolyFile {
  VarCtxPtr ctx;
  std::vector<MultiPoly> polys;
};

// File format: first line "vars: x, y, z", then one polynomial per line.
// Blank lines and lines starting with '#' are ignored.
PolyFile parse_poly_file_text(const std::string& text);
std::string poly_file_to_text(const PolyFile& file);
PolyFile read_poly_file(const std::string& path);
void write_poly_file(const std::string& path, const PolyFile& file);

}  // namespace einsp
