#ifndef FREECURVE_CURVEFILE_HPP
#define FREECURVE_CURVEFILE_HPP

// Curve files:
//
//   # comment
//   field Q(sqrt -2)
//   name C_dprime
//   (x^2+y^2-z^2)*(2x^2+y^2+s*y*z)
//   expected
//   tau 37
//   mdr 3
//   exponents 3 4
//   verdicts Free MaximizingEven
//   absent NearlyFree
//   census {2xA1, 1xA3}
//
// The first non-comment line declares the field ("field Q" or
// "field Q(sqrt D)"); the optional name line follows; the polynomial may span
// several lines and ends at "expected" or at the end of the file.

#include <optional>
#include <string>

#include "freecurve/catalog.hpp"
#include "freecurve/poly.hpp"

namespace freecurve {

struct CurveFile {
    FieldTag field = 0;
    std::string name;
    HomPoly poly;
    std::optional<ExpectedInvariants> expected;
};

/// Throws ParseError with the line number in the message, CurveError
/// (Syntax) for a bad header.
CurveFile parse_curve_file(const std::string& text);
CurveFile read_curve_file(const std::string& path);

/// Normalized text: parse(print(c)) == c.
std::string curve_file_str(const CurveFile& c);

CurveFile curve_file_from_spec(const CurveSpec& spec);

}  // namespace freecurve

#endif
