#ifndef FREECURVE_REPORT_HPP
#define FREECURVE_REPORT_HPP

// Reports shared by the command line and the reproduction manifest.

#include <optional>
#include <string>
#include <vector>

#include "freecurve/bounds.hpp"
#include "freecurve/curvefile.hpp"
#include "freecurve/union.hpp"

namespace freecurve {

struct Analysis {
    std::string name;
    FieldTag field = 0;
    FreenessReport freeness;
    Census census;
    BoundReport dpw;
    std::optional<long> sern_bound;  // needs a complete census with alpha > 1/2
    std::optional<bool> sern_holds;
    bool has_expected = false;
    std::vector<std::string> mismatches;

    bool unconfirmed() const { return freeness.ade_confirmed != Tri::Yes; }
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

Analysis analyze(const CurveFile& c);

nlohmann::ordered_json union_json(const UnionVerdict& v);
std::string union_text(const UnionVerdict& v);

/// "5/8 (0.625)": exact value followed by a decimal approximation.
std::string rational_text(const Rational& q);

}  // namespace freecurve

#endif
