#ifndef FREECURVE_CATALOG_HPP
#define FREECURVE_CATALOG_HPP

// Named curves and families with their known invariants.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freecurve/local.hpp"
#include "freecurve/poly.hpp"
#include "freecurve/syzygy.hpp"

namespace freecurve {

struct ExpectedInvariants {
    std::optional<int> tau;
    std::optional<int> mdr;
    std::optional<std::pair<int, int>> exponents;
    std::vector<std::string> verdicts;        // every listed verdict must be present
    std::vector<std::string> absent_verdicts; // none of these may be present
    std::optional<std::string> census;        // multiset string, e.g. "{2xA1, 1xA3, 2xA7}"
};

struct CurveSpec {
    std::string name;
    std::optional<int> m;
    FieldTag field = 0;
    HomPoly poly;
    ExpectedInvariants expected;
    std::string text;  // the defining expression as parsed
};

struct FamilyInfo {
    std::string name;
    bool takes_m = false;
    int m_min = 0;
    int m_max = 0;   // inclusive; 0 means unbounded
    std::string description;
};

/// Registered names, in catalog order.
const std::vector<FamilyInfo>& catalog_families();

/// Throws UnknownCurve or Precondition (m missing or out of range).
CurveSpec get_family(const std::string& name, std::optional<int> m = std::nullopt);

/// Curves built by adding auxiliary lines and conics to catalog curves, as
/// frozen literals.
std::vector<CurveSpec> derived_constructions();

/// Recomputes the auxiliary components of every derived construction from
/// their defining geometric conditions and compares with the frozen literal.
/// Throws ConstructionRejected with a diagnostic on the first mismatch.
void verify_derivations();

struct ExpectationCheck {
    FreenessReport report;
    Census census;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// One line per disagreement between computed invariants and a record.
std::vector<std::string> compare_expected(const ExpectedInvariants& e, const FreenessReport& rep, const Census& cen);

/// Computes the invariants of the curve and compares with its record.
ExpectationCheck check_expected(const CurveSpec& c);

/// Auxiliary pieces used by the derivations.
HomPoly tangent_line(const HomPoly& f, const std::array<QuadElem, 3>& p);
/// The reduced tangent line of a cusp. Throws NotSimple when the tangent cone
/// at p is not a double line.
HomPoly cuspidal_tangent(const HomPoly& f, const std::array<QuadElem, 3>& p);
/// The conic through the three points, tangent there to the given lines.
/// Throws ConstructionRejected when it is not unique.
HomPoly conic_tangent_at(const std::array<std::array<QuadElem, 3>, 3>& points, const std::array<HomPoly, 3>& lines);
/// Copy over Q when every coefficient is rational; otherwise unchanged.
HomPoly descend_to_rationals(const HomPoly& f);

}  // namespace freecurve

#endif
