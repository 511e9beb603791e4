#ifndef FREECURVE_BOUNDS_HPP
#define FREECURVE_BOUNDS_HPP

// Closed-form bounds: Langer-type counts, orbifold Euler numbers, Picard
// bracket, Arnold-exponent bound on mdr.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freecurve/scalar.hpp"
#include "json.hpp"

namespace freecurve {

struct BoundReport {
    std::string formula_id;
    std::vector<std::pair<std::string, long>> inputs;
    Rational value;
    Integer floor;
    std::optional<std::string> attained_by;

    nlohmann::ordered_json to_json() const;
};

/// Upper bound on the number of A_{2k+1} points of a degree-n curve with
/// only ADE points. Throws Precondition unless k >= 1 and n >= 6.
BoundReport langer_a_bound(int k, int n);

/// (k+2-2(k+1)a)^2 / (4(k+1)) for a in [k/(2k+2), (k+2)/(2k+2)].
Rational eorb_a(int k, const Rational& alpha);

/// Upper bound on the number of E6 points in degree d >= 6.
BoundReport e6_bound(int d);

/// sigma + 1 <= rho <= 3(n/2)(n/2-1)+2 for even n >= 4.
std::pair<long, long> picard_bracket(long sigma, int n);
bool picard_maximizing(long sigma, int n);

/// Least integer r with r >= alpha * n - 2. Throws Precondition for alpha <= 1/2.
long sern_lower_bound(const Rational& alpha, int n);

/// du Plessis-Wall upper bound on tau for given n and mdr.
BoundReport dpw_bound(int n, int r);

}  // namespace freecurve

#endif
