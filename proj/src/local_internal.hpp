#ifndef FREECURVE_LOCAL_INTERNAL_HPP
#define FREECURVE_LOCAL_INTERNAL_HPP

#include <functional>
#include <optional>
#include <vector>

#include "freecurve/ext.hpp"
#include "freecurve/local.hpp"
#include "freecurve/poly.hpp"

namespace freecurve::detail {

/// c[i][j] = coefficient of u^i v^j.
struct Bivariate {
    std::vector<std::vector<ExtElem>> c;
    const ExtElem& at(int i, int j) const;
    void set(int i, int j, ExtElem v);
    int u_degree() const;
};

/// Taylor expansion of f at p (p[chart] = 1) up to total order `order`.
Bivariate jet(const HomPoly& f, const std::array<ExtElem, 3>& p, int chart, int order);
Bivariate partial_u(const Bivariate& g);
Bivariate partial_v(const Bivariate& g);

/// Intersection number at the origin (Fulton's algorithm) of two series
/// known modulo terms of total degree above `limit`; terms above it are
/// dropped. Empty when the number exceeds `limit` or the two share a branch.
std::optional<int> fulton(Bivariate f, Bivariate g, int limit);

/// Order of f at p, capped at `cap` + 1.
int point_multiplicity(const HomPoly& f, const std::array<ExtElem, 3>& p, int cap);

/// Coordinates of a class as elements of F[t]/(minpoly).
std::array<ExtElem, 3> orbit_point(const PointOrbit& o);

/// Calls fn on every class; when fn throws SplitRequest the class is split
/// and both parts are visited again.
void visit_orbits(const std::vector<PointOrbit>& orbits,
                  const std::function<void(const PointOrbit&, const std::array<ExtElem, 3>&)>& fn);

/// Explicit points of a class when its coordinates live in the base field or,
/// over Q, in a single quadratic field.
std::optional<std::vector<Point>> expand_orbit(const PointOrbit& o);

}  // namespace freecurve::detail

#endif
