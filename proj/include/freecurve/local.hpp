#ifndef FREECURVE_LOCAL_HPP
#define FREECURVE_LOCAL_HPP

// Singular points: location, local invariants, ADE recognition, census.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freecurve/ext.hpp"
#include "freecurve/linalg.hpp"
#include "freecurve/poly.hpp"
#include "json.hpp"

namespace freecurve {

enum class AdeFamily { A, D, E, NotSimple };

struct AdeType {
    AdeFamily family = AdeFamily::NotSimple;
    int k = 0;

    bool simple() const { return family != AdeFamily::NotSimple; }
    std::string str() const;  // "A3", "D10", "E7", "NotSimple"
    static AdeType parse(const std::string& text);

    friend bool operator==(const AdeType& a, const AdeType& b) { return a.family == b.family && a.k == b.k; }
    friend bool operator<(const AdeType& a, const AdeType& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.k < b.k;
    }
};

inline AdeType ade_A(int k) { return {AdeFamily::A, k}; }
inline AdeType ade_D(int k) { return {AdeFamily::D, k}; }
inline AdeType ade_E(int k) { return {AdeFamily::E, k}; }

/// c0 = w1 + w2 of the quasi-homogeneous normal form. Throws NotSimple.
Rational arnold_c0(const AdeType& t);

using Point = std::array<QuadElem, 3>;

/// Scales so that the first nonzero coordinate is 1.
Point normalize_point(const Point& p);
std::string point_str(const Point& p);

/// Polynomial text in the given variable name.
std::string fpoly_str(const FPoly& p, const char* var);

/// Conjugacy class of singular points: the roots of a square-free minimal
/// polynomial over the base field together with coordinates as polynomials
/// in the root. Degree-one classes are points with coordinates in the field.
struct PointOrbit {
    FPoly minpoly;                 // monic, irreducible or at least not split further
    std::array<FPoly, 3> coords;   // normalized: first nonzero coordinate is 1
    int degree() const { return minpoly.degree(); }
    std::string str() const;
};

struct LocalInvariants {
    int multiplicity = 0;
    int milnor = 0;
    AdeType type;
};

/// Analysis at a point with coordinates in F[t]/(q); splits propagate.
LocalInvariants analyze_point(const HomPoly& f, const std::array<ExtElem, 3>& p);

struct SingularLocus {
    std::vector<PointOrbit> orbits;
    int tau = 0;
    /// Characteristic polynomial, modulo `prime`, of the operator by which
    /// the separating ratio acts on M(f)_k; its root multiplicities are the
    /// local Tjurina numbers.
    PrimeField prime;
    std::vector<Mod> charpoly;
};

/// Local Tjurina number of each point of the class, read off the charpoly.
int eigen_multiplicity(const SingularLocus& locus, const FPoly& minpoly);

/// All singular points as conjugacy classes over the base field.
SingularLocus locate_singular_points(const HomPoly& f);

struct SingularPoints {
    std::vector<Point> points;
    /// Classes whose points need an extension of degree >= 3, or a second
    /// quadratic extension.
    std::vector<std::string> residual;
};

/// Points with coordinates in the ambient field or a quadratic extension of Q.
SingularPoints find_singular_points(const HomPoly& f);

/// Order of f at p. Throws NotOnCurve.
int multiplicity(const HomPoly& f, const Point& p);

/// Milnor number from Res_u(g_u, g_v) after two seeded generic changes that
/// must agree. Throws NonIsolated.
int milnor(const HomPoly& f, const Point& p);

struct SingularPoint {
    std::optional<Point> coords;
    std::string locus;      // coordinates, or the description of the class
    int orbit_degree = 1;   // number of conjugate points represented
    int multiplicity = 0;
    int milnor = 0;
    int tjurina_local = 0;
    AdeType type;
    std::optional<Rational> c0;
};

/// Classification of a single point with coordinates in the field.
SingularPoint classify_ade(const HomPoly& f, const Point& p);

struct Census {
    std::vector<SingularPoint> points;
    int sigma = 0;
    int tau_sum = 0;
    int total_tau = 0;
    int residual_tau = 0;
    std::optional<Rational> alpha;
    bool complete = false;

    /// Counts by type, conjugate points included.
    std::map<AdeType, int> type_counts() const;
    std::string multiset_str() const;
    nlohmann::ordered_json to_json() const;
};

Census census(const HomPoly& f);

}  // namespace freecurve

#endif
