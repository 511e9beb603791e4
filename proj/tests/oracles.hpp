#ifndef FREECURVE_TESTS_ORACLES_HPP
#define FREECURVE_TESTS_ORACLES_HPP

// Independent reference computations used by the tests. Nothing here calls
// the library's syzygy, census or local routines.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "freecurve/local.hpp"
#include "freecurve/poly.hpp"

namespace oracle {

using freecurve::HomPoly;
using freecurve::QuadElem;

/// Rank of a dense matrix over Q(sqrt d) by plain Gauss elimination.
int rank(std::vector<std::vector<QuadElem>> rows);

/// Least r for which a f_x + b f_y + c f_z = 0 has a nonzero solution of
/// degree r, by the kernel dimension of the coefficient map.
int mdr(const HomPoly& f);

/// Milnor number of g(x, y) = f(x, y, 1) at the origin: dim of
/// Q[x,y] / (g_x, g_y, m^N) for N = bound + 2, which equals mu when mu <= bound.
int jet_milnor(const HomPoly& f, int bound = 10);

/// Order of vanishing at t = 0 of f(p + t q).
int line_order(const HomPoly& f, const freecurve::Point& p, const freecurve::Point& q);

/// dPW maximum straight from the defining formula.
long tau_max(int n, int r);

struct NormalForm {
    freecurve::AdeType type;
    std::vector<std::pair<int, int>> terms;  // exponents of x and y, coefficient 1
    int wx = 0, wy = 0, wd = 0;  // weights and weighted degree: x^a y^b has weight (a wx + b wy) / wd
};

/// A_1..A_10, D_4..D_10, E_6, E_7, E_8.
std::vector<NormalForm> normal_forms(int max_mu = 10);

struct Perturbed {
    HomPoly local;   // singular at (0:0:1)
    HomPoly moved;   // local after a random change of coordinates
    freecurve::Point p;  // the image of (0:0:1)
};

/// The normal form plus random terms of weighted degree above one,
/// homogenized with z.
Perturbed perturbed_normal_form(const NormalForm& nf, std::mt19937& rng);

/// Small random integer in [-k, k].
long small(std::mt19937& rng, long k);

/// Random linear form with coefficients in [-k, k], never zero.
HomPoly random_line(std::mt19937& rng, long k = 3);

/// Random homogeneous polynomial of degree n with coefficients in [-k, k].
HomPoly random_form(std::mt19937& rng, int n, long k = 3, freecurve::FieldTag d = 0);

/// Product of random lines and conics of total degree n (may be non-reduced).
HomPoly random_arrangement(std::mt19937& rng, int n);

}  // namespace oracle

#endif
