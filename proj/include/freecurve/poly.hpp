#ifndef FREECURVE_POLY_HPP
#define FREECURVE_POLY_HPP

// Homogeneous polynomials in x, y, z over Q or Q(sqrt(d)).

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freecurve/ext.hpp"
#include "freecurve/scalar.hpp"
#include "freecurve/upoly.hpp"

namespace freecurve {

enum class ErrorKind {
    Syntax,
    NonHomogeneous,
    NonReduced,
    SingularMatrix,
    NotOnCurve,
    NotSingular,
    NonIsolated,
    NonIsolatedSuspected,
    NotSimple,
    NonSimpleUnion,
    ProfileIncomplete,
    SharedComponent,
    UnsupportedComponent,
    Precondition,
    UnknownCurve,
    ConstructionRejected,
    Io,
};

const char* error_kind_name(ErrorKind k);

class CurveError : public std::runtime_error {
public:
    CurveError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public CurveError {
public:
    ParseError(std::size_t pos, const std::string& what)
        : CurveError(ErrorKind::Syntax, "at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

using Exponent = std::array<int, 3>;

/// Monomial order for a fixed degree: lex with x > y > z, largest first.
struct ExponentGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        if (a[0] != b[0]) return a[0] > b[0];
        if (a[1] != b[1]) return a[1] > b[1];
        return a[2] > b[2];
    }
};

/// Number of monomials of degree k in three variables.
inline int monomial_count(int k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }
/// Position of x^i y^j z^(k-i-j) among degree-k monomials, largest first.
inline int monomial_index(int k, int i, int j) { return (k - i) * (k - i + 1) / 2 + (k - i - j); }
Exponent monomial_at(int k, int index);

class HomPoly {
public:
    using Terms = std::map<Exponent, QuadElem, ExponentGreater>;

    HomPoly() = default;
    /// The zero polynomial has degree -1 by convention.
    HomPoly(FieldTag d, int degree) : d_(d), degree_(degree) {}
    /// Builds from terms that must share one total degree.
    HomPoly(FieldTag d, Terms terms);

    static HomPoly constant(FieldTag d, const QuadElem& c);
    static HomPoly variable(FieldTag d, int which);
    /// a x + b y + c z.
    static HomPoly linear(FieldTag d, const QuadElem& a, const QuadElem& b, const QuadElem& c);

    FieldTag field() const { return d_; }
    int degree() const { return terms_.empty() ? -1 : degree_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    QuadElem coeff(const Exponent& e) const;

    HomPoly operator-() const;
    friend HomPoly operator+(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator-(const HomPoly& a, const HomPoly& b) { return a + (-b); }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const HomPoly& a, const QuadElem& c);
    friend bool operator==(const HomPoly& a, const HomPoly& b);
    friend bool operator!=(const HomPoly& a, const HomPoly& b) { return !(a == b); }
    HomPoly pow(int e) const;

    /// Partial derivative in variable 0, 1 or 2.
    HomPoly diff(int var) const;

    /// Multiplies by an integer so that all coefficients have integral a and b parts.
    HomPoly clear_denominators() const;
    /// Scales so that the first term (in monomial order) has coefficient 1.
    HomPoly normalized() const;

    /// Graded-lex canonical text, parseable by parse_poly.
    std::string str() const;

    template <class R>
    R eval(const std::array<R, 3>& p) const;

private:
    FieldTag d_ = 0;
    int degree_ = -1;
    Terms terms_;
};

/// Expression grammar: x, y, z, integers, p/q, s (= sqrt(d)), + - * ^, ( ).
HomPoly parse_poly(const std::string& text, FieldTag d);

/// (f_x, f_y, f_z).
std::array<HomPoly, 3> partials(const HomPoly& f);

/// Invertible 3x3 matrix acting on coordinates.
class LinearChange {
public:
    using Matrix = std::array<std::array<QuadElem, 3>, 3>;
    explicit LinearChange(Matrix m);
    static LinearChange identity();
    const Matrix& matrix() const { return m_; }
    QuadElem det() const;
    LinearChange compose(const LinearChange& n) const;  // this * n

private:
    Matrix m_;
};

/// f o M: substitutes (x,y,z) -> M (x,y,z)^T. Throws SingularMatrix.
HomPoly apply_change(const HomPoly& f, const LinearChange& m);

/// Square-freeness of f (no repeated factor).
bool is_reduced(const HomPoly& f);

/// Binary form b(u, v) stored by coefficient of u^i v^(deg-i).
struct BinaryForm {
    int degree = 0;
    FPoly coeffs;  // coefficient of u^i v^(degree - i) at index i
};

/// f restricted to the line through p and q: s p + t q, as a binary form in (s, t).
BinaryForm restrict_to_line(const HomPoly& f, const std::array<QuadElem, 3>& p, const std::array<QuadElem, 3>& q);

struct BinaryFactor {
    BinaryForm form;  // degree 1 or 2, irreducible over the field
    int multiplicity = 1;
};

struct BinaryFactorization {
    QuadElem unit;
    std::vector<BinaryFactor> factors;
    /// Remaining factors of degree >= 3 irreducible over the field, with multiplicity.
    std::vector<BinaryFactor> residual;
};

/// Splits off linear and quadratic factors over Q(sqrt(d)).
BinaryFactorization factor_binary_form(const BinaryForm& b, FieldTag d);
BinaryForm multiply(const BinaryForm& a, const BinaryForm& b);
std::string binary_form_str(const BinaryForm& b, const char* u = "x", const char* v = "y");

/// Roots in F of a polynomial over F (d = 0 means Q), each once.
std::vector<QuadElem> roots_in_field(const FPoly& p, FieldTag d);

/// Affine polynomial in two variables, c[i][j] = coefficient of u^i v^j.
template <class R>
struct BPoly {
    std::vector<std::vector<R>> c;
};

/// Bivariate polynomial over F used by the resultant routines.
using FBPoly = BPoly<QuadElem>;

/// Res_u(g, h) as a polynomial in v (Sylvester determinant, fraction-free).
FPoly resultant_u(const FBPoly& g, const FBPoly& h);
/// Res_v(g, h) as a polynomial in u.
FPoly resultant_v(const FBPoly& g, const FBPoly& h);

template <class R>
R HomPoly::eval(const std::array<R, 3>& p) const {
    R acc = R();
    std::array<std::vector<R>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        powers[v].push_back(R(1L));
        for (int k = 1; k <= degree_; ++k) powers[v].push_back(powers[v].back() * p[v]);
    }
    for (const auto& [e, c] : terms_) acc = acc + R(c) * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
    return acc;
}

}  // namespace freecurve

#endif
