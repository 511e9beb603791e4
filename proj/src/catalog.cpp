#include "freecurve/catalog.hpp"

#include <algorithm>
#include <map>

#include "freecurve/local.hpp"

namespace freecurve {

namespace {

const std::string kTri = "(x^2+y^2-z^2)*(2x^2+y^2+2x*z)*(2x^2+y^2-2x*z)";
const std::string kSteiner = "(-1/4*x^2*y^2-z^2*(x^2+y^2-2x*y)+x^2*y*z+x*y^2*z)";
const std::string kMedians = "x*y*z*(x-y)*(y-z)*(x-z)";

std::string persson_d(int m) {
    std::string e = std::to_string(m);
    std::string xm = "x^" + e, ym = "y^" + e, zm = "z^" + e;
    return "((" + xm + "+" + ym + "+" + zm + ")^2-4*(" + xm + "*" + ym + "+" + ym + "*" + zm + "+" + zm + "*" + xm + "))";
}

std::string cubic_t(int t) {
    std::string s = std::to_string(3 * t);
    return "(x^3+y^3+z^3-" + s + "*x*y*z)";
}

std::string tangents_t(int t) {
    long t3 = static_cast<long>(t) * t * t;
    return "(x^3+y^3+" + std::to_string(t3) + "*z^3-" + std::to_string(3 * t) + "*x*y*z)";
}

// Canonical multiset text from (count, type) pairs; equal types merge.
std::string multiset(const std::vector<std::pair<int, std::string>>& items) {
    std::map<AdeType, int> counts;
    for (const auto& [c, t] : items)
        if (c > 0) counts[AdeType::parse(t)] += c;
    std::string out = "{";
    bool first = true;
    for (const auto& [t, c] : counts) {
        if (!first) out += ", ";
        out += std::to_string(c) + "x" + t.str();
        first = false;
    }
    return out + "}";
}

std::string ak(int k) { return "A" + std::to_string(k); }
std::string dk(int k) { return "D" + std::to_string(k); }

ExpectedInvariants free_max(int tau, int r, int n, bool even) {
    ExpectedInvariants e;
    e.tau = tau;
    e.mdr = r;
    e.exponents = std::make_pair(r, n - 1 - r);
    e.verdicts = {"Free", even ? "MaximizingEven" : "MaximizingOdd"};
    return e;
}

struct Entry {
    FamilyInfo info;
    CurveSpec (*make)(int m);
};

CurveSpec spec(const std::string& name, const std::string& text, FieldTag d, ExpectedInvariants e) {
    CurveSpec c;
    c.name = name;
    c.field = d;
    c.text = text;
    c.poly = parse_poly(text, d);
    c.expected = std::move(e);
    return c;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {{"tri_conical", false, 0, 0, "three conics with 2A1 + A3 + 2A7"},
         [](int) {
             auto e = free_max(19, 2, 6, true);
             e.census = multiset({{2, "A1"}, {1, "A3"}, {2, "A7"}});
             return spec("tri_conical", kTri, 0, e);
         }},
        {{"C_prime", false, 0, 0, "tri_conical plus the lines y = 0 and z = 0"},
         [](int) {
             auto e = free_max(37, 3, 8, true);
             e.census = multiset({{2, "D10"}, {1, "D6"}, {2, "D4"}, {3, "A1"}});
             return spec("C_prime", kTri + "*y*z", 0, e);
         }},
        {{"C_dprime", false, 0, 0, "tri_conical plus the conic 2x^2+y^2-2z^2+sqrt(-2)yz"},
         [](int) {
             auto e = free_max(37, 3, 8, true);
             e.census = multiset({{2, "D10"}, {2, "D6"}, {2, "A1"}, {1, "A3"}});
             return spec("C_dprime", kTri + "*(2x^2+y^2-2z^2+s*y*z)", -2, e);
         }},
        {{"steiner_quartic", false, 0, 0, "quartic with three cusps"},
         [](int) {
             ExpectedInvariants e;
             e.tau = 6;
             e.census = multiset({{3, "A2"}});
             return spec("steiner_quartic", kSteiner, 0, e);
         }},
        {{"T6", false, 0, 0, "Steiner quartic plus two cuspidal tangents"},
         [](int) {
             auto e = free_max(19, 2, 6, true);
             e.census = multiset({{3, "A1"}, {1, "A2"}, {2, "E7"}});
             return spec("T6", kSteiner + "*(x-2z)*(y-2z)", 0, e);
         }},
        {{"C_even", true, 2, 0, "xy * D_2m, degree 2m+2"},
         [](int m) {
             auto e = free_max(3 * m * (m + 1) + 1, m, 2 * m + 2, true);
             e.census = multiset({{2 * m, dk(m + 2)}, {m, ak(m - 1)}, {1, "A1"}});
             return spec("C_even", "x*y*" + persson_d(m), 0, e);
         }},
        {{"D_even", true, 2, 0, "(x^m+y^m+z^m)^2-4(x^m y^m+y^m z^m+z^m x^m), degree 2m"},
         [](int m) {
             ExpectedInvariants e;
             e.tau = 3 * m * (m - 1);
             e.mdr = m;
             e.verdicts = {"NearlyFree"};
             e.absent_verdicts = {"Free"};
             e.census = multiset({{3 * m, ak(m - 1)}});
             return spec("D_even", persson_d(m), 0, e);
         }},
        {{"C_odd", true, 2, 0, "x * D_2m, degree 2m+1"},
         [](int m) {
             ExpectedInvariants e;
             e.tau = 3 * m * m;
             e.mdr = m;
             e.exponents = std::make_pair(m, m);
             e.verdicts = {"Free", "CaseB_Equality"};
             e.census = multiset({{m, dk(m + 2)}, {2 * m, ak(m - 1)}});
             return spec("C_odd", "x*" + persson_d(m), 0, e);
         }},
        {{"quintic_H1", false, 0, 0, "E7 + A5 + A1"},
         [](int) {
             auto e = free_max(13, 1, 5, false);
             e.census = multiset({{1, "E7"}, {1, "A5"}, {1, "A1"}});
             return spec("quintic_H1", "x*z*(y^3-x*z^2)", 0, e);
         }},
        {{"quintic_H2", false, 0, 0, "E6 + A7"},
         [](int) {
             auto e = free_max(13, 1, 5, false);
             e.census = multiset({{1, "E6"}, {1, "A7"}});
             return spec("quintic_H2", "z*(y^4-x^3*z)", 0, e);
         }},
        {{"quintic_H3", false, 0, 0, "D8 + D5"},
         [](int) {
             auto e = free_max(13, 1, 5, false);
             e.census = multiset({{1, "D8"}, {1, "D5"}});
             return spec("quintic_H3", "y*z*(y^3-x^2*z)", 0, e);
         }},
        {{"quintic_H4", false, 0, 0, "2D6 + A1"},
         [](int) {
             auto e = free_max(13, 1, 5, false);
             e.census = multiset({{2, "D6"}, {1, "A1"}});
             return spec("quintic_H4", "x*y*z*(y^2-x*z)", 0, e);
         }},
        {{"arrangement_A5", false, 0, 0, "xy(x-z)(y-z)(x-y)"},
         [](int) {
             ExpectedInvariants e;
             e.tau = 12;
             e.mdr = 2;
             e.verdicts = {"CaseB_Equality"};
             return spec("arrangement_A5", "x*y*(x-z)*(y-z)*(x-y)", 0, e);
         }},
        {{"arrangement_A7", false, 0, 0, "z(x^2-z^2)(y^2-z^2)(x^2-y^2)"},
         [](int) {
             ExpectedInvariants e;
             e.tau = 27;
             e.mdr = 3;
             e.verdicts = {"CaseB_Equality"};
             return spec("arrangement_A7", "z*(x^2-z^2)*(y^2-z^2)*(x^2-y^2)", 0, e);
         }},
        {{"arrangement_A9", false, 0, 0, "(x^3-z^3)(y^3-z^3)(x^3-y^3)"},
         [](int) {
             ExpectedInvariants e;
             e.tau = 48;
             e.mdr = 4;
             e.verdicts = {"CaseB_Equality"};
             return spec("arrangement_A9", "(x^3-z^3)*(y^3-z^3)*(x^3-y^3)", 0, e);
         }},
        {{"medians_sextic", false, 0, 0, "triangle with its three medians"},
         [](int) {
             ExpectedInvariants e;
             e.tau = 19;
             e.verdicts = {"MaximizingEven"};
             e.census = multiset({{3, "A1"}, {4, "D4"}});
             return spec("medians_sextic", kMedians, 0, e);
         }},
    };
    return entries;
}

const std::vector<Entry>& derived_registry() {
    static const std::vector<Entry> entries = {
        {{"T8", false, 0, 0, "Steiner quartic, its bitangent and its three cuspidal tangents"},
         [](int) {
             auto e = free_max(37, 3, 8, true);
             e.census = multiset({{6, "A1"}, {2, "A3"}, {1, "D4"}, {3, "E7"}});
             return spec("T8", kSteiner + "*(x-2z)*(y-2z)*(x-y)*(x+y+2z)", 0, e);
         }},
        {{"C7", false, 0, 0, "T6 plus the third cuspidal tangent"},
         [](int) { return spec("C7", kSteiner + "*(x-2z)*(y-2z)*(x-y)", 0, free_max(28, 2, 7, false)); }},
        {{"C7_prime", false, 0, 0, "tri_conical plus the line y = 0"},
         [](int) { return spec("C7_prime", kTri + "*y", 0, free_max(28, 2, 7, false)); }},
        {{"fermat_sextic", false, 0, 0, "Fermat cubic plus the inflection tangents at its points on z = 0"},
         [](int) {
             auto e = free_max(19, 2, 6, true);
             e.census = multiset({{3, "A5"}, {1, "D4"}});
             return spec("fermat_sextic", "(x^3+y^3+z^3)*(x^3+y^3)", 0, e);
         }},
        {{"fermat_septic", false, 0, 0, "fermat_sextic plus the line z = 0"},
         [](int) { return spec("fermat_septic", "(x^3+y^3+z^3)*(x^3+y^3)*z", 0, free_max(28, 2, 7, false)); }},
        {{"nodal_sextic", false, 0, 0, "nodal cubic plus the inflection tangents at its points on z = 0"},
         [](int) {
             auto e = free_max(19, 2, 6, true);
             e.census = multiset({{4, "A1"}, {3, "A5"}});
             return spec("nodal_sextic", "(x*y*z+x^3+y^3)*(27x^3+27y^3-z^3+27x*y*z)", 0, e);
         }},
        {{"nodal_septic", false, 0, 0, "nodal_sextic plus the line z = 0"},
         [](int) {
             return spec("nodal_septic", "(x*y*z+x^3+y^3)*(27x^3+27y^3-z^3+27x*y*z)*z", 0, free_max(28, 2, 7, false));
         }},
        {{"cubic_t_sextic", true, 2, 0, "x^3+y^3+z^3-3txyz plus its inflection tangents on z = 0 (m = t)"},
         [](int t) {
             ExpectedInvariants e;
             e.absent_verdicts = {"MaximizingEven"};
             return spec("cubic_t_sextic", cubic_t(t) + "*" + tangents_t(t), 0, e);
         }},
        {{"H2_tangent", false, 0, 0, "quintic_H2 plus the tangent to its quartic at (1:1:1)"},
         [](int) { return spec("H2_tangent", "z*(y^4-x^3*z)*(3x-4y+z)", 0, free_max(19, 2, 6, true)); }},
        {{"H3_tangent", false, 0, 0, "quintic_H3 plus the tangent to its cubic at (1:1:1)"},
         [](int) { return spec("H3_tangent", "y*z*(y^3-x^2*z)*(2x-3y+z)", 0, free_max(19, 2, 6, true)); }},
        {{"H4_tangent", false, 0, 0, "quintic_H4 plus the tangent to its conic at (1:1:1)"},
         [](int) { return spec("H4_tangent", "x*y*z*(y^2-x*z)*(x-2y+z)", 0, free_max(19, 2, 6, true)); }},
        {{"H1_node_line", false, 0, 0, "quintic_H1 plus the line x = z through its node (0:1:0)"},
         [](int) { return spec("H1_node_line", "x*z*(y^3-x*z^2)*(x-z)", 0, free_max(19, 2, 6, true)); }},
        {{"H4_node_line", false, 0, 0, "quintic_H4 plus the line x = z through its node (0:1:0)"},
         [](int) { return spec("H4_node_line", "x*y*z*(y^2-x*z)*(x-z)", 0, free_max(19, 2, 6, true)); }},
        {{"medians_octic", false, 0, 0, "medians_sextic plus the conic tangent to the sides at their midpoints"},
         [](int) {
             return spec("medians_octic", kMedians + "*(x^2+y^2+z^2-2x*y-2y*z-2z*x)", 0, free_max(37, 3, 8, true));
         }},
    };
    return entries;
}

const Entry* find_entry(const std::string& name) {
    for (const auto* list : {&registry(), &derived_registry()})
        for (const auto& e : *list)
            if (e.info.name == name) return &e;
    return nullptr;
}

}  // namespace

const std::vector<FamilyInfo>& catalog_families() {
    static const std::vector<FamilyInfo> out = [] {
        std::vector<FamilyInfo> v;
        for (const auto* list : {&registry(), &derived_registry()})
            for (const auto& e : *list) v.push_back(e.info);
        return v;
    }();
    return out;
}

CurveSpec get_family(const std::string& name, std::optional<int> m) {
    const Entry* e = find_entry(name);
    if (!e) throw CurveError(ErrorKind::UnknownCurve, "unknown curve '" + name + "'");
    const FamilyInfo& info = e->info;
    if (!info.takes_m) {
        if (m) throw CurveError(ErrorKind::Precondition, name + " takes no parameter");
        return e->make(0);
    }
    if (!m) throw CurveError(ErrorKind::Precondition, name + " needs a parameter m");
    if (*m < info.m_min || (info.m_max > 0 && *m > info.m_max))
        throw CurveError(ErrorKind::Precondition, "m = " + std::to_string(*m) + " is out of range for " + name);
    CurveSpec c = e->make(*m);
    c.m = m;
    return c;
}

std::vector<CurveSpec> derived_constructions() {
    std::vector<CurveSpec> out;
    for (const auto& e : derived_registry()) out.push_back(get_family(e.info.name, e.info.takes_m ? std::optional<int>(e.info.m_min) : std::nullopt));
    return out;
}

HomPoly tangent_line(const HomPoly& f, const std::array<QuadElem, 3>& p) {
    if (!f.eval(p).is_zero()) throw CurveError(ErrorKind::NotOnCurve, "point " + point_str(p) + " is not on the curve");
    auto d = partials(f);
    std::array<QuadElem, 3> g;
    for (int v = 0; v < 3; ++v) g[v] = d[v].eval(p);
    if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero())
        throw CurveError(ErrorKind::Precondition, "the curve is singular at " + point_str(p));
    return HomPoly::linear(f.field(), g[0], g[1], g[2]);
}

HomPoly cuspidal_tangent(const HomPoly& f, const std::array<QuadElem, 3>& p) {
    if (!f.eval(p).is_zero()) throw CurveError(ErrorKind::NotOnCurve, "point " + point_str(p) + " is not on the curve");
    auto d = partials(f);
    QuadElem h[3][3];
    for (int i = 0; i < 3; ++i) {
        auto di = partials(d[i]);
        for (int j = 0; j < 3; ++j) h[i][j] = di[j].eval(p);
    }
    // The tangent cone at p is sum h_ij x_i x_j; a double line has rank one.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    if (!(h[i][j] * h[k][l] - h[i][l] * h[k][j]).is_zero())
                        throw CurveError(ErrorKind::NotSimple, "the tangent cone at " + point_str(p) + " is not a double line");
    for (int i = 0; i < 3; ++i)
        if (!h[i][0].is_zero() || !h[i][1].is_zero() || !h[i][2].is_zero())
            return HomPoly::linear(f.field(), h[i][0], h[i][1], h[i][2]).normalized();
    throw CurveError(ErrorKind::NotSimple, "the point " + point_str(p) + " has multiplicity above two");
}

HomPoly conic_tangent_at(const std::array<std::array<QuadElem, 3>, 3>& points, const std::array<HomPoly, 3>& lines) {
    // Unknown coefficients in the graded order of the six quadratic monomials.
    FieldTag d = lines[0].field();
    ExactEchelon ech(6);
    for (int i = 0; i < 3; ++i) {
        const auto& p = points[i];
        std::array<QuadElem, 3> l = {lines[i].coeff({1, 0, 0}), lines[i].coeff({0, 1, 0}), lines[i].coeff({0, 0, 1})};
        // Rows: value at p, and the gradient at p crossed with the line vector.
        std::array<std::array<QuadElem, 6>, 4> rows{};
        std::array<std::array<QuadElem, 6>, 3> grad{};
        for (int c = 0; c < 6; ++c) {
            Exponent e = monomial_at(2, c);
            QuadElem val(1L);
            for (int v = 0; v < 3; ++v)
                for (int k = 0; k < e[v]; ++k) val = val * p[v];
            rows[0][c] = val;
            for (int v = 0; v < 3; ++v) {
                if (e[v] == 0) continue;
                QuadElem g(static_cast<long>(e[v]));
                for (int w = 0; w < 3; ++w)
                    for (int k = 0; k < e[w] - (w == v ? 1 : 0); ++k) g = g * p[w];
                grad[v][c] = g;
            }
        }
        for (int c = 0; c < 6; ++c) {
            rows[1][c] = grad[1][c] * l[2] - grad[2][c] * l[1];
            rows[2][c] = grad[2][c] * l[0] - grad[0][c] * l[2];
            rows[3][c] = grad[0][c] * l[1] - grad[1][c] * l[0];
        }
        for (const auto& r : rows) {
            SparseRow sr;
            for (int c = 0; c < 6; ++c)
                if (!r[c].is_zero()) sr.emplace_back(c, r[c]);
            if (!sr.empty()) ech.insert(sr);
        }
    }
    auto ker = ech.kernel();
    if (ker.size() != 1) throw CurveError(ErrorKind::ConstructionRejected, "the tangency conditions do not fix one conic");
    HomPoly::Terms t;
    for (int c = 0; c < 6; ++c) t[monomial_at(2, c)] = ker[0][c];
    return HomPoly(d, std::move(t)).normalized();
}

HomPoly descend_to_rationals(const HomPoly& f) {
    for (const auto& [e, c] : f.terms())
        if (!c.is_rational()) return f;
    HomPoly::Terms t;
    for (const auto& [e, c] : f.terms()) t[e] = QuadElem(c.a());
    return HomPoly(0, std::move(t));
}

namespace {

void require_same(const std::string& what, const HomPoly& derived, const HomPoly& frozen) {
    if (derived.normalized() != frozen.normalized())
        throw CurveError(ErrorKind::ConstructionRejected,
                         what + ": derived " + derived.str() + " differs from the catalog entry " + frozen.str());
}

HomPoly lit(const std::string& text, FieldTag d = 0) { return parse_poly(text, d); }

// Tangent lines at the three points of the cubic on z = 0, multiplied out.
HomPoly inflection_tangents(const std::string& cubic) {
    HomPoly c = lit(cubic, -3);
    std::vector<QuadElem> roots = roots_in_field(FPoly(std::vector<QuadElem>{QuadElem(1L), QuadElem(0L), QuadElem(0L), QuadElem(1L)}), -3);
    if (roots.size() != 3) throw CurveError(ErrorKind::ConstructionRejected, "z = 0 does not meet the cubic in three points");
    HomPoly prod = HomPoly::constant(-3, QuadElem(1L));
    for (const auto& r : roots) {
        std::array<QuadElem, 3> p = {QuadElem(1L), r, QuadElem(0L)};
        HomPoly l = tangent_line(c, p);
        std::array<QuadElem, 3> lv = {l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})};
        std::array<QuadElem, 3> q = {lv[1] * p[2] - lv[2] * p[1], lv[2] * p[0] - lv[0] * p[2], lv[0] * p[1] - lv[1] * p[0]};
        // An inflection tangent meets the cubic only at p.
        BinaryFactorization bf = factor_binary_form(restrict_to_line(c, p, q), -3);
        if (bf.factors.size() != 1 || bf.factors[0].multiplicity != 3)
            throw CurveError(ErrorKind::ConstructionRejected, point_str(p) + " is not an inflection point");
        prod = prod * l;
    }
    return descend_to_rationals(prod);
}

}  // namespace

void verify_derivations() {
    // Steiner quartic: cuspidal tangents, their concurrency, the bitangent.
    HomPoly F = lit(kSteiner);
    Census cf = census(F);
    std::vector<HomPoly> tangents;
    for (const auto& sp : cf.points)
        if (sp.type == ade_A(2) && sp.coords) tangents.push_back(cuspidal_tangent(F, *sp.coords));
    if (tangents.size() != 3) throw CurveError(ErrorKind::ConstructionRejected, "the Steiner quartic must have three rational cusps");
    HomPoly three = tangents[0] * tangents[1] * tangents[2];
    require_same("cuspidal tangents", three, lit("(x-2z)*(y-2z)*(x-y)"));
    QuadElem m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int v = 0; v < 3; ++v) m[i][v] = tangents[i].coeff({v == 0, v == 1, v == 2});
    QuadElem det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (!det.is_zero()) throw CurveError(ErrorKind::ConstructionRejected, "the cuspidal tangents are not concurrent");
    BinaryForm bt = restrict_to_line(F, {QuadElem(1L), QuadElem(-1L), QuadElem(0L)}, {QuadElem(2L), QuadElem(0L), QuadElem(-1L)});
    BinaryFactorization bf = factor_binary_form(bt, 0);
    int double_roots = 0;
    for (const auto& fac : bf.factors) double_roots += fac.multiplicity == 2 ? fac.form.degree : 0;
    if (double_roots != 2 || !bf.residual.empty())
        throw CurveError(ErrorKind::ConstructionRejected, "x + y + 2z is not a bitangent of the Steiner quartic");
    require_same("T8", F * three * lit("x+y+2z"), get_family("T8").poly);
    require_same("C7", F * three, get_family("C7").poly);

    // Inflection tangents of the cubics on z = 0.
    require_same("fermat tangents", inflection_tangents("x^3+y^3+z^3"), lit("x^3+y^3"));
    require_same("nodal tangents", inflection_tangents("x*y*z+x^3+y^3"), lit("27x^3+27y^3-z^3+27x*y*z"));
    require_same("cubic_t tangents", inflection_tangents(cubic_t(2)), lit(tangents_t(2)));
    require_same("fermat_sextic", lit("x^3+y^3+z^3") * inflection_tangents("x^3+y^3+z^3"), get_family("fermat_sextic").poly);
    require_same("nodal_sextic", lit("x*y*z+x^3+y^3") * inflection_tangents("x*y*z+x^3+y^3"), get_family("nodal_sextic").poly);

    // Tangents to the quintic components at (1:1:1), lines through (0:1:0).
    std::array<QuadElem, 3> one = {QuadElem(1L), QuadElem(1L), QuadElem(1L)};
    require_same("H2_tangent", lit("z*(y^4-x^3*z)") * tangent_line(lit("y^4-x^3*z"), one), get_family("H2_tangent").poly);
    require_same("H3_tangent", lit("y*z*(y^3-x^2*z)") * tangent_line(lit("y^3-x^2*z"), one), get_family("H3_tangent").poly);
    require_same("H4_tangent", lit("x*y*z*(y^2-x*z)") * tangent_line(lit("y^2-x*z"), one), get_family("H4_tangent").poly);
    std::array<QuadElem, 3> node = {QuadElem(0L), QuadElem(1L), QuadElem(0L)};
    for (const char* name : {"H1_node_line", "H4_node_line"})
        if (!get_family(name).poly.eval(node).is_zero() || !lit("x-z").eval(node).is_zero())
            throw CurveError(ErrorKind::ConstructionRejected, std::string(name) + ": the line misses the node");

    // Conic tangent to the sides of the triangle at the midpoints.
    std::array<std::array<QuadElem, 3>, 3> mids;
    std::array<HomPoly, 3> sides;
    int found = 0;
    for (const auto& sp : census(lit(kMedians)).points) {
        if (!(sp.type == ade_A(1)) || !sp.coords || found == 3) continue;
        mids[found] = *sp.coords;
        for (int v = 0; v < 3; ++v)
            if ((*sp.coords)[v].is_zero()) sides[found] = HomPoly::variable(0, v);
        ++found;
    }
    if (found != 3) throw CurveError(ErrorKind::ConstructionRejected, "the median arrangement must have three nodes");
    require_same("medians conic", conic_tangent_at(mids, sides), lit("x^2+y^2+z^2-2x*y-2y*z-2z*x"));
    require_same("medians_octic", lit(kMedians) * conic_tangent_at(mids, sides), get_family("medians_octic").poly);
}

std::vector<std::string> compare_expected(const ExpectedInvariants& e, const FreenessReport& rep, const Census& cen) {
    std::vector<std::string> out;
    auto miss = [&](const std::string& what, const std::string& want, const std::string& got) {
        out.push_back(what + ": expected " + want + ", got " + got);
    };
    if (e.tau && *e.tau != rep.tau) miss("tau", std::to_string(*e.tau), std::to_string(rep.tau));
    if (e.tau && *e.tau != cen.tau_sum) miss("census tau", std::to_string(*e.tau), std::to_string(cen.tau_sum));
    if (e.mdr && *e.mdr != rep.r) miss("mdr", std::to_string(*e.mdr), std::to_string(rep.r));
    auto pair_str = [](std::pair<int, int> p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; };
    if (e.exponents && (!rep.exponents || *rep.exponents != *e.exponents))
        miss("exponents", pair_str(*e.exponents), rep.exponents ? pair_str(*rep.exponents) : "none");
    std::vector<std::string> names;
    for (auto v : rep.verdicts) names.push_back(verdict_name(v));
    auto has = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
    for (const auto& v : e.verdicts)
        if (!has(v)) miss("verdict", v, "absent");
    for (const auto& v : e.absent_verdicts)
        if (has(v)) miss("verdict", "no " + v, v);
    if (e.census && *e.census != cen.multiset_str()) miss("census", *e.census, cen.multiset_str());
    if (e.census && !cen.complete) miss("census", "complete", "incomplete");
    return out;
}

ExpectationCheck check_expected(const CurveSpec& c) {
    ExpectationCheck out;
    out.census = census(c.poly);
    out.report = classify_freeness(c.poly, out.census.complete ? Tri::Yes : Tri::Unconfirmed);
    out.mismatches = compare_expected(c.expected, out.report, out.census);
    return out;
}

}  // namespace freecurve
