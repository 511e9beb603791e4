#include "properties.hpp"

#include <optional>
#include <random>
#include <tuple>
#include <sstream>

#include "freecurve/catalog.hpp"
#include "freecurve/union.hpp"
#include "oracles.hpp"

namespace props {

using namespace freecurve;

void Result::fail(const std::string& what) {
    ++failures;
    if (samples.size() < 5) samples.push_back(what);
}

std::string Result::summary() const {
    std::ostringstream os;
    os << name << ": " << cases << " cases, " << failures << " failures";
    for (const auto& s : samples) os << "\n    " << s;
    return os.str();
}

namespace {

HomPoly lit(const std::string& s, FieldTag d = 0) { return parse_poly(s, d); }

HomPoly euler(const HomPoly& f) {
    auto p = partials(f);
    FieldTag d = f.field();
    return HomPoly::variable(d, 0) * p[0] + HomPoly::variable(d, 1) * p[1] + HomPoly::variable(d, 2) * p[2];
}

Rational c0(const AdeType& t) {
    switch (t.family) {
        case AdeFamily::A: return Rational::make(1, 2) + Rational::make(1, t.k + 1);
        case AdeFamily::D: return Rational::make(t.k, 2 * (t.k - 1));
        case AdeFamily::E:
            if (t.k == 6) return Rational::make(7, 12);
            if (t.k == 7) return Rational::make(5, 9);
            return Rational::make(8, 15);
        default: return Rational(0);
    }
}

std::string id(const HomPoly& f) { return f.str(); }

struct PoolCurve {
    std::string name;
    HomPoly f;
    std::vector<Point> singular;  // rational singular points
};

std::vector<PoolCurve> pool() {
    std::vector<PoolCurve> out;
    std::vector<std::pair<std::string, HomPoly>> src = {
        {"tri_conical", get_family("tri_conical").poly},
        {"T6", get_family("T6").poly},
        {"steiner_quartic", get_family("steiner_quartic").poly},
        {"quintic_H1", get_family("quintic_H1").poly},
        {"quintic_H2", get_family("quintic_H2").poly},
        {"quintic_H3", get_family("quintic_H3").poly},
        {"quintic_H4", get_family("quintic_H4").poly},
        {"C_odd(2)", get_family("C_odd", 2).poly},
        {"C_even(2)", get_family("C_even", 2).poly},
        {"arrangement_A5", get_family("arrangement_A5").poly},
        {"nodal cubic", lit("y^2*z-x^3-x^2*z")},
        {"cuspidal cubic", lit("y^2*z-x^3")},
        {"tacnode quartic", lit("(y*z-x^2)*(y*z-x^2-y^2)")},
        {"smooth cubic", lit("x^3+y^3+z^3")},
    };
    for (auto& [name, f] : src) {
        PoolCurve c{name, f, {}};
        for (const auto& p : census(f).points)
            if (p.coords && (*p.coords)[0].is_rational() && (*p.coords)[1].is_rational() && (*p.coords)[2].is_rational())
                c.singular.push_back(*p.coords);
        out.push_back(std::move(c));
    }
    return out;
}

Point cross(const Point& a, const Point& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool zero(const Point& p) { return p[0].is_zero() && p[1].is_zero() && p[2].is_zero(); }

Point line_coeffs(const HomPoly& l) { return {l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})}; }

/// A point of the line l other than p.
Point second_point(const Point& l, const Point& p) {
    for (int i = 0; i < 3; ++i) {
        Point e = {QuadElem(long(i == 0)), QuadElem(long(i == 1)), QuadElem(long(i == 2))};
        Point q = cross(l, e);
        if (!zero(q) && !zero(cross(q, p))) return q;
    }
    return p;
}

Point random_point(std::mt19937& rng) {
    Point p;
    do {
        p = {QuadElem(oracle::small(rng, 3)), QuadElem(oracle::small(rng, 3)), QuadElem(oracle::small(rng, 3))};
    } while (zero(p));
    return p;
}

bool smooth_conic(const HomPoly& q) {
    QuadElem a = q.coeff({2, 0, 0}) * QuadElem(2L), b = q.coeff({1, 1, 0}), c = q.coeff({1, 0, 1});
    QuadElem d = q.coeff({0, 2, 0}) * QuadElem(2L), e = q.coeff({0, 1, 1}), f = q.coeff({0, 0, 2}) * QuadElem(2L);
    return !(a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c)).is_zero();
}

HomPoly line_through(const Point& a, const Point& b) {
    Point c = cross(a, b);
    return HomPoly::linear(0, c[0], c[1], c[2]);
}

void check_profile(Result& r, const std::string& label, const HomPoly& f1, const HomPoly& f2) {
    std::vector<ContactRecord> prof;
    try {
        prof = intersection_profile(f1, f2);
    } catch (const CurveError& e) {
        if (e.kind() == ErrorKind::SharedComponent) return;
        r.fail(label + ": " + e.what());
        ++r.cases;
        return;
    }
    ++r.cases;
    int total = 0;
    for (const auto& rec : prof) {
        total += rec.orbit_degree * rec.i_mult;
        if (rec.base_state != BaseState::Other) {
            if (!(rec.predicted == rec.actual))
                r.fail(label + " at " + rec.locus + ": predicted " + rec.predicted.str() + ", direct " + rec.actual.str());
            if (rec.delta_tau != rec.actual_tjurina - rec.base_tjurina)
                r.fail(label + " at " + rec.locus + ": Tjurina jump " + std::to_string(rec.delta_tau) + " vs " +
                       std::to_string(rec.actual_tjurina - rec.base_tjurina));
        }
        if (f2.degree() == 1 && rec.point) {
            Point l = line_coeffs(f2);
            int i = oracle::line_order(f1, *rec.point, second_point(l, *rec.point));
            if (i != rec.i_mult) r.fail(label + " at " + rec.locus + ": i = " + std::to_string(rec.i_mult) + ", restriction order " + std::to_string(i));
        }
    }
    if (total != f1.degree() * f2.degree()) r.fail(label + ": intersection numbers sum to " + std::to_string(total));
}

}  // namespace

Result euler_identity(std::uint32_t seed, int cases) {
    Result r{"Euler identity", 0, 0, {}};
    std::mt19937 rng(seed);
    const FieldTag fields[] = {0, -1, -2, -3, 2, 5};
    for (int i = 0; i < cases; ++i) {
        int n = 1 + static_cast<int>(rng() % 8);
        FieldTag d = fields[rng() % 6];
        HomPoly f = oracle::random_form(rng, n, 4, d);
        ++r.cases;
        if (euler(f) != f * QuadElem(static_cast<long>(n))) r.fail("degree " + std::to_string(n) + ": " + id(f));
    }
    return r;
}

Result bezout_and_prediction(std::uint32_t seed, int cases) {
    Result r{"Bezout sums and union prediction", 0, 0, {}};
    std::mt19937 rng(seed);
    auto curves = pool();
    for (int i = 0; r.cases < cases && i < 4 * cases; ++i) {
        const PoolCurve& c = curves[rng() % curves.size()];
        HomPoly f2;
        switch (rng() % 4) {
            case 0: f2 = oracle::random_line(rng); break;
            case 1:
            case 2:
                if (!c.singular.empty()) {
                    Point p = c.singular[rng() % c.singular.size()];
                    Point q = random_point(rng);
                    if (zero(cross(p, q))) continue;
                    f2 = line_through(p, q);
                    break;
                }
                f2 = oracle::random_line(rng);
                break;
            default: f2 = oracle::random_form(rng, 2, 2); break;
        }
        if (f2.degree() == 2 && !smooth_conic(f2)) continue;
        check_profile(r, c.name + " + " + id(f2), c.f, f2);
    }
    return r;
}

Result sigma_equals_tau(std::uint32_t seed, int cases) {
    Result r{"sigma = tau on complete censuses", 0, 0, {}};
    std::mt19937 rng(seed);
    for (int i = 0; r.cases < cases && i < 10 * cases; ++i) {
        int n = 3 + static_cast<int>(rng() % 4);
        HomPoly f = oracle::random_arrangement(rng, n);
        if (!is_reduced(f)) continue;
        Census c = census(f);
        if (!c.complete) continue;
        ++r.cases;
        int tau = total_tjurina(f);
        if (c.sigma != tau) r.fail(id(f) + ": sigma " + std::to_string(c.sigma) + ", tau " + std::to_string(tau));
    }
    return r;
}

Result milnor_vs_oracle(std::uint32_t seed, int cases) {
    Result r{"Milnor number against the jet-algebra oracle", 0, 0, {}};
    std::mt19937 rng(seed);
    auto forms = oracle::normal_forms(10);
    for (const auto& nf : forms) {
        HomPoly::Terms t;
        int deg = 0;
        for (const auto& e : nf.terms) deg = std::max(deg, e.first + e.second);
        for (const auto& e : nf.terms) t[{e.first, e.second, deg - e.first - e.second}] = QuadElem(1L);
        HomPoly f(0, t);
        Point o = {QuadElem(0L), QuadElem(0L), QuadElem(1L)};
        ++r.cases;
        int a = milnor(f, o), b = oracle::jet_milnor(f);
        if (a != b || b != nf.type.k) r.fail(nf.type.str() + " normal form: " + std::to_string(a) + " vs oracle " + std::to_string(b));
    }
    for (int i = 0; i < cases; ++i) {
        const auto& nf = forms[i % forms.size()];
        auto pf = oracle::perturbed_normal_form(nf, rng);
        ++r.cases;
        int b = oracle::jet_milnor(pf.local);
        int a = -1;
        try {
            a = milnor(pf.moved, pf.p);
        } catch (const CurveError& e) {
            r.fail(nf.type.str() + " " + id(pf.moved) + ": " + e.what());
            continue;
        }
        if (a != b || b != nf.type.k) r.fail(nf.type.str() + " " + id(pf.local) + ": " + std::to_string(a) + " vs oracle " + std::to_string(b));
    }
    return r;
}

Result classify_roundtrip(std::uint32_t seed, int cases) {
    Result r{"classify_ade round trip on normal forms", 0, 0, {}};
    std::mt19937 rng(seed);
    auto forms = oracle::normal_forms(10);
    for (int i = 0; i < cases; ++i) {
        const auto& nf = forms[i % forms.size()];
        auto pf = oracle::perturbed_normal_form(nf, rng);
        ++r.cases;
        try {
            SingularPoint sp = classify_ade(pf.moved, pf.p);
            if (!(sp.type == nf.type)) r.fail(nf.type.str() + " classified as " + sp.type.str() + ": " + id(pf.moved));
            if (sp.tjurina_local != nf.type.k) r.fail(nf.type.str() + " local Tjurina " + std::to_string(sp.tjurina_local));
        } catch (const CurveError& e) {
            r.fail(nf.type.str() + " " + id(pf.moved) + ": " + e.what());
        }
    }
    return r;
}

Result mdr_vs_oracle(std::uint32_t seed, int cases) {
    Result r{"mdr against the brute-force kernel", 0, 0, {}};
    std::mt19937 rng(seed);
    for (int i = 0; r.cases < cases && i < 10 * cases; ++i) {
        int n = 2 + static_cast<int>(rng() % 5);
        HomPoly f = rng() % 3 == 0 ? oracle::random_form(rng, n, 2) : oracle::random_arrangement(rng, n);
        if (!is_reduced(f)) continue;
        ++r.cases;
        int a = freecurve::mdr(f), b = oracle::mdr(f);
        if (a != b) r.fail(id(f) + ": mdr " + std::to_string(a) + ", oracle " + std::to_string(b));
    }
    return r;
}

Result tau_max_decreasing() {
    Result r{"tau_max strictly decreasing in r", 0, 0, {}};
    for (int n = 2; n <= 20; ++n) {
        for (int rr = 0; rr < n; ++rr) {
            ++r.cases;
            if (freecurve::tau_max(n, rr) != oracle::tau_max(n, rr))
                r.fail("tau_max(" + std::to_string(n) + ", " + std::to_string(rr) + ") disagrees with the formula");
            if (rr > 0 && freecurve::tau_max(n, rr) >= freecurve::tau_max(n, rr - 1))
                r.fail("tau_max(" + std::to_string(n) + ", " + std::to_string(rr) + ") does not decrease");
        }
    }
    return r;
}

namespace {

void check_bounds(Result& r, const std::string& label, const HomPoly& f, bool brute_mdr) {
    Census c = census(f);
    int n = f.degree();
    int m = freecurve::mdr(f);
    int tau = total_tjurina(f);
    ++r.cases;
    if (brute_mdr && m != oracle::mdr(f)) r.fail(label + ": mdr disagrees with the kernel oracle");
    if (tau > oracle::tau_max(n, m)) r.fail(label + ": tau " + std::to_string(tau) + " above the dPW bound");
    if (!c.complete) return;
    if (c.sigma != tau) r.fail(label + ": sigma != tau");
    bool simple = true;
    Rational alpha(1);
    for (const auto& p : c.points) {
        simple = simple && p.type.simple();
        if (p.type.simple() && c0(p.type) < alpha) alpha = c0(p.type);
    }
    if (!simple || c.points.empty()) return;
    Integer bound = (alpha * Rational(n) - Rational(2)).ceil();
    if (Integer(m) < bound) r.fail(label + ": mdr " + std::to_string(m) + " below " + bound.get_str());
}

}  // namespace

Result catalog_bounds(std::uint32_t seed, int random_cases) {
    Result r{"dPW and alpha bounds on the catalog", 0, 0, {}};
    for (const auto& fi : catalog_families()) {
        std::vector<std::optional<int>> ms;
        if (fi.takes_m) {
            for (int m = fi.m_min; m <= fi.m_min + 2; ++m) ms.push_back(m);
        } else {
            ms.push_back(std::nullopt);
        }
        for (auto m : ms) {
            HomPoly f = get_family(fi.name, m).poly;
            check_bounds(r, fi.name + (m ? "(" + std::to_string(*m) + ")" : ""), f, f.degree() <= 8);
        }
    }
    int catalog = r.cases;
    std::mt19937 rng(seed);
    for (int i = 0; r.cases < catalog + random_cases && i < 10 * random_cases; ++i) {
        HomPoly f = oracle::random_arrangement(rng, 3 + static_cast<int>(rng() % 4));
        if (!is_reduced(f)) continue;
        check_bounds(r, id(f), f, false);
    }
    return r;
}

Result catalog_unions() {
    Result r{"union prediction on catalog unions", 0, 0, {}};
    std::vector<std::tuple<std::string, std::optional<int>, std::string>> pairs = {
        {"T6", {}, "x-y"},
        {"C7", {}, "x+y+2z"},
        {"tri_conical", {}, "y"},
        {"fermat_sextic", {}, "z"},
        {"nodal_sextic", {}, "z"},
        {"cubic_t_sextic", 2, "z"},
        {"quintic_H1", {}, "x-z"},
        {"quintic_H2", {}, "3x-4y+z"},
        {"quintic_H3", {}, "2x-3y+z"},
        {"quintic_H4", {}, "x-2y+z"},
        {"quintic_H4", {}, "x-z"},
        {"medians_sextic", {}, "x^2+y^2+z^2-2x*y-2y*z-2z*x"},
        {"steiner_quartic", {}, "x-2z"},
        {"steiner_quartic", {}, "x+y+2z"},
        {"C_prime", {}, "z"},
    };
    for (int m = 2; m <= 4; ++m) {
        pairs.emplace_back("C_odd", m, "y");
        pairs.emplace_back("C_even", m, "z");
        pairs.emplace_back("D_even", m, "z");
    }
    for (const auto& [name, m, comp] : pairs) check_profile(r, name + " + " + comp, get_family(name, m).poly, lit(comp));
    HomPoly tri_c = lit("(x^2+y^2-z^2)*(2x^2+y^2+2x*z)*(2x^2+y^2-2x*z)", -2);
    check_profile(r, "tri_conical + conic over Q(sqrt -2)", tri_c, lit("2x^2+y^2-2z^2+s*y*z", -2));
    return r;
}

std::vector<Result> all(std::uint32_t seed) {
    return {euler_identity(seed),        bezout_and_prediction(seed + 1), sigma_equals_tau(seed + 2),
            milnor_vs_oracle(seed + 3),  classify_roundtrip(seed + 4),    mdr_vs_oracle(seed + 5),
            tau_max_decreasing(),        catalog_bounds(seed + 6),        catalog_unions()};
}

}  // namespace props
