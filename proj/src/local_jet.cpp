#include <algorithm>

#include "freecurve/local.hpp"
#include "local_internal.hpp"

namespace freecurve {

std::string AdeType::str() const {
    switch (family) {
        case AdeFamily::A: return "A" + std::to_string(k);
        case AdeFamily::D: return "D" + std::to_string(k);
        case AdeFamily::E: return "E" + std::to_string(k);
        case AdeFamily::NotSimple: return "NotSimple";
    }
    return "NotSimple";
}

AdeType AdeType::parse(const std::string& text) {
    if (text.size() >= 2 && (text[0] == 'A' || text[0] == 'D' || text[0] == 'E')) {
        int k = std::stoi(text.substr(1));
        AdeFamily fam = text[0] == 'A' ? AdeFamily::A : text[0] == 'D' ? AdeFamily::D : AdeFamily::E;
        bool ok = (fam == AdeFamily::A && k >= 1) || (fam == AdeFamily::D && k >= 4) ||
                  (fam == AdeFamily::E && k >= 6 && k <= 8);
        if (ok) return {fam, k};
    }
    if (text == "NotSimple") return {};
    throw CurveError(ErrorKind::Syntax, "unknown singularity type '" + text + "'");
}

Rational arnold_c0(const AdeType& t) {
    switch (t.family) {
        case AdeFamily::A: return Rational::make(1, 2) + Rational::make(1, t.k + 1);
        case AdeFamily::D: return Rational::make(t.k, 2 * (t.k - 1));
        case AdeFamily::E:
            if (t.k == 6) return Rational::make(7, 12);
            if (t.k == 7) return Rational::make(5, 9);
            return Rational::make(8, 15);
        case AdeFamily::NotSimple: break;
    }
    throw CurveError(ErrorKind::NotSimple, "Arnold exponent is only defined for simple singularities");
}

namespace detail {

const ExtElem& Bivariate::at(int i, int j) const {
    static const ExtElem zero;
    if (i < 0 || i >= static_cast<int>(c.size())) return zero;
    if (j < 0 || j >= static_cast<int>(c[i].size())) return zero;
    return c[i][j];
}

void Bivariate::set(int i, int j, ExtElem v) {
    if (i >= static_cast<int>(c.size())) c.resize(i + 1);
    if (j >= static_cast<int>(c[i].size())) c[i].resize(j + 1);
    c[i][j] = std::move(v);
}

int Bivariate::u_degree() const { return static_cast<int>(c.size()) - 1; }

Bivariate jet(const HomPoly& f, const std::array<ExtElem, 3>& p, int chart, int order) {
    int a = chart == 0 ? 1 : 0;
    int b = chart == 2 ? 1 : 2;
    int n = f.degree();
    std::vector<ExtElem> pa{ExtElem(1L)}, pb{ExtElem(1L)};
    for (int k = 1; k <= n; ++k) {
        pa.push_back(pa.back() * p[a]);
        pb.push_back(pb.back() * p[b]);
    }
    // binom[n][k]
    std::vector<std::vector<long>> binom(n + 1);
    for (int i = 0; i <= n; ++i) {
        binom[i].assign(i + 1, 1);
        for (int k = 1; k < i; ++k) binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
    }
    Bivariate g;
    g.c.assign(order + 1, std::vector<ExtElem>());
    for (int s = 0; s <= order; ++s) g.c[s].assign(order - s + 1, ExtElem());
    for (const auto& [e, coef] : f.terms()) {
        int ea = e[a], eb = e[b];
        for (int s = 0; s <= std::min(ea, order); ++s) {
            ExtElem left = pa[ea - s] * ExtElem(coef * QuadElem(binom[ea][s]));
            for (int t = 0; t <= std::min(eb, order - s); ++t) {
                g.c[s][t] = g.c[s][t] + left * (pb[eb - t] * ExtElem(QuadElem(binom[eb][t])));
            }
        }
    }
    return g;
}

Bivariate partial_u(const Bivariate& g) {
    Bivariate out;
    for (int i = 1; i < static_cast<int>(g.c.size()); ++i)
        for (int j = 0; j < static_cast<int>(g.c[i].size()); ++j)
            out.set(i - 1, j, g.c[i][j] * ExtElem(static_cast<long>(i)));
    return out;
}

Bivariate partial_v(const Bivariate& g) {
    Bivariate out;
    for (int i = 0; i < static_cast<int>(g.c.size()); ++i)
        for (int j = 1; j < static_cast<int>(g.c[i].size()); ++j)
            out.set(i, j - 1, g.c[i][j] * ExtElem(static_cast<long>(j)));
    return out;
}

namespace {

// Degree in u of g(u, 0); -1 for the zero polynomial.
int deg_u0(const Bivariate& g) {
    for (int i = g.u_degree(); i >= 0; --i)
        if (!g.at(i, 0).is_zero()) return i;
    return -1;
}

int low_u0(const Bivariate& g) {
    for (int i = 0; i <= g.u_degree(); ++i)
        if (!g.at(i, 0).is_zero()) return i;
    return -1;
}

Bivariate div_v(const Bivariate& g) {
    Bivariate out;
    for (int i = 0; i < static_cast<int>(g.c.size()); ++i)
        for (int j = 1; j < static_cast<int>(g.c[i].size()); ++j) out.set(i, j - 1, g.c[i][j]);
    return out;
}

// G - c * u^shift * F, dropping terms of total degree above limit.
Bivariate combine(const Bivariate& G, const ExtElem& c, const Bivariate& F, int shift, int limit) {
    Bivariate out;
    int rows = std::min(limit + 1, std::max(static_cast<int>(G.c.size()), static_cast<int>(F.c.size()) + shift));
    out.c.resize(std::max(rows, 0));
    for (int i = 0; i < rows; ++i) {
        int cols = std::max(i < static_cast<int>(G.c.size()) ? static_cast<int>(G.c[i].size()) : 0,
                            i - shift >= 0 && i - shift < static_cast<int>(F.c.size())
                                ? static_cast<int>(F.c[i - shift].size())
                                : 0);
        cols = std::min(cols, limit - i + 1);
        out.c[i].resize(cols);
        for (int j = 0; j < cols; ++j) {
            ExtElem f = F.at(i - shift, j);
            out.c[i][j] = f.is_zero() ? G.at(i, j) : G.at(i, j) - c * f;
        }
    }
    return out;
}

}  // namespace

std::optional<int> fulton(Bivariate F, Bivariate G, int limit) {
    int total = 0;
    while (true) {
        if (!F.at(0, 0).is_zero() || !G.at(0, 0).is_zero()) return total;
        if (total > limit) return std::nullopt;
        int r = deg_u0(F), s = deg_u0(G);
        if (r < 0 && s < 0) return std::nullopt;
        int rr = r < 0 ? 0 : r, ss = s < 0 ? 0 : s;
        if (ss < rr || (ss == rr && s < 0 && r >= 0)) {
            std::swap(F, G);
            std::swap(r, s);
        }
        if (r < 0) {
            total += low_u0(G);
            F = div_v(F);
            continue;
        }
        G = combine(G, G.at(s, 0) * F.at(r, 0).inverse(), F, s - r, limit);
    }
}

}  // namespace detail

namespace {

int chart_of(const std::array<ExtElem, 3>& p) {
    for (int i = 0; i < 3; ++i)
        if (!p[i].is_zero()) return i;
    throw CurveError(ErrorKind::Precondition, "the zero vector is not a point");
}

int cone_order(const detail::Bivariate& g, int order) {
    for (int m = 0; m <= order; ++m)
        for (int s = 0; s <= m; ++s)
            if (!g.at(s, m - s).is_zero()) return m;
    return order + 1;
}

}  // namespace

int detail::point_multiplicity(const HomPoly& f, const std::array<ExtElem, 3>& p_in, int cap) {
    std::array<ExtElem, 3> p = p_in;
    int chart = chart_of(p);
    ExtElem inv = p[chart].inverse();
    for (auto& x : p) x = x * inv;
    Bivariate g = jet(f, p, chart, cap);
    return cone_order(g, cap);
}

LocalInvariants analyze_point(const HomPoly& f, const std::array<ExtElem, 3>& p_in) {
    std::array<ExtElem, 3> p = p_in;
    int chart = chart_of(p);
    ExtElem inv = p[chart].inverse();
    for (auto& x : p) x = x * inv;
    int n = f.degree();
    LocalInvariants out;
    int order = 8;
    detail::Bivariate g = detail::jet(f, p, chart, order);
    if (!g.at(0, 0).is_zero()) throw CurveError(ErrorKind::NotOnCurve, "point is not on the curve");
    out.multiplicity = cone_order(g, order);
    if (out.multiplicity == 1) throw CurveError(ErrorKind::NotSingular, "point is a smooth point of the curve");
    int cap = (n - 1) * (n - 1) + 2;
    while (true) {
        auto mu = detail::fulton(detail::partial_u(g), detail::partial_v(g), order - 1);
        if (mu && *mu <= order - 1) {
            out.milnor = *mu;
            break;
        }
        if (order > cap) throw CurveError(ErrorKind::NonIsolated, "singular point is not isolated");
        order *= 2;
        g = detail::jet(f, p, chart, order);
    }
    int mu = out.milnor;
    if (out.multiplicity == 2) {
        out.type = ade_A(mu);
    } else if (out.multiplicity == 3) {
        ExtElem a = g.at(3, 0), b = g.at(2, 1), c = g.at(1, 2), d = g.at(0, 3);
        bool cube = (b * b - ExtElem(3L) * a * c).is_zero() && (b * c - ExtElem(9L) * a * d).is_zero() &&
                    (c * c - ExtElem(3L) * b * d).is_zero();
        if (!cube) {
            out.type = ade_D(mu);
        } else if (mu >= 6 && mu <= 8) {
            out.type = ade_E(mu);
        }
    }
    return out;
}

}  // namespace freecurve
