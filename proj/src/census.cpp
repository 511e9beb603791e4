#include <algorithm>
#include <deque>

#include "freecurve/local.hpp"
#include "local_internal.hpp"

namespace freecurve {

Point normalize_point(const Point& p) {
    for (int i = 0; i < 3; ++i) {
        if (p[i].is_zero()) continue;
        QuadElem inv = p[i].inverse();
        Point out;
        for (int v = 0; v < 3; ++v) out[v] = p[v] * inv;
        return out;
    }
    throw CurveError(ErrorKind::Precondition, "the zero vector is not a point");
}

std::string point_str(const Point& p) {
    std::string out = "(" + p[0].str() + ":" + p[1].str() + ":" + p[2].str() + ")";
    for (const auto& c : p)
        if (!c.is_rational()) return out + " s=sqrt(" + std::to_string(c.d()) + ")";
    return out;
}

namespace {

std::array<ExtElem, 3> lift(const Point& p) { return {ExtElem(p[0]), ExtElem(p[1]), ExtElem(p[2])}; }

bool all_rational(const FPoly& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const QuadElem& c) { return c.is_rational(); });
}

QuadElem eval_at(const FPoly& p, const QuadElem& t) {
    QuadElem acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + p[i];
    return acc;
}

}  // namespace

std::optional<std::vector<Point>> detail::expand_orbit(const PointOrbit& o) {
    std::vector<Point> out;
    auto at = [&](const QuadElem& t) {
        Point p;
        for (int v = 0; v < 3; ++v) p[v] = eval_at(o.coords[v], t);
        return normalize_point(p);
    };
    if (o.degree() == 1) {
        out.push_back(at(-o.minpoly[0]));
        return out;
    }
    if (o.degree() != 2 || !all_rational(o.minpoly)) return std::nullopt;
    for (const auto& c : o.coords)
        if (!all_rational(c)) return std::nullopt;
    Rational b = o.minpoly[1].a(), c = o.minpoly[0].a();
    Rational disc = b * b - Rational(4) * c;
    Rational half = Rational::make(1, 2);
    Rational root;
    if (rational_sqrt(disc, root)) {
        out.push_back(at(QuadElem((-b + root) * half)));
        out.push_back(at(QuadElem((-b - root) * half)));
    } else {
        Integer nd = disc.num() * disc.den();
        Integer e = squarefree_part(nd);
        Rational scale;
        rational_sqrt(Rational(Integer(nd / e)), scale);
        scale = scale / Rational(disc.den());
        FieldTag tag = e.get_si();
        out.push_back(at(QuadElem(-b * half, scale * half, tag)));
        out.push_back(at(QuadElem(-b * half, -scale * half, tag)));
    }
    std::sort(out.begin(), out.end(), [](const Point& x, const Point& y) { return point_str(x) < point_str(y); });
    return out;
}

std::array<ExtElem, 3> detail::orbit_point(const PointOrbit& o) {
    std::array<ExtElem, 3> p;
    if (o.degree() == 1) {
        for (int v = 0; v < 3; ++v) p[v] = ExtElem(eval_at(o.coords[v], -o.minpoly[0]));
        return p;
    }
    auto ctx = std::make_shared<const ExtContext>(ExtContext{o.minpoly});
    for (int v = 0; v < 3; ++v) p[v] = ExtElem(ctx, o.coords[v]);
    return p;
}

void detail::visit_orbits(const std::vector<PointOrbit>& orbits,
                          const std::function<void(const PointOrbit&, const std::array<ExtElem, 3>&)>& fn) {
    std::deque<PointOrbit> work(orbits.begin(), orbits.end());
    while (!work.empty()) {
        PointOrbit o = work.front();
        work.pop_front();
        try {
            fn(o, orbit_point(o));
        } catch (const SplitRequest& s) {
            FPoly g = s.factor.monic();
            for (const FPoly& part : {g, o.minpoly / g}) {
                PointOrbit q;
                q.minpoly = part;
                for (int v = 0; v < 3; ++v) q.coords[v] = o.coords[v] % part;
                work.push_back(q);
            }
        }
    }
}

SingularPoints find_singular_points(const HomPoly& f) {
    SingularPoints out;
    SingularLocus locus = locate_singular_points(f);
    for (const auto& o : locus.orbits) {
        auto pts = detail::expand_orbit(o);
        if (pts) {
            out.points.insert(out.points.end(), pts->begin(), pts->end());
        } else {
            out.residual.push_back(o.str());
        }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const Point& x, const Point& y) { return point_str(x) < point_str(y); });
    std::sort(out.residual.begin(), out.residual.end());
    return out;
}

int multiplicity(const HomPoly& f, const Point& p) {
    if (!f.eval(p).is_zero()) throw CurveError(ErrorKind::NotOnCurve, "point " + point_str(p) + " is not on the curve");
    return detail::point_multiplicity(f, lift(p), f.degree());
}

namespace {

using QBi = std::vector<std::vector<QuadElem>>;  // [i][j] u^i v^j

QBi to_qbi(const detail::Bivariate& g) {
    QBi out(g.c.size());
    for (std::size_t i = 0; i < g.c.size(); ++i)
        for (const auto& x : g.c[i]) out[i].push_back(x.constant());
    return out;
}

QBi qbi_mul(const QBi& a, const QBi& b) {
    QBi out;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b[k].size(); ++l) {
                    if (b[k][l].is_zero()) continue;
                    if (out.size() <= i + k) out.resize(i + k + 1);
                    if (out[i + k].size() <= j + l) out[i + k].resize(j + l + 1);
                    out[i + k][j + l] += a[i][j] * b[k][l];
                }
        }
    return out;
}

void qbi_add(QBi& acc, const QBi& b, const QuadElem& c) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j) {
            if (acc.size() <= i) acc.resize(i + 1);
            if (acc[i].size() <= j) acc[i].resize(j + 1);
            acc[i][j] += c * b[i][j];
        }
}

// g(a u + b v, c u + d v)
QBi substitute(const QBi& g, long a, long b, long c, long d) {
    QBi x{{QuadElem(0), QuadElem(b)}, {QuadElem(a)}};
    QBi y{{QuadElem(0), QuadElem(d)}, {QuadElem(c)}};
    int deg = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j)
            if (!g[i][j].is_zero()) deg = std::max(deg, static_cast<int>(i + j));
    std::vector<QBi> px{QBi{{QuadElem(1)}}}, py{QBi{{QuadElem(1)}}};
    for (int k = 1; k <= deg; ++k) {
        px.push_back(qbi_mul(px.back(), x));
        py.push_back(qbi_mul(py.back(), y));
    }
    QBi out;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j)
            if (!g[i][j].is_zero()) qbi_add(out, qbi_mul(px[i], py[j]), g[i][j]);
    return out;
}

FPoly u_slice(const QBi& g) {
    std::vector<QuadElem> c;
    for (const auto& row : g) c.push_back(row.empty() ? QuadElem() : row[0]);
    return FPoly(c);
}

std::optional<int> milnor_once(const QBi& gu, const QBi& gv, long a, long b, long c, long d) {
    if (a * d - b * c == 0) return std::nullopt;
    QBi p = substitute(gu, a, b, c, d), q = substitute(gv, a, b, c, d);
    // (i) the origin is the only common zero on v = 0
    FPoly g = FPoly::gcd(u_slice(p), u_slice(q));
    for (int i = 0; i < g.degree(); ++i)
        if (!g[i].is_zero()) return std::nullopt;
    // (ii) no common zero escapes to infinity along v = 0
    auto lead_at_zero = [](const QBi& h) {
        for (std::size_t i = h.size(); i-- > 0;) {
            bool row = false;
            for (const auto& x : h[i]) row = row || !x.is_zero();
            if (row) return !h[i].empty() && !h[i][0].is_zero();
        }
        return false;
    };
    if (!lead_at_zero(p) && !lead_at_zero(q)) return std::nullopt;
    FPoly res = resultant_u(FBPoly{p}, FBPoly{q});
    if (res.is_zero()) return std::nullopt;  // (iii) not coprime in u
    int order = 0;
    while (res[order].is_zero()) ++order;
    return order;
}

}  // namespace

int milnor(const HomPoly& f, const Point& p_in) {
    Point p = normalize_point(p_in);
    if (!f.eval(p).is_zero()) throw CurveError(ErrorKind::NotOnCurve, "point " + point_str(p) + " is not on the curve");
    int chart = 0;
    while (p[chart].is_zero()) ++chart;
    detail::Bivariate g = detail::jet(f, lift(p), chart, f.degree());
    QBi gu = to_qbi(detail::partial_u(g)), gv = to_qbi(detail::partial_v(g));
    std::uint64_t state = 0x853c49e6748fea9bULL;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 9) - 4;
    };
    std::vector<int> values;
    for (int attempt = 0; attempt < 7 && values.size() < 2; ++attempt) {
        long a = next(), b = next(), c = next(), d = next();
        if (attempt == 0) {
            a = 1;
            d = 1;
        }
        auto mu = milnor_once(gu, gv, a, b, c, d);
        if (mu) values.push_back(*mu);
    }
    if (values.size() < 2) throw CurveError(ErrorKind::NonIsolated, "singular point at " + point_str(p) + " is not isolated");
    if (values[0] != values[1]) throw CurveError(ErrorKind::NonIsolated, "generic projections disagree");
    return values[0];
}

SingularPoint classify_ade(const HomPoly& f, const Point& p_in) {
    Point p = normalize_point(p_in);
    if (!f.eval(p).is_zero()) throw CurveError(ErrorKind::NotOnCurve, "point " + point_str(p) + " is not on the curve");
    LocalInvariants li = analyze_point(f, lift(p));
    SingularPoint sp;
    sp.coords = p;
    sp.locus = point_str(p);
    sp.multiplicity = li.multiplicity;
    sp.milnor = li.milnor;
    sp.type = li.type;
    if (li.type.simple()) {
        sp.c0 = arnold_c0(li.type);
        sp.tjurina_local = li.milnor;
    }
    return sp;
}

std::map<AdeType, int> Census::type_counts() const {
    std::map<AdeType, int> out;
    for (const auto& p : points) out[p.type] += p.orbit_degree;
    return out;
}

std::string Census::multiset_str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [t, c] : type_counts()) {
        if (!first) out += ", ";
        out += std::to_string(c) + "x" + t.str();
        first = false;
    }
    return out + "}";
}

nlohmann::ordered_json Census::to_json() const {
    nlohmann::ordered_json j;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : points) {
        nlohmann::ordered_json e;
        if (p.coords) {
            e["coords"] = {(*p.coords)[0].str(), (*p.coords)[1].str(), (*p.coords)[2].str()};
            for (const auto& c : *p.coords)
                if (!c.is_rational()) {
                    e["s"] = "sqrt(" + std::to_string(c.d()) + ")";
                    break;
                }
        } else {
            e["orbit"] = p.locus;
        }
        e["orbit_degree"] = p.orbit_degree;
        e["ade_type"] = p.type.str();
        e["mu"] = p.milnor;
        e["multiplicity"] = p.multiplicity;
        e["tjurina"] = p.tjurina_local;
        if (p.c0) e["c0"] = p.c0->str();
        j["points"].push_back(std::move(e));
    }
    j["multiset"] = multiset_str();
    j["sigma"] = sigma;
    j["tau_sum"] = tau_sum;
    j["total_tau"] = total_tau;
    j["residual_tau"] = residual_tau;
    j["alpha"] = alpha ? nlohmann::ordered_json(alpha->str()) : nlohmann::ordered_json(nullptr);
    j["complete"] = complete;
    return j;
}

Census census(const HomPoly& f) {
    SingularLocus locus = locate_singular_points(f);
    Census out;
    out.total_tau = locus.tau;
    detail::visit_orbits(locus.orbits, [&](const PointOrbit& o, const std::array<ExtElem, 3>& p) {
        LocalInvariants li = analyze_point(f, p);
        int tj = li.type.simple() ? li.milnor : eigen_multiplicity(locus, o.minpoly);
        auto make = [&](std::optional<Point> coords, std::string text, int degree) {
            SingularPoint sp;
            sp.coords = std::move(coords);
            sp.locus = std::move(text);
            sp.orbit_degree = degree;
            sp.multiplicity = li.multiplicity;
            sp.milnor = li.milnor;
            sp.tjurina_local = tj;
            sp.type = li.type;
            if (li.type.simple()) sp.c0 = arnold_c0(li.type);
            out.points.push_back(std::move(sp));
        };
        auto pts = detail::expand_orbit(o);
        if (pts) {
            for (const auto& q : *pts) make(q, point_str(q), 1);
        } else {
            make(std::nullopt, o.str(), o.degree());
        }
    });
    std::sort(out.points.begin(), out.points.end(), [](const SingularPoint& a, const SingularPoint& b) {
        if (!(a.type == b.type)) return a.type < b.type;
        return a.locus < b.locus;
    });
    bool all_simple = true;
    for (const auto& p : out.points) {
        out.tau_sum += p.orbit_degree * p.tjurina_local;
        if (p.type.simple()) {
            out.sigma += p.orbit_degree * p.milnor;
            if (!out.alpha || *p.c0 < *out.alpha) out.alpha = p.c0;
        } else {
            all_simple = false;
        }
    }
    out.residual_tau = out.total_tau - out.tau_sum;
    out.complete = out.residual_tau == 0 && all_simple;
    return out;
}

}  // namespace freecurve
