#include <algorithm>
#include <deque>
#include <memory>
#include <sstream>

#include "freecurve/local.hpp"
#include "freecurve/syzygy.hpp"
#include "local_internal.hpp"

namespace freecurve {

namespace {

struct NotSeparated : std::runtime_error {
    NotSeparated() : std::runtime_error("projection does not separate singular points") {}
};

struct Projection {
    std::array<long, 3> l;
    std::array<long, 3> h;
};

Projection projection_for(int attempt) {
    // Fixed seeded sequence of small integer linear forms.
    std::uint64_t state = 0x2545f4914f6cdd1dULL ^ (static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL);
    auto next = [&state]() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return static_cast<long>((state * 0x2545f4914f6cdd1dULL) >> 33) % 7 - 3;
    };
    Projection p{};
    do {
        for (auto& x : p.l) x = next();
        for (auto& x : p.h) x = next();
    } while (p.l[0] * p.h[1] - p.l[1] * p.h[0] == 0 && p.l[1] * p.h[2] - p.l[2] * p.h[1] == 0 &&
             p.l[0] * p.h[2] - p.l[2] * p.h[0] == 0);
    return p;
}

struct ModResult {
    std::vector<Mod> sqfree;  // monic, low to high
    std::vector<Mod> charpoly;
};

// Square-free part of the characteristic polynomial of h/l on M(f)_k.
std::optional<ModResult> eliminant_mod(const HomPoly& f, int k, int tau, const Projection& pr, const PrimeField& pf) {
    ModEchelon ek = jacobian_echelon(f, k, pf);
    ModEchelon ek1 = jacobian_echelon(f, k + 1, pf);
    if (ek.cols() - ek.rank() != tau || ek1.cols() - ek1.rank() != tau) throw BadPrime();
    std::vector<int> basis_k, basis_k1;
    std::vector<int> pos_k1(ek1.cols(), -1);
    for (int c = 0; c < ek.cols(); ++c)
        if (!ek.is_pivot(c)) basis_k.push_back(c);
    for (int c = 0; c < ek1.cols(); ++c)
        if (!ek1.is_pivot(c)) {
            pos_k1[c] = static_cast<int>(basis_k1.size());
            basis_k1.push_back(c);
        }
    std::vector<std::vector<Mod>> L(tau, std::vector<Mod>(tau, 0)), H = L;
    for (int j = 0; j < tau; ++j) {
        Exponent b = monomial_at(k, basis_k[j]);
        for (int v = 0; v < 3; ++v) {
            Exponent e = b;
            e[v] += 1;
            std::vector<Mod> row(ek1.cols(), 0);
            row[monomial_index(k + 1, e[0], e[1])] = 1;
            ek1.reduce(row);
            Mod lv = pf.image(Rational(pr.l[v])), hv = pf.image(Rational(pr.h[v]));
            for (int c : basis_k1) {
                if (row[c] == 0) continue;
                int i = pos_k1[c];
                L[i][j] = pf.add(L[i][j], pf.mul(lv, row[c]));
                H[i][j] = pf.add(H[i][j], pf.mul(hv, row[c]));
            }
        }
    }
    auto Linv = inverse_mod(L, pf);
    if (Linv.empty()) return std::nullopt;
    std::vector<std::vector<Mod>> T(tau, std::vector<Mod>(tau, 0));
    for (int i = 0; i < tau; ++i)
        for (int m = 0; m < tau; ++m) {
            if (Linv[i][m] == 0) continue;
            for (int j = 0; j < tau; ++j) T[i][j] = (T[i][j] + Linv[i][m] * H[m][j]) % pf.p;
        }
    ModResult out;
    out.charpoly = charpoly_mod(T, pf);
    auto g = poly_gcd_mod(out.charpoly, poly_derivative_mod(out.charpoly, pf), pf);
    out.sqfree = poly_div_mod(out.charpoly, g, pf);
    Mod inv = pf.inv(out.sqfree.back());
    for (auto& x : out.sqfree) x = pf.mul(x, inv);
    return out;
}

struct Eliminant {
    FPoly q;
    PrimeField prime;
    std::vector<Mod> charpoly;
};

// Reconstructs the square-free eliminant over the field by CRT.
std::optional<Eliminant> eliminant(const HomPoly& f, int k, int tau, const Projection& pr) {
    FieldTag d = f.field();
    CrtAccumulator acc;
    int degree = -1;
    std::optional<std::vector<Rational>> previous;
    Eliminant out;
    int failures = 0;
    for (int i = 0; i < 400; ++i) {
        std::vector<Mod> residues;
        std::optional<ModResult> plus, minus;
        PrimeField pf = nth_prime_field(i, d, 1);
        try {
            plus = eliminant_mod(f, k, tau, pr, pf);
            if (!plus) return std::nullopt;
            if (d != 0) {
                minus = eliminant_mod(f, k, tau, pr, nth_prime_field(i, d, -1));
                if (!minus) return std::nullopt;
            }
        } catch (const BadPrime&) {
            if (++failures > 6 && degree < 0) return std::nullopt;
            continue;
        }
        int deg = static_cast<int>(plus->sqfree.size()) - 1;
        if (d != 0 && static_cast<int>(minus->sqfree.size()) - 1 != deg) continue;
        if (deg < degree) continue;
        if (deg > degree) {
            degree = deg;
            acc = CrtAccumulator();
            previous.reset();
            out.prime = pf;
            out.charpoly = plus->charpoly;
        }
        if (d == 0) {
            residues.assign(plus->sqfree.begin(), plus->sqfree.end() - 1);
        } else {
            Mod half = pf.inv(2), inv2r = pf.inv(pf.mul(2, pf.root));
            for (int j = 0; j < deg; ++j)
                residues.push_back(pf.mul(pf.add(plus->sqfree[j], minus->sqfree[j]), half));
            for (int j = 0; j < deg; ++j)
                residues.push_back(pf.mul(pf.sub(plus->sqfree[j], minus->sqfree[j]), inv2r));
        }
        acc.add(residues, pf.p);
        auto rec = acc.reconstruct();
        if (rec && previous && *rec == *previous) {
            std::vector<QuadElem> coeffs;
            for (int j = 0; j < deg; ++j)
                coeffs.push_back(d == 0 ? QuadElem((*rec)[j]) : QuadElem((*rec)[j], (*rec)[deg + j], d));
            coeffs.push_back(QuadElem(1));
            out.q = FPoly(coeffs);
            return out;
        }
        previous = rec;
    }
    return std::nullopt;
}

using KVec = std::array<ExtElem, 3>;

KVec cross(const KVec& a, const KVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

using KPoly = UPoly<ExtElem>;

// g(s) = f(s a + b).
KPoly restrict_poly(const HomPoly& f, const KVec& a, const KVec& b) {
    int n = f.degree();
    std::array<std::vector<KPoly>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        KPoly lin(std::vector<ExtElem>{b[v], a[v]});
        pw[v].push_back(KPoly(ExtElem(1L)));
        for (int e = 1; e <= n; ++e) pw[v].push_back(pw[v].back() * lin);
    }
    KPoly acc;
    for (const auto& [e, c] : f.terms()) acc = acc + pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * ExtElem(c);
    return acc;
}

KVec normalize(KVec p) {
    for (int i = 0; i < 3; ++i) {
        if (p[i].is_zero()) continue;
        ExtElem inv = p[i].inverse();
        for (auto& x : p) x = x * inv;
        p[i] = ExtElem(1L);
        return p;
    }
    throw CurveError(ErrorKind::Precondition, "zero vector");
}

// Singular point on the line h - t l = 0 for t a root of the context modulus.
KVec point_on_line(const HomPoly& f, const std::array<HomPoly, 3>& df, const Projection& pr,
                   const std::shared_ptr<const ExtContext>& ctx) {
    ExtElem t = ExtElem::generator(ctx);
    KVec w;
    for (int v = 0; v < 3; ++v) w[v] = ExtElem(QuadElem(pr.h[v])) - t * ExtElem(QuadElem(pr.l[v]));
    KVec ex{ExtElem(1L), ExtElem(), ExtElem()}, ey{ExtElem(), ExtElem(1L), ExtElem()},
        ez{ExtElem(), ExtElem(), ExtElem(1L)};
    KVec a, b;
    if (!w[2].is_zero()) {
        a = cross(w, ex);
        b = cross(w, ey);
    } else if (!w[1].is_zero()) {
        a = cross(w, ex);
        b = cross(w, ez);
    } else {
        a = cross(w, ey);
        b = cross(w, ez);
    }
    KPoly g;
    for (int v = 0; v < 3; ++v) g = KPoly::gcd(g, restrict_poly(df[v], a, b));
    (void)f;
    // At a point of multiplicity m the partials vanish to order m - 1.
    if (g.degree() > 1) g = g.squarefree_part();
    bool a_singular = true;
    for (int v = 0; v < 3 && a_singular; ++v) a_singular = df[v].eval(a).is_zero();
    if (g.degree() == 1) {
        if (a_singular) throw NotSeparated();
        ExtElem s0 = -g[0] / g[1];
        KVec p;
        for (int v = 0; v < 3; ++v) p[v] = s0 * a[v] + b[v];
        return normalize(p);
    }
    if (g.degree() == 0) {
        if (!a_singular) throw NotSeparated();
        return normalize(a);
    }
    throw NotSeparated();
}

FPoly rep_of(const ExtElem& x) { return x.rep(); }

}  // namespace

std::string fpoly_str(const FPoly& p, const char* var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const QuadElem& c = p[i];
        if (c.is_zero()) continue;
        std::string cs = c.is_rational() ? c.str() : "(" + c.str() + ")";
        bool neg = !cs.empty() && cs[0] == '-';
        if (!out.empty() && !neg) out += '+';
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c.is_one()) {
            cs.clear();
        } else if (c == QuadElem(-1)) {
            cs = "-";
        } else {
            cs += '*';
        }
        out += cs + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

std::string PointOrbit::str() const {
    std::ostringstream os;
    os << "{" << fpoly_str(minpoly, "t") << " = 0} (" << fpoly_str(coords[0], "t") << " : "
       << fpoly_str(coords[1], "t") << " : " << fpoly_str(coords[2], "t") << ")";
    return os.str();
}

int eigen_multiplicity(const SingularLocus& locus, const FPoly& minpoly) {
    const PrimeField& pf = locus.prime;
    std::vector<Mod> phi;
    for (const auto& c : minpoly.coeffs()) phi.push_back(pf.image(c));
    std::vector<Mod> cp = locus.charpoly;
    int mult = 0;
    while (true) {
        auto g = poly_gcd_mod(cp, phi, pf);
        if (g.size() != phi.size()) break;
        cp = poly_div_mod(cp, phi, pf);
        ++mult;
    }
    return mult;
}

SingularLocus locate_singular_points(const HomPoly& f) {
    if (!is_reduced(f)) throw CurveError(ErrorKind::NonReduced, "polynomial is not reduced");
    SingularLocus locus;
    if (f.degree() < 2) return locus;
    TjurinaValue tv = tjurina_with_degree(f);
    locus.tau = tv.tau;
    if (tv.tau == 0) return locus;
    int n = f.degree();
    auto df = partials(f);
    int k0 = std::max(tv.degree, 3 * (n - 2));
    for (int attempt = 0; attempt < 24; ++attempt) {
        Projection pr = projection_for(attempt);
        int k = k0 + attempt / 8;
        auto elim = eliminant(f, k, tv.tau, pr);
        if (!elim) continue;
        locus.prime = elim->prime;
        locus.charpoly = elim->charpoly;
        auto fac = factor_binary_form(BinaryForm{elim->q.degree(), elim->q}, f.field());
        std::deque<FPoly> pieces;
        for (const auto& bf : fac.factors) pieces.push_back(bf.form.coeffs.monic());
        for (const auto& bf : fac.residual) pieces.push_back(bf.form.coeffs.monic());
        std::vector<PointOrbit> orbits;
        bool ok = true;
        while (!pieces.empty() && ok) {
            FPoly phi = pieces.front();
            pieces.pop_front();
            auto ctx = std::make_shared<const ExtContext>(ExtContext{phi});
            try {
                KVec p = point_on_line(f, df, pr, ctx);
                PointOrbit o;
                o.minpoly = phi;
                for (int v = 0; v < 3; ++v) o.coords[v] = rep_of(p[v]);
                orbits.push_back(std::move(o));
            } catch (const SplitRequest& s) {
                FPoly g = s.factor.monic();
                pieces.push_back(g);
                pieces.push_back(phi / g);
            } catch (const NotSeparated&) {
                ok = false;
            }
        }
        if (!ok) continue;
        int total = 0;
        for (const auto& o : orbits) total += o.degree() * eigen_multiplicity(locus, o.minpoly);
        if (total != tv.tau) continue;
        locus.orbits = std::move(orbits);
        return locus;
    }
    throw CurveError(ErrorKind::NonIsolatedSuspected, "could not separate the singular points");
}

}  // namespace freecurve
