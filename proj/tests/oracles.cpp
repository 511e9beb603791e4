#include "oracles.hpp"

#include <map>
#include <utility>

namespace oracle {

using namespace freecurve;

int rank(std::vector<std::vector<QuadElem>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        QuadElem inv = rows[r][c].inverse();
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            QuadElem m = rows[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= m * rows[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

std::vector<Exponent> monomials(int k) {
    std::vector<Exponent> out;
    for (int a = k; a >= 0; --a)
        for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
    return out;
}

std::map<Exponent, QuadElem> derivative(const HomPoly& f, int v) {
    std::map<Exponent, QuadElem> out;
    for (const auto& [e, c] : f.terms()) {
        if (e[v] == 0) continue;
        Exponent g = e;
        --g[v];
        out[g] = c * QuadElem(static_cast<long>(e[v]));
    }
    return out;
}

using Affine = std::map<std::pair<int, int>, QuadElem>;

Affine affine_derivative(const Affine& g, int v) {
    Affine out;
    for (const auto& [e, c] : g) {
        int k = v == 0 ? e.first : e.second;
        if (k == 0) continue;
        auto h = e;
        (v == 0 ? h.first : h.second) -= 1;
        out[h] = c * QuadElem(static_cast<long>(k));
    }
    return out;
}

}  // namespace

int mdr(const HomPoly& f) {
    int n = f.degree();
    std::array<std::map<Exponent, QuadElem>, 3> df = {derivative(f, 0), derivative(f, 1), derivative(f, 2)};
    for (int r = 0; r < n; ++r) {
        auto src = monomials(r);
        auto dst = monomials(r + n - 1);
        std::map<Exponent, int> index;
        for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<int>(i);
        std::vector<std::vector<QuadElem>> rows;
        for (int v = 0; v < 3; ++v) {
            for (const auto& m : src) {
                std::vector<QuadElem> row(dst.size());
                for (const auto& [e, c] : df[v]) row[index[{e[0] + m[0], e[1] + m[1], e[2] + m[2]}]] += c;
                rows.push_back(std::move(row));
            }
        }
        int unknowns = static_cast<int>(rows.size());
        if (rank(rows) < unknowns) return r;
    }
    return n - 1;
}

int jet_milnor(const HomPoly& f, int bound) {
    Affine g;
    for (const auto& [e, c] : f.terms()) g[{e[0], e[1]}] += c;
    std::array<Affine, 2> dg = {affine_derivative(g, 0), affine_derivative(g, 1)};
    int N = bound + 2;
    std::map<std::pair<int, int>, int> index;
    for (int a = 0; a < N; ++a)
        for (int b = 0; a + b < N; ++b) index[{a, b}] = static_cast<int>(index.size());
    std::vector<std::vector<QuadElem>> rows;
    for (const auto& [m, unused] : index) {
        for (const auto& d : dg) {
            std::vector<QuadElem> row(index.size());
            bool any = false;
            for (const auto& [e, c] : d) {
                auto it = index.find({e.first + m.first, e.second + m.second});
                if (it == index.end()) continue;
                row[it->second] += c;
                any = true;
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    return static_cast<int>(index.size()) - rank(rows);
}

int line_order(const HomPoly& f, const Point& p, const Point& q) {
    std::array<FPoly, 3> t;
    for (int v = 0; v < 3; ++v) t[v] = FPoly(std::vector<QuadElem>{p[v], q[v]});
    FPoly r = f.eval(t);
    for (int i = 0; i <= r.degree(); ++i)
        if (!r[i].is_zero()) return i;
    return -1;
}

long tau_max(int n, int r) {
    long v = static_cast<long>(n - 1) * (n - 1) - static_cast<long>(r) * (n - 1 - r);
    if (2 * r >= n) {
        long t = 2L * r - n + 2;
        v -= t * (t - 1) / 2;
    }
    return v;
}

std::vector<NormalForm> normal_forms(int max_mu) {
    std::vector<NormalForm> out;
    for (int k = 1; k <= max_mu; ++k)
        out.push_back({ade_A(k), {{k + 1, 0}, {0, 2}}, 2, k + 1, 2 * (k + 1)});
    for (int k = 4; k <= max_mu; ++k)
        out.push_back({ade_D(k), {{2, 1}, {0, k - 1}}, k - 2, 2, 2 * (k - 1)});
    if (max_mu >= 6) out.push_back({ade_E(6), {{3, 0}, {0, 4}}, 4, 3, 12});
    if (max_mu >= 7) out.push_back({ade_E(7), {{3, 0}, {1, 3}}, 3, 2, 9});
    if (max_mu >= 8) out.push_back({ade_E(8), {{3, 0}, {0, 5}}, 5, 3, 15});
    return out;
}

long small(std::mt19937& rng, long k) { return std::uniform_int_distribution<long>(-k, k)(rng); }

namespace {

HomPoly homogenize(const Affine& g) {
    int d = 0;
    for (const auto& [e, c] : g)
        if (!c.is_zero()) d = std::max(d, e.first + e.second);
    HomPoly::Terms t;
    for (const auto& [e, c] : g)
        if (!c.is_zero()) t[{e.first, e.second, d - e.first - e.second}] = c;
    return HomPoly(0, t);
}

}  // namespace

Perturbed perturbed_normal_form(const NormalForm& nf, std::mt19937& rng) {
    Affine g;
    int deg = 0;
    for (const auto& e : nf.terms) {
        g[e] = QuadElem(1L);
        deg = std::max(deg, e.first + e.second);
    }
    int extra = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < extra; ++i) {
        int a = static_cast<int>(rng() % (deg + 1));
        int b = static_cast<int>(rng() % (deg + 1 - a));
        if (a * nf.wx + b * nf.wy <= nf.wd) continue;
        g[{a, b}] += QuadElem(small(rng, 3));
    }
    HomPoly f = homogenize(g);
    LinearChange::Matrix m;
    QuadElem det;
    do {
        for (auto& row : m)
            for (auto& c : row) c = QuadElem(small(rng, 2));
        det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    } while (det.is_zero());
    const auto& r1 = m[0];
    const auto& r2 = m[1];
    Point p = {r1[1] * r2[2] - r1[2] * r2[1], r1[2] * r2[0] - r1[0] * r2[2], r1[0] * r2[1] - r1[1] * r2[0]};
    return {f, apply_change(f, LinearChange(m)), p};
}

HomPoly random_line(std::mt19937& rng, long k) {
    long a, b, c;
    do {
        a = small(rng, k);
        b = small(rng, k);
        c = small(rng, k);
    } while (a == 0 && b == 0 && c == 0);
    return HomPoly::linear(0, QuadElem(a), QuadElem(b), QuadElem(c));
}

HomPoly random_form(std::mt19937& rng, int n, long k, FieldTag d) {
    HomPoly::Terms t;
    for (const auto& e : monomials(n)) {
        QuadElem c(small(rng, k));
        if (d != 0) c += QuadElem(Rational(0), Rational(small(rng, 1)), d);
        if (!c.is_zero()) t[e] = c;
    }
    if (t.empty()) t[{n, 0, 0}] = QuadElem(1L);
    return HomPoly(d, t);
}

HomPoly random_arrangement(std::mt19937& rng, int n) {
    HomPoly f = HomPoly::constant(0, QuadElem(1L));
    int left = n;
    while (left > 0) {
        int piece = (left >= 2 && rng() % 2 == 0) ? 2 : 1;
        f = f * (piece == 1 ? random_line(rng, 2) : random_form(rng, 2, 2));
        left -= piece;
    }
    return f;
}

}  // namespace oracle
