#include "freecurve/syzygy.hpp"

#include <atomic>
#include <future>
#include <map>

namespace freecurve {

namespace {

void require_reduced(const HomPoly& f) {
    if (!is_reduced(f)) throw CurveError(ErrorKind::NonReduced, "polynomial is not reduced");
}

// Sparse images of the partial derivatives: (monomial index in degree n-1, coefficient).
std::array<std::vector<std::pair<Exponent, QuadElem>>, 3> partial_terms(const HomPoly& f) {
    std::array<std::vector<std::pair<Exponent, QuadElem>>, 3> out;
    auto p = partials(f);
    for (int v = 0; v < 3; ++v)
        for (const auto& [e, c] : p[v].terms()) out[v].emplace_back(e, c);
    return out;
}

// Rows of the multiplication map (a, b, c) -> a f_x + b f_y + c f_z in
// degree r, indexed by output monomial; column = component * N_r + monomial.
std::map<int, SparseRow> syzygy_rows(const HomPoly& f, int r) {
    int n = f.degree();
    int out_deg = r + n - 1;
    int nr = monomial_count(r);
    auto terms = partial_terms(f);
    std::map<int, SparseRow> rows;
    for (int comp = 0; comp < 3; ++comp)
        for (int mi = 0; mi < nr; ++mi) {
            Exponent m = monomial_at(r, mi);
            for (const auto& [e, c] : terms[comp]) {
                int idx = monomial_index(out_deg, m[0] + e[0], m[1] + e[1]);
                rows[idx].emplace_back(comp * nr + mi, c);
            }
        }
    return rows;
}

int syzygy_rank_mod(const std::map<int, SparseRow>& rows, int cols, const PrimeField& pf) {
    ModEchelon ech(cols, pf);
    for (const auto& [idx, row] : rows) {
        std::vector<Mod> dense(cols, 0);
        for (const auto& [c, v] : row) dense[c] = pf.add(dense[c], pf.image(v));
        ech.insert(std::move(dense));
    }
    return ech.rank();
}

}  // namespace

SyzygySlice ar_dimension(const HomPoly& f, int r) {
    require_reduced(f);
    SyzygySlice out;
    out.r = r;
    int nr = monomial_count(r);
    int cols = 3 * nr;
    ExactEchelon ech(cols);
    for (auto& [idx, row] : syzygy_rows(f, r)) ech.insert(row);
    auto ker = ech.kernel();
    out.dim = static_cast<int>(ker.size());
    FieldTag d = f.field();
    for (const auto& v : ker) {
        std::array<HomPoly, 3> triple;
        for (int comp = 0; comp < 3; ++comp) {
            HomPoly::Terms t;
            for (int mi = 0; mi < nr; ++mi) {
                const QuadElem& c = v[comp * nr + mi];
                if (!c.is_zero()) t.emplace(monomial_at(r, mi), c);
            }
            triple[comp] = t.empty() ? HomPoly(d, -1) : HomPoly(d, std::move(t));
        }
        out.basis.push_back(std::move(triple));
    }
    return out;
}

int mdr(const HomPoly& f) {
    require_reduced(f);
    int n = f.degree();
    for (int r = 0; r <= n - 1; ++r) {
        int cols = 3 * monomial_count(r);
        auto rows = syzygy_rows(f, r);
        // A kernel that is trivial modulo p is trivial over the field.
        bool trivial = false;
        for (int i = 0; i < 3 && !trivial; ++i) {
            try {
                trivial = syzygy_rank_mod(rows, cols, nth_prime_field(i, f.field())) == cols;
            } catch (const BadPrime&) {
            }
        }
        if (trivial) continue;
        if (ar_dimension(f, r).dim > 0) return r;
    }
    return n - 1;
}

ModEchelon jacobian_echelon(const HomPoly& f, int k, const PrimeField& pf) {
    int n = f.degree();
    int cols = monomial_count(k);
    ModEchelon ech(cols, pf);
    int s = k - n + 1;
    if (s < 0) return ech;
    auto terms = partial_terms(f);
    std::array<std::vector<std::pair<Exponent, Mod>>, 3> images;
    for (int v = 0; v < 3; ++v)
        for (const auto& [e, c] : terms[v]) images[v].emplace_back(e, pf.image(c));
    int ns = monomial_count(s);
    for (int mi = 0; mi < ns; ++mi) {
        Exponent m = monomial_at(s, mi);
        for (int v = 0; v < 3; ++v) {
            std::vector<Mod> row(cols, 0);
            for (const auto& [e, c] : images[v]) row[monomial_index(k, m[0] + e[0], m[1] + e[1])] = c;
            ech.insert(std::move(row));
        }
    }
    return ech;
}

namespace {
std::atomic<int> g_threads{1};
}

void set_worker_threads(int n) { g_threads = std::max(1, n); }
int worker_threads() { return g_threads; }

int hilbert_m(const HomPoly& f, int k, int primes) {
    int cols = monomial_count(k);
    if (f.degree() - 1 > k) return cols;
    auto rank_at = [&](int i) -> int {
        try {
            return jacobian_echelon(f, k, nth_prime_field(i, f.field())).rank();
        } catch (const BadPrime&) {
            return -1;
        }
    };
    std::vector<int> ranks(primes, -1);
    if (worker_threads() > 1 && primes > 1) {
        std::vector<std::future<int>> jobs;
        for (int i = 0; i < primes; ++i) jobs.push_back(std::async(std::launch::async, rank_at, i));
        for (int i = 0; i < primes; ++i) ranks[i] = jobs[i].get();
    } else {
        for (int i = 0; i < primes; ++i) ranks[i] = rank_at(i);
    }
    int best = 0;
    int used = 0;
    for (int r : ranks)
        if (r >= 0) {
            best = std::max(best, r);
            ++used;
        }
    for (int i = primes; used < primes && i < primes + 8; ++i) {
        int r = rank_at(i);
        if (r >= 0) {
            best = std::max(best, r);
            ++used;
        }
    }
    return cols - best;
}

int hilbert_m_exact(const HomPoly& f, int k) {
    int n = f.degree();
    int cols = monomial_count(k);
    int s = k - n + 1;
    if (s < 0) return cols;
    ExactEchelon ech(cols);
    auto terms = partial_terms(f);
    int ns = monomial_count(s);
    for (int mi = 0; mi < ns; ++mi) {
        Exponent m = monomial_at(s, mi);
        for (int v = 0; v < 3; ++v) {
            SparseRow row;
            for (const auto& [e, c] : terms[v]) row.emplace_back(monomial_index(k, m[0] + e[0], m[1] + e[1]), c);
            ech.insert(std::move(row));
        }
    }
    return cols - ech.rank();
}

TjurinaValue tjurina_with_degree(const HomPoly& f) {
    int n = f.degree();
    int start = std::max(0, 3 * (n - 2));
    int run_value = -1, run_length = 0, run_start = start;
    for (int k = start; k <= 5 * n; ++k) {
        int h = hilbert_m(f, k);
        if (h == run_value) {
            ++run_length;
        } else {
            run_value = h;
            run_length = 1;
            run_start = k;
        }
        if (run_length == 3) return {run_value, run_start};
    }
    throw CurveError(ErrorKind::NonIsolatedSuspected,
                     "Hilbert function of M(f) did not stabilize by degree " + std::to_string(5 * n));
}

int total_tjurina(const HomPoly& f) {
    require_reduced(f);
    return tjurina_with_degree(f).tau;
}

long tau_max(int n, int r) {
    long base = static_cast<long>(n - 1) * (n - r - 1) + static_cast<long>(r) * r;
    if (2 * r < n) return base;
    long t = 2L * r - n + 2;
    return base - t * (t - 1) / 2;
}

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Unconfirmed: return "unconfirmed";
    }
    return "unconfirmed";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Free: return "Free";
        case Verdict::NearlyFree: return "NearlyFree";
        case Verdict::MaximizingEven: return "MaximizingEven";
        case Verdict::MaximizingOdd: return "MaximizingOdd";
        case Verdict::CaseB_Equality: return "CaseB_Equality";
    }
    return "None";
}

bool FreenessReport::has(Verdict v) const {
    for (auto x : verdicts)
        if (x == v) return true;
    return false;
}

nlohmann::ordered_json FreenessReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["parity"] = even ? "even" : "odd";
    j["mdr"] = r;
    if (exponents) {
        j["exponents"] = {exponents->first, exponents->second};
    } else {
        j["exponents"] = nullptr;
    }
    j["tau"] = tau;
    j["tau_max"] = tau_max;
    j["verdicts"] = nlohmann::ordered_json::array();
    for (auto v : verdicts) {
        std::string label = verdict_name(v);
        if (v == Verdict::Free && exponents)
            label += "(" + std::to_string(exponents->first) + "," + std::to_string(exponents->second) + ")";
        j["verdicts"].push_back(label);
    }
    if (verdicts.empty()) j["verdicts"].push_back("None");
    j["ade_confirmed"] = tri_name(ade_confirmed);
    return j;
}

long maximizing_tau(int n) {
    long m = n / 2;
    return n % 2 == 0 ? 3 * m * (m - 1) + 1 : 3 * m * m + 1;
}

FreenessReport freeness_from_invariants(int n, int r, int tau, Tri ade_confirmed) {
    FreenessReport rep;
    rep.n = n;
    rep.m = n / 2;
    rep.even = n % 2 == 0;
    rep.r = r;
    rep.tau = tau;
    rep.tau_max = tau_max(n, r);
    rep.ade_confirmed = ade_confirmed;
    long m = rep.m;
    bool small = 2 * r < n;
    if (small && tau == rep.tau_max) {
        rep.verdicts.push_back(Verdict::Free);
        rep.exponents = std::make_pair(r, n - 1 - r);
    }
    if ((small && tau == rep.tau_max - 1) || (rep.even && 2 * r == n && tau == rep.tau_max))
        rep.verdicts.push_back(Verdict::NearlyFree);
    if (ade_confirmed == Tri::Yes) {
        if (tau == maximizing_tau(n)) rep.verdicts.push_back(rep.even ? Verdict::MaximizingEven : Verdict::MaximizingOdd);
    }
    if (!rep.even && r == m && tau == 3 * m * m) rep.verdicts.push_back(Verdict::CaseB_Equality);
    return rep;
}

FreenessReport classify_freeness(const HomPoly& f, Tri ade_confirmed) {
    require_reduced(f);
    int r = mdr(f);
    int tau = tjurina_with_degree(f).tau;
    return freeness_from_invariants(f.degree(), r, tau, ade_confirmed);
}

}  // namespace freecurve
