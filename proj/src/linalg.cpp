#include "freecurve/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace freecurve {

Mod PrimeField::pow(Mod a, std::uint64_t e) const {
    Mod r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Mod PrimeField::inv(Mod a) const {
    if (a % p == 0) throw BadPrime();
    return pow(a, p - 2);
}

Mod PrimeField::image(const Rational& r) const {
    Mod n = mpz_fdiv_ui(r.num().get_mpz_t(), p);
    Mod d = mpz_fdiv_ui(r.den().get_mpz_t(), p);
    if (d == 0) throw BadPrime();
    return mul(n, inv(d));
}

Mod PrimeField::image(const QuadElem& x) const {
    Mod a = image(x.a());
    if (x.b().is_zero()) return a;
    return add(a, mul(image(x.b()), root));
}

namespace {

Mod sqrt_mod(Mod a, const PrimeField& f) {
    // Tonelli-Shanks.
    Mod p = f.p;
    a %= p;
    if (a == 0) return 0;
    Mod q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Mod z = 2;
    while (f.pow(z, (p - 1) / 2) != p - 1) ++z;
    Mod m = s, c = f.pow(z, q), t = f.pow(a, q), r = f.pow(a, (q + 1) / 2);
    while (t != 1) {
        Mod i = 0, tt = t;
        while (tt != 1) {
            tt = f.mul(tt, tt);
            ++i;
        }
        Mod b = c;
        for (Mod j = 0; j + i + 1 < m; ++j) b = f.mul(b, b);
        m = i;
        c = f.mul(b, b);
        t = f.mul(t, c);
        r = f.mul(r, b);
    }
    return r;
}

}  // namespace

PrimeField nth_prime_field(int index, FieldTag d, int sign) {
    static std::mutex mu;
    static std::map<FieldTag, std::vector<PrimeField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& list = cache[d];
    Mod cand = list.empty() ? (Mod(1) << 31) - 1 : list.back().p - 2;
    while (static_cast<int>(list.size()) <= index) {
        mpz_class c(static_cast<unsigned long>(cand));
        if (mpz_probab_prime_p(c.get_mpz_t(), 30)) {
            PrimeField f{cand, 0};
            bool ok = true;
            if (d != 0) {
                Mod dm = static_cast<Mod>(((d % static_cast<std::int64_t>(cand)) + static_cast<std::int64_t>(cand)) %
                                          static_cast<std::int64_t>(cand));
                ok = dm != 0 && f.pow(dm, (cand - 1) / 2) == 1;
                if (ok) f.root = sqrt_mod(dm, f);
            }
            if (ok) list.push_back(f);
        }
        cand -= 2;
    }
    PrimeField f = list[index];
    if (sign < 0) f.root = f.neg(f.root);
    return f;
}

bool ModEchelon::insert(std::vector<Mod> row) {
    reduce(row);
    int lead = 0;
    while (lead < cols_ && row[lead] == 0) ++lead;
    if (lead == cols_) return false;
    Mod inv = f_.inv(row[lead]);
    std::vector<Mod> stored(row.begin() + lead, row.end());
    for (auto& x : stored) x = f_.mul(x, inv);
    pivot_row_[lead] = static_cast<int>(rows_.size());
    pivot_col_.push_back(lead);
    rows_.push_back(std::move(stored));
    return true;
}

void ModEchelon::reduce(std::vector<Mod>& row) const {
    const Mod p = f_.p;
    for (int c = 0; c < cols_; ++c) {
        if (row[c] == 0) continue;
        int r = pivot_row_[c];
        if (r < 0) continue;
        Mod factor = p - row[c];
        const auto& pr = rows_[r];
        Mod* dst = row.data() + c;
        for (std::size_t j = 0; j < pr.size(); ++j) {
            if (pr[j]) dst[j] = (dst[j] + factor * pr[j]) % p;
        }
    }
}

namespace {

void sort_row(SparseRow& row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

// row += c * other, both sorted by column.
SparseRow axpy(const SparseRow& row, const QuadElem& c, const SparseRow& other) {
    SparseRow out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
        if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || other[j].first < row[i].first) {
            out.emplace_back(other[j].first, c * other[j].second);
            ++j;
        } else {
            QuadElem v = row[i].second + c * other[j].second;
            if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseRow ExactEchelon::reduce(SparseRow row) const {
    sort_row(row);
    std::size_t pos = 0;
    while (pos < row.size()) {
        int c = row[pos].first;
        int r = pivot_row_[c];
        if (r < 0) {
            ++pos;
            continue;
        }
        QuadElem factor = -row[pos].second;
        row = axpy(row, factor, rows_[r]);
        // the entry at pos is now gone; entries before pos are untouched
    }
    return row;
}

bool ExactEchelon::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    QuadElem inv = row.front().second.inverse();
    for (auto& [c, v] : row) v *= inv;
    int lead = row.front().first;
    // Keep the form fully reduced: clear the new pivot column elsewhere.
    for (auto& other : rows_) {
        auto it = std::lower_bound(other.begin(), other.end(), lead,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != other.end() && it->first == lead) other = axpy(other, -it->second, row);
    }
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

std::vector<std::vector<QuadElem>> ExactEchelon::kernel() const {
    std::vector<std::vector<QuadElem>> out;
    for (int free = 0; free < cols_; ++free) {
        if (pivot_row_[free] >= 0) continue;
        std::vector<QuadElem> v(cols_);
        v[free] = QuadElem(1);
        for (const auto& row : rows_) {
            for (const auto& [c, x] : row) {
                if (c == free) {
                    v[row.front().first] = -x;
                    break;
                }
                if (c > free) break;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

void CrtAccumulator::add(const std::vector<Mod>& residues, Mod p) {
    if (values_.empty()) values_.assign(residues.size(), Integer(0));
    if (values_.size() != residues.size()) throw std::logic_error("CRT length mismatch");
    Integer pm(static_cast<unsigned long>(p));
    Integer minv;
    Integer mm = modulus_ % pm;
    mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pm.get_mpz_t());
    for (std::size_t i = 0; i < residues.size(); ++i) {
        // x = v + M * ((r - v) * M^-1 mod p)
        Integer r(static_cast<unsigned long>(residues[i]));
        Integer t = ((r - values_[i]) % pm + pm) % pm;
        t = (t * minv) % pm;
        values_[i] += modulus_ * t;
    }
    modulus_ *= pm;
}

std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m) {
    Integer bound;
    Integer half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Integer r0 = m, r1 = ((u % m) + m) % m;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (abs(t1) > bound || t1 == 0) return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Rational::make(r1, t1);
}

std::optional<std::vector<Rational>> CrtAccumulator::reconstruct() const {
    std::vector<Rational> out;
    for (const auto& v : values_) {
        auto r = rational_reconstruct(v, modulus_);
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    return out;
}

std::vector<Mod> charpoly_mod(std::vector<std::vector<Mod>> a, const PrimeField& f) {
    const int n = static_cast<int>(a.size());
    // Similarity reduction to upper Hessenberg form.
    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (a[i][j] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            std::swap(a[piv], a[j + 1]);
            for (int r = 0; r < n; ++r) std::swap(a[r][piv], a[r][j + 1]);
        }
        Mod inv = f.inv(a[j + 1][j]);
        for (int i = j + 2; i < n; ++i) {
            if (a[i][j] == 0) continue;
            Mod u = f.mul(a[i][j], inv);
            for (int c = 0; c < n; ++c) a[i][c] = f.sub(a[i][c], f.mul(u, a[j + 1][c]));
            for (int r = 0; r < n; ++r) a[r][j + 1] = f.add(a[r][j + 1], f.mul(u, a[r][i]));
        }
    }
    // p_m(t) = (t - h_mm) p_{m-1} - sum_i h_im (prod h_{k,k-1}) p_{i-1}
    std::vector<std::vector<Mod>> ps(n + 1);
    ps[0] = {1};
    for (int m = 1; m <= n; ++m) {
        std::vector<Mod> cur(m + 1, 0);
        const auto& prev = ps[m - 1];
        for (int k = 0; k < m; ++k) {
            cur[k + 1] = f.add(cur[k + 1], prev[k]);
            cur[k] = f.sub(cur[k], f.mul(a[m - 1][m - 1], prev[k]));
        }
        Mod prod = 1;
        for (int i = m - 1; i >= 1; --i) {
            prod = f.mul(prod, a[i][i - 1]);
            if (prod == 0) break;
            Mod coef = f.mul(a[i - 1][m - 1], prod);
            const auto& q = ps[i - 1];
            for (std::size_t k = 0; k < q.size(); ++k) cur[k] = f.sub(cur[k], f.mul(coef, q[k]));
        }
        ps[m] = std::move(cur);
    }
    return ps[n];
}

std::vector<std::vector<Mod>> inverse_mod(std::vector<std::vector<Mod>> a, const PrimeField& f) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Mod>> inv(n, std::vector<Mod>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return {};
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Mod s = f.inv(a[c][c]);
        for (int k = 0; k < n; ++k) {
            a[c][k] = f.mul(a[c][k], s);
            inv[c][k] = f.mul(inv[c][k], s);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Mod u = a[r][c];
            for (int k = 0; k < n; ++k) {
                a[r][k] = f.sub(a[r][k], f.mul(u, a[c][k]));
                inv[r][k] = f.sub(inv[r][k], f.mul(u, inv[c][k]));
            }
        }
    }
    return inv;
}

namespace {

void trim(std::vector<Mod>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Mod> poly_rem_mod(std::vector<Mod> a, const std::vector<Mod>& b, const PrimeField& f) {
    trim(a);
    Mod inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        Mod c = f.mul(a.back(), inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        trim(a);
    }
    return a;
}

}  // namespace

std::vector<Mod> poly_gcd_mod(std::vector<Mod> a, std::vector<Mod> b, const PrimeField& f) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_rem_mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    Mod inv = f.inv(a.back());
    for (auto& x : a) x = f.mul(x, inv);
    return a;
}

std::vector<Mod> poly_derivative_mod(const std::vector<Mod>& a, const PrimeField& f) {
    std::vector<Mod> d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(f.mul(a[i], i % f.p));
    trim(d);
    return d;
}

std::vector<Mod> poly_div_mod(const std::vector<Mod>& a_in, const std::vector<Mod>& b, const PrimeField& f) {
    std::vector<Mod> a = a_in;
    trim(a);
    if (a.size() < b.size()) return {};
    std::vector<Mod> q(a.size() - b.size() + 1, 0);
    Mod inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        Mod c = f.mul(a.back(), inv);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        a.pop_back();
        trim(a);
        if (a.size() < b.size()) break;
    }
    return q;
}

}  // namespace freecurve
