#ifndef FREECURVE_UPOLY_HPP
#define FREECURVE_UPOLY_HPP

// Dense univariate polynomials over a coefficient ring R.
//
// R must provide +, -, *, unary -, is_zero() and inverse(). For the
// extension algebra of ext.hpp, is_zero() and inverse() may throw a split
// request; every routine here is written so that such an exception leaves
// no partially updated state visible to the caller.

#include <cstddef>
#include <utility>
#include <vector>

namespace freecurve {

template <class R>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit UPoly(const R& constant) : c_{constant} { trim(); }

    /// c * t^k.
    static UPoly monomial(const R& c, std::size_t k) {
        std::vector<R> v(k + 1, zero_like(c));
        v[k] = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const R& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& lead() const { return c_.back(); }

    R coeff(std::size_t i, const R& zero) const { return i < c_.size() ? c_[i] : zero; }

    R eval(const R& t) const {
        if (c_.empty()) return R();
        R acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<R> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * R(static_cast<long>(i)));
        return UPoly(std::move(v));
    }

    UPoly operator-() const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(-x);
        UPoly r;
        r.c_ = std::move(v);
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
        const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
        std::vector<R> v = big;
        for (std::size_t i = 0; i < small.size(); ++i) v[i] = v[i] + small[i];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<R> v(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const UPoly& a, const R& s) {
        std::vector<R> v;
        v.reserve(a.c_.size());
        for (const auto& x : a.c_) v.push_back(x * s);
        return UPoly(std::move(v));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] - b.c_[i]).is_zero()) return false;
        return true;
    }

    /// Scales to leading coefficient one.
    UPoly monic() const {
        if (c_.empty()) return *this;
        return *this * c_.back().inverse();
    }

    /// Euclidean division; the divisor's leading coefficient must be a unit.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
        R inv = b.lead().inverse();
        std::vector<R> rem = a.c_;
        int db = b.degree();
        if (a.degree() < db) {
            q = UPoly();
            r = a;
            return;
        }
        std::vector<R> quo(a.degree() - db + 1, zero_like(inv));
        for (int k = a.degree(); k >= db; --k) {
            R coef = rem[k] * inv;
            quo[k - db] = coef;
            for (int i = 0; i <= db; ++i) rem[k - db + i] = rem[k - db + i] - coef * b.c_[i];
        }
        rem.resize(db);
        q = UPoly(std::move(quo));
        r = UPoly(std::move(rem));
    }

    friend UPoly operator%(const UPoly& a, const UPoly& b) {
        UPoly q, r;
        divmod(a, b, q, r);
        return r;
    }
    friend UPoly operator/(const UPoly& a, const UPoly& b) {
        UPoly q, r;
        divmod(a, b, q, r);
        return q;
    }

    /// Monic gcd (zero if both inputs are zero).
    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Extended gcd: returns monic g with s*a + t*b = g.
    static UPoly xgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
        UPoly r0 = a, r1 = b;
        UPoly s0(unit_like(a, b)), s1, t0, t1(unit_like(a, b));
        while (!r1.is_zero()) {
            UPoly q, r;
            divmod(r0, r1, q, r);
            UPoly s2 = s0 - q * s1;
            UPoly t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.is_zero()) {
            s = UPoly();
            t = UPoly();
            return r0;
        }
        R inv = r0.lead().inverse();
        s = s0 * inv;
        t = t0 * inv;
        return r0 * inv;
    }

    /// Square-free decomposition (Yun): factors[i] is the product of the
    /// monic irreducible factors of multiplicity i + 1.
    std::vector<UPoly> squarefree_decomposition() const {
        std::vector<UPoly> out;
        if (degree() <= 0) return out;
        UPoly f = monic();
        UPoly df = f.derivative();
        UPoly a = gcd(f, df);
        UPoly b = f / a;
        UPoly c = df / a;
        UPoly d = c - b.derivative();
        while (b.degree() > 0) {
            UPoly g = gcd(b, d);
            out.push_back(g);
            b = b / g;
            c = d / g;
            d = c - b.derivative();
        }
        while (!out.empty() && out.back().degree() == 0) out.pop_back();
        return out;
    }

    /// Product of the distinct monic irreducible factors.
    UPoly squarefree_part() const {
        if (degree() <= 0) return monic();
        UPoly f = monic();
        return f / gcd(f, f.derivative());
    }

private:
    static R zero_like(const R& x) { return x - x; }
    static R unit_like(const UPoly& a, const UPoly& b) {
        const R& x = a.is_zero() ? b.lead() : a.lead();
        return x * x.inverse();
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<R> c_;
};

}  // namespace freecurve

#endif
