#include "freecurve/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <sstream>

namespace freecurve {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax: return "Syntax";
        case ErrorKind::NonHomogeneous: return "NonHomogeneous";
        case ErrorKind::NonReduced: return "NonReduced";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::NotOnCurve: return "NotOnCurve";
        case ErrorKind::NotSingular: return "NotSingular";
        case ErrorKind::NonIsolated: return "NonIsolated";
        case ErrorKind::NonIsolatedSuspected: return "NonIsolatedSuspected";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::NonSimpleUnion: return "NonSimpleUnion";
        case ErrorKind::ProfileIncomplete: return "ProfileIncomplete";
        case ErrorKind::SharedComponent: return "SharedComponent";
        case ErrorKind::UnsupportedComponent: return "UnsupportedComponent";
        case ErrorKind::Precondition: return "Precondition";
        case ErrorKind::UnknownCurve: return "UnknownCurve";
        case ErrorKind::ConstructionRejected: return "ConstructionRejected";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Exponent monomial_at(int k, int index) {
    // Inverse of monomial_index: find t = k - i with t(t+1)/2 <= index.
    int t = 0;
    while ((t + 1) * (t + 2) / 2 <= index) ++t;
    int i = k - t;
    int j = k - i - (index - t * (t + 1) / 2);
    return {i, j, k - i - j};
}

HomPoly::HomPoly(FieldTag d, Terms terms) : d_(d), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    degree_ = -1;
    for (const auto& [e, c] : terms_) {
        int deg = e[0] + e[1] + e[2];
        if (degree_ < 0) {
            degree_ = deg;
        } else if (deg != degree_) {
            throw CurveError(ErrorKind::NonHomogeneous, "NonHomogeneous(" + std::to_string(degree_) + "," +
                                                            std::to_string(deg) + ")");
        }
    }
}

HomPoly HomPoly::constant(FieldTag d, const QuadElem& c) {
    Terms t;
    t[{0, 0, 0}] = c;
    return HomPoly(d, std::move(t));
}

HomPoly HomPoly::variable(FieldTag d, int which) {
    Terms t;
    Exponent e{0, 0, 0};
    e[which] = 1;
    t[e] = QuadElem(1);
    return HomPoly(d, std::move(t));
}

HomPoly HomPoly::linear(FieldTag d, const QuadElem& a, const QuadElem& b, const QuadElem& c) {
    Terms t;
    t[{1, 0, 0}] = a;
    t[{0, 1, 0}] = b;
    t[{0, 0, 1}] = c;
    return HomPoly(d, std::move(t));
}

QuadElem HomPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QuadElem() : it->second;
}

HomPoly HomPoly::operator-() const {
    HomPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

HomPoly operator+(const HomPoly& a, const HomPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    HomPoly::Terms t = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto it = t.find(e);
        if (it == t.end()) {
            t.emplace(e, c);
        } else {
            it->second += c;
        }
    }
    return HomPoly(a.d_ != 0 ? a.d_ : b.d_, std::move(t));
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    FieldTag d = a.d_ != 0 ? a.d_ : b.d_;
    if (a.is_zero() || b.is_zero()) return HomPoly(d, -1);
    HomPoly::Terms t;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            auto it = t.find(e);
            if (it == t.end()) {
                t.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
            }
        }
    }
    return HomPoly(d, std::move(t));
}

HomPoly operator*(const HomPoly& a, const QuadElem& c) {
    HomPoly::Terms t;
    for (const auto& [e, x] : a.terms_) t.emplace(e, x * c);
    return HomPoly(a.d_, std::move(t));
}

bool operator==(const HomPoly& a, const HomPoly& b) { return a.terms_ == b.terms_; }

HomPoly HomPoly::pow(int e) const {
    HomPoly result = constant(d_, QuadElem(1));
    HomPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

HomPoly HomPoly::diff(int var) const {
    Terms t;
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent ne = e;
        ne[var] -= 1;
        t.emplace(ne, c * QuadElem(static_cast<long>(e[var])));
    }
    HomPoly r(d_, std::move(t));
    if (r.is_zero()) r.degree_ = degree_ - 1;
    return r;
}

HomPoly HomPoly::clear_denominators() const {
    Integer l = 1;
    for (const auto& [e, c] : terms_) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.a().den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.b().den().get_mpz_t());
    }
    return *this * QuadElem(Rational(l));
}

HomPoly HomPoly::normalized() const {
    if (is_zero()) return *this;
    return *this * terms_.begin()->second.inverse();
}

namespace {

std::string monomial_str(const Exponent& e) {
    std::string out;
    const char names[3] = {'x', 'y', 'z'};
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[v];
        if (e[v] > 1) out += '^' + std::to_string(e[v]);
    }
    return out;
}

}  // namespace

std::string HomPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_str(e);
        std::string coef;
        bool negative = false;
        if (c.is_rational()) {
            Rational a = c.a();
            if (a.sign() < 0) {
                negative = true;
                a = -a;
            }
            if (!(a == Rational(1)) || mono.empty()) coef = a.str();
        } else {
            coef = "(" + c.str() + ")";
        }
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? "-" : "+";
        }
        out += coef;
        if (!coef.empty() && !mono.empty()) out += '*';
        out += mono;
    }
    return out;
}

namespace {

using RawTerms = std::map<Exponent, QuadElem, ExponentGreater>;

RawTerms raw_mul(const RawTerms& a, const RawTerms& b) {
    RawTerms out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

RawTerms raw_add(RawTerms a, const RawTerms& b, bool subtract) {
    for (const auto& [e, c] : b) {
        if (subtract) {
            a[e] -= c;
        } else {
            a[e] += c;
        }
    }
    for (auto it = a.begin(); it != a.end();) it = it->second.is_zero() ? a.erase(it) : std::next(it);
    return a;
}

class Parser {
public:
    Parser(const std::string& text, FieldTag d) : s_(text), d_(d) {}

    RawTerms parse() {
        RawTerms r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'y' || c == 'z' ||
               c == 's';
    }

    RawTerms expr() {
        RawTerms acc;
        bool first = true;
        while (true) {
            skip();
            bool negative = false;
            if (peek('+') || peek('-')) {
                negative = s_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            RawTerms t = term();
            acc = raw_add(std::move(acc), t, negative);
            first = false;
            skip();
            if (!(peek('+') || peek('-'))) break;
        }
        return acc;
    }

    RawTerms term() {
        RawTerms acc = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = raw_mul(acc, power());
            } else if (starts_primary()) {
                acc = raw_mul(acc, power());
            } else {
                break;
            }
        }
        return acc;
    }

    RawTerms power() {
        RawTerms base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            RawTerms r;
            r[{0, 0, 0}] = QuadElem(1);
            for (int i = 0; i < e; ++i) r = raw_mul(r, base);
            return r;
        }
        return base;
    }

    Integer integer_literal() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(s_.substr(start, pos_ - start));
    }

    RawTerms primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        RawTerms r;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer_literal();
            Integer den = 1;
            if (peek('/')) {
                ++pos_;
                den = integer_literal();
                if (den == 0) fail("zero denominator");
            }
            QuadElem v(Rational::make(num, den));
            if (!v.is_zero()) r[{0, 0, 0}] = v;
            return r;
        }
        if (c == '(') {
            ++pos_;
            r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            Exponent e{0, 0, 0};
            e[c - 'x'] = 1;
            r[e] = QuadElem(1);
            return r;
        }
        if (c == 's') {
            if (d_ == 0) fail("'s' requires a quadratic field");
            ++pos_;
            r[{0, 0, 0}] = QuadElem::root(d_);
            return r;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    FieldTag d_;
    std::size_t pos_ = 0;
};

}  // namespace

HomPoly parse_poly(const std::string& text, FieldTag d) {
    check_field_tag(d);
    Parser p(text, d);
    RawTerms raw = p.parse();
    return HomPoly(d, std::move(raw));
}

std::array<HomPoly, 3> partials(const HomPoly& f) { return {f.diff(0), f.diff(1), f.diff(2)}; }

LinearChange::LinearChange(Matrix m) : m_(std::move(m)) {
    if (det().is_zero()) throw CurveError(ErrorKind::SingularMatrix, "linear change has zero determinant");
}

LinearChange LinearChange::identity() {
    Matrix m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = QuadElem(i == j ? 1 : 0);
    return LinearChange(m);
}

QuadElem LinearChange::det() const {
    const auto& a = m_;
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

LinearChange LinearChange::compose(const LinearChange& n) const {
    Matrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            QuadElem s;
            for (int k = 0; k < 3; ++k) s += m_[i][k] * n.m_[k][j];
            r[i][j] = s;
        }
    return LinearChange(r);
}

HomPoly apply_change(const HomPoly& f, const LinearChange& m) {
    FieldTag d = f.field();
    for (const auto& row : m.matrix())
        for (const auto& c : row)
            if (c.d() != 0) d = c.d();
    if (f.is_zero()) return f;
    int n = f.degree();
    std::array<std::vector<HomPoly>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        const auto& row = m.matrix()[v];
        HomPoly lin = HomPoly::linear(d, row[0], row[1], row[2]);
        pw[v].push_back(HomPoly::constant(d, QuadElem(1)));
        for (int k = 1; k <= n; ++k) pw[v].push_back(pw[v].back() * lin);
    }
    HomPoly out(d, n);
    HomPoly::Terms acc;
    for (const auto& [e, c] : f.terms()) {
        HomPoly t = pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * c;
        for (const auto& [te, tc] : t.terms()) acc[te] += tc;
    }
    HomPoly r(d, std::move(acc));
    return r;
}

BinaryForm restrict_to_line(const HomPoly& f, const std::array<QuadElem, 3>& p, const std::array<QuadElem, 3>& q) {
    // f(s p + q) as a polynomial in s; the binary form is its homogenization.
    int n = f.degree();
    std::array<std::vector<FPoly>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        FPoly lin(std::vector<QuadElem>{q[v], p[v]});
        pw[v].push_back(FPoly(QuadElem(1)));
        for (int k = 1; k <= n; ++k) pw[v].push_back(pw[v].back() * lin);
    }
    FPoly acc;
    for (const auto& [e, c] : f.terms()) acc = acc + pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * c;
    return BinaryForm{n, acc};
}

bool is_reduced(const HomPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() <= 1) return true;
    // A non-reduced form restricts to a form with a repeated factor on every
    // line; a reduced one restricts to a square-free form on a general line.
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<long>(state % 19) - 9;
    };
    for (int attempt = 0; attempt < 40; ++attempt) {
        std::array<QuadElem, 3> p{QuadElem(1), QuadElem(next()), QuadElem(next())};
        std::array<QuadElem, 3> q{QuadElem(next()), QuadElem(1), QuadElem(next())};
        BinaryForm b = restrict_to_line(f, p, q);
        if (b.coeffs.is_zero()) continue;
        if (b.degree - b.coeffs.degree() > 1) continue;
        FPoly g = FPoly::gcd(b.coeffs, b.coeffs.derivative());
        if (g.degree() == 0) return true;
    }
    return false;
}

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b) { return BinaryForm{a.degree + b.degree, a.coeffs * b.coeffs}; }

std::string binary_form_str(const BinaryForm& b, const char* u, const char* v) {
    std::ostringstream os;
    bool first = true;
    for (int i = b.coeffs.degree(); i >= 0; --i) {
        const QuadElem& c = b.coeffs[i];
        if (c.is_zero()) continue;
        int j = b.degree - i;
        std::string mono;
        if (i > 0) mono += std::string(u) + (i > 1 ? "^" + std::to_string(i) : "");
        if (j > 0) mono += (mono.empty() ? "" : "*") + std::string(v) + (j > 1 ? "^" + std::to_string(j) : "");
        std::string cs;
        bool neg = false;
        if (c.is_rational()) {
            Rational a = c.a();
            if (a.sign() < 0) {
                neg = true;
                a = -a;
            }
            if (!(a == Rational(1)) || mono.empty()) cs = a.str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (!first || neg) os << (neg ? "-" : "+");
        os << cs << (!cs.empty() && !mono.empty() ? "*" : "") << mono;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

using cld = std::complex<long double>;

// Simultaneous (Durand-Kerner / Weierstrass) iteration; only used to
// propose candidates that are then verified exactly.
std::vector<cld> numeric_roots(const std::vector<cld>& coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<cld> roots;
    if (n <= 0) return roots;
    std::vector<cld> monic(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) monic[i] = coeffs[i] / coeffs.back();
    long double radius = 0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(monic[i]), 1.0L / (n - i)));
    radius = 2 * radius + 1;
    for (int i = 0; i < n; ++i) roots.push_back(std::polar(radius, 0.4L + 2 * 3.14159265358979323846L * i / n));
    auto eval = [&](cld z) {
        cld acc = monic[n];
        for (int i = n - 1; i >= 0; --i) acc = acc * z + monic[i];
        return acc;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (int i = 0; i < n; ++i) {
            cld denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            if (std::abs(denom) == 0) denom = 1e-30L;
            cld delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            change = std::max(change, std::abs(delta) / (1 + std::abs(roots[i])));
        }
        if (change < 1e-17L) break;
    }
    // Newton polish against the original polynomial.
    for (auto& r : roots)
        for (int k = 0; k < 5; ++k) {
            cld p = monic[n], dp = 0;
            for (int i = n - 1; i >= 0; --i) {
                dp = dp * r + p;
                p = p * r + monic[i];
            }
            if (std::abs(dp) == 0) break;
            r -= p / dp;
        }
    return roots;
}

long double to_ld(const Rational& r) {
    long double n = mpz_get_d(r.num().get_mpz_t());
    long double d = mpz_get_d(r.den().get_mpz_t());
    return n / d;
}

/// Least common multiple of coefficient denominators times the leading
/// coefficient of the resulting primitive integer polynomial.
Integer integral_lead(const FPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.a().den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.b().den().get_mpz_t());
    }
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Rational a = c.a() * Rational(l);
        Rational b = c.b() * Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.num().get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.num().get_mpz_t());
    }
    QuadElem lead = p.lead() * QuadElem(Rational(l)) / QuadElem(Rational(g));
    // The norm of the leading coefficient clears denominators of algebraic integers' multiples.
    Rational n = lead.is_rational() ? lead.a() : lead.norm();
    Integer out = abs(n.num());
    return out == 0 ? Integer(1) : out;
}

Rational round_rational(long double value, const Integer& scale) {
    long double s = mpz_get_d(scale.get_mpz_t());
    long double v = std::round(value * s);
    mpz_class num;
    std::ostringstream os;
    os.precision(0);
    os << std::fixed << v;
    num = mpz_class(os.str());
    return Rational::make(num, scale);
}

std::vector<cld> embed(const FPoly& p, FieldTag d, int sign) {
    long double root = std::sqrt(std::fabs(static_cast<long double>(d)));
    cld s = d < 0 ? cld(0, root) : cld(root, 0);
    std::vector<cld> out;
    for (const auto& c : p.coeffs()) out.push_back(cld(to_ld(c.a())) + cld(sign) * s * to_ld(c.b()));
    return out;
}

void add_unique(std::vector<QuadElem>& roots, const QuadElem& r) {
    for (const auto& x : roots)
        if (x == r) return;
    roots.push_back(r);
}

}  // namespace

std::vector<QuadElem> roots_in_field(const FPoly& p_in, FieldTag d) {
    std::vector<QuadElem> roots;
    if (p_in.degree() <= 0) return roots;
    FPoly p = p_in.squarefree_part();
    if (p.degree() == 1) {
        roots.push_back(-p[0] / p[1]);
        return roots;
    }
    bool rational_coeffs = std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const QuadElem& c) { return c.is_rational(); });
    Integer lead = integral_lead(p);
    if (d == 0 || rational_coeffs) {
        for (const auto& z : numeric_roots(embed(p, 0, 1))) {
            if (std::fabs(z.imag()) > 1e-6L * (1 + std::abs(z))) continue;
            Rational cand = round_rational(z.real(), lead);
            QuadElem c(cand);
            if (p.eval(c).is_zero()) add_unique(roots, c);
        }
        if (d == 0) return roots;
    }
    // Roots a + b sqrt(d): 2*L*a and 2*L*b are integers.
    Integer scale = 2 * lead;
    long double sq = std::sqrt(std::fabs(static_cast<long double>(d)));
    if (d < 0) {
        for (const auto& z : numeric_roots(embed(p, d, 1))) {
            QuadElem c(round_rational(z.real(), scale), round_rational(z.imag() / sq, scale), d);
            if (p.eval(c).is_zero()) add_unique(roots, c);
        }
    } else {
        auto plus = numeric_roots(embed(p, d, 1));
        auto minus = numeric_roots(embed(p, d, -1));
        for (const auto& z1 : plus) {
            if (std::fabs(z1.imag()) > 1e-6L * (1 + std::abs(z1))) continue;
            for (const auto& z2 : minus) {
                if (std::fabs(z2.imag()) > 1e-6L * (1 + std::abs(z2))) continue;
                long double a = (z1.real() + z2.real()) / 2, b = (z1.real() - z2.real()) / (2 * sq);
                QuadElem c(round_rational(a, scale), round_rational(b, scale), d);
                if (p.eval(c).is_zero()) add_unique(roots, c);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), canonical_less);
    return roots;
}

BinaryFactorization factor_binary_form(const BinaryForm& b, FieldTag d) {
    BinaryFactorization out;
    if (b.coeffs.is_zero()) throw CurveError(ErrorKind::Precondition, "cannot factor the zero form");
    out.unit = b.coeffs.lead();
    int v_mult = b.degree - b.coeffs.degree();
    if (v_mult > 0) out.factors.push_back({BinaryForm{1, FPoly(QuadElem(1))}, v_mult});
    auto groups = b.coeffs.squarefree_decomposition();
    for (std::size_t i = 0; i < groups.size(); ++i) {
        FPoly rest = groups[i];
        int mult = static_cast<int>(i) + 1;
        if (rest.degree() <= 0) continue;
        for (const auto& r : roots_in_field(rest, d)) {
            FPoly lin(std::vector<QuadElem>{-r, QuadElem(1)});
            out.factors.push_back({BinaryForm{1, lin}, mult});
            rest = rest / lin;
        }
        if (rest.degree() == 2) {
            out.factors.push_back({BinaryForm{2, rest.monic()}, mult});
            continue;
        }
        if (rest.degree() >= 4 && std::all_of(rest.coeffs().begin(), rest.coeffs().end(),
                                               [](const QuadElem& c) { return c.is_rational(); })) {
            // Quadratic factors over Q from pairs of numeric roots.
            Integer lead = integral_lead(rest);
            auto zs = numeric_roots(embed(rest, 0, 1));
            for (std::size_t a = 0; a < zs.size() && rest.degree() >= 4; ++a)
                for (std::size_t c = a + 1; c < zs.size() && rest.degree() >= 4; ++c) {
                    cld s = zs[a] + zs[c], pr = zs[a] * zs[c];
                    if (std::fabs(s.imag()) > 1e-6L * (1 + std::abs(s)) ||
                        std::fabs(pr.imag()) > 1e-6L * (1 + std::abs(pr)))
                        continue;
                    FPoly q(std::vector<QuadElem>{QuadElem(round_rational(pr.real(), lead)),
                                                  QuadElem(-round_rational(s.real(), lead)), QuadElem(1)});
                    if ((rest % q).is_zero()) {
                        out.factors.push_back({BinaryForm{2, q}, mult});
                        rest = rest / q;
                    }
                }
            if (rest.degree() == 2) {
                out.factors.push_back({BinaryForm{2, rest.monic()}, mult});
                continue;
            }
        }
        if (rest.degree() >= 3) out.residual.push_back({BinaryForm{rest.degree(), rest.monic()}, mult});
    }
    return out;
}

namespace {

// Fraction-free determinant of a matrix of univariate polynomials.
FPoly bareiss_det(std::vector<std::vector<FPoly>> m) {
    std::size_t n = m.size();
    if (n == 0) return FPoly(QuadElem(1));
    FPoly prev(QuadElem(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return FPoly();
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = FPoly();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Coefficients of g as a polynomial in u, each a polynomial in v.
std::vector<FPoly> u_coeffs(const FBPoly& g) {
    std::vector<FPoly> out;
    for (const auto& row : g.c) out.push_back(FPoly(row));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

FPoly power(const FPoly& p, int e) {
    FPoly r(QuadElem(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

}  // namespace

FPoly resultant_u(const FBPoly& g, const FBPoly& h) {
    auto a = u_coeffs(g), b = u_coeffs(h);
    if (a.empty() || b.empty()) return FPoly();
    int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    if (m == 0) return power(a[0], n);
    if (n == 0) return power(b[0], m);
    int size = m + n;
    std::vector<std::vector<FPoly>> s(size, std::vector<FPoly>(size));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
    return bareiss_det(std::move(s));
}

FPoly resultant_v(const FBPoly& g, const FBPoly& h) {
    auto transpose = [](const FBPoly& p) {
        FBPoly t;
        std::size_t cols = 0;
        for (const auto& row : p.c) cols = std::max(cols, row.size());
        t.c.assign(cols, std::vector<QuadElem>(p.c.size()));
        for (std::size_t i = 0; i < p.c.size(); ++i)
            for (std::size_t j = 0; j < p.c[i].size(); ++j) t.c[j][i] = p.c[i][j];
        return t;
    };
    return resultant_u(transpose(g), transpose(h));
}

}  // namespace freecurve
