#include "freecurve/scalar.hpp"

#include <ostream>
#include <sstream>

namespace freecurve {

Rational Rational::make(const Integer& num, const Integer& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return make(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ArithmeticError("malformed rational literal '" + text + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    q_ /= o.q_;
    return *this;
}

Integer Rational::floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Integer Rational::ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw ArithmeticError("square-free part of zero");
    Integer m = abs(n);
    Integer out = 1;
    // Trial division is enough for the discriminants seen in practice; any
    // large cofactor left over is kept whole after removing square factors.
    for (unsigned long p = 2; Integer(p) * p <= m; ++p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        if (e % 2) out *= p;
        if (p > 1000000) break;
    }
    if (m > 1) {
        Integer r;
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            r = 1;
        } else {
            r = m;
        }
        out *= r;
    }
    return n < 0 ? Integer(-out) : out;
}

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r.sign() < 0) return false;
    Integer n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rational::make(sn, sd);
    return true;
}

void check_field_tag(FieldTag d) {
    if (d == 0) return;
    if (d == 1) throw ArithmeticError("field tag 1 does not define a quadratic field");
    if (squarefree_part(Integer(static_cast<long>(d))) != Integer(static_cast<long>(d)))
        throw ArithmeticError("field tag " + std::to_string(d) + " is not square-free");
}

QuadElem::QuadElem(const Rational& a, const Rational& b, FieldTag d) : a_(a), b_(b), d_(d) {
    if (!b_.is_zero()) {
        if (d == 0) throw ArithmeticError("irrational part requires a quadratic field tag");
        check_field_tag(d);
    }
    normalize_tag();
}

void QuadElem::merge_tag(const QuadElem& o) {
    if (o.d_ == 0) return;
    if (d_ == 0) {
        d_ = o.d_;
        return;
    }
    if (d_ != o.d_)
        throw ArithmeticError("mismatched quadratic fields sqrt(" + std::to_string(d_) + ") and sqrt(" +
                              std::to_string(o.d_) + ")");
}

QuadElem QuadElem::conj() const {
    QuadElem r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational QuadElem::norm() const {
    if (b_.is_zero()) return a_ * a_;
    return a_ * a_ - Rational(static_cast<long>(d_)) * b_ * b_;
}

QuadElem QuadElem::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    if (b_.is_zero()) return QuadElem(Rational(1) / a_);
    Rational n = norm();
    QuadElem r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.d_ = d_;
    return r;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    merge_tag(o);
    a_ += o.a_;
    if (!o.b_.is_zero()) b_ += o.b_;
    normalize_tag();
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    merge_tag(o);
    a_ -= o.a_;
    if (!o.b_.is_zero()) b_ -= o.b_;
    normalize_tag();
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
    merge_tag(o);
    if (o.b_.is_zero()) {
        a_ *= o.a_;
        if (!b_.is_zero()) b_ *= o.a_;
    } else if (b_.is_zero()) {
        b_ = a_ * o.b_;
        a_ *= o.a_;
    } else {
        Rational na = a_ * o.a_ + Rational(static_cast<long>(d_)) * b_ * o.b_;
        Rational nb = a_ * o.b_ + o.a_ * b_;
        a_ = std::move(na);
        b_ = std::move(nb);
    }
    normalize_tag();
    return *this;
}

QuadElem QuadElem::operator-() const {
    QuadElem r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

bool canonical_less(const QuadElem& x, const QuadElem& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

std::string QuadElem::str() const {
    if (b_.is_zero()) return a_.str();
    std::ostringstream os;
    if (!a_.is_zero()) {
        os << a_.str();
        if (b_.sign() > 0) os << '+';
    }
    if (b_ == Rational(1)) {
        os << 's';
    } else if (b_ == Rational(-1)) {
        os << "-s";
    } else {
        os << b_.str() << "*s";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadElem& q) { return os << q.str(); }

QuadElem quad_arith(const QuadElem& x, const QuadElem& y, QuadOp op) {
    switch (op) {
        case QuadOp::Add: return x + y;
        case QuadOp::Sub: return x - y;
        case QuadOp::Mul: return x * y;
        case QuadOp::Div: return x / y;
    }
    throw ArithmeticError("unknown operation");
}

bool quad_sqrt(const QuadElem& x, FieldTag d, QuadElem& root) {
    if (x.is_zero()) {
        root = QuadElem();
        return true;
    }
    if (x.d() != 0 && d != x.d()) throw ArithmeticError("element outside the requested field");
    Rational r;
    if (x.is_rational()) {
        if (rational_sqrt(x.a(), r)) {
            root = QuadElem(r);
            return true;
        }
        if (d != 0 && rational_sqrt(x.a() / Rational(static_cast<long>(d)), r)) {
            root = QuadElem(Rational(0), r, d);
            return true;
        }
        return false;
    }
    // (a + b s)^2 = A + B s  =>  a^2 + d b^2 = A, 2ab = B.
    Rational n;
    if (!rational_sqrt(x.norm(), n)) return false;
    for (const Rational& cand : {(x.a() + n) / Rational(2), (x.a() - n) / Rational(2)}) {
        Rational a;
        if (cand.is_zero() || !rational_sqrt(cand, a)) continue;
        Rational b = x.b() / (Rational(2) * a);
        QuadElem y(a, b, d);
        if (y * y == x) {
            root = y;
            return true;
        }
    }
    return false;
}

}  // namespace freecurve
