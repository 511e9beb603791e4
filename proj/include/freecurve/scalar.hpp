#ifndef FREECURVE_SCALAR_HPP
#define FREECURVE_SCALAR_HPP

// Exact scalars: rationals and elements a + b*sqrt(d) of one quadratic field.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace freecurve {

using Integer = mpz_class;

class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Normalized fraction num/den with den > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(const Integer& v) : q_(v) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Throws ArithmeticError on a zero denominator.
    static Rational make(const Integer& num, const Integer& den);
    /// Parses "p" or "p/q".
    static Rational parse(const std::string& text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }
    mpq_class& raw() { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }
    Integer floor() const;
    Integer ceil() const;
    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Square-free part of a nonzero integer, sign included (12 -> 3, -8 -> -2).
Integer squarefree_part(const Integer& n);

/// Exact square root of a rational if it is a perfect square.
bool rational_sqrt(const Rational& r, Rational& root);

/// Tag of the ambient field: 0 denotes Q, otherwise Q(sqrt(d)) with d
/// square-free and different from 0 and 1.
using FieldTag = std::int64_t;

void check_field_tag(FieldTag d);

/// Element a + b*sqrt(d). Elements with b = 0 are rational and combine with
/// elements of any field; two elements with different nonzero tags do not.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(long v) : a_(v) {}
    QuadElem(const Rational& a) : a_(a) {}
    QuadElem(const Rational& a, const Rational& b, FieldTag d);

    /// sqrt(d) itself.
    static QuadElem root(FieldTag d) { return QuadElem(Rational(0), Rational(1), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    FieldTag d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_ == Rational(1); }
    bool is_rational() const { return b_.is_zero(); }

    QuadElem conj() const;
    /// a^2 - d b^2.
    Rational norm() const;
    QuadElem inverse() const;

    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
    QuadElem operator-() const;

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

    /// Total order used only for deterministic sorting.
    friend bool canonical_less(const QuadElem& x, const QuadElem& y);

    /// "3", "-1/2", "2*s", "1/2+3/4*s" where s = sqrt(d).
    std::string str() const;

private:
    void merge_tag(const QuadElem& o);
    void normalize_tag() {
        if (b_.is_zero()) d_ = 0;
    }

    Rational a_;
    Rational b_;
    FieldTag d_ = 0;
};

bool canonical_less(const QuadElem& x, const QuadElem& y);
std::ostream& operator<<(std::ostream& os, const QuadElem& q);

/// Arithmetic entry point matching the four field operations.
enum class QuadOp { Add, Sub, Mul, Div };
QuadElem quad_arith(const QuadElem& x, const QuadElem& y, QuadOp op);

/// Square root inside Q(sqrt(d)) when it exists there (d = 0 means Q).
bool quad_sqrt(const QuadElem& x, FieldTag d, QuadElem& root);

}  // namespace freecurve

#endif
