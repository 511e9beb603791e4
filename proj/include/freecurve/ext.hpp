#ifndef FREECURVE_EXT_HPP
#define FREECURVE_EXT_HPP

// Arithmetic in A = F[t]/(q) for a square-free q over the ambient field F.
//
// A is a product of fields, one per irreducible factor of q. A zero test or
// an inversion that cannot be decided uniformly over all factors throws
// SplitRequest carrying a proper factor of q; the caller restarts its
// computation on each piece. Results computed without a split hold for
// every root of q simultaneously.

#include <memory>
#include <stdexcept>
#include <string>

#include "freecurve/scalar.hpp"
#include "freecurve/upoly.hpp"

namespace freecurve {

using FPoly = UPoly<QuadElem>;

struct SplitRequest : std::runtime_error {
    explicit SplitRequest(FPoly f) : std::runtime_error("extension algebra split"), factor(std::move(f)) {}
    FPoly factor;
};

struct ExtContext {
    FPoly modulus;  // monic, square-free
};

class ExtElem {
public:
    ExtElem() = default;
    ExtElem(long v) : v_(QuadElem(v)) {}
    ExtElem(const QuadElem& c) : v_(c) {}
    ExtElem(std::shared_ptr<const ExtContext> ctx, FPoly v) : ctx_(std::move(ctx)), v_(std::move(v)) { reduce(); }

    /// The generator t of the algebra.
    static ExtElem generator(const std::shared_ptr<const ExtContext>& ctx) {
        return ExtElem(ctx, FPoly(std::vector<QuadElem>{QuadElem(0), QuadElem(1)}));
    }

    const FPoly& rep() const { return v_; }
    const std::shared_ptr<const ExtContext>& context() const { return ctx_; }

    /// True when zero at every root, false when nonzero at every root.
    bool is_zero() const {
        if (v_.is_zero()) return true;
        if (!ctx_ || v_.degree() == 0) return false;
        FPoly g = FPoly::gcd(ctx_->modulus, v_);
        if (g.degree() == 0) return false;
        throw SplitRequest(g);
    }

    ExtElem inverse() const {
        if (v_.is_zero()) throw ArithmeticError("division by zero in extension algebra");
        if (!ctx_ || v_.degree() == 0) return ExtElem(ctx_, FPoly(v_[0].inverse()));
        FPoly s, t;
        FPoly g = FPoly::xgcd(v_, ctx_->modulus, s, t);
        if (g.degree() > 0) throw SplitRequest(g);
        return ExtElem(ctx_, s);
    }

    /// Value when the element is a constant of F.
    bool is_constant() const { return v_.degree() <= 0; }
    QuadElem constant() const { return v_.is_zero() ? QuadElem() : v_[0]; }

    ExtElem operator-() const { return ExtElem(ctx_, -v_, true); }
    friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
        return ExtElem(pick(a, b), a.v_ + b.v_, true);
    }
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b) {
        return ExtElem(pick(a, b), a.v_ - b.v_, true);
    }
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
        if (a.is_constant() || b.is_constant()) {
            if (a.v_.is_zero() || b.v_.is_zero()) return ExtElem(pick(a, b), FPoly(), true);
            if (a.is_constant()) return ExtElem(pick(a, b), b.v_ * a.v_[0], true);
            return ExtElem(pick(a, b), a.v_ * b.v_[0], true);
        }
        return ExtElem(pick(a, b), a.v_ * b.v_);
    }
    friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }

    std::string str() const;

private:
    ExtElem(std::shared_ptr<const ExtContext> ctx, FPoly v, bool reduced)
        : ctx_(std::move(ctx)), v_(std::move(v)) {
        (void)reduced;
    }
    static std::shared_ptr<const ExtContext> pick(const ExtElem& a, const ExtElem& b) {
        return a.ctx_ ? a.ctx_ : b.ctx_;
    }
    void reduce() {
        if (ctx_ && v_.degree() >= ctx_->modulus.degree()) v_ = v_ % ctx_->modulus;
    }

    std::shared_ptr<const ExtContext> ctx_;
    FPoly v_;
};

}  // namespace freecurve

#endif
