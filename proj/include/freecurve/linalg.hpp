#ifndef FREECURVE_LINALG_HPP
#define FREECURVE_LINALG_HPP

// Graded linear algebra: exact sparse elimination over Q(sqrt d) and dense
// elimination modulo word-size primes, plus the CRT / rational
// reconstruction glue between them.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "freecurve/scalar.hpp"

namespace freecurve {

using Mod = std::uint64_t;

struct BadPrime : std::runtime_error {
    BadPrime() : std::runtime_error("unlucky prime") {}
};

/// Prime modulus p < 2^31 and an optional square root of the field tag.
struct PrimeField {
    Mod p = 0;
    Mod root = 0;  // image of sqrt(d)

    Mod add(Mod a, Mod b) const { return (a + b) % p; }
    Mod sub(Mod a, Mod b) const { return (a + p - b) % p; }
    Mod mul(Mod a, Mod b) const { return (a * b) % p; }
    Mod neg(Mod a) const { return a == 0 ? 0 : p - a; }
    Mod pow(Mod a, std::uint64_t e) const;
    Mod inv(Mod a) const;
    /// Throws BadPrime when a denominator vanishes.
    Mod image(const Rational& r) const;
    Mod image(const QuadElem& x) const;
};

/// Deterministic sequence of primes below 2^31 for which d is a nonzero
/// square (any prime when d = 0). Each call with the same arguments returns
/// the same prime; sign picks the image of sqrt(d) (+root or -root).
PrimeField nth_prime_field(int index, FieldTag d, int sign = 1);

/// Row echelon form over Z/p with dense rows. Pivot rows are normalized to
/// leading coefficient one.
class ModEchelon {
public:
    ModEchelon(int cols, const PrimeField& f) : cols_(cols), f_(f), pivot_row_(cols, -1) {}

    /// Adds a row; returns true when it increased the rank.
    bool insert(std::vector<Mod> row);
    /// Reduces in place so that every pivot column becomes zero.
    void reduce(std::vector<Mod>& row) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
    const PrimeField& field() const { return f_; }

private:
    int cols_;
    PrimeField f_;
    std::vector<std::vector<Mod>> rows_;  // rows_[i] stored from its pivot column on
    std::vector<int> pivot_col_;
    std::vector<int> pivot_row_;
};

using SparseRow = std::vector<std::pair<int, QuadElem>>;

/// Reduced row echelon form over Q(sqrt d) with sparse rows.
class ExactEchelon {
public:
    explicit ExactEchelon(int cols) : cols_(cols), pivot_row_(cols, -1) {}

    bool insert(SparseRow row);
    SparseRow reduce(SparseRow row) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool is_pivot(int col) const { return pivot_row_[col] >= 0; }

    /// Kernel basis of the row space viewed as a linear map; one vector per
    /// free column, with a 1 in that column.
    std::vector<std::vector<QuadElem>> kernel() const;

private:
    int cols_;
    std::vector<SparseRow> rows_;
    std::vector<int> pivot_row_;
};

/// Chinese remainder accumulator for vectors of residues.
class CrtAccumulator {
public:
    void add(const std::vector<Mod>& residues, Mod p);
    const Integer& modulus() const { return modulus_; }
    /// Rational reconstruction of every entry; empty if any entry fails.
    std::optional<std::vector<Rational>> reconstruct() const;

private:
    Integer modulus_ = 1;
    std::vector<Integer> values_;
};

/// a/b with a = b*u (mod m) and |a|, b <= sqrt(m/2).
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m);

/// Characteristic polynomial over Z/p (coefficients low to high, monic).
std::vector<Mod> charpoly_mod(std::vector<std::vector<Mod>> a, const PrimeField& f);
/// Inverse over Z/p; empty when singular.
std::vector<std::vector<Mod>> inverse_mod(std::vector<std::vector<Mod>> a, const PrimeField& f);

/// Dense polynomial helpers over Z/p.
std::vector<Mod> poly_gcd_mod(std::vector<Mod> a, std::vector<Mod> b, const PrimeField& f);
std::vector<Mod> poly_derivative_mod(const std::vector<Mod>& a, const PrimeField& f);
std::vector<Mod> poly_div_mod(const std::vector<Mod>& a, const std::vector<Mod>& b, const PrimeField& f);

}  // namespace freecurve

#endif
