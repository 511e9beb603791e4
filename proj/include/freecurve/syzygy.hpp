#ifndef FREECURVE_SYZYGY_HPP
#define FREECURVE_SYZYGY_HPP

// Jacobian syzygies, the Jacobian module M(f) = S/J_f and freeness verdicts.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freecurve/linalg.hpp"
#include "freecurve/poly.hpp"
#include "json.hpp"

namespace freecurve {

struct SyzygySlice {
    int r = 0;
    int dim = 0;
    /// Triples (a, b, c) of degree r with a f_x + b f_y + c f_z = 0.
    std::vector<std::array<HomPoly, 3>> basis;
};

/// Degree-r piece of D_0(f). Throws NonReduced.
SyzygySlice ar_dimension(const HomPoly& f, int r);

/// Least r with a nonzero syzygy. Throws NonReduced.
int mdr(const HomPoly& f);

/// dim M(f)_k, the rank taken modulo the first `primes` primes (maximum).
/// A rank modulo p never exceeds the rank over the field, so the value is an
/// upper bound that is exact for all but finitely many primes.
int hilbert_m(const HomPoly& f, int k, int primes = 2);

/// Worker threads for the independent per-prime computations (default 1).
/// Results do not depend on the setting.
void set_worker_threads(int n);
int worker_threads();
/// Same value by exact elimination over the field of definition.
int hilbert_m_exact(const HomPoly& f, int k);

/// Echelon form of J_k = S_{k-n+1} f_x + S_{k-n+1} f_y + S_{k-n+1} f_z over Z/p.
ModEchelon jacobian_echelon(const HomPoly& f, int k, const PrimeField& pf);

struct TjurinaValue {
    int tau = 0;
    int degree = 0;  // first degree of the agreeing run
};

/// Stabilized Hilbert function; throws NonIsolatedSuspected past 5n.
TjurinaValue tjurina_with_degree(const HomPoly& f);
int total_tjurina(const HomPoly& f);

/// du Plessis-Wall maximum.
long tau_max(int n, int r);

/// Largest global Tjurina number of a degree-n curve with only ADE points:
/// 3m(m-1)+1 for n = 2m, 3m^2+1 for n = 2m+1.
long maximizing_tau(int n);

enum class Tri { Yes, No, Unconfirmed };
const char* tri_name(Tri t);

enum class Verdict { Free, NearlyFree, MaximizingEven, MaximizingOdd, CaseB_Equality };
const char* verdict_name(Verdict v);

struct FreenessReport {
    int n = 0;
    int m = 0;
    bool even = false;
    int r = 0;
    int tau = 0;
    long tau_max = 0;
    std::optional<std::pair<int, int>> exponents;
    std::vector<Verdict> verdicts;
    Tri ade_confirmed = Tri::Unconfirmed;

    bool has(Verdict v) const;
    nlohmann::ordered_json to_json() const;
};

/// Verdicts from n, mdr and tau.
FreenessReport freeness_from_invariants(int n, int r, int tau, Tri ade_confirmed);
FreenessReport classify_freeness(const HomPoly& f, Tri ade_confirmed);

}  // namespace freecurve

#endif
