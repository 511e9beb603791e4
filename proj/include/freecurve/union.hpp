#ifndef FREECURVE_UNION_HPP
#define FREECURVE_UNION_HPP

// Adding a line or a smooth conic C2 to a curve C1: the singularities of
// C1 + C2 along C2 and the maximizing-by-addition criteria.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freecurve/local.hpp"
#include "freecurve/syzygy.hpp"

namespace freecurve {

enum class BaseState {
    SmoothPoint,        // C1 smooth at p, C2 tangent of order k
    ATransversal,       // C1 of type A(k), tangent of C2 outside the tangent cone
    A1BranchTangent,    // node of C1, C2 tangent of order k to a branch
    A2CuspidalTangent,  // cusp of C1, C2 along the cuspidal tangent
    Other               // anything else: the union is not simple at p
};
const char* base_state_name(BaseState s);

enum class DTag { Transversal, NonTransversal, None };
const char* d_tag_name(DTag t);

struct ContactRecord {
    std::optional<Point> point;
    std::string locus;
    int orbit_degree = 1;
    int i_mult = 0;
    BaseState base_state = BaseState::Other;
    int k = 0;
    AdeType base_type;   // type of (C1, p); NotSimple with multiplicity 1 means smooth
    int base_multiplicity = 0;
    int base_tjurina = 0;
    AdeType predicted;
    int delta_tau = 0;   // predicted
    DTag d_tag = DTag::None;
    AdeType actual;      // direct classification of (C1 + C2, p)
    int actual_tjurina = 0;

    std::string type_label() const;  // "D6^n", "A1", ...
    nlohmann::ordered_json to_json() const;
};

/// One record per point, or per class of conjugate points, of C1 and C2.
/// Throws SharedComponent, Precondition (C2 not a smooth line or conic) and
/// ProfileIncomplete.
std::vector<ContactRecord> intersection_profile(const HomPoly& f1, const HomPoly& f2);

/// Type of (C1 + C2, p) and the jump of the local Tjurina number. Throws
/// NonSimpleUnion.
std::pair<AdeType, int> predict_union_singularity(const ContactRecord& rec);

enum class UnionTheorem { LineToOdd, LineToEven, ConicToEven, ConicToOdd };
const char* union_theorem_name(UnionTheorem t);

struct UnionVerdict {
    UnionTheorem theorem = UnionTheorem::LineToOdd;
    int n1 = 0;
    int n_new = 0;
    Tri status = Tri::Unconfirmed;  // Yes: hypotheses checked
    long tau1 = 0;
    long delta = 0;
    long lhs = 0;
    long rhs = 0;
    int n_a1 = 0;
    std::map<int, int> n_a_odd;  // j -> N(A_{2j+1}), j > 1
    std::map<int, int> n_d_nt;   // j -> N(D^n_{2j+4}), j > 0
    int n_e7 = 0;
    bool maximizing = false;
    bool equality = false;
    long tau_predicted = 0;      // tau(C1) + sum of the jumps
    std::optional<long> tau_direct;
    std::vector<ContactRecord> profile;
    std::string note;

    nlohmann::ordered_json to_json() const;
};

/// tau of the union is recomputed directly when the criterion holds, or
/// always with verify_always.
UnionVerdict check_union_theorem(const HomPoly& f1, const HomPoly& f2, bool verify_always = false);

struct SecantCheck {
    Tri status = Tri::Unconfirmed;
    int points = 0;   // |C1 n L|
    int m = 0;
    bool holds = false;
    std::optional<bool> mdr_flag;  // set when points == m: mdr(C1 + L) == m - 1
    std::string note;
};

SecantCheck secant_bound_check(const HomPoly& f1, const HomPoly& line);

}  // namespace freecurve

#endif
