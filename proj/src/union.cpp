#include "freecurve/union.hpp"

#include <algorithm>

#include "local_internal.hpp"

namespace freecurve {

const char* base_state_name(BaseState s) {
    switch (s) {
        case BaseState::SmoothPoint: return "SmoothPoint";
        case BaseState::ATransversal: return "ATransversal";
        case BaseState::A1BranchTangent: return "A1BranchTangent";
        case BaseState::A2CuspidalTangent: return "A2CuspidalTangent";
        case BaseState::Other: return "Other";
    }
    return "Other";
}

const char* d_tag_name(DTag t) {
    switch (t) {
        case DTag::Transversal: return "transversal";
        case DTag::NonTransversal: return "non-transversal";
        case DTag::None: return "n/a";
    }
    return "n/a";
}

std::string ContactRecord::type_label() const {
    std::string s = actual.str();
    if (actual.family == AdeFamily::D && d_tag == DTag::Transversal) s += "^t";
    if (actual.family == AdeFamily::D && d_tag == DTag::NonTransversal) s += "^n";
    return s;
}

nlohmann::ordered_json ContactRecord::to_json() const {
    nlohmann::ordered_json j;
    if (point) {
        j["coords"] = {(*point)[0].str(), (*point)[1].str(), (*point)[2].str()};
    } else {
        j["orbit"] = locus;
    }
    j["orbit_degree"] = orbit_degree;
    j["i_mult"] = i_mult;
    j["base_state"] = base_state_name(base_state);
    j["k"] = k;
    j["base_type"] = base_multiplicity == 1 ? "smooth" : base_type.str();
    j["predicted"] = predicted.str();
    j["delta_tau"] = delta_tau;
    j["d_tag"] = d_tag_name(d_tag);
    j["actual"] = type_label();
    j["actual_tjurina"] = actual_tjurina;
    return j;
}

std::pair<AdeType, int> predict_union_singularity(const ContactRecord& rec) {
    int i = rec.i_mult, k = rec.k;
    AdeType t;
    int twice = 0;  // 2 * delta_tau
    switch (rec.base_state) {
        case BaseState::SmoothPoint:
            t = ade_A(2 * k + 1);
            twice = 3 * i + k - 1;
            break;
        case BaseState::ATransversal:
            t = ade_D(k + 3);
            twice = 3 * i;
            break;
        case BaseState::A1BranchTangent:
            t = ade_D(2 * k + 4);
            twice = 3 * i + k;
            break;
        case BaseState::A2CuspidalTangent:
            t = ade_E(7);
            twice = 3 * i + 1;
            break;
        case BaseState::Other:
            throw CurveError(ErrorKind::NonSimpleUnion, "the union has a non-simple singularity at " + rec.locus);
    }
    if (twice % 2 != 0) throw CurveError(ErrorKind::Precondition, "contact data is inconsistent at " + rec.locus);
    return {t, twice / 2};
}

namespace {

std::array<ExtElem, 3> dehomogenize(const std::array<ExtElem, 3>& p_in, int& chart) {
    std::array<ExtElem, 3> p = p_in;
    chart = 0;
    while (chart < 3 && p[chart].is_zero()) ++chart;
    ExtElem inv = p[chart].inverse();
    for (auto& x : p) x = x * inv;
    return p;
}

int lowest_order(const detail::Bivariate& g, int cap) {
    for (int m = 0; m <= cap; ++m)
        for (int s = 0; s <= m; ++s)
            if (!g.at(s, m - s).is_zero()) return m;
    return cap + 1;
}

void require_addable(const HomPoly& f2) {
    int n2 = f2.degree();
    if (n2 != 1 && n2 != 2)
        throw CurveError(ErrorKind::UnsupportedComponent, "only lines and smooth conics can be added");
    if (n2 == 2) {
        auto c = [&](int a, int b, int e) { return f2.coeff({a, b, e}); };
        QuadElem half(Rational::make(1, 2));
        QuadElem m[3][3] = {{c(2, 0, 0), c(1, 1, 0) * half, c(1, 0, 1) * half},
                            {c(1, 1, 0) * half, c(0, 2, 0), c(0, 1, 1) * half},
                            {c(1, 0, 1) * half, c(0, 1, 1) * half, c(0, 0, 2)}};
        QuadElem det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det.is_zero()) throw CurveError(ErrorKind::UnsupportedComponent, "the conic is singular");
    }
}

}  // namespace

std::vector<ContactRecord> intersection_profile(const HomPoly& f1, const HomPoly& f2) {
    require_addable(f2);
    if (!is_reduced(f1)) throw CurveError(ErrorKind::NonReduced, "the first curve is not reduced");
    HomPoly f = f1 * f2;
    if (!is_reduced(f)) throw CurveError(ErrorKind::SharedComponent, "the curves share a component");
    int n1 = f1.degree(), n2 = f2.degree();
    SingularLocus locus;
    try {
        locus = locate_singular_points(f);
    } catch (const CurveError& e) {
        throw CurveError(ErrorKind::ProfileIncomplete, std::string("intersection points not located: ") + e.what());
    }
    std::vector<ContactRecord> out;
    int order = n1 * n2 + 2;
    detail::visit_orbits(locus.orbits, [&](const PointOrbit& o, const std::array<ExtElem, 3>& p_in) {
        int chart = 0;
        auto p = dehomogenize(p_in, chart);
        detail::Bivariate g2 = detail::jet(f2, p, chart, order);
        if (!g2.at(0, 0).is_zero()) return;
        detail::Bivariate g1 = detail::jet(f1, p, chart, order);
        ContactRecord rec;
        auto i = detail::fulton(g1, g2, order);
        if (!i) throw CurveError(ErrorKind::SharedComponent, "the curves share a component");
        rec.i_mult = *i;
        rec.base_multiplicity = lowest_order(g1, order);
        if (rec.base_multiplicity == 1) {
            rec.base_state = BaseState::SmoothPoint;
            rec.k = rec.i_mult - 1;
        } else {
            LocalInvariants li1 = analyze_point(f1, p);
            rec.base_type = li1.type;
            rec.base_tjurina = li1.type.simple() ? li1.milnor : eigen_multiplicity(locate_singular_points(f1), o.minpoly);
            if (rec.base_multiplicity == 2) {
                ExtElem a = g2.at(1, 0), b = g2.at(0, 1);
                ExtElem q = g1.at(2, 0) * b * b - g1.at(1, 1) * a * b + g1.at(0, 2) * a * a;
                if (!q.is_zero()) {
                    rec.base_state = BaseState::ATransversal;
                    rec.k = li1.milnor;
                } else if (li1.milnor == 1) {
                    rec.base_state = BaseState::A1BranchTangent;
                    rec.k = rec.i_mult - 2;
                } else if (li1.milnor == 2) {
                    rec.base_state = BaseState::A2CuspidalTangent;
                }
            }
        }
        LocalInvariants lc = analyze_point(f, p);
        rec.actual = lc.type;
        rec.actual_tjurina = lc.type.simple() ? lc.milnor : eigen_multiplicity(locus, o.minpoly);
        try {
            std::tie(rec.predicted, rec.delta_tau) = predict_union_singularity(rec);
        } catch (const CurveError&) {
            rec.predicted = AdeType{};
            rec.delta_tau = rec.actual_tjurina - rec.base_tjurina;
        }
        if (rec.base_state == BaseState::ATransversal) rec.d_tag = DTag::Transversal;
        if (rec.base_state == BaseState::A1BranchTangent) rec.d_tag = DTag::NonTransversal;
        auto pts = detail::expand_orbit(o);
        if (pts) {
            for (const auto& q : *pts) {
                ContactRecord r = rec;
                r.point = q;
                r.locus = point_str(q);
                out.push_back(r);
            }
        } else {
            rec.locus = o.str();
            rec.orbit_degree = o.degree();
            out.push_back(rec);
        }
    });
    std::sort(out.begin(), out.end(), [](const ContactRecord& a, const ContactRecord& b) { return a.locus < b.locus; });
    int total = 0;
    for (const auto& r : out) total += r.orbit_degree * r.i_mult;
    if (total != n1 * n2)
        throw CurveError(ErrorKind::ProfileIncomplete, "intersection numbers sum to " + std::to_string(total) +
                                                           ", expected " + std::to_string(n1 * n2));
    return out;
}

const char* union_theorem_name(UnionTheorem t) {
    switch (t) {
        case UnionTheorem::LineToOdd: return "LineToOdd";
        case UnionTheorem::LineToEven: return "LineToEven";
        case UnionTheorem::ConicToEven: return "ConicToEven";
        case UnionTheorem::ConicToOdd: return "ConicToOdd";
    }
    return "LineToOdd";
}

nlohmann::ordered_json UnionVerdict::to_json() const {
    nlohmann::ordered_json j;
    j["theorem"] = union_theorem_name(theorem);
    j["n1"] = n1;
    j["n_new"] = n_new;
    j["status"] = tri_name(status);
    j["tau1"] = tau1;
    j["delta"] = delta;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    nlohmann::ordered_json counts;
    counts["A1"] = n_a1;
    for (auto [jj, c] : n_a_odd) counts["A" + std::to_string(2 * jj + 1)] = c;
    for (auto [jj, c] : n_d_nt) counts["D" + std::to_string(2 * jj + 4) + "^n"] = c;
    counts["E7"] = n_e7;
    j["counts"] = counts;
    j["maximizing"] = maximizing;
    j["equality"] = equality;
    j["tau_predicted"] = tau_predicted;
    if (tau_direct) j["tau_direct"] = *tau_direct;
    j["profile"] = nlohmann::ordered_json::array();
    for (const auto& r : profile) j["profile"].push_back(r.to_json());
    if (!note.empty()) j["note"] = note;
    return j;
}

namespace {

UnionTheorem select_theorem(int n1, int n2) {
    bool even = n1 % 2 == 0;
    if (n2 == 1 && even && n1 >= 4) return UnionTheorem::LineToOdd;
    if (n2 == 1 && !even && n1 >= 3) return UnionTheorem::LineToEven;
    if (n2 == 2 && even && n1 >= 4) return UnionTheorem::ConicToEven;
    if (n2 == 2 && !even && n1 >= 5) return UnionTheorem::ConicToOdd;
    throw CurveError(ErrorKind::Precondition, "no addition criterion for degrees " + std::to_string(n1) + " and " +
                                                  std::to_string(n2));
}

}  // namespace

UnionVerdict check_union_theorem(const HomPoly& f1, const HomPoly& f2, bool verify_always) {
    require_addable(f2);
    UnionVerdict v;
    v.n1 = f1.degree();
    v.n_new = v.n1 + f2.degree();
    v.theorem = select_theorem(v.n1, f2.degree());
    Census c1 = census(f1);
    v.tau1 = c1.total_tau;
    v.delta = maximizing_tau(v.n1) - v.tau1;
    if (!c1.complete) {
        v.note = "the singularities of the first curve are not all confirmed simple";
        return v;
    }
    if (v.delta < 0) throw CurveError(ErrorKind::Precondition, "tau of the first curve exceeds the maximizing value");
    try {
        v.profile = intersection_profile(f1, f2);
    } catch (const CurveError& e) {
        if (e.kind() != ErrorKind::ProfileIncomplete) throw;
        v.note = e.what();
        return v;
    }
    long gain = 0;
    for (const auto& r : v.profile) {
        if (!r.predicted.simple() || !r.actual.simple())
            throw CurveError(ErrorKind::NonSimpleUnion, "the union has a non-simple singularity at " + r.locus);
        if (!(r.predicted == r.actual) || r.delta_tau != r.actual_tjurina - r.base_tjurina)
            throw CurveError(ErrorKind::Precondition, "local prediction disagrees with direct classification at " + r.locus);
        int w = r.orbit_degree;
        gain += static_cast<long>(w) * r.delta_tau;
        switch (r.base_state) {
            case BaseState::SmoothPoint:
                if (r.k == 0) v.n_a1 += w;
                if (r.k > 1) v.n_a_odd[r.k] += w;
                break;
            case BaseState::A1BranchTangent: v.n_d_nt[r.k] += w; break;
            case BaseState::A2CuspidalTangent: v.n_e7 += w; break;
            default: break;
        }
    }
    v.lhs = 2 * v.delta + v.n_a1;
    v.rhs = v.theorem == UnionTheorem::LineToEven ? 3 : 0;
    for (auto [j, c] : v.n_a_odd) v.rhs += static_cast<long>(j - 1) * c;
    for (auto [j, c] : v.n_d_nt) v.rhs += static_cast<long>(j) * c;
    v.rhs += v.n_e7;
    v.maximizing = v.lhs <= v.rhs;
    v.equality = v.lhs == v.rhs;
    v.tau_predicted = v.tau1 + gain;
    if (v.maximizing || verify_always) v.tau_direct = total_tjurina(f1 * f2);
    v.status = Tri::Yes;
    if (v.tau_direct && *v.tau_direct != v.tau_predicted) {
        v.status = Tri::Unconfirmed;
        v.note = "direct tau of the union differs from the local prediction";
    } else if (v.maximizing && (!v.equality || v.tau_predicted != maximizing_tau(v.n_new))) {
        v.status = Tri::Unconfirmed;
        v.note = "maximizing criterion met without equality";
    }
    return v;
}

SecantCheck secant_bound_check(const HomPoly& f1, const HomPoly& line) {
    if (line.degree() != 1) throw CurveError(ErrorKind::Precondition, "the second curve must be a line");
    SecantCheck out;
    int n = f1.degree();
    out.m = n / 2;
    if (n % 2 != 0 || n < 4) {
        out.note = "the first curve must have even degree";
        return out;
    }
    Census c1 = census(f1);
    if (!c1.complete || c1.total_tau != maximizing_tau(n)) {
        out.note = "the first curve is not confirmed maximizing";
        return out;
    }
    std::vector<ContactRecord> profile;
    try {
        profile = intersection_profile(f1, line);
    } catch (const CurveError& e) {
        if (e.kind() != ErrorKind::ProfileIncomplete) throw;
        out.note = e.what();
        return out;
    }
    for (const auto& r : profile) {
        if (!r.actual.simple()) {
            out.note = "the union has a singularity that is not confirmed quasi-homogeneous";
            return out;
        }
        out.points += r.orbit_degree;
    }
    out.holds = out.points >= out.m;
    if (out.points == out.m) out.mdr_flag = mdr(f1 * line) == out.m - 1;
    out.status = Tri::Yes;
    return out;
}

}  // namespace freecurve
