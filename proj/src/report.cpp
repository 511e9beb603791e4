#include "freecurve/report.hpp"

#include <sstream>

namespace freecurve {

std::string rational_text(const Rational& q) {
    if (q.is_integer()) return q.str();
    // Four decimals, rounded half away from zero, in integer arithmetic.
    Integer scaled = (q.num() * 20000 + (q.num() < 0 ? -q.den() : q.den())) / (2 * q.den());
    Integer a = abs(scaled);
    std::string digits = Integer(a / 10000).get_str();
    std::string frac = Integer(a % 10000).get_str();
    frac.insert(0, 4 - frac.size(), '0');
    return q.str() + " (" + (scaled < 0 ? "-" : "") + digits + "." + frac + ")";
}

Analysis analyze(const CurveFile& c) {
    Analysis a;
    a.name = c.name;
    a.field = c.field;
    a.census = census(c.poly);
    a.freeness = classify_freeness(c.poly, a.census.complete ? Tri::Yes : Tri::Unconfirmed);
    a.dpw = dpw_bound(a.freeness.n, a.freeness.r);
    if (a.census.complete && a.census.alpha && Rational::make(1, 2) < *a.census.alpha) {
        a.sern_bound = sern_lower_bound(*a.census.alpha, a.freeness.n);
        a.sern_holds = a.freeness.r >= *a.sern_bound;
    }
    if (c.expected) {
        a.has_expected = true;
        a.mismatches = compare_expected(*c.expected, a.freeness, a.census);
    }
    return a;
}

nlohmann::ordered_json Analysis::to_json() const {
    nlohmann::ordered_json j;
    if (!name.empty()) j["name"] = name;
    j["field"] = field == 0 ? std::string("Q") : "Q(sqrt(" + std::to_string(field) + "))";
    j["freeness"] = freeness.to_json();
    j["census"] = census.to_json();
    j["dpw_bound"] = dpw.to_json();
    j["sern_bound"] = sern_bound ? nlohmann::ordered_json(*sern_bound) : nlohmann::ordered_json(nullptr);
    j["sern_holds"] = sern_holds ? nlohmann::ordered_json(*sern_holds) : nlohmann::ordered_json(nullptr);
    if (has_expected) {
        j["expected_ok"] = mismatches.empty();
        j["mismatches"] = mismatches;
    }
    j["status"] = unconfirmed() ? "unconfirmed" : "confirmed";
    return j;
}

std::string Analysis::to_text() const {
    std::ostringstream os;
    if (!name.empty()) os << "curve      " << name << '\n';
    os << "field      " << (field == 0 ? std::string("Q") : "Q(sqrt(" + std::to_string(field) + "))") << '\n';
    os << "degree     " << freeness.n << '\n';
    os << "mdr        " << freeness.r << '\n';
    if (freeness.exponents) os << "exponents  (" << freeness.exponents->first << ", " << freeness.exponents->second << ")\n";
    os << "tau        " << freeness.tau << "  (du Plessis-Wall bound " << freeness.tau_max << ")\n";
    os << "census     " << census.multiset_str() << (census.complete ? "" : "  [incomplete]") << '\n';
    for (const auto& p : census.points) {
        os << "  " << p.type.str() << "  mu=" << p.milnor << " tau=" << p.tjurina_local << " mult=" << p.multiplicity << "  "
           << p.locus;
        if (p.orbit_degree > 1) os << "  (" << p.orbit_degree << " conjugate points)";
        os << '\n';
    }
    if (census.complete && census.alpha) os << "alpha      " << rational_text(*census.alpha) << '\n';
    if (sern_bound) os << "mdr bound  r >= " << *sern_bound << (*sern_holds ? "  holds" : "  VIOLATED") << '\n';
    os << "verdicts  ";
    auto fj = freeness.to_json();
    for (const auto& v : fj["verdicts"]) os << ' ' << v.get<std::string>();
    os << '\n';
    os << "status     " << (unconfirmed() ? "unconfirmed" : "confirmed") << '\n';
    if (has_expected) {
        os << "expected   " << (mismatches.empty() ? "ok" : "MISMATCH") << '\n';
        for (const auto& m : mismatches) os << "  " << m << '\n';
    }
    return os.str();
}

nlohmann::ordered_json union_json(const UnionVerdict& v) { return v.to_json(); }

std::string union_text(const UnionVerdict& v) {
    std::ostringstream os;
    os << "criterion  " << union_theorem_name(v.theorem) << "  (degree " << v.n1 << " -> " << v.n_new << ")\n";
    os << "tau(C1)    " << v.tau1 << "  delta=" << v.delta << '\n';
    os << "profile\n";
    for (const auto& r : v.profile) {
        os << "  " << r.locus;
        if (r.orbit_degree > 1) os << " [" << r.orbit_degree << " points]";
        os << "  i=" << r.i_mult << "  " << base_state_name(r.base_state) << " k=" << r.k << "  -> " << r.type_label()
           << "  dtau=" << r.delta_tau << '\n';
    }
    os << "inequality " << v.lhs << " <= " << v.rhs << (v.lhs <= v.rhs ? "  holds" : "  fails") << '\n';
    os << "tau(C)     predicted " << v.tau_predicted;
    if (v.tau_direct) os << ", direct " << *v.tau_direct;
    os << '\n';
    os << "verdict    " << (v.maximizing ? "maximizing" : "not maximizing") << (v.equality ? ", equality" : "") << '\n';
    os << "status     " << tri_name(v.status) << '\n';
    if (!v.note.empty()) os << "note       " << v.note << '\n';
    return os.str();
}

}  // namespace freecurve
