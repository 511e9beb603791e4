#include "freecurve/repro.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "freecurve/report.hpp"

namespace freecurve {

namespace {

using Outcome = std::pair<bool, std::string>;

struct Row {
    ReproRowInfo info;
    std::function<Outcome()> run;
};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
    return out;
}

Outcome invariants_row(const std::string& name, std::optional<int> m) {
    CurveSpec c = get_family(name, m);
    c.expected.census.reset();
    ExpectationCheck r = check_expected(c);
    std::ostringstream os;
    os << "tau=" << r.report.tau << " mdr=" << r.report.r << " verdicts=";
    for (std::size_t i = 0; i < r.report.verdicts.size(); ++i) os << (i ? "," : "") << verdict_name(r.report.verdicts[i]);
    if (!r.ok()) os << " | " << join(r.mismatches);
    return {r.ok(), os.str()};
}

Outcome census_row(const std::string& name, const std::string& want) {
    Census c = census(get_family(name).poly);
    bool ok = c.complete && c.multiset_str() == want;
    return {ok, c.multiset_str() + (c.complete ? "" : " (incomplete)")};
}

HomPoly poly(const std::string& text, FieldTag d = 0) { return parse_poly(text, d); }

Outcome union_row(const HomPoly& f1, const HomPoly& f2, bool want_max, std::optional<long> want_delta,
                  const std::string& want_profile = "") {
    UnionVerdict v = check_union_theorem(f1, f2, true);
    std::ostringstream os;
    os << union_theorem_name(v.theorem) << " delta=" << v.delta << " lhs=" << v.lhs << " rhs=" << v.rhs
       << " tau=" << (v.tau_direct ? *v.tau_direct : -1) << " profile=";
    std::map<std::string, int> labels;
    for (const auto& r : v.profile) labels[r.type_label()] += r.orbit_degree;
    std::string prof;
    for (const auto& [l, c] : labels) prof += (prof.empty() ? "" : ",") + std::to_string(c) + "x" + l;
    os << prof;
    bool ok = v.status == Tri::Yes && v.maximizing == want_max && v.tau_direct;
    if (ok) ok = want_max ? v.equality && *v.tau_direct == maximizing_tau(v.n_new)
                          : *v.tau_direct < maximizing_tau(v.n_new);
    if (want_delta && v.delta != *want_delta) ok = false;
    if (!want_profile.empty() && prof != want_profile) ok = false;
    if (!v.note.empty()) os << " note=" << v.note;
    return {ok, os.str()};
}

Outcome bound_row(const BoundReport& b, const std::string& want) {
    return {b.value.str() == want, b.value.str() + " floor " + b.floor.get_str()};
}

// tau <= tau_max(n, mdr); sigma = tau on complete censuses; mdr >= ceil(alpha n - 2).
Outcome catalog_properties() {
    int checked = 0;
    std::vector<std::string> bad;
    for (const auto& fi : catalog_families()) {
        std::vector<std::optional<int>> ms;
        if (fi.takes_m) {
            for (int m = fi.m_min; m <= fi.m_min + 2; ++m) ms.push_back(m);
        } else {
            ms.push_back(std::nullopt);
        }
        for (auto m : ms) {
            CurveSpec c = get_family(fi.name, m);
            Analysis a = analyze(curve_file_from_spec(c));
            std::string id = fi.name + (m ? "(" + std::to_string(*m) + ")" : "");
            if (a.freeness.tau > a.freeness.tau_max) bad.push_back(id + " tau above bound");
            if (a.census.complete && a.census.sigma != a.freeness.tau) bad.push_back(id + " sigma != tau");
            if (a.sern_holds && !*a.sern_holds) bad.push_back(id + " mdr below alpha bound");
            ++checked;
        }
    }
    return {bad.empty(), std::to_string(checked) + " curves" + (bad.empty() ? "" : " | " + join(bad))};
}

Outcome union_properties() {
    std::vector<std::pair<HomPoly, HomPoly>> cases = {
        {get_family("T6").poly, poly("x-y")},
        {get_family("tri_conical").poly, poly("y")},
        {get_family("fermat_sextic").poly, poly("z")},
        {get_family("medians_sextic").poly, poly("x^2+y^2+z^2-2x*y-2y*z-2z*x")},
        {get_family("C_even", 3).poly, poly("z")},
        {get_family("tri_conical").poly, poly("2x^2+y^2-2z^2+s*y*z", -2)},
        {get_family("C7").poly, poly("x+y+2z")},
    };
    for (int m = 2; m <= 5; ++m) cases.emplace_back(get_family("C_odd", m).poly, poly("y"));
    cases.emplace_back(get_family("quintic_H2").poly, poly("3x-4y+z"));
    cases.emplace_back(get_family("quintic_H3").poly, poly("2x-3y+z"));
    cases.emplace_back(get_family("quintic_H4").poly, poly("x-2y+z"));
    cases.emplace_back(get_family("quintic_H1").poly, poly("x-z"));
    cases.emplace_back(get_family("quintic_H4").poly, poly("x-z"));
    int points = 0;
    std::vector<std::string> bad;
    for (const auto& [f1, f2] : cases) {
        HomPoly a = f1, b = f2;
        if (a.field() != b.field()) a = parse_poly(a.str(), b.field());
        auto prof = intersection_profile(a, b);
        int bez = 0;
        for (const auto& r : prof) {
            bez += r.orbit_degree * r.i_mult;
            if (!(r.predicted == r.actual)) bad.push_back(r.locus + " predicted " + r.predicted.str() + " got " + r.actual.str());
            if (r.delta_tau != r.actual_tjurina - r.base_tjurina) bad.push_back(r.locus + " jump mismatch");
            points += r.orbit_degree;
        }
        if (bez != a.degree() * b.degree()) bad.push_back("Bezout sum " + std::to_string(bez));
    }
    return {bad.empty(), std::to_string(points) + " contact points" + (bad.empty() ? "" : " | " + join(bad))};
}

Outcome determinism() {
    std::vector<CurveFile> files;
    for (const char* n : {"tri_conical", "C_dprime", "T8", "quintic_H3"}) files.push_back(curve_file_from_spec(get_family(n)));
    auto dump_all = [&]() {
        std::string out;
        for (const auto& f : files) out += analyze(f).to_json().dump() + "\n";
        out += check_union_theorem(get_family("T6").poly, poly("x-y"), true).to_json().dump() + "\n";
        return out;
    };
    int saved = worker_threads();
    set_worker_threads(1);
    std::string a = dump_all();
    std::string b = dump_all();
    set_worker_threads(4);
    std::string c = dump_all();
    set_worker_threads(saved);
    bool ok = a == b && a == c;
    return {ok, std::to_string(a.size()) + " bytes, 3 runs (1, 1 and 4 threads)" + (ok ? "" : " | reports differ")};
}

const std::vector<Row>& rows() {
    static const std::vector<Row> all = [] {
        std::vector<Row> v;
        auto add = [&](std::string id, int crit, std::string claim, std::function<Outcome()> fn) {
            v.push_back({{std::move(id), crit, std::move(claim)}, std::move(fn)});
        };
        for (const char* n : {"tri_conical", "C_prime", "C_dprime", "T6", "T8"})
            add(n, 1, std::string(n) + ": tau, exponents, verdicts",
                [n] { return invariants_row(n, std::nullopt); });
        for (const char* fam : {"C_even", "D_even", "C_odd"})
            for (int m = 2; m <= 6; ++m)
                add(std::string(fam) + "(" + std::to_string(m) + ")", 1,
                    std::string(fam) + " m=" + std::to_string(m) + ": tau, mdr, verdicts",
                    [fam, m] { return invariants_row(fam, m); });
        for (const char* n : {"quintic_H1", "quintic_H2", "quintic_H3", "quintic_H4", "arrangement_A5",
                              "arrangement_A7", "arrangement_A9"})
            add(n, 1, std::string(n) + ": tau, mdr, verdicts",
                [n] { return invariants_row(n, std::nullopt); });

        add("census/tri_conical", 2, "{2A1, A3, 2A7}, A7 at (+-1:0:1)", [] {
            Outcome o = census_row("tri_conical", "{2xA1, 1xA3, 2xA7}");
            std::vector<std::string> a7;
            for (const auto& p : census(get_family("tri_conical").poly).points)
                if (p.type == ade_A(7) && p.coords) a7.push_back(point_str(*p.coords));
            std::vector<std::string> want = {point_str(normalize_point({QuadElem(1L), QuadElem(0L), QuadElem(1L)})),
                                             point_str(normalize_point({QuadElem(-1L), QuadElem(0L), QuadElem(1L)}))};
            std::sort(a7.begin(), a7.end());
            std::sort(want.begin(), want.end());
            o.first = o.first && a7 == want;
            o.second += " A7 at " + join(a7);
            return o;
        });
        add("census/C_prime", 2, "{2D10, D6, 2D4, 3A1}", [] { return census_row("C_prime", "{3xA1, 2xD4, 1xD6, 2xD10}"); });
        add("census/C_dprime", 2, "{2D10, 2D6, 2A1, A3}", [] { return census_row("C_dprime", "{2xA1, 1xA3, 2xD6, 2xD10}"); });
        add("census/T6", 2, "{3A1, A2, 2E7}", [] { return census_row("T6", "{3xA1, 1xA2, 2xE7}"); });
        add("census/T8", 2, "{6A1, 2A3, D4, 3E7}", [] { return census_row("T8", "{6xA1, 2xA3, 1xD4, 3xE7}"); });
        add("census/fermat_sextic", 2, "{3A5, D4}", [] { return census_row("fermat_sextic", "{3xA5, 1xD4}"); });

        add("union/T6+L", 3, "T6 plus the third cuspidal tangent: maximizing septic, tau 28", [] {
            return union_row(get_family("T6").poly, poly("x-y"), true, 0, "1xA1,1xD4^t,1xE7");
        });
        add("union/tri_conical+y", 3, "tri-conical plus y = 0: maximizing septic, tau 28", [] {
            return union_row(get_family("tri_conical").poly, poly("y"), true, 0, "2xD10^t,1xD6^t");
        });
        add("union/fermat_sextic+z", 3, "Fermat sextic plus z = 0: maximizing septic",
            [] { return union_row(get_family("fermat_sextic").poly, poly("z"), true, 0); });
        for (int m = 2; m <= 5; ++m)
            add("union/C_odd(" + std::to_string(m) + ")+y", 3, "C_odd plus y = 0: maximizing, delta 1, equality", [m] {
                std::string prof = "1xA1," + std::to_string(m) + "xD" + std::to_string(m + 2) + "^t";
                if (m == 2) prof = "1xA1,2xD4^t";
                return union_row(get_family("C_odd", m).poly, poly("y"), true, 1, prof);
            });
        add("union/medians+conic", 3, "triangle and medians plus the midpoint conic: maximizing octic, tau 37", [] {
            return union_row(get_family("medians_sextic").poly, poly("x^2+y^2+z^2-2x*y-2y*z-2z*x"), true, 0,
                             "3xA1,3xD6^n");
        });
        add("union/C_even(3)+z", 3, "negative control: C_even plus z = 0 is not maximizing", [] {
            return union_row(get_family("C_even", 3).poly, poly("z"), false, 0, "2xA1,3xD5^t");
        });
        add("union/cubic_t(2)", 3, "negative control: C_t' sextic for t = 2 is not maximizing", [] {
            CurveSpec c = get_family("cubic_t_sextic", 2);
            ExpectationCheck r = check_expected(c);
            Outcome o = union_row(c.poly, poly("z"), false, std::nullopt);
            bool ok = r.ok() && r.report.tau < maximizing_tau(6) && o.first;
            return Outcome{ok, "sextic tau=" + std::to_string(r.report.tau) + "; with z = 0: " + o.second};
        });

        add("bounds/langer(2,12)", 4, "t5 <= 200/11", [] { return bound_row(langer_a_bound(2, 12), "200/11"); });
        add("bounds/langer(3,16)", 4, "t7 <= 1400/57", [] { return bound_row(langer_a_bound(3, 16), "1400/57"); });
        add("bounds/e6(18)", 4, "e6 <= 6048/167", [] { return bound_row(e6_bound(18), "6048/167"); });
        add("bounds/D12", 4, "D_12 has exactly 18 A5 (floor attained)", [] {
            Census c = census(get_family("D_even", 6).poly);
            bool ok = c.complete && c.multiset_str() == "{18xA5}" && langer_a_bound(2, 12).floor == 18;
            return Outcome{ok, c.multiset_str()};
        });
        add("bounds/D16", 4, "D_16 has exactly 24 A7 (floor attained)", [] {
            Census c = census(get_family("D_even", 8).poly);
            bool ok = c.complete && c.multiset_str() == "{24xA7}" && langer_a_bound(3, 16).floor == 24;
            return Outcome{ok, c.multiset_str()};
        });

        add("properties/catalog", 5, "tau <= tau_max(n, mdr), sigma = tau, mdr >= alpha n - 2 on the catalog",
            catalog_properties);
        add("properties/unions", 5, "local prediction = direct classification, Bezout sums, on catalog unions",
            union_properties);
        add("determinism/reports", 6, "repeated runs give byte-identical JSON", determinism);
        return v;
    }();
    return all;
}

}  // namespace

const std::vector<ReproRowInfo>& repro_rows() {
    static const std::vector<ReproRowInfo> info = [] {
        std::vector<ReproRowInfo> v;
        for (const auto& r : rows()) v.push_back(r.info);
        return v;
    }();
    return info;
}

std::vector<ReproRow> run_repro(const std::string& only, std::optional<int> criterion) {
    std::vector<ReproRow> out;
    for (const auto& r : rows()) {
        if (!only.empty() && r.info.id != only) continue;
        if (criterion && r.info.criterion != *criterion) continue;
        ReproRow row;
        row.id = r.info.id;
        row.criterion = r.info.criterion;
        row.claim = r.info.claim;
        auto t0 = std::chrono::steady_clock::now();
        try {
            std::tie(row.pass, row.detail) = r.run();
        } catch (const std::exception& e) {
            row.pass = false;
            row.detail = std::string("error: ") + e.what();
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (row.seconds > 60) {
            row.pass = false;
            row.detail += " | slower than 60 s";
        }
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::ordered_json repro_json(const std::vector<ReproRow>& rows) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json e;
        e["id"] = r.id;
        e["criterion"] = r.criterion;
        e["claim"] = r.claim;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        j.push_back(e);
    }
    return j;
}

}  // namespace freecurve
