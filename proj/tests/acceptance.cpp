#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "freecurve/bounds.hpp"
#include "freecurve/catalog.hpp"
#include "freecurve/repro.hpp"
#include "freecurve/union.hpp"
#include "properties.hpp"

using namespace freecurve;

namespace {

struct Check {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

void repro_rows(Check& c, int criterion) {
    auto rows = run_repro("", criterion);
    c.expect(!rows.empty(), "no repro rows");
    for (const auto& r : rows) c.expect(r.pass, r.id + ": " + r.detail);
}

struct Row {
    const char* name;
    std::optional<int> m;
    int tau;
    int mdr;
};

// tau and mdr as tabulated; the exponents follow from mdr and the degree.
std::vector<Row> invariant_table() {
    std::vector<Row> t = {
        {"tri_conical", {}, 19, 2}, {"C_prime", {}, 37, 3}, {"C_dprime", {}, 37, 3},
        {"T6", {}, 19, 2},          {"quintic_H1", {}, 13, 1}, {"quintic_H2", {}, 13, 1},
        {"quintic_H3", {}, 13, 1},  {"quintic_H4", {}, 13, 1}, {"arrangement_A5", {}, 12, 2},
        {"arrangement_A7", {}, 27, 3}, {"arrangement_A9", {}, 48, 4},
    };
    for (int m = 2; m <= 5; ++m) {
        t.push_back({"C_even", m, 3 * m * (m + 1) + 1, m});
        t.push_back({"D_even", m, 3 * m * (m - 1), m});
        t.push_back({"C_odd", m, 3 * m * m, m});
    }
    return t;
}

Check criterion1() {
    Check c;
    for (const auto& row : invariant_table()) {
        CurveSpec s = get_family(row.name, row.m);
        std::string id = s.name + (row.m ? "(" + std::to_string(*row.m) + ")" : "");
        int tau = total_tjurina(s.poly);
        int r = mdr(s.poly);
        c.expect(tau == row.tau, id + ": tau " + std::to_string(tau));
        c.expect(r == row.mdr, id + ": mdr " + std::to_string(r));
        int n = s.poly.degree();
        int free_tau = (n - 1) * (n - 1) - r * (n - 1 - r);
        bool free = tau == free_tau;
        if (std::string(row.name) == "D_even")
            c.expect(tau == free_tau - 1, id + ": expected nearly free");
        else if (std::string(row.name).rfind("arrangement", 0) != 0)
            c.expect(free, id + ": expected free");
    }
    repro_rows(c, 1);
    return c;
}

Check criterion2() {
    Check c;
    const std::pair<const char*, const char*> censuses[] = {
        {"tri_conical", "{2xA1, 1xA3, 2xA7}"},
        {"T6", "{3xA1, 1xA2, 2xE7}"},
        {"quintic_H3", "{1xD5, 1xD8}"},
    };
    for (auto [name, want] : censuses) {
        Census cen = census(get_family(name).poly);
        c.expect(cen.complete, std::string(name) + ": census incomplete");
        c.expect(cen.multiset_str() == want, std::string(name) + ": census " + cen.multiset_str());
        c.expect(cen.tau_sum == total_tjurina(get_family(name).poly), std::string(name) + ": census sum");
    }
    repro_rows(c, 2);
    return c;
}

Check criterion3() {
    Check c;
    UnionVerdict v = check_union_theorem(get_family("T6").poly, parse_poly("x-y", 0), true);
    c.expect(v.status == Tri::Yes, "T6+L: hypotheses");
    c.expect(v.maximizing && v.tau_direct && *v.tau_direct == 28, "T6+L: tau 28");
    repro_rows(c, 3);
    return c;
}

Check criterion4() {
    Check c;
    c.expect(langer_a_bound(2, 12).value == Rational::make(200, 11), "langer(2,12)");
    c.expect(langer_a_bound(3, 16).value == Rational::make(1400, 57), "langer(3,16)");
    c.expect(e6_bound(18).value == Rational::make(6048, 167), "e6(18)");
    Census d12 = census(get_family("D_even", 6).poly);
    c.expect(d12.multiset_str() == "{18xA5}", "D_even(6): " + d12.multiset_str());
    c.expect(langer_a_bound(2, 12).floor == 18, "langer(2,12) floor");
    repro_rows(c, 4);
    return c;
}

Check criterion5() {
    Check c;
    for (const auto& r : props::all(20240611)) {
        std::printf("  %s\n", r.summary().c_str());
        c.expect(r.ok(r.name == "union prediction on catalog unions" ? 20 : 200), r.summary());
    }
    repro_rows(c, 5);
    return c;
}

Check criterion6() {
    Check c;
    repro_rows(c, 6);
    return c;
}

}  // namespace

int main() {
    const std::function<Check()> criteria[] = {criterion1, criterion2, criterion3,
                                               criterion4, criterion5, criterion6};
    bool all = true;
    for (int i = 0; i < 6; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = criteria[i]();
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (const auto& n : c.notes) std::printf("  %s\n", n.c_str());
        std::printf("criterion %d: %s (%.1fs)\n", i + 1, c.pass ? "PASS" : "FAIL", s);
        std::fflush(stdout);
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
