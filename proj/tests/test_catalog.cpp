#include <set>

#include "doctest.h"
#include "freecurve/catalog.hpp"

using namespace freecurve;

namespace {

HomPoly lit(const char* s, FieldTag d = 0) { return parse_poly(s, d); }

}  // namespace

TEST_CASE("catalog lookup") {
    std::set<std::string> names;
    for (const auto& f : catalog_families()) names.insert(f.name);
    for (const char* n : {"tri_conical", "C_prime", "C_dprime", "T6", "T8", "C_even", "D_even", "C_odd", "quintic_H1",
                          "arrangement_A9", "medians_sextic", "fermat_sextic"})
        CHECK(names.count(n) == 1);
    CHECK(get_family("C_dprime").field == -2);
    CHECK(get_family("C_even", 3).poly.degree() == 8);
    CHECK(get_family("D_even", 6).poly.degree() == 12);
    CHECK(get_family("C_odd", 4).poly.degree() == 9);
    try {
        get_family("no_such_curve");
        FAIL("expected UnknownCurve");
    } catch (const CurveError& e) {
        CHECK(e.kind() == ErrorKind::UnknownCurve);
    }
    CHECK_THROWS_AS(get_family("C_even"), CurveError);
    CHECK_THROWS_AS(get_family("C_even", 1), CurveError);
}

TEST_CASE("derived constructions are recomputed") {
    CHECK_NOTHROW(verify_derivations());
    for (const auto& c : derived_constructions()) {
        CAPTURE(c.name);
        CHECK(is_reduced(c.poly));
    }
}

TEST_CASE("geometric helpers") {
    Point one = {QuadElem(1L), QuadElem(1L), QuadElem(1L)};
    CHECK(tangent_line(lit("y^2-x*z"), one).normalized() == lit("x-2y+z"));
    Point o = {QuadElem(0L), QuadElem(0L), QuadElem(1L)};
    CHECK(cuspidal_tangent(lit("y^2*z-x^3"), o).normalized() == lit("y"));
    CHECK_THROWS_AS(cuspidal_tangent(lit("y^2*z-x^2*z-x^3"), o), CurveError);
    HomPoly q = lit("x^2+s*x*y", -2) * lit("x-y");
    (void)q;
    CHECK(descend_to_rationals(lit("x^2-2*y^2", -2)).field() == 0);
}

TEST_CASE("expectation records") {
    for (const char* name : {"tri_conical", "T6", "quintic_H2", "arrangement_A7"}) {
        CAPTURE(name);
        ExpectationCheck r = check_expected(get_family(name));
        CHECK(r.ok());
    }
    for (int m = 2; m <= 4; ++m) {
        CHECK(check_expected(get_family("C_even", m)).ok());
        CHECK(check_expected(get_family("D_even", m)).ok());
        CHECK(check_expected(get_family("C_odd", m)).ok());
    }
    CurveSpec wrong = get_family("tri_conical");
    wrong.expected.tau = 18;
    wrong.expected.verdicts.push_back("NearlyFree");
    ExpectationCheck r = check_expected(wrong);
    CHECK(r.mismatches.size() == 3);
}

TEST_CASE("negative control C_t' for t = 2") {
    ExpectationCheck r = check_expected(get_family("cubic_t_sextic", 2));
    CHECK(r.ok());
    CHECK(r.report.tau < maximizing_tau(6));
    CHECK_FALSE(r.report.has(Verdict::MaximizingEven));
}
