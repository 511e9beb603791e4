#include "doctest.h"
#include "freecurve/catalog.hpp"
#include "freecurve/union.hpp"

using namespace freecurve;

namespace {

HomPoly lit(const char* s, FieldTag d = 0) { return parse_poly(s, d); }

std::map<std::string, int> labels(const std::vector<ContactRecord>& prof) {
    std::map<std::string, int> out;
    for (const auto& r : prof) out[r.type_label()] += r.orbit_degree;
    return out;
}

ContactRecord record(BaseState s, int i, int k) {
    ContactRecord r;
    r.base_state = s;
    r.i_mult = i;
    r.k = k;
    return r;
}

}  // namespace

TEST_CASE("local prediction table") {
    auto a = predict_union_singularity(record(BaseState::SmoothPoint, 1, 0));
    CHECK(a.first == ade_A(1));
    CHECK(a.second == 1);
    auto b = predict_union_singularity(record(BaseState::SmoothPoint, 2, 1));
    CHECK(b.first == ade_A(3));
    CHECK(b.second == 3);
    auto c = predict_union_singularity(record(BaseState::ATransversal, 2, 7));
    CHECK(c.first == ade_D(10));
    CHECK(c.second == 3);
    auto d = predict_union_singularity(record(BaseState::A1BranchTangent, 3, 1));
    CHECK(d.first == ade_D(6));
    CHECK(d.second == 5);
    auto e = predict_union_singularity(record(BaseState::A2CuspidalTangent, 3, 0));
    CHECK(e.first == ade_E(7));
    CHECK(e.second == 5);
    CHECK_THROWS_AS(predict_union_singularity(record(BaseState::Other, 2, 0)), CurveError);
}

TEST_CASE("profile of the tri-conical sextic and y = 0") {
    auto prof = intersection_profile(get_family("tri_conical").poly, lit("y"));
    CHECK(labels(prof) == std::map<std::string, int>{{"D10^t", 2}, {"D6^t", 1}});
    int bez = 0;
    for (const auto& r : prof) {
        bez += r.orbit_degree * r.i_mult;
        CHECK(r.predicted == r.actual);
        CHECK(r.base_state == BaseState::ATransversal);
    }
    CHECK(bez == 6);
}

TEST_CASE("profile with irrational contact points") {
    // the line z = 0 meets x^3 + y^3 + z^3 at three points over Q(sqrt -3)
    auto prof = intersection_profile(lit("x^3+y^3+z^3"), lit("z"));
    int total = 0;
    for (const auto& r : prof) {
        total += r.orbit_degree;
        CHECK(r.base_state == BaseState::SmoothPoint);
        CHECK(r.actual == ade_A(1));
    }
    CHECK(total == 3);
}

TEST_CASE("union theorem verdicts") {
    UnionVerdict v = check_union_theorem(get_family("T6").poly, lit("x-y"), true);
    CHECK(v.theorem == UnionTheorem::LineToOdd);
    CHECK(v.status == Tri::Yes);
    CHECK(v.maximizing);
    CHECK(v.lhs == v.rhs);
    REQUIRE(v.tau_direct);
    CHECK(*v.tau_direct == 28);
    CHECK(v.n_e7 == 1);

    UnionVerdict w = check_union_theorem(get_family("C_even", 3).poly, lit("z"), true);
    CHECK_FALSE(w.maximizing);
    CHECK(w.lhs == 2);
    CHECK(w.rhs == 0);
    REQUIRE(w.tau_direct);
    CHECK(*w.tau_direct == w.tau_predicted);

    UnionVerdict c = check_union_theorem(get_family("medians_sextic").poly, lit("x^2+y^2+z^2-2x*y-2y*z-2z*x"));
    CHECK(c.theorem == UnionTheorem::ConicToEven);
    CHECK(c.maximizing);
    CHECK(c.n_d_nt.at(1) == 3);
    auto j = c.to_json();
    CHECK(j["maximizing"] == true);
}

TEST_CASE("union errors") {
    HomPoly t = get_family("tri_conical").poly;
    try {
        intersection_profile(t, lit("x^3+y^3+z^3"));
        FAIL("expected UnsupportedComponent");
    } catch (const CurveError& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedComponent);
    }
    // a line pair is not a smooth conic
    CHECK_THROWS_AS(intersection_profile(t, lit("x*y")), CurveError);
    try {
        intersection_profile(lit("x*y*z"), lit("x"));
        FAIL("expected SharedComponent");
    } catch (const CurveError& e) {
        CHECK(e.kind() == ErrorKind::SharedComponent);
    }
    try {
        intersection_profile(lit("x^2*y"), lit("z"));
        FAIL("expected NonReduced");
    } catch (const CurveError& e) {
        CHECK(e.kind() == ErrorKind::NonReduced);
    }
}

TEST_CASE("secant bound") {
    SecantCheck s = secant_bound_check(get_family("tri_conical").poly, lit("y"));
    CHECK(s.status == Tri::Yes);
    CHECK(s.points == 3);
    CHECK(s.holds);
}
