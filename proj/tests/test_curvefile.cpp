#include "doctest.h"
#include "freecurve/curvefile.hpp"

using namespace freecurve;

namespace {

std::string message_of(const std::string& text) {
    try {
        parse_curve_file(text);
    } catch (const CurveError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("curve file with an expected block") {
    CurveFile c = parse_curve_file(
        "# the octic over Q(sqrt -2)\n"
        "field Q(sqrt -2)\n"
        "name sample\n"
        "(x^2+y^2-z^2)\n"
        "  *(2x^2+y^2+s*y*z)\n"
        "expected\n"
        "tau 37\n"
        "mdr 3\n"
        "exponents 3 4\n"
        "verdicts Free MaximizingEven\n"
        "absent NearlyFree\n"
        "census {2xA1, 1xA3}\n");
    CHECK(c.field == -2);
    CHECK(c.name == "sample");
    CHECK(c.poly.degree() == 4);
    REQUIRE(c.expected);
    CHECK(*c.expected->tau == 37);
    CHECK(*c.expected->mdr == 3);
    CHECK(*c.expected->exponents == std::make_pair(3, 4));
    CHECK(c.expected->verdicts == std::vector<std::string>{"Free", "MaximizingEven"});
    CHECK(c.expected->absent_verdicts == std::vector<std::string>{"NearlyFree"});
    CHECK(*c.expected->census == "{2xA1, 1xA3}");
}

TEST_CASE("field declarations") {
    CHECK(parse_curve_file("field Q\nx*y*z\n").field == 0);
    CHECK(parse_curve_file("field Q(sqrt(5))\nx^2+s*y^2-z^2\n").field == 5);
    CHECK(message_of("field Q(sqrt 8)\nx\n").find("squarefree") != std::string::npos);
    CHECK(message_of("field R\nx\n").find("line 1") != std::string::npos);
    CHECK(message_of("x*y*z\n").find("line 1") != std::string::npos);
    CHECK(message_of("field Q\n").find("missing polynomial") != std::string::npos);
}

TEST_CASE("errors carry positions") {
    CHECK(message_of("field Q\nx^2+y^2\n  + *z^2\n") == "line 3, column 5: unexpected character '*'");
    CHECK(message_of("field Q\nx^2+s*y^2\n").find("line 2") != std::string::npos);
    CHECK(message_of("field Q\nx^2+y\n") == "line 2: NonHomogeneous(2,1)");
    CHECK(message_of("field Q\nx*y*z\nexpected\ntau many\n") == "line 4: expected an integer after 'tau'");
    CHECK(message_of("field Q\nx*y*z\nexpected\ncolour red\n") == "line 4: unknown expectation 'colour'");
    CHECK_THROWS_AS(read_curve_file("/nonexistent/curve.txt"), CurveError);
}

TEST_CASE("print and parse round trip") {
    const char* texts[] = {
        "field Q\nx*y*z*(x-y)\n",
        "field Q(sqrt -2)\nname c\n(x^2+y^2-z^2)*(2x^2+y^2+s*y*z)\nexpected\ntau 7\nverdicts Free\n",
        "field Q(sqrt 5)\n1/2*x^3 + s*y^3 - z^3\nexpected\ncensus {1xA1}\nabsent NearlyFree\nexponents 1 1\n",
    };
    for (const char* t : texts) {
        CurveFile a = parse_curve_file(t);
        std::string printed = curve_file_str(a);
        CurveFile b = parse_curve_file(printed);
        CHECK(curve_file_str(b) == printed);
        CHECK(a.poly == b.poly);
        CHECK(a.field == b.field);
        CHECK(a.name == b.name);
        CHECK(a.expected.has_value() == b.expected.has_value());
    }
}
