#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("freecurve-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string& args) {
    fs::path out = scratch() / "stdout.txt";
    std::string cmd = std::string(FREECURVE_CLI) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    r.out = ss.str();
    return r;
}

std::string write(const std::string& name, const std::string& text) {
    fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("analyze") {
    std::string tri = (scratch() / "tri.curve").string();
    REQUIRE(run("construct tri_conical -o " + tri).code == 0);
    Run a = run("--json analyze " + tri);
    CHECK(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["freeness"]["tau"] == 19);
    CHECK(j["freeness"]["verdicts"] == nlohmann::json::array({"Free(2,3)", "MaximizingEven"}));
    CHECK(j["expected_ok"] == true);
    CHECK(j["census"]["alpha"] == "5/8");
    CHECK(run("analyze " + tri).out.find("verdicts   Free(2,3) MaximizingEven\n") != std::string::npos);

    std::string h3 = (scratch() / "h3.curve").string();
    REQUIRE(run("construct quintic_H3 -o " + h3).code == 0);
    Run b = run("analyze " + h3 + " --json");
    CHECK(b.code == 0);
    auto k = nlohmann::json::parse(b.out);
    bool odd = false;
    for (const auto& v : k["freeness"]["verdicts"]) odd = odd || v == "MaximizingOdd";
    CHECK(odd);
    CHECK(run("analyze " + h3).out.find("{1xD5, 1xD8}") != std::string::npos);

    Run bad = run("analyze " + write("bad.curve", "field Q\nx^2+*y^2\n"));
    CHECK(bad.code == 1);
    CHECK(bad.out.find("line 2, column 5") != std::string::npos);
    CHECK(run("analyze " + (scratch() / "missing.curve").string()).code == 1);

    // a quadruple point: the census is not ADE, the verdicts are unconfirmed
    Run u = run("analyze " + write("quad.curve", "field Q\nx*y*(x-y)*(x+y)*z\n"));
    CHECK(u.code == 2);
    CHECK(u.out.find("unconfirmed") != std::string::npos);

    // an expected block that disagrees
    Run m = run("analyze " + write("wrong.curve", "field Q\nx*y*z\nexpected\ntau 4\n"));
    CHECK(m.code == 1);
    CHECK(m.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("union") {
    std::string t6 = (scratch() / "t6.curve").string();
    REQUIRE(run("construct T6 -o " + t6).code == 0);
    Run a = run("union " + t6 + " " + write("l.curve", "field Q\nx-y\n") + " --verify");
    CHECK(a.code == 0);
    CHECK(a.out.find("direct 28") != std::string::npos);
    CHECK(a.out.find("maximizing, equality") != std::string::npos);

    std::string c8 = (scratch() / "c8.curve").string();
    REQUIRE(run("construct C_even --m 3 -o " + c8).code == 0);
    Run b = run("--json union " + c8 + " " + write("z.curve", "field Q\nz\n"));
    CHECK(b.code == 0);
    auto j = nlohmann::json::parse(b.out);
    CHECK(j["maximizing"] == false);

    Run c = run("union " + t6 + " " + write("cubic.curve", "field Q\nx^3+y^3+z^3\n"));
    CHECK(c.code == 1);
    CHECK(c.out.find("UnsupportedComponent") != std::string::npos);
}

TEST_CASE("construct, catalog and bounds") {
    Run a = run("construct C_odd --m 3");
    CHECK(a.code == 0);
    CHECK(a.out.rfind("field Q", 0) == 0);
    CHECK(run("construct nothing").code == 1);
    CHECK(run("construct C_odd").code == 1);

    Run c = run("catalog --json");
    CHECK(c.code == 0);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j.size() >= 20);

    Run b = run("bounds --langer 2 12 --e6 18 --json");
    CHECK(b.code == 0);
    auto k = nlohmann::json::parse(b.out);
    CHECK(k[0]["value"] == "200/11");
    CHECK(k[1]["value"] == "6048/167");
    CHECK(run("bounds --langer 0 12").code == 1);
}

TEST_CASE("repro and usage errors") {
    Run a = run("repro --only tri_conical --json");
    CHECK(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["rows"].size() == 1);
    CHECK(j["all_pass"] == true);
    CHECK(run("repro --only no_such_row").code == 1);
    CHECK(run("").code == 1);
    CHECK(run("frobnicate").code == 1);
}
