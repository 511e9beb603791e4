#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "freecurve/repro.hpp"
#include "freecurve/report.hpp"

using namespace freecurve;

namespace {

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

nlohmann::ordered_json family_json(const FamilyInfo& fi) {
    nlohmann::ordered_json j;
    j["name"] = fi.name;
    j["takes_m"] = fi.takes_m;
    if (fi.takes_m) {
        j["m_min"] = fi.m_min;
        j["m_max"] = fi.m_max == 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(fi.m_max);
    }
    j["description"] = fi.description;
    return j;
}

int cmd_analyze(const std::string& path, bool json) {
    Analysis a = analyze(read_curve_file(path));
    if (json) print_json(a.to_json());
    else std::cout << a.to_text();
    if (!a.mismatches.empty()) return 1;
    return a.unconfirmed() ? 2 : 0;
}

int cmd_union(const std::string& p1, const std::string& p2, bool verify, bool json) {
    CurveFile a = read_curve_file(p1);
    CurveFile b = read_curve_file(p2);
    if (a.field != b.field) {
        if (a.field != 0 && b.field != 0) throw CurveError(ErrorKind::Precondition, "the two curves are declared over different fields");
        FieldTag d = a.field != 0 ? a.field : b.field;
        a.poly = parse_poly(a.poly.str(), d);
        b.poly = parse_poly(b.poly.str(), d);
    }
    UnionVerdict v = check_union_theorem(a.poly, b.poly, verify);
    if (json) print_json(union_json(v));
    else std::cout << union_text(v);
    return v.status == Tri::Yes ? 0 : 2;
}

int cmd_construct(const std::string& name, std::optional<int> m, const std::string& out) {
    std::string text = curve_file_str(curve_file_from_spec(get_family(name, m)));
    if (out.empty() || out == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f) throw CurveError(ErrorKind::Io, "cannot write " + out);
    f << text;
    return 0;
}

int cmd_catalog(bool json) {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& fi : catalog_families()) {
        if (json) {
            all.push_back(family_json(fi));
            continue;
        }
        std::cout << fi.name;
        if (fi.takes_m) std::cout << "  [m >= " << fi.m_min << (fi.m_max ? ", m <= " + std::to_string(fi.m_max) : "") << "]";
        std::cout << "\n    " << fi.description << '\n';
        if (!fi.takes_m) {
            CurveFile c = curve_file_from_spec(get_family(fi.name));
            if (c.expected) {
                const auto& e = *c.expected;
                std::cout << "    expected";
                if (e.tau) std::cout << " tau=" << *e.tau;
                if (e.mdr) std::cout << " mdr=" << *e.mdr;
                for (const auto& v : e.verdicts) std::cout << ' ' << v;
                if (e.census) std::cout << ' ' << *e.census;
                std::cout << '\n';
            }
        }
    }
    if (json) print_json(all);
    return 0;
}

int cmd_bounds(const std::vector<int>& langer, int e6, const std::vector<long>& picard, bool json) {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    auto emit = [&](const BoundReport& b) {
        if (json) {
            all.push_back(b.to_json());
            return;
        }
        std::cout << b.formula_id << "  ";
        for (const auto& [k, v] : b.inputs) std::cout << k << '=' << v << ' ';
        std::cout << " value " << rational_text(b.value) << "  floor " << b.floor.get_str();
        if (b.attained_by) std::cout << "  attained by " << *b.attained_by;
        std::cout << '\n';
    };
    if (langer.size() == 2) emit(langer_a_bound(langer[0], langer[1]));
    if (e6 > 0) emit(e6_bound(e6));
    if (picard.size() == 2) {
        auto [lo, hi] = picard_bracket(picard[0], int(picard[1]));
        bool maxi = picard_maximizing(picard[0], int(picard[1]));
        if (json) {
            nlohmann::ordered_json j;
            j["formula"] = "picard";
            j["sigma"] = picard[0];
            j["n"] = picard[1];
            j["lower"] = std::to_string(lo);
            j["upper"] = std::to_string(hi);
            j["maximizing"] = maxi;
            all.push_back(j);
        } else {
            std::cout << "picard  sigma=" << picard[0] << " n=" << picard[1] << "  " << lo << " <= rho <= " << hi
                      << (maxi ? "  maximizing" : "") << '\n';
        }
    }
    if (json) print_json(all);
    return 0;
}

int cmd_repro(const std::string& only, std::optional<int> criterion, bool json) {
    auto rows = run_repro(only, criterion);
    bool ok = !rows.empty();
    for (const auto& r : rows) ok = ok && r.pass;
    if (json) {
        nlohmann::ordered_json j;
        j["rows"] = repro_json(rows);
        j["all_pass"] = ok;
        print_json(j);
    } else {
        for (const auto& r : rows) {
            char t[32];
            std::snprintf(t, sizeof t, "%6.2fs", r.seconds);
            std::cout << (r.pass ? "PASS " : "FAIL ") << t << "  [" << r.criterion << "] " << r.id << "  " << r.detail << '\n';
        }
        std::cout << (ok ? "all rows pass" : "some rows fail") << " (" << rows.size() << " rows)\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Freeness invariants of plane curves"};
    app.require_subcommand(1);
    bool json = false;
    int threads = 1;
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--threads", threads, "worker threads for modular linear algebra")->check(CLI::Range(1, 64));

    std::string path, path2, name, out, only;
    std::optional<int> m, criterion;
    bool verify = false;
    std::vector<int> langer;
    int e6 = 0;
    std::vector<long> picard;

    auto* an = app.add_subcommand("analyze", "invariants, census and verdicts of a curve file");
    an->add_option("file", path)->required();
    an->add_flag("--json", json);

    auto* un = app.add_subcommand("union", "add a line or a smooth conic to a curve");
    un->add_option("curve", path)->required();
    un->add_option("component", path2)->required();
    un->add_flag("--verify", verify, "recompute tau of the union directly");
    un->add_flag("--json", json);

    auto* co = app.add_subcommand("construct", "write a catalog curve as a curve file");
    co->add_option("name", name)->required();
    co->add_option("--m", m);
    co->add_option("-o,--output", out);
    co->add_flag("--json", json);

    auto* ca = app.add_subcommand("catalog", "list named curves and families");
    ca->add_flag("--json", json);

    auto* bo = app.add_subcommand("bounds", "closed-form bounds");
    bo->add_option("--langer", langer, "k n")->expected(2);
    bo->add_option("--e6", e6, "degree");
    bo->add_option("--picard", picard, "sigma n")->expected(2);
    bo->add_flag("--json", json);

    auto* re = app.add_subcommand("repro", "rerun the reproduction manifest");
    re->add_option("--only", only, "run the single row with this id");
    re->add_option("--criterion", criterion)->check(CLI::Range(1, 6));
    re->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    set_worker_threads(threads);

    try {
        if (*an) return cmd_analyze(path, json);
        if (*un) return cmd_union(path, path2, verify, json);
        if (*co) return cmd_construct(name, m, out);
        if (*ca) return cmd_catalog(json);
        if (*bo) return cmd_bounds(langer, e6, picard, json);
        if (*re) return cmd_repro(only, criterion, json);
    } catch (const CurveError& e) {
        if (json) {
            nlohmann::ordered_json j;
            j["error"] = error_kind_name(e.kind());
            j["message"] = e.what();
            print_json(j);
        }
        std::cerr << "error: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
