#include "freecurve/curvefile.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <vector>

namespace freecurve {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(int line, const std::string& msg) {
    throw CurveError(ErrorKind::Syntax, "line " + std::to_string(line) + ": " + msg);
}

FieldTag parse_field(const std::string& s, int line) {
    static const std::regex q(R"(field\s+Q)");
    static const std::regex ext(R"(field\s+Q\(\s*sqrt\s*\(?\s*(-?\d+)\s*\)?\s*\))");
    std::smatch m;
    if (std::regex_match(s, q)) return 0;
    if (!std::regex_match(s, m, ext)) fail_at(line, "expected 'field Q' or 'field Q(sqrt D)'");
    long d = std::stol(m[1].str());
    if (d == 0 || d == 1) return 0;
    if (squarefree_part(Integer(d)) != Integer(d)) fail_at(line, "D must be a squarefree integer");
    return d;
}

void parse_expected_line(ExpectedInvariants& e, const std::string& s, int line) {
    std::istringstream in(s);
    std::string key;
    in >> key;
    auto need_int = [&]() {
        long v;
        if (!(in >> v)) fail_at(line, "expected an integer after '" + key + "'");
        return static_cast<int>(v);
    };
    if (key == "tau") {
        e.tau = need_int();
    } else if (key == "mdr") {
        e.mdr = need_int();
    } else if (key == "exponents") {
        int a = need_int();
        int b = need_int();
        e.exponents = std::make_pair(a, b);
    } else if (key == "verdicts" || key == "absent") {
        std::string v;
        while (in >> v) (key == "verdicts" ? e.verdicts : e.absent_verdicts).push_back(v);
    } else if (key == "census") {
        std::string rest;
        std::getline(in, rest);
        e.census = trim(rest);
    } else {
        fail_at(line, "unknown expectation '" + key + "'");
    }
}

}  // namespace

CurveFile parse_curve_file(const std::string& text) {
    CurveFile out;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool have_field = false, in_expected = false;
    std::string body;
    struct Start {
        std::size_t offset;  // in body
        int line;
        std::size_t indent;
    };
    std::vector<Start> starts;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        if (!have_field) {
            out.field = parse_field(s, line);
            have_field = true;
            continue;
        }
        if (in_expected) {
            parse_expected_line(*out.expected, s, line);
            continue;
        }
        if (s == "expected") {
            in_expected = true;
            out.expected.emplace();
            continue;
        }
        if (body.empty() && s.rfind("name ", 0) == 0) {
            out.name = trim(s.substr(5));
            continue;
        }
        if (!body.empty()) body += ' ';
        starts.push_back({body.size(), line, raw.find_first_not_of(" \t")});
        body += s;
    }
    if (!have_field) throw CurveError(ErrorKind::Syntax, "missing field declaration");
    if (body.empty()) throw CurveError(ErrorKind::Syntax, "missing polynomial");
    try {
        out.poly = parse_poly(body, out.field);
    } catch (const ParseError& e) {
        std::size_t pos = e.position();
        auto it = starts.begin();
        for (auto jt = starts.begin(); jt != starts.end() && jt->offset <= pos; ++jt) it = jt;
        std::string msg = e.what();
        auto colon = msg.find(": ");
        throw CurveError(ErrorKind::Syntax, "line " + std::to_string(it->line) + ", column " +
                                                std::to_string(pos - it->offset + it->indent + 1) + ": " +
                                                (colon == std::string::npos ? msg : msg.substr(colon + 2)));
    } catch (const CurveError& e) {
        throw CurveError(e.kind(), "line " + std::to_string(starts.front().line) + ": " + e.what());
    }
    return out;
}

CurveFile read_curve_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CurveError(ErrorKind::Io, "cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_curve_file(ss.str());
}

std::string curve_file_str(const CurveFile& c) {
    std::ostringstream os;
    os << "field " << (c.field == 0 ? std::string("Q") : "Q(sqrt " + std::to_string(c.field) + ")") << '\n';
    if (!c.name.empty()) os << "name " << c.name << '\n';
    os << c.poly.str() << '\n';
    if (c.expected) {
        const auto& e = *c.expected;
        os << "expected\n";
        if (e.tau) os << "tau " << *e.tau << '\n';
        if (e.mdr) os << "mdr " << *e.mdr << '\n';
        if (e.exponents) os << "exponents " << e.exponents->first << ' ' << e.exponents->second << '\n';
        if (!e.verdicts.empty()) {
            os << "verdicts";
            for (const auto& v : e.verdicts) os << ' ' << v;
            os << '\n';
        }
        if (!e.absent_verdicts.empty()) {
            os << "absent";
            for (const auto& v : e.absent_verdicts) os << ' ' << v;
            os << '\n';
        }
        if (e.census) os << "census " << *e.census << '\n';
    }
    return os.str();
}

CurveFile curve_file_from_spec(const CurveSpec& spec) {
    CurveFile c;
    c.field = spec.field;
    c.name = spec.m ? spec.name + "(m=" + std::to_string(*spec.m) + ")" : spec.name;
    c.poly = spec.poly;
    c.expected = spec.expected;
    return c;
}

}  // namespace freecurve
