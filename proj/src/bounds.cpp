#include "freecurve/bounds.hpp"

#include "freecurve/poly.hpp"
#include "freecurve/syzygy.hpp"

namespace freecurve {

namespace {

Rational q(long a, long b = 1) { return Rational::make(Integer(a), Integer(b)); }

BoundReport report(std::string id, std::vector<std::pair<std::string, long>> inputs, Rational value) {
    BoundReport r;
    r.formula_id = std::move(id);
    r.inputs = std::move(inputs);
    r.floor = value.floor();
    r.value = std::move(value);
    return r;
}

}  // namespace

nlohmann::ordered_json BoundReport::to_json() const {
    nlohmann::ordered_json j;
    j["formula"] = formula_id;
    nlohmann::ordered_json in;
    for (const auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = in;
    j["value"] = value.str();
    j["floor"] = floor.get_str();
    j["attained_by"] = attained_by ? nlohmann::ordered_json(*attained_by) : nlohmann::ordered_json(nullptr);
    return j;
}

BoundReport langer_a_bound(int k, int n) {
    if (k < 1 || n < 6) throw CurveError(ErrorKind::Precondition, "the A-count bound needs k >= 1 and n >= 6");
    long K = k;
    Rational a = q((K + 2) * (5 * K + 4), 12 * (K * K * K + 4 * K * K + 4 * K + 1));
    Rational b = q(K + 2, 2 * (K * K + 3 * K + 1));
    Rational N = q(n);
    BoundReport r = report("langer_a", {{"k", k}, {"n", n}}, a * N * N - b * N);
    // D_2m with m = 2k+2 has 3m points of type A_{2k+1}.
    if (n == 4 * k + 4 && r.floor == 3 * (2 * k + 2)) r.attained_by = "D_even(m=" + std::to_string(2 * k + 2) + ")";
    return r;
}

Rational eorb_a(int k, const Rational& alpha) {
    Rational lo = q(k, 2 * k + 2), hi = q(k + 2, 2 * k + 2);
    if (alpha < lo || hi < alpha)
        throw CurveError(ErrorKind::Precondition, "alpha = " + alpha.str() + " is outside [" + lo.str() + ", " + hi.str() + "]");
    Rational t = q(k + 2) - q(2 * (k + 1)) * alpha;
    return t * t / q(4 * (k + 1));
}

BoundReport e6_bound(int d) {
    if (d < 6) throw CurveError(ErrorKind::Precondition, "the E6 bound needs d >= 6");
    Rational D = q(d);
    return report("e6", {{"d", d}}, q(20, 167) * D * D - q(24, 167) * D);
}

std::pair<long, long> picard_bracket(long sigma, int n) {
    if (n % 2 != 0 || n < 4) throw CurveError(ErrorKind::Precondition, "the Picard bracket needs an even degree n >= 4");
    long h = n / 2;
    return {sigma + 1, 3 * h * (h - 1) + 2};
}

bool picard_maximizing(long sigma, int n) { return sigma == picard_bracket(sigma, n).second - 1; }

long sern_lower_bound(const Rational& alpha, int n) {
    if (!(q(1, 2) < alpha)) throw CurveError(ErrorKind::Precondition, "the mdr bound needs alpha > 1/2");
    return (alpha * q(n) - q(2)).ceil().get_si();
}

BoundReport dpw_bound(int n, int r) {
    if (n < 1 || r < 0) throw CurveError(ErrorKind::Precondition, "the du Plessis-Wall bound needs n >= 1 and r >= 0");
    return report("du_plessis_wall", {{"n", n}, {"r", r}}, q(tau_max(n, r)));
}

}  // namespace freecurve
