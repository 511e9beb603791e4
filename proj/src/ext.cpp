#include "freecurve/ext.hpp"

namespace freecurve {

std::string ExtElem::str() const {
    if (v_.is_zero()) return "0";
    std::string out;
    for (int i = v_.degree(); i >= 0; --i) {
        const QuadElem& c = v_[i];
        if (c.is_zero()) continue;
        std::string cs = c.is_rational() ? c.str() : "(" + c.str() + ")";
        if (!out.empty() && cs[0] != '-') out += '+';
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c.is_one()) {
            cs.clear();
        } else if (c == QuadElem(-1)) {
            cs = "-";
        } else {
            cs += '*';
        }
        out += cs + "t" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

}  // namespace freecurve
