#ifndef FREECURVE_REPRO_HPP
#define FREECURVE_REPRO_HPP

// The reproduction manifest: every tabulated claim as a pass/fail row.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace freecurve {

struct ReproRow {
    std::string id;
    int criterion = 0;
    std::string claim;
    bool pass = false;
    std::string detail;
    double seconds = 0;  // wall time; reported in text only
};

struct ReproRowInfo {
    std::string id;
    int criterion = 0;
    std::string claim;
};

const std::vector<ReproRowInfo>& repro_rows();

/// Runs the row whose id is `only` (all rows when empty) and, when given,
/// those of `criterion`. Rows slower than 60 s fail.
std::vector<ReproRow> run_repro(const std::string& only = "", std::optional<int> criterion = std::nullopt);

nlohmann::ordered_json repro_json(const std::vector<ReproRow>& rows);

}  // namespace freecurve

#endif
