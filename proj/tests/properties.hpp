#ifndef FREECURVE_TESTS_PROPERTIES_HPP
#define FREECURVE_TESTS_PROPERTIES_HPP

// Randomized property suites shared by the unit tests and the acceptance
// binary. Each returns the number of cases run and the failures seen.

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Result {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> samples;  // first few failures

    bool ok(int min_cases = 200) const { return failures == 0 && cases >= min_cases; }
    void fail(const std::string& what);
    std::string summary() const;
};

Result euler_identity(std::uint32_t seed, int cases = 300);
Result bezout_and_prediction(std::uint32_t seed, int cases = 200);
Result sigma_equals_tau(std::uint32_t seed, int cases = 200);
Result milnor_vs_oracle(std::uint32_t seed, int cases = 200);
Result classify_roundtrip(std::uint32_t seed, int cases = 200);
Result mdr_vs_oracle(std::uint32_t seed, int cases = 200);
Result tau_max_decreasing();
Result catalog_bounds(std::uint32_t seed, int random_cases = 200);
Result catalog_unions();

std::vector<Result> all(std::uint32_t seed);

}  // namespace props

#endif
