#ifndef HX_VERIFY_HPP
#define HX_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hx {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<CriterionResult> results;

    bool all_pass() const;
    std::string table() const;       // one "PASS/FAIL" line per criterion
    nlohmann::json to_json() const;  // deterministic given the seed
};

/// Runs the full identity battery at the pinned tolerances. The
/// determinism check reruns the battery with the same seed and
/// compares the serialized reports byte for byte.
VerifyReport verify_paper(std::uint64_t seed);

} // namespace hx

#endif
