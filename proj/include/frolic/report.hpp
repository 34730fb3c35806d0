#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace frolic {

/// Outcome of a verification suite run.
struct Report {
    std::string suite;
    std::string group;
    int trials = 0;
    double worst_abs_dev = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;

    void absorb(double dev, double tol) {
        if (dev > worst_abs_dev) worst_abs_dev = dev;
        if (dev > tol) pass = false;
    }

    nlohmann::ordered_json to_json() const {
        return nlohmann::ordered_json{{"suite", suite},
                                      {"group", group},
                                      {"trials", trials},
                                      {"worst_abs_dev", worst_abs_dev},
                                      {"pass", pass},
                                      {"seed", seed}};
    }
};

} // namespace frolic
