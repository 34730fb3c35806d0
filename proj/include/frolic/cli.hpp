#pragma once

#include <functional>
#include <iosfwd>

#include "frolic/lie.hpp"

namespace frolic {

/// Parsed --group payload: a builtin kind plus its parameters.
struct GroupSpec {
    std::string kind;
    nlohmann::json params;
};

/// Run configuration shared by the verification subcommands.
struct RunConfig {
    std::uint64_t seed = 42;
    int trials = 50;
    double tol = 1e-8;
    std::string format = "json"; ///< json | csv | text
};

/// Parse an inline JSON document or an @file reference.
GroupSpec parse_group_spec(const std::string& arg);

/// Instantiate a builtin group; throws InvalidParameter for unknown kinds
/// or space-only kinds.
GroupPtr make_group(const GroupSpec& spec);

/// Instantiate the space behind a spec; accepts both group kinds (their
/// underlying space) and space-only kinds (euclidean, circle,
/// coordinate_cross).
SpacePtr make_space(const GroupSpec& spec);

/// Exit codes: 0 pass, 1 verification failure, 2 usage or spec error,
/// 3 numeric domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

/// Exception-to-exit-code policy shared by every subcommand: body() result
/// on success, 2 for spec errors, 1 for failed homomorphism gates, 3 for
/// numeric domain errors.
int run_guarded(const std::function<int()>& body, std::ostream& err);

} // namespace frolic
