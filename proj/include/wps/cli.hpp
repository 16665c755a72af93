#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wps/verify.hpp"

namespace wps {

class CliUsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Subcommand {
    help,
    count,
    enumerate_points,
    fiber,
    verify_lemma,
    counterexample,
    gcd_identity,
    galois_check,
};

/// Fully parsed and validated command line. The budget resolves as:
/// --budget flag, else the WPS_BUDGET environment variable, else the default.
struct CliInvocation {
    Subcommand cmd = Subcommand::help;
    std::string help_text;

    std::uint32_t p = 0;
    std::uint32_t k = 1;
    std::string weights;
    std::size_t i = 0;
    std::string point;
    std::string format; // per-subcommand default applied during parsing

    std::vector<std::uint32_t> q_list{2, 3, 4, 5, 7};
    std::size_t n_min = 1;
    std::size_t n_max = 2;
    std::uint32_t weight_max = 6;
    std::string mode = "exhaustive";
    std::uint64_t samples = 500;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::uint64_t budget = kDefaultBudget;

    std::uint32_t a0 = 1;
    std::uint32_t a1 = 1;

    std::uint64_t a = 0;
    std::uint64_t d = 0;
    std::uint64_t m = 0;
    std::uint64_t max = 0;
    bool triple_given = false;
    bool max_given = false;
};

/// Parses subcommand arguments (program name excluded). Throws CliUsageError
/// on malformed input.
CliInvocation parse_args(const std::vector<std::string>& args);

/// Runs one invocation. Returns 0 on success with all checks matching, 1 on
/// a verification mismatch, 2 on usage or runtime errors (one diagnostic
/// line on err).
int dispatch(const CliInvocation& inv, std::ostream& out, std::ostream& err);

/// parse_args + dispatch with usage errors mapped to exit code 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wps
