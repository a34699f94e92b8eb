#ifndef DIPATH_TOOLS_CLI_HPP
#define DIPATH_TOOLS_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace dipath::cli {

enum ExitCode : int {
    ok = 0,
    disagreement = 1,
    invalid = 2,
    resource = 3,
};

struct JobSpec {
    std::string command;
    std::string input;
    /// Comma-separated label order; cubical input only.
    std::optional<std::string> order;
    std::size_t max_simplices = 10000;
    std::optional<int> dim_cap;
    std::uint64_t seed = 0;
    /// Number of labels for `random`.
    int labels = 4;
};

/// Runs one job and writes a single JSON document to `out`.
int run(const JobSpec& job, std::ostream& out);

} // namespace dipath::cli

#endif
