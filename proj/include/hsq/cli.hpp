#pragma once

#include <string>
#include <vector>

namespace hsq {

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

// Full command driver with captured streams; status 0 on success, 1 on
// validation errors (bad flags, malformed instances, budget overruns, an
// "inconclusive" verification verdict), 2 on internal assertion failures
// (an exactness or cross-check identity breaking, including a "mismatch"
// verification verdict).
CliResult run_cli(const std::vector<std::string>& args);

} // namespace hsq
