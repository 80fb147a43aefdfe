#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcong {

/// Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `qcong` tool. `args` excludes the program name.
/// Default worker count for `suite` comes from QCONG_JOBS when set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcong
