#pragma once

#include <ostream>

namespace lenscx::cli {

inline constexpr const char* kSchemaVersion = "lenscx-report/1";

/// Exit codes: 0 all checks pass, 1 a verification check failed, 2 input
/// or usage error (with a JSON {"error": ...} object on `out`).
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace lenscx::cli
