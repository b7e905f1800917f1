#pragma once

#include <ostream>

namespace exwave::cli {

/// Exit codes: 0 all checks pass or table written, 1 a check failed,
/// 2 usage, config or output-path error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace exwave::cli
