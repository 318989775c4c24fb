#pragma once

#include <ostream>

namespace qcoord {

/// Entry point of the qcoord command-line tool. Exit codes: 0 success,
/// 1 a check failed, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcoord
