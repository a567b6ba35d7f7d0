#pragma once

#include <iosfwd>

namespace hnlie {

/// Exit codes: 0 success, 1 usage or input error, 2 a regression suite
/// disagreed with the reference tables (the report is still written).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hnlie
