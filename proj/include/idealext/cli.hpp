#ifndef IDEALEXT_CLI_HPP
#define IDEALEXT_CLI_HPP

#include <ostream>

namespace idealext::cli {

/// Exit codes: 0 success, 1 usage or data error, 2 a check or fuzz run found a violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace idealext::cli

#endif  // IDEALEXT_CLI_HPP
