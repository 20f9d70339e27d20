#ifndef STRIMP_CLI_HPP_
#define STRIMP_CLI_HPP_

#include <iosfwd>

namespace strimp {

/// Command-line dispatcher. Exit code 0 on affirmative/ok results, 1 on
/// negative results (false / countermodel / not-found), 2 on input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace strimp

#endif  // STRIMP_CLI_HPP_
