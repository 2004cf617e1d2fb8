#ifndef FORCING_CLI_HPP
#define FORCING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace forcing {

// Exit codes: 0 success, 1 usage error, 2 domain error (no perfect
// matching, not bipartite, too large, bad input), 3 violation of a proven
// statement. Output is byte-identical across runs for identical arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace forcing

#endif  // FORCING_CLI_HPP
