#ifndef MH_CLI_HPP
#define MH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mh::cli {

// Runs the command line. Exit status: 0 on success, 2 when the solver
// reports a fail outcome, 1 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

} // namespace mh::cli

#endif
