#ifndef PLANAUT_TOOLS_CLI_HPP
#define PLANAUT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace planaut::cli {

enum Exit : int {
    Success = 0,
    Internal = 1,
    Negative = 2,
    Usage = 3,
    CertificateFailed = 4,
};

/// Runs one invocation. args excludes the program name. Results go to out,
/// diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planaut::cli

#endif
