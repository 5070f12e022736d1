#ifndef TANALG_CLI_HPP
#define TANALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tanalg {

// Full command-line surface. Reports go to out, diagnostics to err.
// Exit status: 0 computed result (verdict false/fail included), 1 corpus or
// internal failure, 2 input/syntax errors, 3 precondition violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tanalg

#endif
