#ifndef SYMDET_CLI_HPP
#define SYMDET_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "symdet/schur_rank.hpp"

namespace symdet {

enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_usage = 2 };

struct CliHooks {
    RankFn rank = schur_rank; // used by `verify`; tests swap in a faulty one
};

/* Parses and runs one command line (args excludes the program name).
 * Results go to `out`, diagnostics to `err`. Returns 0, 1 or 2. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

} // namespace symdet

#endif
