#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unistrat {

// Entry point behind the `unistrat` binary.  `args` is argv[1..]; the whole
// report goes to `out` (stdout in the tool, a string stream in tests).
//
// Exit codes:
//   0  ran to completion, verified answer is positive
//   1  ran to completion, verified answer is negative
//   2  bad input: file, grammar, option or a violated precondition
//   3  a search hit its budget before reaching an answer
int run_command(const std::vector<std::string>& args, std::ostream& out);

}  // namespace unistrat
