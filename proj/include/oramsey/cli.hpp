#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oramsey {

/// Runs the command-line tool. Exit code 0 is a definitive answer, 1 a usage
/// or input error, 2 an honest unknown (budget or cap exhausted).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace oramsey
