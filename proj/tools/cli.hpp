#ifndef SKEWHAD_CLI_HPP
#define SKEWHAD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace skewhad::cli {

/// Runs one verb. Exit code 0 on success or a verified-true outcome,
/// 1 on a verified-false or failed check, 2 on usage, format or
/// precondition errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace skewhad::cli

#endif
