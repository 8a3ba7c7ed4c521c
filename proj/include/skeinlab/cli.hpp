#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skeinlab {
namespace cli {

// Runs one CLI invocation. Returns 0 on success, 1 on validation errors
// (bad input, unknown subcommand), 2 on computation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace skeinlab
