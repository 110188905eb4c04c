#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agree {

/// Entry point behind the `agree` binary. `args` includes the program name.
/// Returns 0 on success, 1 on data/validation errors (one `error:` line on
/// `err`), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agree
