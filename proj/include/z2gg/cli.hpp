#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace z2gg {

// Runs one CLI request. Exit codes: 0 success, 1 computational mismatch in
// validate, 2 usage error. Output to `out`, diagnostics to `err`.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace z2gg
