#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cy3::cli {

/// Runs the tool on `args` (program name excluded).  Returns 0 on success,
/// 1 when verify-paper finds a failing check, 2 on usage or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cy3::cli
