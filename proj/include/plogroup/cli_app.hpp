#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plogroup {

/// Batch entry point behind the `plogroup` binary. Returns the process exit
/// code: 0 success, 1 validation/usage error, 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plogroup
