#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segstab {

/// Runs the segstab command line. `args` excludes the program name. Results
/// go to `out` unless --out names a file; diagnostics go to `err`.
/// Returns 0 on success, 1 on an infeasible solution or violated
/// certificate, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segstab
