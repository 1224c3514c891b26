#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acyclic {

/// Exit codes: 0 verified/yes, 1 refuted/no, 2 unknown/budget, 3 usage
/// error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acyclic
