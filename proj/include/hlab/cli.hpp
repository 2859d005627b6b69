#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlab {

/// Exit codes: 0 positive verdict, 1 negative verdict or violated identity, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlab
