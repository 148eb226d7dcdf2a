#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace slicewb {

/// Exit codes: 0 all certificates pass, 1 certificate failure, 2 usage or
/// input error.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace slicewb
