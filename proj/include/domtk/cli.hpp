#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace domtk {

// Exit codes: 0 success / all claims pass, 1 usage or I/O error, 2 claim
// failure. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace domtk
