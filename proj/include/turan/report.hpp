#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan {

inline constexpr const char* kToolVersion = "1.0.0";

// Command-line entry point. args excludes the program name. Structured JSON
// goes to out, human-readable summaries to err. Returns the process exit
// code: 0 pass, 1 domain failure (violation witnessed or a verification
// failed), 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace turan
