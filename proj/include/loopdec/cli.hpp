#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace loopdec {

// Full command-line dispatch.  args excludes the program name.  Results go
// to out as JSON; errors go to err as {"error": code, "message": ...}.
// Returns 0 on success, 1 on domain errors (including verify/admissible
// answering "no"), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace loopdec
