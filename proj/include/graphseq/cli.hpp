#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphseq::cli {

enum exit_status : int {
    affirmative = 0,
    negative = 1,
    usage_error = 2,
};

// Entry point of the graphseq tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphseq::cli
