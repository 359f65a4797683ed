#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sprite::cli {

// Exit codes: 0 success, 1 the command ran but failed (rejected pose, lint
// issues, incomplete run), 2 bad usage or unusable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sprite::cli
