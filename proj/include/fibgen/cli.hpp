#pragma once

#include <string>
#include <vector>

namespace fibgen::cli {

// Exit codes: 0 success, 2 usage or violated precondition, 3 I/O failure.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without program name

}  // namespace fibgen::cli
