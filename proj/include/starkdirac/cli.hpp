#pragma once

#include <ostream>

namespace starkdirac {

// Exit codes: 0 success, 1 gating verification failure, 2 flag errors.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace starkdirac
