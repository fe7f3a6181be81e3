#pragma once

#include <string>
#include <vector>

namespace starkdirac {

// 17 significant digits, "nan" for NaN; byte-stable across runs.
std::string fmt17(double x);

std::string csv_join(const std::vector<std::string> &fields);

} // namespace starkdirac
