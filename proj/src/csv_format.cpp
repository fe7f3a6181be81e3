#include "starkdirac/csv_format.hpp"

#include <cmath>
#include <cstdio>

namespace starkdirac {

std::string fmt17(double x) {
  if (std::isnan(x))
    return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_join(const std::vector<std::string> &fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i)
      out += ',';
    out += fields[i];
  }
  return out;
}

} // namespace starkdirac
