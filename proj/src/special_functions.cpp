#include "starkdirac/special_functions.hpp"

namespace starkdirac {

double simpson(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n < 2)
    return 0.0;
  if (n == 2)
    return 0.5 * h * (y[0] + y[1]);
  const std::size_t m = (n % 2 == 1) ? n : n - 1; // odd count for Simpson
  double s = y[0] + y[m - 1];
  for (std::size_t i = 1; i + 1 < m; ++i)
    s += (i % 2 == 1 ? 4.0 : 2.0) * y[i];
  double total = s * h / 3.0;
  if (m != n)
    total += 0.5 * h * (y[n - 2] + y[n - 1]);
  return total;
}

} // namespace starkdirac
