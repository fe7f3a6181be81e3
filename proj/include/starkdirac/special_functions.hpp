#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

namespace starkdirac {

// Physicists' Hermite polynomial, H_{k+1} = 2x H_k - 2k H_{k-1}.
// T may be double or std::complex<double>.
template <typename T> T hermite(int n, T x) {
  if (n < 0)
    throw std::invalid_argument("hermite: n must be non-negative");
  T prev{1.0};
  if (n == 0)
    return prev;
  T cur = T{2.0} * x;
  for (int k = 1; k < n; ++k) {
    T next = T{2.0} * x * cur - T{2.0 * k} * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Generalized Laguerre L_n^{(alpha)}(x) by
// (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}.
template <typename T> T assoc_laguerre(int n, double alpha, T x) {
  if (n < 0)
    throw std::invalid_argument("assoc_laguerre: n must be non-negative");
  if (!(alpha > -1.0))
    throw std::invalid_argument("assoc_laguerre: alpha must exceed -1");
  T prev{1.0};
  if (n == 0)
    return prev;
  T cur = T{1.0 + alpha} - x;
  for (int k = 1; k < n; ++k) {
    T next = ((T{2.0 * k + 1.0 + alpha} - x) * cur - T{k + alpha} * prev) / T{k + 1.0};
    prev = cur;
    cur = next;
  }
  return cur;
}

// Composite Simpson rule on equally spaced samples; an even sample count
// closes with a trapezoid on the last interval.
double simpson(std::span<const double> y, double h);

} // namespace starkdirac
