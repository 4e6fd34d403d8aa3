#pragma once

#include <vector>

namespace alch {

/// Boys function F_n(x) = \int_0^1 t^{2n} exp(-x t^2) dt for n <= 16,
/// relative error <= 1e-13. Throws Error for negative x or n out of range.
double boys(int n, double x);

/// F_0..F_n in one evaluation (downward recursion from a series or
/// asymptotic seed).
std::vector<double> boys_sequence(int n_max, double x);

}  // namespace alch
