#include "truncbose/hermite.hpp"

#include "truncbose/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace truncbose::spectral {

namespace {

// Sign of H_n(x). The recurrence H_{k+1} = 2x H_k - 2k H_{k-1} overflows far
// below k = n for large n, so both terms are rescaled whenever they grow past
// 1e150; rescaling by a positive factor preserves the sign and the zeros.
int hermite_sign(int n, double x) {
    double prev = 1.0;       // H_0
    double cur = 2.0 * x;    // H_1
    if (n == 0)
        return 1;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
        if (std::fabs(cur) > 1e150 || std::fabs(prev) > 1e150) {
            prev *= 1e-150;
            cur *= 1e-150;
        }
    }
    return (cur > 0.0) - (cur < 0.0);
}

} // namespace

std::vector<double> hermite_roots_oracle(int n, double abs_tol) {
    if (n < 1)
        throw std::invalid_argument("hermite_roots_oracle: n must be >= 1");
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("hermite_roots_oracle: abs_tol must be > 0");

    const int positive_roots = n / 2;
    const double bound = std::sqrt(2.0 * n + 1.0);
    // Bisection width in Hermite coordinates, so that after the sqrt(2)
    // scaling the bracket width is abs_tol.
    const double target_width = abs_tol / std::sqrt(2.0);

    std::vector<std::pair<double, double>> brackets;
    int grid_points = std::max(64, 8 * n);
    for (int attempt = 0;; ++attempt) {
        brackets.clear();
        const double step = bound / grid_points;
        // For odd n, x = 0 is itself a root: start half a step in.
        double x_prev = (n % 2 == 1) ? 0.5 * step : 0.0;
        int sign_prev = hermite_sign(n, x_prev);
        for (int i = 1; i <= grid_points; ++i) {
            const double x = (i == grid_points) ? bound : step * i;
            if (x <= x_prev)
                continue;
            const int sign = hermite_sign(n, x);
            if (sign == 0) {
                brackets.push_back({x, x});  // landed on a root exactly
                sign_prev = -sign_prev;
            } else if (sign != sign_prev) {
                brackets.push_back({x_prev, x});
                sign_prev = sign;
            }
            x_prev = x;
        }
        if (static_cast<int>(brackets.size()) == positive_roots)
            break;
        if (attempt >= 8)
            throw OracleError("hermite_roots_oracle: grid isolated " +
                              std::to_string(brackets.size()) + " of " +
                              std::to_string(positive_roots) +
                              " sign changes for n = " + std::to_string(n));
        grid_points *= 2;
    }

    std::vector<double> roots;
    roots.reserve(n);
    for (auto [lo, hi] : brackets) {
        int sign_lo = hermite_sign(n, lo);
        while (hi - lo > target_width) {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid == lo || mid == hi)
                break;
            const int sign_mid = hermite_sign(n, mid);
            if (sign_mid == 0) {
                lo = hi = mid;
                break;
            }
            if (sign_mid == sign_lo)
                lo = mid;
            else
                hi = mid;
        }
        roots.push_back(std::sqrt(2.0) * (lo + 0.5 * (hi - lo)));
    }

    // Mirror: positive roots ascending -> full spectrum descending.
    std::sort(roots.begin(), roots.end(), std::greater<>());
    std::vector<double> spectrum = roots;
    if (n % 2 == 1)
        spectrum.push_back(0.0);
    for (auto it = roots.rbegin(); it != roots.rend(); ++it)
        spectrum.push_back(-*it);
    return spectrum;
}

} // namespace truncbose::spectral
