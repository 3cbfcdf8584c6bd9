#ifndef TRUNCBOSE_TEST_SUPPORT_HPP
#define TRUNCBOSE_TEST_SUPPORT_HPP

#include "truncbose/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace test_support {

inline truncbose::Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
    truncbose::Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

// Brute-force eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
// Test-only oracle, independent of the library solvers.
inline std::vector<double> jacobi_rotation_eigenvalues(truncbose::Matrix a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("oracle needs a square matrix");
    const std::size_t n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += a(p, q) * a(p, q);
        if (std::sqrt(off) < 1e-14 * (1.0 + a.max_abs()))
            break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = a(i, i);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

} // namespace test_support

#endif
