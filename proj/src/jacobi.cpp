#include "truncbose/jacobi.hpp"

#include "truncbose/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace truncbose::spectral {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int max_bisect_iterations = 200;

void require_well_formed(const JacobiMatrix& jacobi) {
    const std::size_t n = jacobi.dim.size();
    if (jacobi.diag.size() != n || jacobi.offdiag.size() != n - 1)
        throw DimensionError("jacobi matrix: array lengths inconsistent with dim");
    for (double e : jacobi.offdiag)
        if (!(e > 0.0))
            throw std::invalid_argument("jacobi matrix: off-diagonal entries must be > 0");
}

int count_below(const JacobiMatrix& jacobi, double shift, double pivmin) {
    const std::size_t n = jacobi.dim.size();
    int count = 0;
    double d = jacobi.diag[0] - shift;
    if (std::fabs(d) < pivmin)
        d = -pivmin;
    if (d < 0.0)
        ++count;
    for (std::size_t i = 1; i < n; ++i) {
        d = jacobi.diag[i] - shift - jacobi.offdiag[i - 1] * jacobi.offdiag[i - 1] / d;
        if (std::fabs(d) < pivmin)
            d = -pivmin;
        if (d < 0.0)
            ++count;
    }
    return count;
}

struct BisectOutcome {
    double value;
    int iterations;
    double half_width;
};

// Eigenvalue of ascending index k (k = count of eigenvalues below it).
BisectOutcome bisect_index(const JacobiMatrix& jacobi, int k, double abs_tol,
                           double lo0, double hi0, double pivmin) {
    double lo = lo0, hi = hi0;
    int iterations = 0;
    while (hi - lo > abs_tol + 2.0 * eps * (std::fabs(lo) + std::fabs(hi))) {
        if (++iterations > max_bisect_iterations)
            throw SolverError("bisection iteration cap hit at eigenvalue index " +
                              std::to_string(k));
        const double mid = lo + 0.5 * (hi - lo);
        if (mid == lo || mid == hi)
            break;  // machine resolution
        if (count_below(jacobi, mid, pivmin) <= k)
            lo = mid;
        else
            hi = mid;
    }
    return {lo + 0.5 * (hi - lo), iterations, 0.5 * (hi - lo)};
}

} // namespace

JacobiMatrix bose_jacobi(Dim dim) {
    const std::size_t n = dim.size();
    JacobiMatrix jacobi{dim, std::vector<double>(n, 0.0), std::vector<double>(n - 1)};
    for (std::size_t k = 0; k + 1 < n; ++k)
        jacobi.offdiag[k] = std::sqrt(static_cast<double>(k + 1));
    return jacobi;
}

double gershgorin_radius(const JacobiMatrix& jacobi) {
    const std::size_t n = jacobi.dim.size();
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::fabs(jacobi.diag[i]);
        if (i > 0)
            row += std::fabs(jacobi.offdiag[i - 1]);
        if (i + 1 < n)
            row += std::fabs(jacobi.offdiag[i]);
        r = std::max(r, row);
    }
    return r;
}

int sturm_count_below(const JacobiMatrix& jacobi, double shift) {
    return count_below(jacobi, shift, eps * gershgorin_radius(jacobi));
}

SpectrumResult eigenvalues_bisect(const JacobiMatrix& jacobi, double abs_tol) {
    require_well_formed(jacobi);
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("abs_tol must be > 0");
    const int n = jacobi.dim.value();
    const double norm = gershgorin_radius(jacobi);
    // Widen the bracket a hair so the boundary counts are exactly 0 and n.
    const double r = norm * (1.0 + 4.0 * eps) + abs_tol;
    const double pivmin = eps * norm;

    SpectrumResult result;
    result.eigenvalues.resize(n);
    result.iterations.resize(n);
    for (int k = 0; k < n; ++k) {
        const BisectOutcome outcome = bisect_index(jacobi, k, abs_tol, -r, r, pivmin);
        // index k ascending -> slot n-1-k descending
        result.eigenvalues[n - 1 - k] = outcome.value;
        result.iterations[n - 1 - k] = outcome.iterations;
        result.residual_bound = std::max(result.residual_bound, outcome.half_width);
    }
    return result;
}

std::vector<double> top_eigenvalues(const JacobiMatrix& jacobi, int k, double abs_tol) {
    require_well_formed(jacobi);
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("abs_tol must be > 0");
    const int n = jacobi.dim.value();
    if (k < 1 || k > n)
        throw std::invalid_argument("top_eigenvalues: k out of range");
    const double norm = gershgorin_radius(jacobi);
    const double r = norm * (1.0 + 4.0 * eps) + abs_tol;
    std::vector<double> values(k);
    for (int i = 0; i < k; ++i)
        values[i] = bisect_index(jacobi, n - 1 - i, abs_tol, -r, r, eps * norm).value;
    return values;
}

RecurrenceVector eigenvector_recurrence(const JacobiMatrix& jacobi, double lambda) {
    require_well_formed(jacobi);
    const std::size_t n = jacobi.dim.size();
    RecurrenceVector vec;
    vec.raw.resize(n);
    vec.raw[0] = 1.0;
    if (n > 1)
        vec.raw[1] = (lambda - jacobi.diag[0]) / jacobi.offdiag[0];
    for (std::size_t k = 1; k + 1 < n; ++k)
        vec.raw[k + 1] = ((lambda - jacobi.diag[k]) * vec.raw[k] -
                          jacobi.offdiag[k - 1] * vec.raw[k - 1]) /
                         jacobi.offdiag[k];
    double norm = 0.0;
    for (double v : vec.raw)
        norm += v * v;
    norm = std::sqrt(norm);
    vec.unit.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        vec.unit[i] = vec.raw[i] / norm;
    return vec;
}

SpectrumResult spectrum_with_vectors(const JacobiMatrix& jacobi, double abs_tol) {
    SpectrumResult result = eigenvalues_bisect(jacobi, abs_tol);
    const std::size_t n = jacobi.dim.size();
    result.eigenvectors.reserve(n);
    result.residual_bound = 0.0;
    for (double lambda : result.eigenvalues) {
        std::vector<double> v = eigenvector_recurrence(jacobi, lambda).unit;
        // measured residual ||Jv - lambda v||_inf
        for (std::size_t i = 0; i < n; ++i) {
            double jv = jacobi.diag[i] * v[i];
            if (i > 0)
                jv += jacobi.offdiag[i - 1] * v[i - 1];
            if (i + 1 < n)
                jv += jacobi.offdiag[i] * v[i + 1];
            result.residual_bound = std::max(result.residual_bound, std::fabs(jv - lambda * v[i]));
        }
        result.eigenvectors.push_back(std::move(v));
    }
    return result;
}

std::vector<double> momentum_spectrum(Dim dim, double abs_tol) {
    SpectrumResult position = eigenvalues_bisect(bose_jacobi(dim), abs_tol);
    std::vector<double> magnitudes(position.eigenvalues.size());
    for (std::size_t i = 0; i < magnitudes.size(); ++i)
        magnitudes[i] = std::fabs(position.eigenvalues[i]);
    std::sort(magnitudes.begin(), magnitudes.end(), std::greater<>());
    return magnitudes;
}

const std::map<int, std::vector<ClosedFormEigenvalue>>& closed_form_table() {
    static const std::map<int, std::vector<ClosedFormEigenvalue>> table = [] {
        const double s3 = std::sqrt(3.0);
        const double s6 = std::sqrt(6.0);
        const double s10 = std::sqrt(10.0);
        std::map<int, std::vector<ClosedFormEigenvalue>> t;
        t[2] = {{"1", 1.0}, {"-1", -1.0}};
        t[3] = {{"sqrt(3)", s3}, {"0", 0.0}, {"-sqrt(3)", -s3}};
        t[4] = {{"sqrt(3+sqrt(6))", std::sqrt(3.0 + s6)},
                {"sqrt(3-sqrt(6))", std::sqrt(3.0 - s6)},
                {"-sqrt(3-sqrt(6))", -std::sqrt(3.0 - s6)},
                {"-sqrt(3+sqrt(6))", -std::sqrt(3.0 + s6)}};
        t[5] = {{"sqrt(5+sqrt(10))", std::sqrt(5.0 + s10)},
                {"sqrt(5-sqrt(10))", std::sqrt(5.0 - s10)},
                {"0", 0.0},
                {"-sqrt(5-sqrt(10))", -std::sqrt(5.0 - s10)},
                {"-sqrt(5+sqrt(10))", -std::sqrt(5.0 + s10)}};
        return t;
    }();
    return table;
}

} // namespace truncbose::spectral
