#ifndef TRUNCBOSE_SCALING_HPP
#define TRUNCBOSE_SCALING_HPP

#include "truncbose/jacobi.hpp"

#include <utility>
#include <vector>

namespace truncbose::scaling {

enum class SweepTarget { LargestOnly, TopTwo, FullSpectrum };

struct SweepSpec {
    std::vector<int> dims;  // strictly increasing, all >= 2, nonempty
    SweepTarget targets = SweepTarget::TopTwo;
    double abs_tol = spectral::default_abs_tol;
};

struct SweepSample {
    int n;
    double lambda1;
    double lambda2;  // NaN under SweepTarget::LargestOnly
};

// Two largest eigenvalues per dim via index-targeted bisection (indices n-1
// and n-2 of the ascending spectrum). Sweep points are independent; they run
// on up to TRUNC_BOSE_THREADS workers (hardware concurrency by default) and
// are assembled in dim order, so the output is identical to a serial run.
std::vector<SweepSample> sweep_top_eigenvalues(const SweepSpec& spec);

struct ScalingFit {
    double exponent;      // slope of log value vs log n
    double prefactor;     // exp(intercept)
    double rms_residual;  // in log space
    std::pair<int, int> n_range;
    std::vector<std::pair<double, double>> samples;  // (n, value)
};

// Ordinary least squares on (log n, log value). Requires >= 5 samples, all
// values strictly positive; throws std::domain_error otherwise.
ScalingFit fit_power_law(const std::vector<std::pair<double, double>>& samples);

// Geometric grid of `points` dims from n_min to n_max, strictly increasing.
std::vector<int> geometric_grid(int n_min, int n_max, int points);

// gap(n) = lambda1 - lambda2 over a geometric grid, power-law fitted.
// Preconditions: n_min >= 16, n_max <= 1e5, points >= 5.
ScalingFit gap_law_report(int n_min, int n_max, int points,
                          double abs_tol = spectral::default_abs_tol);

// lambda1(n) over a geometric grid, power-law fitted. Same preconditions.
ScalingFit lambda_max_report(int n_min, int n_max, int points,
                             double abs_tol = spectral::default_abs_tol);

} // namespace truncbose::scaling

#endif
