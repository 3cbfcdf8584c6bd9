#include "truncbose/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace truncbose::scaling {

namespace {

int sweep_worker_count(std::size_t points) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TRUNC_BOSE_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1)
            workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    }
    return static_cast<int>(std::min<std::size_t>(workers, points));
}

void validate(const SweepSpec& spec) {
    if (spec.dims.empty())
        throw std::invalid_argument("sweep: dim list must be nonempty");
    int prev = 1;
    for (int n : spec.dims) {
        if (n < 2)
            throw std::invalid_argument("sweep: dims must be >= 2");
        if (n <= prev)
            throw std::invalid_argument("sweep: dims must be strictly increasing");
        prev = n;
    }
    if (!(spec.abs_tol > 0.0))
        throw std::invalid_argument("sweep: abs_tol must be > 0");
}

void check_grid_args(int n_min, int n_max, int points) {
    if (n_min < 16)
        throw std::domain_error("scaling grid: n_min must be >= 16");
    if (n_max > 100000)
        throw std::domain_error("scaling grid: n_max must be <= 100000");
    if (n_max < n_min)
        throw std::domain_error("scaling grid: n_max must be >= n_min");
    if (points < 5)
        throw std::domain_error("scaling grid: needs >= 5 points");
    if (n_max - n_min + 1 < points)
        throw std::domain_error("scaling grid: range too narrow for requested points");
}

} // namespace

std::vector<SweepSample> sweep_top_eigenvalues(const SweepSpec& spec) {
    validate(spec);
    const std::size_t points = spec.dims.size();
    std::vector<SweepSample> samples(points);

    const auto solve_point = [&](std::size_t idx) {
        const int n = spec.dims[idx];
        const spectral::JacobiMatrix jacobi = spectral::bose_jacobi(Dim(n));
        SweepSample sample{n, 0.0, std::numeric_limits<double>::quiet_NaN()};
        switch (spec.targets) {
        case SweepTarget::LargestOnly:
            sample.lambda1 = spectral::top_eigenvalues(jacobi, 1, spec.abs_tol)[0];
            break;
        case SweepTarget::TopTwo: {
            const std::vector<double> top = spectral::top_eigenvalues(jacobi, 2, spec.abs_tol);
            sample.lambda1 = top[0];
            sample.lambda2 = top[1];
            break;
        }
        case SweepTarget::FullSpectrum: {
            const spectral::SpectrumResult full =
                spectral::eigenvalues_bisect(jacobi, spec.abs_tol);
            sample.lambda1 = full.eigenvalues[0];
            sample.lambda2 = full.eigenvalues.size() > 1
                                 ? full.eigenvalues[1]
                                 : std::numeric_limits<double>::quiet_NaN();
            break;
        }
        }
        samples[idx] = sample;
    };

    const int workers = sweep_worker_count(points);
    if (workers <= 1) {
        for (std::size_t i = 0; i < points; ++i)
            solve_point(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < points;
                     i += static_cast<std::size_t>(workers))
                    solve_point(i);
            });
        for (std::thread& t : pool)
            t.join();
    }
    return samples;
}

ScalingFit fit_power_law(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 5)
        throw std::domain_error("fit_power_law: needs >= 5 samples, got " +
                                std::to_string(samples.size()));
    for (const auto& [n, value] : samples)
        if (!(value > 0.0) || !(n > 0.0))
            throw std::domain_error("fit_power_law: samples must be strictly positive");

    const double count = static_cast<double>(samples.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [n, value] : samples) {
        const double x = std::log(n), y = std::log(value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / count;

    double ss = 0.0;
    for (const auto& [n, value] : samples) {
        const double r = std::log(value) - (intercept + slope * std::log(n));
        ss += r * r;
    }

    ScalingFit fit;
    fit.exponent = slope;
    fit.prefactor = std::exp(intercept);
    fit.rms_residual = std::sqrt(ss / count);
    fit.n_range = {static_cast<int>(std::lround(samples.front().first)),
                   static_cast<int>(std::lround(samples.back().first))};
    fit.samples = samples;
    return fit;
}

std::vector<int> geometric_grid(int n_min, int n_max, int points) {
    check_grid_args(n_min, n_max, points);
    std::vector<int> dims(points);
    const double ratio = std::log(static_cast<double>(n_max) / n_min);
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        int n = static_cast<int>(std::lround(n_min * std::exp(ratio * t)));
        if (i > 0 && n <= dims[i - 1])
            n = dims[i - 1] + 1;  // rounding collision; keep strictly increasing
        dims[i] = n;
    }
    return dims;
}

namespace {

ScalingFit sweep_and_fit(int n_min, int n_max, int points, double abs_tol, bool gap) {
    SweepSpec spec{geometric_grid(n_min, n_max, points),
                   gap ? SweepTarget::TopTwo : SweepTarget::LargestOnly, abs_tol};
    const std::vector<SweepSample> sweep = sweep_top_eigenvalues(spec);
    std::vector<std::pair<double, double>> samples;
    samples.reserve(sweep.size());
    for (const SweepSample& s : sweep)
        samples.push_back({static_cast<double>(s.n),
                           gap ? s.lambda1 - s.lambda2 : s.lambda1});
    return fit_power_law(samples);
}

} // namespace

ScalingFit gap_law_report(int n_min, int n_max, int points, double abs_tol) {
    return sweep_and_fit(n_min, n_max, points, abs_tol, true);
}

ScalingFit lambda_max_report(int n_min, int n_max, int points, double abs_tol) {
    return sweep_and_fit(n_min, n_max, points, abs_tol, false);
}

} // namespace truncbose::scaling
