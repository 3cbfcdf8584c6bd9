#include "truncbose/states.hpp"

#include "truncbose/errors.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace truncbose::states {

namespace {

void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument(std::string(what) + " must be finite");
}

double norm2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& z : v)
        s += std::norm(z);
    return std::sqrt(s);
}

void normalize(std::vector<Complex>& v) {
    const double n = norm2(v);
    for (Complex& z : v)
        z /= n;
}

// Minimal dense complex matrix for the squeeze generator. Row-major.
struct CMatrix {
    std::size_t n = 0;
    std::vector<Complex> a;

    explicit CMatrix(std::size_t size) : n(size), a(size * size) {}

    Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    Complex at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static CMatrix identity(std::size_t size) {
        CMatrix m(size);
        for (std::size_t i = 0; i < size; ++i)
            m.at(i, i) = 1.0;
        return m;
    }
};

CMatrix multiply(const CMatrix& x, const CMatrix& y) {
    CMatrix z(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            const Complex xik = x.at(i, k);
            if (xik == Complex{})
                continue;
            for (std::size_t j = 0; j < x.n; ++j)
                z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

double one_norm(const CMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < m.n; ++i)
            col += std::abs(m.at(i, j));
        best = std::max(best, col);
    }
    return best;
}

// exp(A) by scaling and squaring: A/2^s is pushed below norm 1, where the
// degree-20 Taylor polynomial has remainder below 1e-19 (1/21! * e), then the
// result is squared s times. A here is anti-Hermitian, so exp(A) is unitary
// and the squarings do not amplify the truncation error beyond ~2^s * 1e-19.
CMatrix expm(const CMatrix& a) {
    constexpr int taylor_order = 20;
    const double norm = one_norm(a);
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 1.0) {
        scale *= 0.5;
        ++squarings;
    }

    CMatrix scaled(a.n);
    for (std::size_t i = 0; i < a.a.size(); ++i)
        scaled.a[i] = a.a[i] * scale;

    // Horner: P = I + X/k (I + X/(k+1) (...))
    CMatrix p = CMatrix::identity(a.n);
    for (int k = taylor_order; k >= 1; --k) {
        CMatrix xp = multiply(scaled, p);
        p = CMatrix::identity(a.n);
        for (std::size_t i = 0; i < p.a.size(); ++i)
            p.a[i] += xp.a[i] / static_cast<double>(k);
    }

    for (int s = 0; s < squarings; ++s)
        p = multiply(p, p);
    return p;
}

} // namespace

StateVector number_state(Dim dim, int k) {
    if (k < 0 || k >= dim.value())
        throw std::invalid_argument("number_state: level " + std::to_string(k) +
                                    " outside [0, " + std::to_string(dim.value()) + ")");
    std::vector<Complex> amps(dim.size());
    amps[static_cast<std::size_t>(k)] = 1.0;
    return {dim, std::move(amps), StateKind::Number, k, Complex{0.0}};
}

StateVector coherent_state(Dim dim, Complex beta) {
    require_finite(beta, "coherent_state: beta");
    std::vector<Complex> amps(dim.size());
    Complex c = 1.0;  // beta^k / sqrt(k!) up to overall normalization
    amps[0] = c;
    for (std::size_t k = 1; k < amps.size(); ++k) {
        c *= beta / std::sqrt(static_cast<double>(k));
        amps[k] = c;
    }
    normalize(amps);
    return {dim, std::move(amps), StateKind::Coherent, 0, beta};
}

StateVector squeezed_vacuum(Dim dim, Complex zeta) {
    require_finite(zeta, "squeezed_vacuum: zeta");
    if (std::abs(zeta) > 2.0)
        throw std::domain_error("squeezed_vacuum: |zeta| > 2 is outside the supported range");

    const std::size_t n = dim.size();
    const Matrix raise2 = [&] {
        const Matrix r = build_raising(dim).entries;
        return r * r;
    }();
    const Matrix lower2 = [&] {
        const Matrix l = build_lowering(dim).entries;
        return l * l;
    }();

    // A = -(zeta/2) Raising^2 + (conj(zeta)/2) Lowering^2, anti-Hermitian.
    CMatrix generator(n);
    const Complex cr = -0.5 * zeta;
    const Complex cl = 0.5 * std::conj(zeta);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            generator.at(i, j) = cr * raise2(i, j) + cl * lower2(i, j);

    const CMatrix u = expm(generator);
    std::vector<Complex> amps(n);
    for (std::size_t i = 0; i < n; ++i)
        amps[i] = u.at(i, 0);  // exp(A) e_0 is the first column

    const double deviation = std::fabs(norm2(amps) - 1.0);
    if (deviation > 1e-6)
        throw TruncationError("squeezed_vacuum: norm deviation " + std::to_string(deviation) +
                              " at n = " + std::to_string(dim.value()) +
                              "; increase the truncation dimension");
    normalize(amps);
    return {dim, std::move(amps), StateKind::SqueezedVacuum, 0, zeta};
}

Complex expectation(const StateVector& state, const TruncatedOperator& op) {
    if (state.dim != op.dim)
        throw DimensionError("expectation: state dim " + std::to_string(state.dim.value()) +
                             " vs operator dim " + std::to_string(op.dim.value()));
    const std::size_t n = state.dim.size();
    Complex value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double entry = op.entries(i, j);
            if (entry != 0.0)
                row += entry * state.amplitudes[j];
        }
        value += std::conj(state.amplitudes[i]) * row;
    }
    return value;
}

} // namespace truncbose::states
