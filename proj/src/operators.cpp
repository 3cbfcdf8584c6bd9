#include "truncbose/operators.hpp"

#include <cmath>

namespace truncbose {

std::string role_name(Role role) {
    switch (role) {
    case Role::Lowering: return "Lowering";
    case Role::Raising: return "Raising";
    case Role::Number: return "Number";
    case Role::Position: return "Position";
    case Role::MomentumLike: return "MomentumLike";
    case Role::Identity: return "Identity";
    }
    return "Unknown";
}

TruncatedOperator build_lowering(Dim dim) {
    const std::size_t n = dim.size();
    Matrix m(n, n);
    for (std::size_t j = 1; j < n; ++j)
        m(j - 1, j) = std::sqrt(static_cast<double>(j));
    return {dim, std::move(m), Role::Lowering};
}

TruncatedOperator build_raising(Dim dim) {
    TruncatedOperator lower = build_lowering(dim);
    return {dim, lower.entries.transposed(), Role::Raising};
}

TruncatedOperator build_number(Dim dim) {
    const std::size_t n = dim.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = static_cast<double>(i);
    return {dim, std::move(m), Role::Number};
}

TruncatedOperator build_position(Dim dim) {
    const std::size_t n = dim.size();
    Matrix m(n, n);
    for (std::size_t k = 1; k < n; ++k) {
        const double r = std::sqrt(static_cast<double>(k));
        m(k - 1, k) = r;
        m(k, k - 1) = r;
    }
    return {dim, std::move(m), Role::Position};
}

TruncatedOperator build_momentum_like(Dim dim) {
    const std::size_t n = dim.size();
    Matrix m(n, n);
    for (std::size_t k = 1; k < n; ++k) {
        const double r = std::sqrt(static_cast<double>(k));
        m(k - 1, k) = -r;
        m(k, k - 1) = r;
    }
    return {dim, std::move(m), Role::MomentumLike};
}

TruncatedOperator build_identity(Dim dim) {
    return {dim, Matrix::identity(dim.size()), Role::Identity};
}

Matrix commutator(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.dim != b.dim)
        throw DimensionError("commutator: operand dims differ (" +
                             std::to_string(a.dim.value()) + " vs " +
                             std::to_string(b.dim.value()) + ")");
    return commutator(a.entries, b.entries);
}

Matrix expected_bc_defect(Dim dim) {
    const std::size_t n = dim.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        m(i, i) = 2.0;
    m(n - 1, n - 1) = 2.0 * (1.0 - static_cast<double>(n));
    return m;
}

Matrix expected_ladder_defect(Dim dim) {
    const std::size_t n = dim.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        m(i, i) = 1.0;
    m(n - 1, n - 1) = 1.0 - static_cast<double>(n);
    return m;
}

BracketReport check_bracket(const TruncatedOperator& a, const TruncatedOperator& b,
                            const Matrix& expected, double tol) {
    Matrix actual = commutator(a, b);
    if (expected.rows() != actual.rows() || expected.cols() != actual.cols())
        throw DimensionError("check_bracket: expected matrix has wrong shape");
    const double residual = max_abs_diff(actual, expected);
    return {role_name(a.role), role_name(b.role), residual,
            expected,          std::move(actual), tol,
            residual <= tol};
}

} // namespace truncbose
