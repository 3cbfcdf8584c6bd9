#ifndef TRUNCBOSE_OPERATORS_HPP
#define TRUNCBOSE_OPERATORS_HPP

#include "truncbose/errors.hpp"
#include "truncbose/matrix.hpp"

#include <string>

namespace truncbose {

// Truncation dimension. Operators act on C^n with basis |0>,...,|n-1>;
// the smallest truncation with any off-diagonal structure is n = 2.
class Dim {
public:
    explicit Dim(int n) : n_(n) {
        if (n < 2)
            throw DimensionError("truncation dimension must be >= 2, got " + std::to_string(n));
    }
    int value() const { return n_; }
    std::size_t size() const { return static_cast<std::size_t>(n_); }

    bool operator==(const Dim&) const = default;

private:
    int n_;
};

enum class Role { Lowering, Raising, Number, Position, MomentumLike, Identity };

std::string role_name(Role role);

// A truncated ladder-algebra operator: dense n x n real matrix plus the role
// it plays. Number is diag(0..n-1); Position (b_dag + b) is symmetric
// tridiagonal; MomentumLike (b_dag - b) is antisymmetric tridiagonal. Both of
// the latter have exactly zero trace.
struct TruncatedOperator {
    Dim dim;
    Matrix entries;
    Role role;
};

// entries[j-1][j] = sqrt(j), j = 1..n-1.
TruncatedOperator build_lowering(Dim dim);
// Transpose of build_lowering.
TruncatedOperator build_raising(Dim dim);
// diag(0, 1, ..., n-1).
TruncatedOperator build_number(Dim dim);
// Symmetric tridiagonal with off-diagonal sqrt(1)..sqrt(n-1).
TruncatedOperator build_position(Dim dim);
// entries[k][k-1] = sqrt(k), entries[k-1][k] = -sqrt(k).
TruncatedOperator build_momentum_like(Dim dim);
TruncatedOperator build_identity(Dim dim);

// ab - ba; rejects mismatched dims.
Matrix commutator(const TruncatedOperator& a, const TruncatedOperator& b);

// Truncation defect of [Position, MomentumLike]: diag(2,...,2, 2(1-n)).
// The deviation from 2*I is concentrated in the last diagonal entry.
Matrix expected_bc_defect(Dim dim);

// Truncation defect of [Lowering, Raising]: diag(1,...,1, 1-n).
Matrix expected_ladder_defect(Dim dim);

struct BracketReport {
    std::string lhs_label;
    std::string rhs_label;
    double residual;   // max-abs-entry of actual - expected
    Matrix expected;
    Matrix actual;
    double tolerance;
    bool pass;         // residual <= tolerance
};

BracketReport check_bracket(const TruncatedOperator& a, const TruncatedOperator& b,
                            const Matrix& expected, double tol);

} // namespace truncbose

#endif
