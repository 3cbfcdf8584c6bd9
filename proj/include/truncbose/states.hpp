#ifndef TRUNCBOSE_STATES_HPP
#define TRUNCBOSE_STATES_HPP

#include "truncbose/operators.hpp"

#include <complex>
#include <vector>

namespace truncbose::states {

using Complex = std::complex<double>;

enum class StateKind { Number, Coherent, SqueezedVacuum };

// Unit-norm vector on the length-n Fock basis. Only this module needs
// complex scalars; operators stay real.
struct StateVector {
    Dim dim;
    std::vector<Complex> amplitudes;  // unit 2-norm
    StateKind kind;
    int level = 0;        // Number(k)
    Complex param{0.0};   // Coherent beta / SqueezedVacuum zeta
};

// Basis vector e_k. Rejects k outside [0, n).
StateVector number_state(Dim dim, int k);

// Amplitudes proportional to beta^k / sqrt(k!), truncated at n and
// renormalized to unit norm.
StateVector coherent_state(Dim dim, Complex beta);

// exp(A) e_0 with A the n x n truncation of
// -(zeta/2) * Raising^2 + (conj(zeta)/2) * Lowering^2, built from the
// truncated ladder matrices. A is anti-Hermitian, so the pre-normalization
// norm deviates from 1 only by truncation effects; a deviation beyond 1e-6
// raises TruncationError advising a larger n. Accepts |zeta| <= 2, the range
// where truncation at n <= 512 converges well. Populates even Fock levels
// only.
StateVector squeezed_vacuum(Dim dim, Complex zeta);

// <psi| A |psi>. Real up to roundoff for the symmetric operators (Number,
// Position, Identity); purely imaginary for the antisymmetric MomentumLike
// operator. The raw complex value is returned; callers pick the part they
// assert on.
Complex expectation(const StateVector& state, const TruncatedOperator& op);

} // namespace truncbose::states

#endif
