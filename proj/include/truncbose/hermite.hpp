#ifndef TRUNCBOSE_HERMITE_HPP
#define TRUNCBOSE_HERMITE_HPP

#include <vector>

namespace truncbose::spectral {

// Independent spectrum oracle: sqrt(2)-scaled zeros of the degree-n
// physicists' Hermite polynomial, descending. Shares nothing with the
// Sturm-bisection solver: H_n is evaluated by its own three-term recurrence
// (with per-step overflow rescaling), sign changes are isolated on a uniform
// grid over [0, sqrt(2n+1)] and refined by bisection, then mirrored to the
// negatives, with 0 inserted for odd n.
//
// Throws OracleError if the grid cannot isolate the expected sign changes
// even after repeated density doubling.
std::vector<double> hermite_roots_oracle(int n, double abs_tol);

} // namespace truncbose::spectral

#endif
