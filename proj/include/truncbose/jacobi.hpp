#ifndef TRUNCBOSE_JACOBI_HPP
#define TRUNCBOSE_JACOBI_HPP

#include "truncbose/operators.hpp"

#include <map>
#include <string>
#include <vector>

namespace truncbose::spectral {

inline constexpr double default_abs_tol = 1e-12;

// Symmetric tridiagonal matrix stored as diagonal + off-diagonal arrays.
// Off-diagonal entries must be strictly positive (unreduced), which makes
// every eigenvalue simple.
struct JacobiMatrix {
    Dim dim;
    std::vector<double> diag;     // n entries
    std::vector<double> offdiag;  // n-1 entries, all > 0
};

// The Position operator in tridiagonal form: zero diagonal,
// offdiag[k] = sqrt(k+1).
JacobiMatrix bose_jacobi(Dim dim);

struct SpectrumResult {
    std::vector<double> eigenvalues;   // descending; strictly decreasing for
                                       // an unreduced Jacobi matrix
    std::vector<std::vector<double>> eigenvectors;  // optional; [k] pairs with
                                                    // eigenvalues[k], unit norm
    std::vector<int> iterations;       // bisection iterations per eigenvalue,
                                       // aligned with eigenvalues
    double residual_bound = 0.0;       // max bracket half-width, or with
                                       // eigenvectors max ||Jv - lambda v||_inf
};

// Row-sum bound r = max_i(|diag_i| + adjacent |offdiag| sums); every
// eigenvalue lies in [-r, r].
double gershgorin_radius(const JacobiMatrix& jacobi);

// Number of eigenvalues strictly below the shift, from the pivot signs of the
// shifted LDL^T factorization. Zero pivots are pushed to -pivmin
// (eps * ||J||_inf) so the count stays monotone across eigenvalue hits.
int sturm_count_below(const JacobiMatrix& jacobi, double shift);

// All n eigenvalues by Sturm-count bisection inside the Gershgorin interval,
// each bracketed to width <= abs_tol (plus the machine-precision floor
// 2*eps*(|lo|+|hi|)). Deterministic; an iteration cap of 200 per eigenvalue
// guards arithmetic anomalies and throws SolverError if hit.
SpectrumResult eigenvalues_bisect(const JacobiMatrix& jacobi, double abs_tol);

// The k largest eigenvalues only, by index-targeted bisection (Sturm counts
// bracket eigenvalue indices n-1, n-2, ... directly). Descending.
std::vector<double> top_eigenvalues(const JacobiMatrix& jacobi, int k, double abs_tol);

struct RecurrenceVector {
    std::vector<double> raw;   // v0 = 1 convention, unnormalized
    std::vector<double> unit;  // raw rescaled to unit 2-norm
};

// Eigenvector from the three-term recurrence v0 = 1,
// v1 = (lambda - diag0)/offdiag0,
// v_{k+1} = ((lambda - diag_k) v_k - offdiag_{k-1} v_{k-1}) / offdiag_k.
// Forward recurrence loses accuracy for large n and interior eigenvalues;
// intended for n up to a few hundred.
RecurrenceVector eigenvector_recurrence(const JacobiMatrix& jacobi, double lambda);

// eigenvalues_bisect plus a unit recurrence eigenvector per eigenvalue;
// residual_bound is the measured max ||Jv - lambda v||_inf.
SpectrumResult spectrum_with_vectors(const JacobiMatrix& jacobi, double abs_tol);

// Magnitudes of the (purely imaginary) eigenvalues of the MomentumLike
// operator, descending. Equal to |eig| of the Position operator: the two are
// similar up to a factor i via D = diag(i^k).
std::vector<double> momentum_spectrum(Dim dim, double abs_tol);

struct ClosedFormEigenvalue {
    std::string label;  // e.g. "sqrt(3+sqrt(6))"
    double value;
};

// Golden closed-form spectra for n = 2..5, descending:
//   n=2: +-1;  n=3: +-sqrt(3), 0;  n=4: +-sqrt(3+-sqrt(6));
//   n=5: +-sqrt(5+-sqrt(10)), 0.
const std::map<int, std::vector<ClosedFormEigenvalue>>& closed_form_table();

} // namespace truncbose::spectral

#endif
