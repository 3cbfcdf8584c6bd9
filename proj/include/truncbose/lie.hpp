#ifndef TRUNCBOSE_LIE_HPP
#define TRUNCBOSE_LIE_HPP

#include "truncbose/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace truncbose::lie {

using LabelPair = std::pair<std::string, std::string>;

// Linear combination of basis elements: (label, coefficient) terms.
using Expansion = std::vector<std::pair<std::string, double>>;

// A finite set of equal-dim matrices closed under the bracket, together with
// the declared structure table. Pairs with no declared entry are expected to
// bracket to zero when undeclared_brackets_vanish is set; a bracket that
// leaves the declared span is a structure-table error, never silently
// projected.
struct LieBasis {
    std::string name;
    std::vector<std::string> labels;
    std::vector<Matrix> matrices;
    std::map<LabelPair, Expansion> structure;
    bool undeclared_brackets_vanish = true;

    const Matrix& matrix_of(const std::string& label) const;
    Matrix expand(const Expansion& expansion) const;
};

struct HomomorphismReport {
    int pairs_checked = 0;
    double max_residual = 0.0;
    std::vector<std::pair<LabelPair, double>> failures;  // pairs with residual > tol
    bool pass() const { return failures.empty(); }
};

// Abstract bracket table of the oscillator quadruple {N, B, C, I}:
// [N,B] = C, [N,C] = B, [B,C] = 2I, I central. Single source of truth shared
// by the truncated-operator checks and the adjoint representation.
const std::map<LabelPair, Expansion>& oscillator_structure();

// {N -> E22, I -> E13, bdag -> E23, b -> E12} on C^3 (matrix units, strictly
// upper triangular apart from N), with [N,bdag] = bdag, [N,b] = -b,
// [bdag,b] = -I and all other brackets zero.
LieBasis heisenberg_3x3();

// ad(N), ad(B), ad(C), ad(I) = 0 as 4x4 integer matrices in the ordered
// basis (N, B, C, I) of oscillator_structure().
LieBasis oscillator_adjoint_4x4();

// Fermi quadruple on C^2: N -> diag(1,0), B -> [[0,1],[1,0]],
// C -> [[0,1],[-1,0]], I -> I2, with [B,C] = 2I - 4N.
LieBasis fermi_2x2();

// Checks every declared structure entry (bracket vs declared expansion) and,
// when the basis says so, that all undeclared ordered pairs bracket to zero.
HomomorphismReport verify_structure(const LieBasis& basis, double tol);

// For all 6 unordered pairs (x,y) of the oscillator basis: expands [x,y] via
// oscillator_structure(), applies ad linearly, and compares against the 4x4
// matrix bracket [ad x, ad y].
HomomorphismReport verify_adjoint_homomorphism(double tol);

} // namespace truncbose::lie

#endif
