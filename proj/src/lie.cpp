#include "truncbose/lie.hpp"

#include "truncbose/errors.hpp"

#include <cstddef>
#include <stdexcept>

namespace truncbose::lie {

namespace {

Matrix unit_3x3(std::size_t i, std::size_t j) {
    Matrix m(3, 3);
    m(i, j) = 1.0;
    return m;
}

} // namespace

const Matrix& LieBasis::matrix_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return matrices[i];
    throw std::invalid_argument("basis '" + name + "' has no generator '" + label + "'");
}

Matrix LieBasis::expand(const Expansion& expansion) const {
    if (matrices.empty())
        throw std::invalid_argument("empty basis");
    Matrix sum(matrices.front().rows(), matrices.front().cols());
    for (const auto& [label, coeff] : expansion) {
        const Matrix& gen = matrix_of(label);
        for (std::size_t i = 0; i < sum.rows(); ++i)
            for (std::size_t j = 0; j < sum.cols(); ++j)
                sum(i, j) += coeff * gen(i, j);
    }
    return sum;
}

const std::map<LabelPair, Expansion>& oscillator_structure() {
    static const std::map<LabelPair, Expansion> table = {
        {{"N", "B"}, {{"C", 1.0}}},
        {{"N", "C"}, {{"B", 1.0}}},
        {{"B", "C"}, {{"I", 2.0}}},
    };
    return table;
}

LieBasis heisenberg_3x3() {
    LieBasis basis;
    basis.name = "heisenberg_3x3";
    basis.labels = {"N", "I", "bdag", "b"};
    basis.matrices = {unit_3x3(1, 1), unit_3x3(0, 2), unit_3x3(1, 2), unit_3x3(0, 1)};
    basis.structure = {
        {{"N", "bdag"}, {{"bdag", 1.0}}},
        {{"N", "b"}, {{"b", -1.0}}},
        {{"bdag", "b"}, {{"I", -1.0}}},
    };
    return basis;
}

LieBasis oscillator_adjoint_4x4() {
    LieBasis basis;
    basis.name = "oscillator_adjoint_4x4";
    basis.labels = {"N", "B", "C", "I"};

    Matrix ad_n(4, 4);
    ad_n(1, 2) = 1.0;
    ad_n(2, 1) = 1.0;

    Matrix ad_b(4, 4);
    ad_b(2, 0) = -1.0;
    ad_b(3, 2) = 2.0;

    Matrix ad_c(4, 4);
    ad_c(1, 0) = -1.0;
    ad_c(3, 1) = -2.0;

    basis.matrices = {std::move(ad_n), std::move(ad_b), std::move(ad_c), Matrix(4, 4)};
    basis.structure = oscillator_structure();
    return basis;
}

LieBasis fermi_2x2() {
    LieBasis basis;
    basis.name = "fermi_2x2";
    basis.labels = {"N", "B", "C", "I"};

    Matrix number(2, 2);
    number(0, 0) = 1.0;

    Matrix plus(2, 2);
    plus(0, 1) = 1.0;
    plus(1, 0) = 1.0;

    Matrix minus(2, 2);
    minus(0, 1) = 1.0;
    minus(1, 0) = -1.0;

    basis.matrices = {std::move(number), std::move(plus), std::move(minus), Matrix::identity(2)};
    basis.structure = {
        {{"N", "B"}, {{"C", 1.0}}},
        {{"N", "C"}, {{"B", 1.0}}},
        {{"B", "C"}, {{"I", 2.0}, {"N", -4.0}}},
    };
    return basis;
}

HomomorphismReport verify_structure(const LieBasis& basis, double tol) {
    HomomorphismReport report;
    const std::size_t count = basis.labels.size();
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (i == j)
                continue;
            const LabelPair pair{basis.labels[i], basis.labels[j]};
            Expansion expected_expansion;
            if (auto it = basis.structure.find(pair); it != basis.structure.end()) {
                expected_expansion = it->second;
            } else if (auto rev = basis.structure.find({pair.second, pair.first});
                       rev != basis.structure.end()) {
                // [y,x] = -[x,y]
                for (const auto& [label, coeff] : rev->second)
                    expected_expansion.emplace_back(label, -coeff);
            } else if (!basis.undeclared_brackets_vanish) {
                continue;
            }
            const Matrix bracket = commutator(basis.matrices[i], basis.matrices[j]);
            const Matrix expected = basis.expand(expected_expansion);
            const double residual = max_abs_diff(bracket, expected);
            ++report.pairs_checked;
            report.max_residual = std::max(report.max_residual, residual);
            if (residual > tol)
                report.failures.push_back({pair, residual});
        }
    }
    return report;
}

HomomorphismReport verify_adjoint_homomorphism(double tol) {
    const LieBasis adjoint = oscillator_adjoint_4x4();
    const auto& structure = oscillator_structure();
    HomomorphismReport report;
    const std::size_t count = adjoint.labels.size();
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const LabelPair pair{adjoint.labels[i], adjoint.labels[j]};
            Expansion expansion;  // [e_i, e_j] in the abstract algebra
            if (auto it = structure.find(pair); it != structure.end())
                expansion = it->second;
            // ad is linear: ad([x,y]) = sum coeff * ad(e_k)
            const Matrix lhs = adjoint.expand(expansion);
            const Matrix rhs = commutator(adjoint.matrices[i], adjoint.matrices[j]);
            const double residual = max_abs_diff(lhs, rhs);
            ++report.pairs_checked;
            report.max_residual = std::max(report.max_residual, residual);
            if (residual > tol)
                report.failures.push_back({pair, residual});
        }
    }
    return report;
}

} // namespace truncbose::lie
