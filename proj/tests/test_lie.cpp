#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "truncbose/lie.hpp"

#include "test_support.hpp"

using namespace truncbose;
using test_support::mat;

TEST_CASE("heisenberg 3x3 generators and brackets") {
    const lie::LieBasis basis = lie::heisenberg_3x3();
    CHECK(basis.matrix_of("N") == mat({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    CHECK(basis.matrix_of("I") == mat({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(basis.matrix_of("bdag") == mat({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}));
    CHECK(basis.matrix_of("b") == mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));

    CHECK(commutator(basis.matrix_of("N"), basis.matrix_of("bdag")) == basis.matrix_of("bdag"));
    CHECK(commutator(basis.matrix_of("N"), basis.matrix_of("b")) ==
          -1.0 * basis.matrix_of("b"));
    CHECK(commutator(basis.matrix_of("bdag"), basis.matrix_of("b")) ==
          -1.0 * basis.matrix_of("I"));
    CHECK(commutator(basis.matrix_of("b"), basis.matrix_of("I")).max_abs() == 0.0);
    CHECK(commutator(basis.matrix_of("bdag"), basis.matrix_of("I")).max_abs() == 0.0);
    CHECK(commutator(basis.matrix_of("N"), basis.matrix_of("I")).max_abs() == 0.0);
}

TEST_CASE("heisenberg structure verifies with residual zero") {
    const lie::HomomorphismReport report = lie::verify_structure(lie::heisenberg_3x3(), 0.0);
    CHECK(report.pass());
    CHECK(report.max_residual == 0.0);
    CHECK(report.pairs_checked == 12);  // all ordered pairs of 4 generators
}

TEST_CASE("nilpotency of the strictly upper triangular generators") {
    const lie::LieBasis basis = lie::heisenberg_3x3();
    const Matrix* uppers[] = {&basis.matrix_of("bdag"), &basis.matrix_of("b"),
                              &basis.matrix_of("I")};
    for (const Matrix* x : uppers)
        for (const Matrix* y : uppers)
            for (const Matrix* z : uppers)
                CHECK(((*x) * (*y) * (*z)).max_abs() == 0.0);
}

TEST_CASE("corrupted basis fails and names the pair") {
    lie::LieBasis basis = lie::heisenberg_3x3();
    basis.matrices[2](1, 2) = -1.0;  // flip the sign of the raising generator
    const lie::HomomorphismReport report = lie::verify_structure(basis, 0.0);
    CHECK_FALSE(report.pass());
    bool names_bdag = false;
    for (const auto& [pair, residual] : report.failures)
        names_bdag = names_bdag || pair.first == "bdag" || pair.second == "bdag";
    CHECK(names_bdag);
}

TEST_CASE("fermi 2x2 generators and brackets") {
    const lie::LieBasis basis = lie::fermi_2x2();
    CHECK(basis.matrix_of("N") == mat({{1, 0}, {0, 0}}));
    CHECK(basis.matrix_of("B") == mat({{0, 1}, {1, 0}}));
    CHECK(basis.matrix_of("C") == mat({{0, 1}, {-1, 0}}));
    CHECK(basis.matrix_of("I") == mat({{1, 0}, {0, 1}}));

    CHECK(commutator(basis.matrix_of("N"), basis.matrix_of("B")) == basis.matrix_of("C"));
    CHECK(commutator(basis.matrix_of("N"), basis.matrix_of("C")) == basis.matrix_of("B"));
    // [B, C] = 2I - 4N = diag(-2, 2)
    CHECK(commutator(basis.matrix_of("B"), basis.matrix_of("C")) == mat({{-2, 0}, {0, 2}}));
    CHECK(commutator(basis.matrix_of("I"), basis.matrix_of("B")).max_abs() == 0.0);

    CHECK(lie::verify_structure(basis, 0.0).pass());
    CHECK(lie::verify_structure(basis, 0.0).max_residual == 0.0);
}

TEST_CASE("fermi squares") {
    const lie::LieBasis basis = lie::fermi_2x2();
    const Matrix& plus = basis.matrix_of("B");
    const Matrix& minus = basis.matrix_of("C");
    CHECK(plus * plus == Matrix::identity(2));
    CHECK(minus * minus == -1.0 * Matrix::identity(2));
}

TEST_CASE("adjoint 4x4 matrices") {
    const lie::LieBasis adjoint = lie::oscillator_adjoint_4x4();
    CHECK(adjoint.matrix_of("N") ==
          mat({{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}));
    CHECK(adjoint.matrix_of("B") ==
          mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, 0, 2, 0}}));
    CHECK(adjoint.matrix_of("C") ==
          mat({{0, 0, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}, {0, -2, 0, 0}}));
    CHECK(adjoint.matrix_of("I").max_abs() == 0.0);
}

TEST_CASE("adjoint homomorphism holds with residual zero") {
    const lie::HomomorphismReport report = lie::verify_adjoint_homomorphism(0.0);
    CHECK(report.pass());
    CHECK(report.max_residual == 0.0);
    CHECK(report.pairs_checked == 6);

    const lie::LieBasis adjoint = lie::oscillator_adjoint_4x4();
    // [ad N, ad B] = ad C exactly, and the central element maps to zero.
    CHECK(commutator(adjoint.matrix_of("N"), adjoint.matrix_of("B")) == adjoint.matrix_of("C"));
    CHECK(commutator(adjoint.matrix_of("N"), adjoint.matrix_of("I")).max_abs() == 0.0);
    // [ad B, ad C] = 2 ad(I) = 0.
    CHECK(commutator(adjoint.matrix_of("B"), adjoint.matrix_of("C")).max_abs() == 0.0);
}

TEST_CASE("adjoint basis also passes the generic structure check") {
    CHECK(lie::verify_structure(lie::oscillator_adjoint_4x4(), 0.0).pass());
}

TEST_CASE("unknown generator label throws") {
    CHECK_THROWS_AS((void)lie::heisenberg_3x3().matrix_of("X"), std::invalid_argument);
}
