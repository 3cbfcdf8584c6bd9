#include "truncbose/matrix.hpp"

#include "truncbose/errors.hpp"

#include <cmath>
#include <string>

namespace truncbose {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(op) + ": shape mismatch (" +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
}

} // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::trace() const {
    double t = 0.0;
    const std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i)
        t += (*this)(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_)
        m = std::max(m, std::fabs(v));
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "matrix add");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "matrix subtract");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix multiply: inner dimension mismatch");
    Matrix c(a.rows(), b.cols());
    const std::size_t n = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* ci = c.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0)
                continue;
            const double* bk = b.row(k);
            for (std::size_t j = 0; j < m; ++j)
                ci[j] += aik * bk[j];
        }
    }
    return c;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = s * a(i, j);
    return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw DimensionError("commutator: operands must be square");
    require_same_shape(a, b, "commutator");
    const std::size_t n = a.rows();
    Matrix ab(n, n), ba(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double* abi = ab.row(i);
        double* bai = ba.row(i);
        const double* ai = a.row(i);
        const double* bi = b.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = ai[k];
            const double bik = bi[k];
            const double* bk = b.row(k);
            const double* ak = a.row(k);
            if (aik != 0.0)
                for (std::size_t j = 0; j < n; ++j)
                    abi[j] += aik * bk[j];
            if (bik != 0.0)
                for (std::size_t j = 0; j < n; ++j)
                    bai[j] += bik * ak[j];
        }
    }
    Matrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c(i, j) = ab(i, j) - ba(i, j);
    return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::fabs(a(i, j) - b(i, j)));
    return m;
}

} // namespace truncbose
