#ifndef TRUNCBOSE_MATRIX_HPP
#define TRUNCBOSE_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace truncbose {

// Dense real matrix, row-major. Dimensions here are modest (a few thousand
// at most), so everything is a plain loop over contiguous storage.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    const std::vector<double>& data() const { return data_; }

    Matrix transposed() const;
    double trace() const;
    double max_abs() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

// ab - ba in one pass: both products of each entry are accumulated side by
// side and subtracted once, with no rescaling. commutator(x, x) is exactly
// zero and commutator(a, b) == -commutator(b, a) entrywise.
Matrix commutator(const Matrix& a, const Matrix& b);

// Max-abs-entry norm of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

} // namespace truncbose

#endif
