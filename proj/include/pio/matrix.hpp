#pragma once

#include "pio/rational.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace pio {

// Dense matrix of exact rationals, row-major. Matrices with zero rows or
// zero columns are legal everywhere (rank 0); they show up naturally as
// empty output matrices and as degenerate canonical-form blocks.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rational>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }

    bool is_zero() const;
    std::string shape_str() const; // "3x2", used in error messages

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

Mat transpose(const Mat& m);
Mat operator-(const Mat& m);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Rational& s, const Mat& m);

// Stacking and composition. All throw DimensionMismatch with both shapes on
// incompatible inputs.
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat matmul(const Mat& a, const Mat& b);
inline Mat operator*(const Mat& a, const Mat& b) { return matmul(a, b); }
Mat block(const std::vector<std::vector<Mat>>& grid);

// Power of a square matrix; pow(m, 0) is the identity.
Mat pow(const Mat& m, std::size_t e);

// Column count of the kernel basis equals cols - rank (rank-nullity).
// rank runs fraction-free (Bareiss) over the denominator-cleared integer
// matrix with full pivoting, so it is decision-exact with no intermediate
// rounding; rref/kernel_basis run exact rational Gauss-Jordan.
std::size_t rank(const Mat& m);
Mat rref(const Mat& m);
Mat kernel_basis(const Mat& m);

// Column/vector adapters.
Mat column_vector(const std::vector<Rational>& v);
std::vector<Rational> column(const Mat& m, std::size_t j);

} // namespace pio
