#include "pio/subspace.hpp"

#include "pio/errors.hpp"

namespace pio {

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t, const char* op) {
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionMismatch(std::string(op) + ": ambient dimensions " +
                                std::to_string(s.ambient_dim()) + " and " +
                                std::to_string(t.ambient_dim()) + " differ");
}

// Canonical basis: run RREF on the transposed spanning set and keep the
// nonzero rows back as columns. Uniqueness of RREF makes equality structural.
Mat canonical_basis(const Mat& columns) {
    const Mat r = rref(transpose(columns));
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool all_zero = true;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (r(i, j) != 0) {
                all_zero = false;
                break;
            }
        if (!all_zero) ++nonzero;
    }
    Mat basis(r.cols(), nonzero);
    for (std::size_t i = 0; i < nonzero; ++i) // zero rows of an RREF sit at the bottom
        for (std::size_t j = 0; j < r.cols(); ++j) basis(j, i) = r(i, j);
    return basis;
}

} // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Mat(ambient_dim, 0));
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Mat::identity(ambient_dim));
}

Subspace Subspace::from_spanning(std::size_t ambient_dim, const Mat& columns) {
    if (columns.rows() != ambient_dim)
        throw DimensionMismatch("from_spanning: columns have " + std::to_string(columns.rows()) +
                                " rows in ambient dimension " + std::to_string(ambient_dim));
    return Subspace(ambient_dim, canonical_basis(columns));
}

Subspace image(const Mat& a) { return Subspace::from_spanning(a.rows(), a); }

Subspace kernel(const Mat& a) { return Subspace::from_spanning(a.cols(), kernel_basis(a)); }

Subspace preimage(const Mat& a, const Subspace& s) {
    if (a.rows() != s.ambient_dim())
        throw DimensionMismatch("preimage: map has " + std::to_string(a.rows()) +
                                " rows, subspace lives in dimension " +
                                std::to_string(s.ambient_dim()));
    const Mat k = kernel_basis(hstack(a, -s.basis()));
    Mat top(a.cols(), k.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) top(i, j) = k(i, j);
    return Subspace::from_spanning(a.cols(), top);
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "intersect");
    const Mat k = kernel_basis(hstack(s.basis(), -t.basis()));
    Mat coeffs(s.dim(), k.cols());
    for (std::size_t i = 0; i < coeffs.rows(); ++i)
        for (std::size_t j = 0; j < coeffs.cols(); ++j) coeffs(i, j) = k(i, j);
    return Subspace::from_spanning(s.ambient_dim(), matmul(s.basis(), coeffs));
}

Subspace sum(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "sum");
    return Subspace::from_spanning(s.ambient_dim(), hstack(s.basis(), t.basis()));
}

bool contains(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "contains");
    return rank(hstack(s.basis(), t.basis())) == rank(s.basis());
}

bool contains_vector(const Subspace& s, const Mat& v) {
    if (v.rows() != s.ambient_dim() || v.cols() != 1)
        throw DimensionMismatch("contains_vector: expected a " +
                                std::to_string(s.ambient_dim()) + "x1 vector, got " +
                                v.shape_str());
    return rank(hstack(s.basis(), v)) == rank(s.basis());
}

bool equals(const Subspace& s, const Subspace& t) { return s == t; }

std::size_t dim(const Subspace& s) { return s.dim(); }

} // namespace pio
