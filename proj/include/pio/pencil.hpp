#pragma once

#include "pio/matrix.hpp"

#include <cstddef>
#include <utility>

namespace pio {

// The quadruple (E, A, C, L) of E xdot = A x, y = C x, z = L x.
// E, A are m x n, C is p x n (measured output), L is r x n (functional
// output whose impulse-freeness is in question). m, p, r may be zero.
struct DescriptorSystem {
    Mat E, A, C, L;

    DescriptorSystem(Mat E_, Mat A_, Mat C_, Mat L_);

    std::size_t m() const { return E.rows(); }
    std::size_t n() const { return E.cols(); }
    std::size_t p() const { return C.rows(); }
    std::size_t r() const { return L.rows(); }
};

// Output-augmented pencils: Ebar = [E; 0], Abar = [A; C] fold the measured
// output into the pencil; Ebar1 = [Ebar; 0], Abar1 = [Abar; L] fold in the
// functional output as well.
struct AugmentedPair {
    Mat Ebar, Abar;   // (m+p) x n
    Mat Ebar1, Abar1; // (m+p+r) x n
};

AugmentedPair augmented(const DescriptorSystem& sys);

// Block-bidiagonal matrix with l block rows and columns: row i carries the
// E-part at block column i and the A-part at block column i+1; the last row
// carries only the E-part. with_l selects (Ebar1, Abar1) over (Ebar, Abar).
// Throws InvalidL when l < 1.
Mat build_F(const DescriptorSystem& sys, std::size_t l, bool with_l);

// The two stacked matrices of the published rank test:
// [[E,A],[0,E],[0,C],[0,L]] and [[E,A],[0,E],[0,C]].
std::pair<Mat, Mat> darouach_lhs_rhs(const DescriptorSystem& sys);

// [[E,A],[0,E],[0,C]]; impulse observability holds iff its rank is
// n + rank E.
Mat iobs_matrix(const DescriptorSystem& sys);

} // namespace pio
