#include "pio/pencil.hpp"

#include "pio/errors.hpp"

#include <string>
#include <utility>

namespace pio {

DescriptorSystem::DescriptorSystem(Mat E_, Mat A_, Mat C_, Mat L_)
    : E(std::move(E_)), A(std::move(A_)), C(std::move(C_)), L(std::move(L_)) {
    if (E.rows() != A.rows() || E.cols() != A.cols())
        throw DimensionMismatch("E and A must share a shape (" + E.shape_str() + " vs " +
                                A.shape_str() + ")");
    if (n() < 1) throw DimensionMismatch("state dimension n must be at least 1");
    if (C.cols() != n())
        throw DimensionMismatch("C has " + std::to_string(C.cols()) + " columns, expected n = " +
                                std::to_string(n()));
    if (L.cols() != n())
        throw DimensionMismatch("L has " + std::to_string(L.cols()) + " columns, expected n = " +
                                std::to_string(n()));
}

AugmentedPair augmented(const DescriptorSystem& sys) {
    AugmentedPair out;
    out.Ebar = vstack(sys.E, Mat::zero(sys.p(), sys.n()));
    out.Abar = vstack(sys.A, sys.C);
    out.Ebar1 = vstack(out.Ebar, Mat::zero(sys.r(), sys.n()));
    out.Abar1 = vstack(out.Abar, sys.L);
    return out;
}

Mat build_F(const DescriptorSystem& sys, std::size_t l, bool with_l) {
    if (l < 1) throw InvalidL("build_F: l must be >= 1");
    const AugmentedPair ap = augmented(sys);
    const Mat& eb = with_l ? ap.Ebar1 : ap.Ebar;
    const Mat& ab = with_l ? ap.Abar1 : ap.Abar;
    const std::size_t h = eb.rows(), n = sys.n();

    Mat f(l * h, l * n);
    for (std::size_t blk = 0; blk < l; ++blk) {
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                f(blk * h + i, blk * n + j) = eb(i, j);
                if (blk + 1 < l) f(blk * h + i, (blk + 1) * n + j) = ab(i, j);
            }
    }
    return f;
}

std::pair<Mat, Mat> darouach_lhs_rhs(const DescriptorSystem& sys) {
    const std::size_t n = sys.n();
    const Mat z_m = Mat::zero(sys.m(), n);
    const Mat z_p = Mat::zero(sys.p(), n);
    const Mat z_r = Mat::zero(sys.r(), n);
    Mat lhs = block({{sys.E, sys.A}, {z_m, sys.E}, {z_p, sys.C}, {z_r, sys.L}});
    Mat rhs = block({{sys.E, sys.A}, {z_m, sys.E}, {z_p, sys.C}});
    return {std::move(lhs), std::move(rhs)};
}

Mat iobs_matrix(const DescriptorSystem& sys) {
    const std::size_t n = sys.n();
    return block({{sys.E, sys.A},
                  {Mat::zero(sys.m(), n), sys.E},
                  {Mat::zero(sys.p(), n), sys.C}});
}

} // namespace pio
