#include "pio/wong.hpp"

#include "pio/errors.hpp"

#include <cassert>

namespace pio {

std::vector<std::size_t> WongSequence::step_dims() const {
    std::vector<std::size_t> dims;
    dims.reserve(steps.size());
    for (const auto& s : steps) dims.push_back(s.dim());
    return dims;
}

WongSequence wong_sequence(const Mat& E, const Mat& A) {
    if (E.rows() != A.rows() || E.cols() != A.cols())
        throw DimensionMismatch("wong_sequence: shapes " + E.shape_str() + " and " +
                                A.shape_str() + " differ");

    const std::size_t n = E.cols();
    std::vector<Subspace> steps{Subspace::zero(n)};
    for (;;) {
        const Subspace& w = steps.back();
        Subspace next = preimage(E, image(matmul(A, w.basis())));
        if (next == w) break;
        steps.push_back(std::move(next));
        // dims increase strictly until the fixed point, so s <= n
        assert(steps.size() <= n + 1);
    }
    const std::size_t s = steps.size() - 1;
    Subspace limit = steps.back();
    return WongSequence{std::move(steps), s, std::move(limit)};
}

Subspace wong_limit_intersection(const Mat& E, const Mat& A) {
    const WongSequence w = wong_sequence(E, A);
    return intersect(w.limit, preimage(A, image(E)));
}

} // namespace pio
