#pragma once

#include "pio/matrix.hpp"
#include "pio/subspace.hpp"

#include <cstddef>
#include <vector>

namespace pio {

// Trace of the subspace iteration W^0 = {0}, W^{i+1} = E^{-1}(A W^i).
//
// Note the direction of the recurrence: the image is taken under A and the
// preimage under E. Iterating the other way round (preimage under A of
// E W^i) stabilizes at {0} whenever A is injective and would give the wrong
// verdict on nilpotent pencils, so this orientation is load-bearing.
struct WongSequence {
    std::vector<Subspace> steps;      // W^0 .. W^s
    std::size_t stabilization_index;  // least s with W^{s+1} == W^s
    Subspace limit;                   // == steps.back()

    std::vector<std::size_t> step_dims() const;
};

WongSequence wong_sequence(const Mat& E, const Mat& A);

// limit(W) intersected with the preimage under A of the column space of E;
// nontrivial vectors here are exactly the impulse-generating directions.
Subspace wong_limit_intersection(const Mat& E, const Mat& A);

} // namespace pio
