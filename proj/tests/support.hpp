#pragma once

#include "pio/kcf.hpp"
#include "pio/matrix.hpp"
#include "pio/pencil.hpp"

#include <random>
#include <vector>

namespace pio::testing {

// Small-integer matrix literal for fixtures.
inline Mat mk(std::initializer_list<std::initializer_list<long>> rows) {
    Mat m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

// The nilpotent pencil counterexample: E the 3x3 shift, A = I,
// y sees the last coordinate, z the middle one.
inline DescriptorSystem counterexample_system() {
    return DescriptorSystem(mk({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
                            Mat::identity(3), mk({{0, 0, 1}}), mk({{0, 1, 0}}));
}

// Same pencil with y seeing the first coordinate instead; this one is
// partially impulse observable.
inline DescriptorSystem observable_sigma_system() {
    return DescriptorSystem(mk({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
                            Mat::identity(3), mk({{1, 0, 0}}), mk({{0, 1, 0}}));
}

// Single underdetermined block: E = [1 0], A = [0 1].
inline DescriptorSystem epsilon_example_system() {
    return DescriptorSystem(mk({{1, 0}}), mk({{0, 1}}), mk({{1, 0}}), mk({{0, 1}}));
}

inline KcfSystem counterexample_kcf() {
    return KcfSystem(KcfSpec({}, {}, {3}, {}), mk({{0, 0, 1}}), mk({{0, 1, 0}}));
}

inline KcfSystem observable_sigma_kcf() {
    return KcfSystem(KcfSpec({}, {}, {3}, {}), mk({{1, 0, 0}}), mk({{0, 1, 0}}));
}

class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }
    std::size_t count(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
    }

    Mat matrix(std::size_t rows, std::size_t cols, long lo = -2, long hi = 2) {
        Mat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer(lo, hi);
        return m;
    }

    Mat invertible(std::size_t n, long lo = -2, long hi = 2) {
        for (;;) {
            Mat m = matrix(n, n, lo, hi);
            if (rank(m) == n) return m;
        }
    }

    // Corpus item for the randomized criteria properties: m,n <= 5,
    // p,r <= 2, entries in {-2..2}.
    DescriptorSystem system() {
        const std::size_t m = count(0, 5), n = count(1, 5);
        const std::size_t p = count(0, 2), r = count(0, 2);
        return DescriptorSystem(matrix(m, n), matrix(m, n), matrix(p, n), matrix(r, n));
    }

    // Random canonical block data with total state dimension <= max_n.
    KcfSystem kcf_system(std::size_t max_n = 6) {
        for (;;) {
            std::vector<std::size_t> eps, sig, eta;
            std::vector<JordanBlock> jf;
            for (std::size_t i = count(0, 2); i > 0; --i) eps.push_back(count(0, 2));
            for (std::size_t i = count(0, 1); i > 0; --i)
                jf.push_back({Rational(integer(-2, 2)), count(1, 2)});
            for (std::size_t i = count(0, 2); i > 0; --i) sig.push_back(count(1, 3));
            for (std::size_t i = count(0, 1); i > 0; --i) eta.push_back(count(0, 2));
            KcfSpec spec(eps, jf, sig, eta);
            if (spec.cols() < 1 || spec.cols() > max_n) continue;
            const std::size_t p = count(0, 2), r = count(0, 2);
            return KcfSystem(spec, matrix(p, spec.cols()), matrix(r, spec.cols()));
        }
    }

private:
    std::mt19937 gen_;
};

} // namespace pio::testing
