#include "pio/criteria.hpp"

#include "pio/errors.hpp"
#include "pio/subspace.hpp"
#include "pio/wong.hpp"

#include <algorithm>

namespace pio {

bool check_darouach(const DescriptorSystem& sys) {
    const auto [lhs, rhs] = darouach_lhs_rhs(sys);
    return rank(lhs) == rank(rhs);
}

bool check_i_observability(const DescriptorSystem& sys) {
    return rank(iobs_matrix(sys)) == sys.n() + rank(sys.E);
}

bool check_i_obs_wong(const DescriptorSystem& sys) {
    const AugmentedPair ap = augmented(sys);
    return wong_limit_intersection(ap.Ebar, ap.Abar).dim() == 0;
}

bool check_pio_rank_at(const DescriptorSystem& sys, std::size_t l) {
    return rank(build_F(sys, l, false)) == rank(build_F(sys, l, true));
}

bool check_pio_rank(const DescriptorSystem& sys) {
    return check_pio_rank_at(sys, sys.n() + 1);
}

bool check_pio_rank_fast(const DescriptorSystem& sys) {
    const AugmentedPair ap = augmented(sys);
    const WongSequence w = wong_sequence(ap.Ebar, ap.Abar);
    return check_pio_rank_at(sys, w.stabilization_index + 1);
}

bool check_pio_wong(const DescriptorSystem& sys) {
    const AugmentedPair ap = augmented(sys);
    return contains(kernel(sys.L), wong_limit_intersection(ap.Ebar, ap.Abar));
}

std::optional<std::vector<Rational>> extract_witness(const DescriptorSystem& sys) {
    const AugmentedPair ap = augmented(sys);
    const Subspace danger = wong_limit_intersection(ap.Ebar, ap.Abar);
    for (std::size_t j = 0; j < danger.dim(); ++j) {
        const Mat w = matmul(sys.L, column_vector(column(danger.basis(), j)));
        if (!w.is_zero()) return column(danger.basis(), j);
    }
    return std::nullopt;
}

ObservabilityReport analyze(const DescriptorSystem& sys, const std::vector<std::size_t>& extra_ls) {
    ObservabilityReport rep;
    rep.darouach = check_darouach(sys);
    rep.i_obs_rank = check_i_observability(sys);
    rep.i_obs_wong = check_i_obs_wong(sys);
    rep.pio_rank = check_pio_rank(sys);
    rep.pio_wong = check_pio_wong(sys);
    rep.discrepancy_flag = rep.darouach != rep.pio_rank;
    rep.witness = extract_witness(sys);

    std::vector<std::size_t> ls = {sys.n() + 1, sys.n() + 2, sys.n() + 3};
    for (std::size_t l : extra_ls) {
        if (l < 1) throw InvalidL("analyze: rank detail l must be >= 1");
        if (std::find(ls.begin(), ls.end(), l) == ls.end()) ls.push_back(l);
    }
    std::sort(ls.begin(), ls.end());
    for (std::size_t l : ls)
        rep.rank_details.push_back(
            {l, rank(build_F(sys, l, false)), rank(build_F(sys, l, true))});

    if (rep.pio_rank != rep.pio_wong)
        throw InternalInconsistency("rank and Wong routes disagree on partial impulse "
                                    "observability");
    if (rep.i_obs_rank != rep.i_obs_wong)
        throw InternalInconsistency("rank and Wong routes disagree on impulse observability");
    if (rep.i_obs_rank && !rep.pio_rank)
        throw InternalInconsistency("impulse observable but not partially impulse observable");
    if (rep.witness.has_value() == rep.pio_wong)
        throw InternalInconsistency("witness presence contradicts the PIO verdict");

    return rep;
}

} // namespace pio
