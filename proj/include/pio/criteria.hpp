#pragma once

#include "pio/pencil.hpp"
#include "pio/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pio {

struct RankDetail {
    std::size_t l = 0;
    std::size_t rank_f = 0;  // rank of F_l
    std::size_t rank_fl = 0; // rank of F_{l,L}

    friend bool operator==(const RankDetail&, const RankDetail&) = default;
};

// All verdicts for one system. analyze() enforces the internal consistency
// relations (rank and Wong routes must agree; impulse observability implies
// partial impulse observability) and throws InternalInconsistency if any
// fails; they hold exactly in exact arithmetic.
struct ObservabilityReport {
    bool darouach = false;         // published rank test, reported verbatim
    bool i_obs_rank = false;       // rank form of impulse observability
    bool i_obs_wong = false;       // Wong form of impulse observability
    bool pio_rank = false;         // rank F_{n+1} == rank F_{n+1,L}
    bool pio_wong = false;         // Wong-limit intersection inside ker L
    bool discrepancy_flag = false; // darouach != pio_rank
    std::optional<std::vector<Rational>> witness; // present iff not PIO
    std::vector<RankDetail> rank_details;         // l = n+1, n+2, n+3 (+extras)

    friend bool operator==(const ObservabilityReport&, const ObservabilityReport&) = default;
};

// The published test: rank equality of the two stacked matrices. Not a valid
// PIO criterion in general; reported verbatim and never used to infer PIO.
bool check_darouach(const DescriptorSystem& sys);

// rank [[E,A],[0,E],[0,C]] == n + rank E.
bool check_i_observability(const DescriptorSystem& sys);

// Wong route: the limit intersection for (Ebar, Abar) is {0}.
bool check_i_obs_wong(const DescriptorSystem& sys);

// Partial impulse observability via rank F_{n+1} == rank F_{n+1,L}.
bool check_pio_rank(const DescriptorSystem& sys);
bool check_pio_rank_at(const DescriptorSystem& sys, std::size_t l);

// Same verdict at l = s+1 where s is the Wong stabilization index of
// (Ebar, Abar); cheaper when the sequence stabilizes early. s+1 blocks are
// the least that fit a maximal kernel chain (s steps up the sequence plus
// one for the preimage condition); at l = s the test can wrongly pass.
// The n+1 form stays the reference implementation.
bool check_pio_rank_fast(const DescriptorSystem& sys);

// Partial impulse observability via the subspace form: the Wong-limit
// intersection of (Ebar, Abar) is contained in ker L.
bool check_pio_wong(const DescriptorSystem& sys);

// When the system is not PIO: the first canonical basis vector w of the
// Wong-limit intersection with L w != 0. Deterministic.
std::optional<std::vector<Rational>> extract_witness(const DescriptorSystem& sys);

// Runs every check, extracts the witness, fills rank details for
// l = n+1, n+2, n+3 plus any extra_ls, and verifies the report invariants.
ObservabilityReport analyze(const DescriptorSystem& sys,
                            const std::vector<std::size_t>& extra_ls = {});

} // namespace pio
