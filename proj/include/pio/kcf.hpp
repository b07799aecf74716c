#pragma once

#include "pio/matrix.hpp"
#include "pio/pencil.hpp"
#include "pio/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace pio {

struct JordanBlock {
    Rational eigenvalue;
    std::size_t size = 0; // >= 1
};

// A pencil given by its Kronecker block data, in block order
// epsilon (underdetermined), finite Jordan, sigma (nilpotent), eta
// (overdetermined). An epsilon block of size k spans k rows and k+1 columns;
// an eta block of size k spans k+1 rows and k columns; sizes 0 are legal and
// contribute a zero column / zero row.
struct KcfSpec {
    std::vector<std::size_t> epsilon_sizes;
    std::vector<JordanBlock> finite_jordan; // sizes >= 1
    std::vector<std::size_t> sigma_sizes;   // each >= 1
    std::vector<std::size_t> eta_sizes;

    KcfSpec() = default;
    KcfSpec(std::vector<std::size_t> eps, std::vector<JordanBlock> jf,
            std::vector<std::size_t> sig, std::vector<std::size_t> eta);

    std::size_t epsilon_cols() const; // sum(eps_i + 1)
    std::size_t epsilon_rows() const; // sum(eps_i)
    std::size_t f_size() const;
    std::size_t sigma_size() const;
    std::size_t eta_cols() const; // sum(eta_i)
    std::size_t eta_rows() const; // sum(eta_i + 1)
    std::size_t cols() const;     // n of the assembled pencil
    std::size_t rows() const;     // m of the assembled pencil

    // Nilpotent part of the pencil: block diagonal of shift blocks.
    Mat sigma_matrix() const;
};

// Canonical-coordinate system: a pencil given by block data plus output
// matrices C (p x n) and L (r x n) whose columns follow the block order.
struct KcfSystem {
    KcfSpec spec;
    Mat C, L;

    KcfSystem(KcfSpec spec_, Mat C_, Mat L_);
};

// The epsilon part rearranged as [I 0] xdot = [A1 A2] x: the first
// eps_i coordinates of every block pool into x1, the trailing coordinate of
// every block into x2. A1 is nilpotent of index h1 (0 when empty); n1 is the
// number of x2 components (one per epsilon block), n2 the sigma dimension.
// C1/C2 (and L1/L2) carry the correspondingly re-mapped output columns.
struct EpsilonPartition {
    Mat A1, A2;
    Mat C1, C2;
    Mat L1, L2;
    std::size_t h1 = 0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
};

// Finite stack of Dirac coefficients: coefficients[i] multiplies the i-th
// distributional derivative of delta. Trailing zero coefficients are
// trimmed, so is_zero() == coefficients.empty().
struct ImpulseStack {
    std::vector<std::vector<Rational>> coefficients;

    static ImpulseStack from_coefficients(std::vector<std::vector<Rational>> coeffs);
    bool is_zero() const { return coefficients.empty(); }

    friend bool operator==(const ImpulseStack&, const ImpulseStack&) = default;
};

// The pair of block matrices that map an impulse pattern (v_0..v_l, v) to
// the delta-coefficient stacks of y and z. Row block k (height p resp. r)
// is the coefficient of the k-th delta derivative.
struct ImpulseOutputMaps {
    Mat y_map; // (l+1)p x ((l+1) n1 + n2)
    Mat z_map; // (l+1)r x ((l+1) n1 + n2)
};

// Explicit E, A of the canonical pencil (identity coordinate change),
// with C and L carried over.
DescriptorSystem assemble(const KcfSystem& ks);

EpsilonPartition partition(const KcfSystem& ks);

// Throws InvalidL when l < 1.
ImpulseOutputMaps impulse_output_maps(const KcfSystem& ks, std::size_t l);

// Block-level criterion at l = n+1: ker(y_map) inside ker(z_map), decided
// by rank of the stacked maps.
bool check_kcf_pio(const KcfSystem& ks);

// x_sigma[0] for initial value x0: coefficients -J x0, -J^2 x0, ... up to
// the nilpotency index. Throws NotNilpotent if j_sigma is not nilpotent.
ImpulseStack sigma_impulse(const Mat& j_sigma, const std::vector<Rational>& x0);

// x1[0] driven by the impulse pattern v_0..v_l placed on x2.
ImpulseStack epsilon_impulse(const EpsilonPartition& part,
                             const std::vector<std::vector<Rational>>& v);

// (y[0], z[0]) for the impulse pattern (v_0..v_l, v_sigma). An empty v is
// shorthand for the all-zero pattern at l = n+1.
std::pair<ImpulseStack, ImpulseStack> output_impulse(const KcfSystem& ks,
                                                     const std::vector<std::vector<Rational>>& v,
                                                     const std::vector<Rational>& v_sigma);

// Solution-level check: enumerate a kernel basis of y_map at l = n+1 (all
// y-silent impulse patterns) and test that each one is z-silent.
bool oracle_pio(const KcfSystem& ks);

} // namespace pio
